import io
import json

import pytest

from coincidence_kit import FreeModule
from coincidence_kit.catalog import hypercubic, real_quadratic
from coincidence_kit.cli import main

L = real_quadratic(2)


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run("--format", "json", *argv)
    report = json.loads(text)
    assert report["schema"] == "1" and report["exit_code"] == code
    return code, report


@pytest.fixture
def files(tmp_path):
    def module(cols, minpoly=("-2", "0", "1")):
        d = hypercubic(2).descriptor()
        d["field"]["minpoly"] = list(minpoly)
        d["basis_columns"] = [[[str(x)] if not isinstance(x, list) else x for x in c] for c in cols]
        return d

    def iso(rows):
        return {"field": L.descriptor(), "matrix": rows, "check_orthogonal": True}

    h = ["0", "1/2"]
    content = {
        "z2": module([[1, 0], [0, 1]]),
        "z23": module([[2, 0], [0, 3]]),
        "rot45mod": module([[h, h], [["0", "-1/2"], h]]),
        "bad": module([[1, 0], [0, 1]], minpoly=("-2", "0", "2")),
        "line": {**hypercubic(2).descriptor(), "basis_columns": [[["1"], ["0"]]]},
        "r345": iso([[["3/5"], ["-4/5"]], [["4/5"], ["3/5"]]]),
        "r45": iso([[h, ["0", "-1/2"]], [h, h]]),
        "shear": iso([[["1"], ["1"]], [["0"], ["1"]]]),
    }
    paths = {}
    for name, obj in content.items():
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(obj))
        paths[name] = str(p)
    return paths


def test_commensurate_examples(files):
    code, text = run("commensurate", files["z2"], files["z23"])
    assert code == 0 and "true" in text
    code, rep = run_json("commensurate", files["z2"], files["z23"])
    assert rep["commensurate"] is True and rep["indices"] == [6, 1]
    code, rep = run_json("commensurate", files["z2"], files["rot45mod"])
    assert code == 0 and rep["commensurate"] is False


def test_non_monic_minpoly(files):
    code, text = run("commensurate", files["bad"], files["z2"])
    assert code == 2 and "minpoly not monic" in text


def test_classify_examples(files):
    code, text = run("classify", files["z2"], files["r345"])
    assert code == 0 and text.strip() == "Coincidence, sigma = 5"
    code, text = run("classify", files["z2"], files["r45"])
    assert code == 0 and text.startswith("Similarity") and "eta_order 2" in text
    code, rep = run_json("classify", files["z2"], files["r45"])
    assert rep["classification"]["eta_order"] == 2
    assert abs(rep["classification"]["coset_rep_approx"] - 2**0.5) < 1e-12
    code, text = run("classify", files["z2"], files["shear"])
    assert code == 2 and "RᵀR ≠ I" in text


def test_classify_catalog_name(files):
    code, text = run("classify", "hypercubic:2", files["r345"])
    assert code == 0 and "sigma = 5" in text


def test_index_examples(files):
    assert run("index", files["z2"], files["z23"]) == (0, "index: 6\n")
    code, text = run("index", "order:-1:1", files["z2"])
    assert code == 0
    code, rep = run_json("index", files["z2"], files["line"])
    assert code == 1 and rep["error"]["kind"] == "InfiniteIndex"
    code, rep = run_json("index", files["z23"], files["z2"])
    assert code == 1 and rep["error"]["kind"] == "NotSubmodule"


def test_index_gaussian_ideal(tmp_path):
    # (1+2i)Z[i] realised in the plane: columns (1,2) and (-2,1)
    d = hypercubic(2).descriptor()
    d["basis_columns"] = [[["1"], ["2"]], [["-2"], ["1"]]]
    p = tmp_path / "ideal.json"
    p.write_text(json.dumps(d))
    assert run("index", "order:-1:1", str(p)) == (0, "index: 5\n")


@pytest.mark.parametrize(
    "argv,needle",
    [
        (("verify", "thm319", "icosian", "--samples", "20", "--seed", "7"), "20/20"),
        (("verify", "example315", "example315:6:12"), "m = 6"),
        (("verify", "thm27", "order:-1:1", "--samples", "50"), "50/50"),
        (("verify", "equivalence", "hypercubic:2", "--samples", "5"), "PASS"),
        (("verify", "groups", "cyclotomic:5", "--samples", "5"), "PASS"),
        (("verify", "eta", "hypercubic:4", "--samples", "5"), "PASS"),
        (("verify", "lemma26", "order:-3:1", "--samples", "10"), "PASS"),
    ],
)
def test_verify_suites(argv, needle):
    code, text = run(*argv)
    assert code == 0, text
    assert needle in text


def test_verify_example315_report():
    code, rep = run_json("verify", "example315", "example315:6:12")
    assert rep["m"] == 6 and rep["passed"] is True


def test_verify_bad_target():
    code, text = run("verify", "groups", "hypercubic:zero")
    assert code == 2
    code, _ = run("verify", "groups", "no-such-module")
    assert code == 2


def test_verify_thm319_needs_K_module():
    code, text = run("verify", "thm319", "example315:3:2", "--samples", "3")
    assert code == 1 and "NotAKModule" in text


def test_reports_are_deterministic():
    a = run_json("--seed", "3", "verify", "groups", "hypercubic:3", "--samples", "4")[1]
    b = run_json("verify", "groups", "hypercubic:3", "--samples", "4", "--seed", "3")[1]
    a.pop("timing_s"), b.pop("timing_s")
    assert a == b


def test_reported_descriptor_round_trips():
    from coincidence_kit.catalog import as_free_module, build

    for name in ("hypercubic:3", "icosian", "cyclotomic:8", "order:-3:1"):
        code, rep = run_json("describe", name)
        assert code == 0
        M = FreeModule.from_descriptor(rep["module"])
        assert M == as_free_module(build(name))
        assert M.lattice().canonical() == as_free_module(build(name)).lattice().canonical()


def test_missing_file():
    code, text = run("classify", "hypercubic:2", "/nonexistent.json")
    assert code == 2
