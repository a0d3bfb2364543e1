import pytest
import sympy

from coincidence_kit import Isometry, Verdict, classify, is_K_module, is_submodule
from coincidence_kit.catalog import (
    as_free_module,
    build,
    candidate_isometries,
    catalog_entry,
    cubian_ring,
    cyclotomic_module,
    example_315,
    hypercubic,
    icosahedral_module,
    icosian_ring,
    left_multiplication,
    quadratic_order,
    sample_similarity_isometries,
    valuation_order,
)
from coincidence_kit.errors import (
    DescriptorError,
    InvalidDiscriminant,
    PerfectPower,
    UnsupportedM,
    UnsupportedModule,
)
from coincidence_kit.modules import FreeModule


@pytest.mark.parametrize(
    "name,d,zrank",
    [("hypercubic:1", 1, 1), ("hypercubic:3", 3, 3), ("icosian", 4, 8), ("cubian", 4, 8),
     ("icosahedral:B", 3, 6), ("icosahedral:F", 3, 6), ("cyclotomic:5", 2, 4),
     ("cyclotomic:8", 2, 4), ("cyclotomic:12", 2, 4), ("cyclotomic:3", 2, 2),
     ("order:-1:1", 2, 2), ("order:-3:1", 2, 2), ("order:-1:2", 2, 2)],
)
def test_catalog_shapes(name, d, zrank):
    M = as_free_module(build(name))
    assert M.dim == d
    assert M.lattice().rank == zrank
    assert is_K_module(M)


def test_minimal_ambients():
    I = icosian_ring(minimal=True)
    assert I.ambient.degree == 2 and I.K.k_degree == 2
    assert cubian_ring(minimal=True).ambient.degree == 2
    assert icosahedral_module("F", minimal=True).ambient.degree == 2
    assert icosian_ring().K.k_degree == 2


@pytest.mark.parametrize("m,k", [(3, 1), (4, 1), (5, 2), (6, 1), (8, 2), (10, 2), (12, 2)])
def test_cyclotomic_fields(m, k):
    G = cyclotomic_module(m)
    assert G.K.k_degree == k
    cos, sin = G.basis[0, 1], G.basis[1, 1]
    assert abs(float(cos) - float(sympy.cos(2 * sympy.pi / m))) < 1e-12
    assert abs(float(sin) - float(sympy.sin(2 * sympy.pi / m))) < 1e-12


def test_cyclotomic_unsupported():
    with pytest.raises(UnsupportedM):
        cyclotomic_module(7)


def test_quadratic_orders():
    O = quadratic_order(-1, 2)
    i = O.field.gen
    assert O.contains(2 * i) and not O.contains(i)
    E = quadratic_order(-3, 1)
    w = (1 + E.field.gen) / 2
    assert E.contains(w)
    with pytest.raises(InvalidDiscriminant):
        quadratic_order(-4, 1)
    with pytest.raises(InvalidDiscriminant):
        quadratic_order(5, 1)


def test_order_sampler_contains_rot45():
    O = quadratic_order(-1, 1)
    s = O.ambient.gen / 2
    found = False
    for R in sample_similarity_isometries(O, 60, seed=0):
        if all(x in (s, -s) for x in R.matrix.entries()):
            found = True
    assert found


# -- example with cyclic eta image -----------------------------------------------------


@pytest.mark.parametrize("d,n,m", [(2, 2, 2), (4, 4, 2), (6, 12, 6), (3, 2, 3), (4, 8, 4), (6, 36, 3)])
def test_example_315_m(d, n, m):
    G, R, got = example_315(d, n)
    assert got == m == valuation_order(d, n)
    # independent rationality check of xi^i
    xi = sympy.Integer(n) ** sympy.Rational(1, d)
    assert min(i for i in range(1, d + 1) if (xi**i).is_rational) == m
    assert G.ambient.degree == m


def test_example_315_perfect_power():
    with pytest.raises(PerfectPower):
        example_315(2, 4)
    with pytest.raises(PerfectPower):
        example_315(3, 1)


# -- icosian and icosahedral ----------------------------------------------------------------


def test_icosian_scalar_quaternion_is_identity():
    G = icosian_ring()
    L = G.ambient
    tau = G.K.generator
    R = left_multiplication((tau, 0, 0, 0), tau, L)
    assert R == Isometry.identity(4, L)
    assert classify(G, R).is_coincidence
    R1 = left_multiplication((1, 0, 0, 0), L.one, L)
    assert R1 == Isometry.identity(4, L)


def test_icosahedral_fivefold_rotation():
    for v in "BF":
        G = icosahedral_module(v)
        five = catalog_entry(G).extras["fivefold"]
        assert five**5 == Isometry.identity(3, G.ambient)
        c = classify(G, five)
        assert c.is_coincidence and c.sigma == 1
        assert is_submodule(G.image(five), G) and is_submodule(G, G.image(five))
        assert classify(G, Isometry.identity(3, G.ambient)).sigma == 1


def test_icosahedral_modules_nested():
    B, F_ = icosahedral_module("B"), icosahedral_module("F")
    assert is_submodule(F_, B)
    from coincidence_kit import module_index

    assert module_index(B, F_) == 4
    with pytest.raises(DescriptorError):
        icosahedral_module("P")


# -- samplers ----------------------------------------------------------------------------------


@pytest.mark.parametrize("name", ["hypercubic:3", "hypercubic:4", "icosian", "cubian", "icosahedral:B",
                                  "cyclotomic:10", "order:-7:1", "example315:4:4"])
def test_samples_are_similarities(name):
    G = build(name)
    M = as_free_module(G)
    for R in sample_similarity_isometries(G, 15, seed=11):
        assert classify(M, R, with_sigma=False).verdict is not Verdict.NOT_SIMILARITY


def test_sampler_deterministic():
    G = build("cubian")
    a = sample_similarity_isometries(G, 5, seed=2)
    b = sample_similarity_isometries(G, 5, seed=2)
    assert a == b


def test_raw_candidates_include_rejections():
    # the odd-dimensional candidate pool deliberately contains non-similarities
    G = hypercubic(3)
    verdicts = {classify(G, R, with_sigma=False).verdict for R in candidate_isometries(G, 80, seed=0)}
    assert Verdict.NOT_SIMILARITY in verdicts


def test_unsupported_module():
    G = FreeModule.from_descriptor(hypercubic(2).descriptor())
    with pytest.raises(UnsupportedModule):
        sample_similarity_isometries(G, 3)


def test_two_presentations_of_z2_agree():
    A, B = hypercubic(2), cyclotomic_module(4)
    assert A.ambient == B.ambient
    isos = sample_similarity_isometries(A, 10, seed=8) + sample_similarity_isometries(B, 10, seed=9)
    for R in isos:
        assert classify(A, R).verdict == classify(B, R).verdict
        assert classify(A, R).sigma == classify(B, R).sigma


def test_build_errors(monkeypatch, tmp_path):
    with pytest.raises(DescriptorError):
        build("hypercubic:x")
    with pytest.raises(DescriptorError):
        build("nope")
    import json

    (tmp_path / "mine.json").write_text(json.dumps(hypercubic(2).descriptor()))
    monkeypatch.setenv("COINCIDENCE_KIT_CATALOG", str(tmp_path))
    assert build("mine") == hypercubic(2)
