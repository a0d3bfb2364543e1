"""Command-line front end: ``coincidence-kit <command> ...``.

Module and isometry arguments are JSON descriptor files or catalog names
(``hypercubic:2``, ``order:-1:1``, ...).  Exit codes: 0 when a verdict was
reached, 1 for a failed property or precondition, 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import catalog
from .errors import (
    CoincidenceKitError,
    DescriptorError,
    DimensionMismatch,
    InfiniteIndex,
    MixedAmbient,
    NotAKModule,
    NotASimilarity,
    NotOrthogonal,
    NotRepresentable,
    NotSquare,
    NotSubmodule,
    Singular,
    UnsupportedM,
    UnsupportedModule,
    InvalidDiscriminant,
    PerfectPower,
)
from .exactlinalg import IntegerLattice
from .isometry import (
    Isometry,
    Verdict,
    classify,
    coset_equal,
    eta_product_check,
    principal_ideal_index,
    sos_direction,
    verify_os_squared,
    ScalarCoset,
)
from .modules import FreeModule, PlanarOrder, commensurate, intersect, is_K_module, module_index

SCHEMA = "1"

INPUT_ERRORS = (DescriptorError, NotOrthogonal, NotSquare, Singular, MixedAmbient,
                DimensionMismatch, UnsupportedM, UnsupportedModule, InvalidDiscriminant,
                PerfectPower)


class InputError(Exception):
    pass


# -- loading ------------------------------------------------------------------------


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def load_module(arg: str):
    """A FreeModule (or catalog PlanarOrder) from a file path or a catalog name."""
    if os.path.isfile(arg):
        return FreeModule.from_descriptor(_read_json(arg))
    return catalog.build(arg)


def free(G) -> FreeModule:
    return catalog.as_free_module(G)


def load_isometry(arg: str, G: FreeModule) -> Isometry:
    if not os.path.isfile(arg):
        raise InputError(f"{arg}: no such isometry file")
    return Isometry.from_descriptor(_read_json(arg), field=G.ambient)


# -- reports -----------------------------------------------------------------------------


def _elem(x):
    return x.descriptor()


def _emit(report: dict, fmt: str, text_lines: list[str], out):
    if fmt == "json":
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


def _base(args, command) -> dict:
    return {"schema": SCHEMA, "command": command}


# -- commands -------------------------------------------------------------------------------


def cmd_commensurate(args):
    G1, G2 = free(load_module(args.module1)), free(load_module(args.module2))
    verdict = commensurate(G1, G2)
    report = _base(args, "commensurate")
    report["inputs"] = {"module1": G1.descriptor(), "module2": G2.descriptor()}
    report["commensurate"] = verdict
    lines = [f"commensurate: {str(verdict).lower()}"]
    if verdict:
        meet = intersect(G1, G2)
        i1, i2 = module_index(G1, meet), module_index(G2, meet)
        report["indices"] = [i1, i2]
        lines.append(f"indices: [G1 : G1 ∩ G2] = {i1}, [G2 : G1 ∩ G2] = {i2}")
    return 0, report, lines


def _classification_report(c) -> dict:
    out = {"verdict": c.verdict.value}
    if c.coset is not None:
        out["coset_rep"] = _elem(c.coset.rep)
        out["coset_rep_approx"] = float(c.coset.rep)
        out["eta_order"] = c.eta_order
    if c.sigma is not None:
        out["sigma"] = c.sigma
    return out


def _classification_text(c) -> str:
    if c.verdict is Verdict.SIMILARITY:
        rep = c.coset.rep
        return f"Similarity, coset rep {rep} (~{float(rep):.6g}), eta_order {c.eta_order}"
    return str(c)


def cmd_classify(args):
    G = free(load_module(args.module))
    R = load_isometry(args.isometry, G)
    c = classify(G, R, proper_only=args.proper)
    report = _base(args, "classify")
    report["inputs"] = {"module": G.descriptor(), "isometry": R.descriptor()}
    report["classification"] = _classification_report(c)
    return 0, report, [_classification_text(c)]


def load_submodule(arg: str, G: FreeModule):
    """A FreeModule, or the Z-lattice spanned by S-multiples of possibly fewer columns."""
    if not os.path.isfile(arg):
        return free(catalog.build(arg))
    desc = _read_json(arg)
    try:
        return FreeModule.from_descriptor(desc)
    except DescriptorError:
        cols = desc.get("basis_columns") if isinstance(desc, dict) else None
        if not cols or any(len(c) != G.dim for c in cols):
            raise
    L = G.ambient
    vecs = [[L.element(e) for e in col] for col in cols]
    cmap = G.coordinate_map()
    gens = [cmap.to_coords([s * x for x in v]) for v in vecs for s in G.ring.zbasis]
    return IntegerLattice.from_generators(gens, dim=G.dim * L.degree)


def cmd_index(args):
    G = free(load_module(args.module))
    H = load_submodule(args.submodule, G)
    report = _base(args, "index")
    sub_desc = H.descriptor() if isinstance(H, FreeModule) else {"lattice_rank": H.rank}
    report["inputs"] = {"module": G.descriptor(), "submodule": sub_desc}
    try:
        idx = module_index(G, H)
    except (NotSubmodule, InfiniteIndex) as exc:
        report["error"] = {"kind": type(exc).__name__, "message": str(exc)}
        return 1, report, [f"{type(exc).__name__}: {exc}"]
    report["index"] = idx
    return 0, report, [f"index: {idx}"]


def cmd_describe(args):
    G = load_module(args.target)
    M = free(G)
    report = _base(args, "describe")
    report["module"] = M.descriptor()
    report["dim"], report["rank"] = M.dim, M.ring.rank * M.dim
    report["is_K_module"] = is_K_module(M)
    lines = [f"{args.target}: d = {M.dim}, Z-rank = {M.ring.rank * M.dim}, "
             f"ambient degree {M.ambient.degree}, K degree {M.K.k_degree}, "
             f"K-module: {str(report['is_K_module']).lower()}"]
    return 0, report, lines


# -- verification suites ------------------------------------------------------------------


class Tally:
    def __init__(self):
        self.counts: dict[str, list[int]] = {}
        self.counterexamples: list[dict] = []

    def record(self, prop: str, ok: bool, example=None):
        c = self.counts.setdefault(prop, [0, 0])
        c[1] += 1
        if ok:
            c[0] += 1
        elif example is not None:
            self.counterexamples.append({"property": prop, **example})

    @property
    def ok(self) -> bool:
        return all(p == t for p, t in self.counts.values())

    def report(self) -> dict:
        return {"properties": {k: {"passed": p, "total": t} for k, (p, t) in sorted(self.counts.items())},
                "counterexamples": sorted(self.counterexamples, key=lambda e: json.dumps(e, sort_keys=True))}

    def lines(self) -> list[str]:
        out = [f"  {k}: {p}/{t}" for k, (p, t) in sorted(self.counts.items())]
        for e in self.counterexamples:
            out.append(f"  counterexample for {e['property']}: {json.dumps(e, sort_keys=True)}")
        return out


def _iso_example(R: Isometry) -> dict:
    return {"isometry": R.descriptor()}


def _random_sublattice(rng: random.Random, G: FreeModule) -> FreeModule:
    d = G.dim
    while True:
        Z = [[rng.randint(-3, 3) + (3 if i == j else 0) for j in range(d)] for i in range(d)]
        try:
            return G.sublattice(Z)
        except CoincidenceKitError:
            continue


def suite_equivalence(G, n, seed, tally: Tally):
    isos = catalog.sample_similarity_isometries(G, max(4, n), seed=seed)
    G = free(G)
    rng = random.Random(seed)

    def member():
        kind = rng.random()
        H = _random_sublattice(rng, G) if kind < 0.5 else G
        R = rng.choice(isos)
        return H.image(R) if kind >= 0.25 else H

    for _ in range(n):
        A, B, C = member(), member(), member()
        ab, ba = commensurate(A, B), commensurate(B, A)
        tally.record("reflexive", commensurate(A, A))
        tally.record("symmetric", ab == ba)
        bc, ac = commensurate(B, C), commensurate(A, C)
        if ab and bc:
            tally.record("transitive", ac)
        meet = intersect(A, B)
        oracle = meet.rank == A.lattice().rank
        tally.record("agrees_with_intersection_rank", oracle == ab)


def suite_groups(G, n, seed, tally: Tally):
    M = free(G)
    isos = catalog.sample_similarity_isometries(G, n, seed=seed)
    rng = random.Random(seed + 1)
    verdicts = {R: classify(M, R, with_sigma=False) for R in isos}
    for R in isos:
        S = rng.choice(isos)
        prod = classify(M, R @ S, with_sigma=False)
        inv = classify(M, R.T, with_sigma=False)
        tally.record("OS_closed_under_product", prod.is_similarity, _iso_example(R))
        tally.record("OS_closed_under_inverse", inv.is_similarity, _iso_example(R))
        if verdicts[R].is_coincidence and verdicts[S].is_coincidence:
            tally.record("OC_closed_under_product", prod.is_coincidence, _iso_example(R))
        if verdicts[R].is_coincidence:
            tally.record("OC_closed_under_inverse", inv.is_coincidence, _iso_example(R))


def suite_eta(G, n, seed, tally: Tally):
    M = free(G)
    isos = catalog.sample_similarity_isometries(G, n, seed=seed)
    rng = random.Random(seed + 1)
    for R in isos:
        c = classify(M, R, with_sigma=False)
        tally.record("eta_order_divides_d", M.dim % c.eta_order == 0, _iso_example(R))
        kernel = c.is_coincidence == (c.eta_order == 1) == c.coset.is_trivial()
        tally.record("kernel_is_OC", kernel, _iso_example(R))
        S = rng.choice(isos)
        tally.record("eta_homomorphism", eta_product_check(M, R, S), _iso_example(R))


def suite_thm319(G, n, seed, tally: Tally):
    M = free(G)
    if not is_K_module(M):
        raise NotAKModule(f"{M.name or 'module'} is not a K-module")
    for R in catalog.sample_similarity_isometries(G, n, seed=seed):
        tally.record("square_is_coincidence", classify(M, R @ R, with_sigma=False).is_coincidence,
                     _iso_example(R))
        if M.dim % 2 == 1:
            tally.record("odd_d_similarity_is_coincidence",
                         classify(M, R, with_sigma=False).is_coincidence, _iso_example(R))
        tally.record("verify_os_squared", verify_os_squared(M, R), _iso_example(R))


def suite_example315(G, n, seed, tally: Tally, extra: dict):
    entry = catalog.catalog_entry(G)
    if "m" not in entry.extras:
        raise InputError("the example315 suite needs an example315:d:n target")
    R, m, xi = entry.extras["R"], entry.extras["m"], entry.extras["xi"]
    c = classify(G, R, with_sigma=False)
    direct = next(i for i in range(1, G.dim + 1) if (xi**i).is_rational())
    extra.update({"m": m, "eta_order": c.eta_order, "verdict": c.verdict.value})
    tally.record("R_is_similarity", c.is_similarity)
    tally.record("R_not_coincidence", not c.is_coincidence)
    tally.record("eta_order_equals_m", c.eta_order == m)
    tally.record("m_matches_direct_rationality", direct == m)
    # R generates a cyclic group of order d whose image under eta has order m
    for k in range(1, G.dim + 1):
        ck = classify(G, R**k, with_sigma=False)
        tally.record("eta_of_R_power", ck.eta_order == m // _gcd(m, k))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _order_target(G) -> PlanarOrder:
    if not isinstance(G, PlanarOrder):
        raise InputError("this suite needs an order:D:f target")
    return G


def suite_thm27(G, n, seed, tally: Tally):
    from .numberfield import field_norm

    O = _order_target(G)
    rng = random.Random(seed)
    from .exactlinalg import snf_diagonal

    for _ in range(n):
        k = O.field.zero
        while k.is_zero():
            k = O.element([rng.randint(-9, 9), rng.randint(-9, 9)])
        norm = abs(field_norm(k))
        prod = 1
        for dv in snf_diagonal(O.multiplication_matrix(k)):
            prod *= dv
        tally.record("norm_equals_index", norm == prod, {"kappa": k.descriptor()})
        if norm == prod:
            principal_ideal_index(O, k)


def lemma26_elements(O: PlanarOrder, rng: random.Random, count: int, box: int = 12, max_tries=20000):
    """Seeded nonzero a in O whose modulus lies in the real ambient field."""
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > max_tries:
            raise UnsupportedModule("too few elements with representable modulus")
        a = O.element([rng.randint(-box, box), rng.randint(-box, box)])
        if a.is_zero():
            continue
        re, im = O.realize(a)
        try:
            modulus = (re * re + im * im).sqrt()
        except NotRepresentable:
            continue
        out.append((a, modulus))
    return out


def suite_lemma26(G, n, seed, tally: Tally):
    O = _order_target(G)
    M = free(O)
    rng = random.Random(seed)
    for a, modulus in lemma26_elements(O, rng, n):
        R = sos_direction(O, a)
        c = classify(M, R, with_sigma=False)
        ex = {"a": a.descriptor()}
        tally.record("direction_is_similarity", c.is_similarity, ex)
        if c.is_similarity:
            tally.record("coset_is_modulus", coset_equal(c.coset, ScalarCoset(modulus, M.K)), ex)


SUITES = {
    "equivalence": suite_equivalence,
    "groups": suite_groups,
    "eta": suite_eta,
    "thm319": suite_thm319,
    "example315": suite_example315,
    "thm27": suite_thm27,
    "lemma26": suite_lemma26,
}


def cmd_verify(args):
    G = catalog.build(args.target)
    tally = Tally()
    extra: dict = {}
    fn = SUITES[args.suite]
    try:
        if args.suite == "example315":
            fn(G, args.samples, args.seed, tally, extra)
        else:
            fn(G, args.samples, args.seed, tally)
    except (NotAKModule, NotASimilarity) as exc:
        report = _base(args, "verify")
        report.update({"suite": args.suite, "target": args.target,
                       "error": {"kind": type(exc).__name__, "message": str(exc)}})
        return 1, report, [f"{type(exc).__name__}: {exc}"]
    report = _base(args, "verify")
    report.update({"suite": args.suite, "target": args.target, "samples": args.samples,
                   "seed": args.seed, "passed": tally.ok, **extra, **tally.report()})
    head = f"verify {args.suite} {args.target}: {'PASS' if tally.ok else 'FAIL'}"
    lines = [head] + [f"  {k} = {v}" for k, v in sorted(extra.items())] + tally.lines()
    return (0 if tally.ok else 1), report, lines


# -- entry point --------------------------------------------------------------------------------


def _common(defaults: bool) -> argparse.ArgumentParser:
    # subcommands must not reset options already given before the command name
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=d("text"))
    common.add_argument("--seed", type=int, default=d(0))
    common.add_argument("--samples", type=int, default=d(20))
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common(False)
    p = argparse.ArgumentParser(prog="coincidence-kit", parents=[_common(True)],
                                description="Exact similarity and coincidence isometries of modules.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("commensurate", parents=[common], help="decide whether two modules are commensurate")
    s.add_argument("module1")
    s.add_argument("module2")
    s.set_defaults(func=cmd_commensurate)

    s = sub.add_parser("classify", parents=[common], help="classify an isometry of a module")
    s.add_argument("module")
    s.add_argument("isometry")
    s.add_argument("--proper", action="store_true", help="only orientation preserving isometries count")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("index", parents=[common], help="index of a submodule")
    s.add_argument("module")
    s.add_argument("submodule")
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("verify", parents=[common], help="run a property suite on a catalog module")
    s.add_argument("suite", choices=sorted(SUITES))
    s.add_argument("target")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("describe", parents=[common], help="print the descriptor of a catalog module")
    s.add_argument("target")
    s.set_defaults(func=cmd_describe)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        code, report, lines = args.func(args)
    except (InputError, *INPUT_ERRORS) as exc:
        code, lines = 2, [f"error: {exc}"]
        report = {"schema": SCHEMA, "command": args.command,
                  "error": {"kind": type(exc).__name__, "message": str(exc)}}
    except (NotSubmodule, InfiniteIndex, NotAKModule, NotASimilarity, NotRepresentable) as exc:
        code, lines = 1, [f"{type(exc).__name__}: {exc}"]
        report = {"schema": SCHEMA, "command": args.command,
                  "error": {"kind": type(exc).__name__, "message": str(exc)}}
    report["exit_code"] = code
    report["timing_s"] = round(time.perf_counter() - start, 6)
    _emit(report, args.format, lines, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
