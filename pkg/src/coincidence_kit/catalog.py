"""Named modules and seeded samplers of similarity isometries.

Each constructor attaches a :class:`CatalogEntry` to the module it returns.
The entry records the expected shape (d, r, K-module property), checks it at
construction, and knows how to draw isometries that are guaranteed to be
similarity isometries; every draw is still validated with ``classify``.

Ambient fields are chosen one step larger than the coefficient field where
that is needed for non-trivial similarity isometries to exist (for instance
rot(45 deg) on Z^2 needs sqrt(2)); the choices are listed per constructor.
"""

from __future__ import annotations

import functools
import json
import math
import os
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from importlib import resources
from typing import Callable

from . import _poly
from .errors import (
    DescriptorError,
    InternalMismatch,
    InvalidDiscriminant,
    NotRepresentable,
    PerfectPower,
    UnsupportedM,
    UnsupportedModule,
)
from .exactlinalg import ExactMatrix
from .isometry import Isometry, Verdict, classify
from .modules import CoefficientRing, FreeModule, PlanarOrder, is_K_module
from .numberfield import AlgebraicField, ComplexRoot, FieldElement, RealRoot, SubfieldEmbedding

F = Fraction


# -- fields ----------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def real_quadratic(n: int) -> AlgebraicField:
    """Q(sqrt(n)) for a positive non-square n."""
    return AlgebraicField([-n, 0, 1], RealRoot(1, n), name=f"Q(sqrt{n})")


@functools.lru_cache(maxsize=None)
def golden_field() -> AlgebraicField:
    return AlgebraicField([-1, -1, 1], RealRoot(1, 2), name="Q(tau)")


@functools.lru_cache(maxsize=None)
def biquadratic(p: int, q: int) -> AlgebraicField:
    """Q(sqrt(p), sqrt(q)) generated by sqrt(p) + sqrt(q)."""
    # (x^2 - p - q)^2 = 4pq
    s = p + q
    minpoly = [s * s - 4 * p * q, 0, -2 * s, 0, 1]
    lo = math.isqrt(p) + math.isqrt(q)
    return AlgebraicField(minpoly, RealRoot(lo, lo + 2), name=f"Q(sqrt{p},sqrt{q})")


def _sqrt(L: AlgebraicField, n) -> FieldElement:
    return L(n).sqrt()


def _tau_in(L: AlgebraicField) -> FieldElement:
    return (1 + _sqrt(L, 5)) / 2


def _lift(x: FieldElement, image: FieldElement) -> FieldElement:
    """Map x from Q(tau) (or any simple field) to the field of ``image``."""
    return _poly.evaluate(list(x.coeffs), image) if x.field.degree > 1 else image.field(x.coeffs[0])


# -- catalog entries ---------------------------------------------------------------


@dataclass
class CatalogEntry:
    name: str
    module: object
    dim: int
    rank: int
    K_module: bool | None
    sampler: Callable[[random.Random], Isometry | None] | None = None
    extras: dict = dc_field(default_factory=dict)

    def check(self):
        G = self.module
        if isinstance(G, PlanarOrder):
            G = planar_free_module(G)
        got_dim, got_rank, km = G.dim, G.ring.rank, is_K_module(G)
        if got_dim != self.dim or got_rank != self.rank:
            raise InternalMismatch(f"{self.name}: expected d={self.dim}, r={self.rank}, "
                                   f"got d={got_dim}, r={got_rank}")
        if self.K_module is not None and km != self.K_module:
            raise InternalMismatch(f"{self.name}: is_K_module is {km}, expected {self.K_module}")
        return self


def _attach(entry: CatalogEntry):
    entry.check()
    entry.module._catalog_entry = entry
    return entry.module


def catalog_entry(G) -> CatalogEntry:
    try:
        return G._catalog_entry
    except AttributeError:
        raise UnsupportedModule("module was not built by the catalog") from None


# -- small isometry builders ------------------------------------------------------------


def _matrix(rows, L) -> Isometry:
    return Isometry(ExactMatrix(rows, L), check=False)


def _signed_permutation(rng: random.Random, d: int, L) -> Isometry:
    perm = list(range(d))
    rng.shuffle(perm)
    rows = [[L.zero] * d for _ in range(d)]
    for i, j in enumerate(perm):
        rows[i][j] = L(rng.choice((1, -1)))
    return _matrix(rows, L)


def _plane_block(d: int, i: int, j: int, c, s, L) -> Isometry:
    rows = [[L.one if a == b else L.zero for b in range(d)] for a in range(d)]
    rows[i][i], rows[i][j], rows[j][i], rows[j][j] = L(c), L(-s), L(s), L(c)
    return _matrix(rows, L)


PYTHAGOREAN = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29))


def _pythagorean(rng: random.Random, d: int, L) -> Isometry:
    i, j = rng.sample(range(d), 2)
    a, b, c = rng.choice(PYTHAGOREAN)
    return _plane_block(d, i, j, F(a, c), F(b, c) * rng.choice((1, -1)), L)


def cayley_rotation(rng: random.Random, d: int, L, spread: int = 2) -> Isometry:
    """(I - A)(I + A)^-1 for a random skew-symmetric integer matrix A."""
    A = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            v = rng.randint(-spread, spread)
            A[i][j], A[j][i] = v, -v
    I = ExactMatrix.identity(d, L)
    Am = ExactMatrix(A, L)
    return Isometry((I - Am) @ (I + Am).inverse(), check=False)


def _rot45_blocks(rng: random.Random, d: int, L) -> Isometry:
    """rot(45 deg) in d/2 disjoint coordinate planes (d even)."""
    h = _sqrt(L, 2) / 2
    perm = list(range(d))
    rng.shuffle(perm)
    R = Isometry.identity(d, L)
    for k in range(0, d - 1, 2):
        R = R @ _plane_block(d, perm[k], perm[k + 1], h, h * rng.choice((1, -1)), L)
    return R


def _rot45_single(rng: random.Random, d: int, L) -> Isometry:
    i, j = rng.sample(range(d), 2)
    h = _sqrt(L, 2) / 2
    return _plane_block(d, i, j, h, h, L)


# quaternions in coordinates (1, i, j, k), Hamilton convention


def qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def qconj(q):
    return (q[0], -q[1], -q[2], -q[3])


def qnorm(q):
    return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]


def left_multiplication(q, scale, L) -> Isometry:
    """x -> (q / scale) x, where scale = |q|."""
    a, b, c, d = (L(x) / scale for x in q)
    return Isometry(ExactMatrix([[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]], L))


def conjugation_rotation(q, L) -> Isometry:
    """The rotation x -> q x conj(q) / |q|^2 of the pure quaternions."""
    a, b, c, d = (L(x) for x in q)
    n = qnorm((a, b, c, d))
    rows = [[a * a + b * b - c * c - d * d, 2 * (b * c - a * d), 2 * (b * d + a * c)],
            [2 * (b * c + a * d), a * a - b * b + c * c - d * d, 2 * (c * d - a * b)],
            [2 * (b * d - a * c), 2 * (c * d + a * b), a * a - b * b - c * c + d * d]]
    return Isometry(ExactMatrix([[x / n for x in r] for r in rows], L))


def _random_product(rng: random.Random, makers, L, d, length=(1, 3)) -> Isometry:
    R = Isometry.identity(d, L)
    for _ in range(rng.randint(*length)):
        R = R @ rng.choice(makers)(rng)
    return R


# -- hypercubic ---------------------------------------------------------------


def hypercubic(d: int, ambient: AlgebraicField | None = None) -> FreeModule:
    """Z^d with the identity basis (S = Z, K = Q).

    The ambient field defaults to Q(sqrt 2) so that rot(45 deg) type
    similarity isometries are expressible.
    """
    if d < 1:
        raise ValueError("dimension must be at least 1")
    L = ambient if ambient is not None else real_quadratic(2)
    G = FreeModule(CoefficientRing.integers(L), ExactMatrix.identity(d, L), name=f"hypercubic:{d}")
    has_sqrt2 = True
    try:
        _sqrt(L, 2)
    except NotRepresentable:
        has_sqrt2 = False

    makers = [lambda r: _signed_permutation(r, d, L)]
    if d >= 2:
        makers += [lambda r: _pythagorean(r, d, L), lambda r: cayley_rotation(r, d, L)]
        if has_sqrt2 and d % 2 == 0:
            makers.append(lambda r: _rot45_blocks(r, d, L))
        if has_sqrt2 and d >= 3:
            # not a similarity for d > 2; exercised and rejected by classify
            makers.append(lambda r: _rot45_single(r, d, L))
        if d == 4:
            makers.append(lambda r: _lipschitz_similarity(r, L))
    if d == 1:
        sampler = lambda r: _matrix([[L(r.choice((1, -1)))]], L)
    else:
        sampler = lambda r: _random_product(r, makers, L, d)
    return _attach(CatalogEntry(f"hypercubic:{d}", G, d, 1, True, sampler))


def _lipschitz_similarity(rng: random.Random, L) -> Isometry:
    """(q/|q|) x for q = r t conj(r), so that |q| = N(r) sqrt(N(t))."""
    r = tuple(rng.randint(-2, 2) for _ in range(4))
    if not any(r):
        r = (1, 0, 0, 0)
    t = rng.choice(((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (1, 1, 1, 1), (0, 1, 1, 0)))
    q = qmul(qmul(r, t), qconj(r))
    scale = qnorm(r) * _sqrt(L, qnorm(t))
    return left_multiplication(q, scale, L)


# -- example with a cyclic eta image -------------------------------------------


def _perfect_power(n: int) -> tuple[int, int]:
    """n = a^b with b maximal."""
    for b in range(max(1, n.bit_length()), 1, -1):
        a = round(n ** (1.0 / b))
        for c in (a - 1, a, a + 1):
            if c > 1 and c**b == n:
                return c, b
    return n, 1


def _valuations(n: int) -> dict[int, int]:
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def valuation_order(d: int, n: int) -> int:
    """Least i with d | i * v_p(n) for every prime p dividing n."""
    vals = _valuations(n)
    i = 1
    while not all((i * v) % d == 0 for v in vals.values()):
        i += 1
    return i


def example_315(d: int, n: int):
    """Z-span of xi^i e_i (1 <= i <= d) with xi = n^(1/d), the cyclic shift R, and m.

    Returns ``(module, R, m)`` where m = min{i : xi^i rational} is the expected
    eta-order of R.  With n = a^b (b maximal) and g = gcd(b, d) the field is
    Q(a^(1/d')) for d' = d/g, and xi = a^(b'/d'), b' = b/g.
    """
    if d < 1 or n < 1:
        raise ValueError("need d >= 1 and n >= 1")
    a, b = _perfect_power(n) if n > 1 else (1, 1)
    g = math.gcd(b, d)
    dd, bb = d // g, b // g
    if n == 1 or dd == 1:
        raise PerfectPower(f"{n} is a perfect {d}-th power")
    L = AlgebraicField([-a] + [0] * (dd - 1) + [1], RealRoot(0, a), name=f"Q({a}^(1/{dd}))")
    xi = L.gen**bb
    basis = ExactMatrix.diagonal([xi**i for i in range(1, d + 1)], L)
    G = FreeModule(CoefficientRing.integers(L), basis, name=f"example315:{d}:{n}")
    rows = [[L.zero] * d for _ in range(d)]
    for i in range(d):
        rows[(i + 1) % d][i] = L.one
    R = Isometry(ExactMatrix(rows, L))

    m = valuation_order(d, n)
    direct = next(i for i in range(1, d + 1) if (xi**i).is_rational())
    if not (m == direct == dd):
        raise InternalMismatch(f"m from valuations {m}, direct {direct}, field degree {dd}")

    def sampler(r):
        sign = ExactMatrix.diagonal([r.choice((1, -1)) for _ in range(d)], L)
        return Isometry(sign, check=False) @ R ** r.randrange(d)

    _attach(CatalogEntry(G.name, G, d, 1, m <= 2, sampler, {"R": R, "m": m, "xi": xi}))
    return G, R, m


# -- quaternion rings -----------------------------------------------------------------


def _quaternion_ring(name, L, K_gen, ring_basis, columns, t_choices):
    K = SubfieldEmbedding(L, K_gen)
    ring = CoefficientRing(K, ring_basis)
    G = FreeModule(ring, ExactMatrix.from_columns(columns, L), name=name)
    units = [tuple(c) for c in columns if qnorm(tuple(c)) == 1]
    roots = {}
    for t in t_choices:
        roots[t] = _sqrt(L, qnorm(t))

    def random_element(rng):
        acc = (L.zero,) * 4
        for col in columns:
            c = sum((s * rng.randint(-1, 1) for s in ring.zbasis), L.zero)
            acc = tuple(x + c * y for x, y in zip(acc, col))
        return acc

    def sampler(rng):
        u = (L.one, L.zero, L.zero, L.zero)
        for _ in range(rng.randint(0, 4)):
            w = rng.choice(units)
            u = qmul(u, w if rng.random() < 0.5 else qconj(w))
        r = random_element(rng)
        if not any(r):
            r = u
        t = rng.choice(t_choices)
        q = qmul(u, qmul(qmul(r, tuple(L(x) for x in t)), qconj(r)))
        return left_multiplication(q, qnorm(r) * roots[t], L)

    return _attach(CatalogEntry(name, G, 4, ring.rank, True, sampler, {"units": units}))


def icosian_ring(minimal: bool = False) -> FreeModule:
    """The icosian ring as a Z[tau]-module in R^4 (quaternion coordinates).

    Ambient Q(sqrt 2, sqrt 5) by default, so that x -> (q/|q|) x with
    |q|^2 = 2 is available; ``minimal=True`` uses Q(tau) itself.
    """
    L = golden_field() if minimal else biquadratic(2, 5)
    tau = L.gen if minimal else _tau_in(L)
    h = F(1, 2)
    cols = [(L.one, L.zero, L.zero, L.zero), (L.zero, L.one, L.zero, L.zero),
            (L(h), L(h), L(h), L(h)), ((1 - tau) * h, tau * h, L.zero, L(h))]
    t_choices = [(1, 0, 0, 0), (0, 1, 0, 0), (2, 1, 0, 0), (1, 1, 1, 1)]
    if not minimal:
        t_choices += [(1, 1, 0, 0), (0, 1, 0, 1), (1, 0, 1, 0)]
    return _quaternion_ring("icosian", L, tau, [L.one, tau], cols, t_choices)


def cubian_ring(minimal: bool = False) -> FreeModule:
    """The cubian ring as a Z[sqrt 2]-module in R^4.

    Ambient Q(sqrt 2, sqrt 3) by default (|1+i+j| = sqrt 3); ``minimal=True``
    uses Q(sqrt 2).
    """
    L = real_quadratic(2) if minimal else biquadratic(2, 3)
    r2 = _sqrt(L, 2)
    h, s = F(1, 2), r2 / 2
    cols = [(L.one, L.zero, L.zero, L.zero), (s, s, L.zero, L.zero),
            (s, L.zero, s, L.zero), (L(h), L(h), L(h), L(h))]
    t_choices = [(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (1, 1, 1, 1)]
    if not minimal:
        t_choices += [(1, 1, 1, 0), (0, 1, 1, 1)]
    return _quaternion_ring("cubian", L, r2, [L.one, r2], cols, t_choices)


# -- icosahedral modules ---------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _icosahedral_data():
    text = resources.files(__package__).joinpath("data/icosahedral.json").read_text()
    return json.loads(text)


def _group_closure(generators, d, L, limit=1000):
    seen = {ExactMatrix.identity(d, L)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for x in generators:
                y = x @ g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > limit:
            raise InternalMismatch("group closure does not terminate")
        frontier = nxt
    return sorted(seen, key=lambda m: m.descriptor())


def icosahedral_module(variant: str = "B", minimal: bool = False) -> FreeModule:
    """The body (B) or face (F) centred icosahedral Z[tau]-module in R^3.

    Bases are read from the bundled data file.  The default ambient is
    Q(sqrt 2, sqrt 5), so that candidate isometries with entries outside
    Q(tau) can be tested as well; ``minimal=True`` uses Q(tau).
    """
    variant = variant.upper()
    data = _icosahedral_data()
    if variant not in data["modules"]:
        raise DescriptorError(f"unknown icosahedral variant {variant!r}")
    T = AlgebraicField.from_descriptor(data["field"])
    L = golden_field() if minimal else biquadratic(2, 5)
    tau = L.gen if minimal else _tau_in(L)
    lift = lambda e: _lift(T.element(e), tau)
    cols = [[lift(e) for e in col] for col in data["modules"][variant]]
    ring = CoefficientRing(SubfieldEmbedding(L, tau), [L(lift(e)) for e in data["ring_zbasis"]])
    G = FreeModule(ring, ExactMatrix.from_columns(cols, L), name=f"icosahedral:{variant}")
    gens = [ExactMatrix([[lift(e) for e in row] for row in m], L) for m in data["group_generators"]]
    for g in gens:
        if not (g.T @ g).is_identity() or g.det() != 1:
            raise InternalMismatch("stored group generator is not a rotation")
        if G.image(g) != G:
            raise InternalMismatch("module is not invariant under the stored group")
    group = [Isometry(g, check=False) for g in _group_closure(gens, 3, L)]
    if len(group) != 60:
        raise InternalMismatch(f"rotation group has order {len(group)}, expected 60")

    risky = []
    if not minimal:
        h = _sqrt(L, 2) / 2
        risky.append(_plane_block(3, 0, 1, h, h, L))

    def sampler(rng):
        R = rng.choice(group)
        roll = rng.random()
        if roll < 0.5:
            q = tuple(rng.randint(-2, 2) for _ in range(4))
            if any(q):
                R = R @ conjugation_rotation(q, L)
        elif roll < 0.6 and risky:
            R = R @ rng.choice(risky)
        if rng.random() < 0.3:
            R = Isometry(R.matrix * -1, check=False)
        return R

    return _attach(CatalogEntry(G.name, G, 3, 2, True, sampler,
                                {"group": group, "fivefold": Isometry(gens[2], check=False)}))


# -- planar modules ---------------------------------------------------------------------


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _rotation_from(a, modulus, L) -> Isometry:
    x, y = a[0] / modulus, a[1] / modulus
    return _matrix([[x, -y], [y, x]], L)


def _planar_sampler(L, random_element, seeds, units):
    """Rotations a/|a| for a = u b^2 c, where |c| is known to lie in L.

    |a| = |b|^2 |c| is then exact without taking square roots.  Lemma-style
    guarantee: multiplying by |a| maps the module into itself.
    """
    reflect = _matrix([[1, 0], [0, -1]], L)

    def sampler(rng):
        b = random_element(rng)
        if not any(b):
            b = (L.one, L.zero)
        c, cabs = rng.choice(seeds)
        a = _cmul(_cmul(b, b), c)
        for _ in range(rng.randrange(4)):
            a = _cmul(a, rng.choice(units))
        R = _rotation_from(a, (b[0] * b[0] + b[1] * b[1]) * cabs, L)
        if rng.random() < 0.25:
            R = R @ reflect
        return R

    return sampler


def _seed_elements(L, candidates):
    out = []
    for c in candidates:
        if not any(c):
            continue
        try:
            out.append((c, (c[0] * c[0] + c[1] * c[1]).sqrt()))
        except NotRepresentable:
            pass
    return out


# per m: (minpoly, root interval, expression of (cos, sin)(2 pi/m) in the generator)
def _cyclotomic_setup(m: int):
    if m in (3, 6):
        L = real_quadratic(3)
        s3 = L.gen
        cs = (L(F(-1, 2)), s3 / 2) if m == 3 else (L(F(1, 2)), s3 / 2)
    elif m == 4:
        L = real_quadratic(2)
        cs = (L.zero, L.one)
    elif m in (5, 10):
        # generator 2 sin(72 deg), root of x^4 - 5x^2 + 5
        L = AlgebraicField([5, 0, -5, 0, 1], RealRoot(F(3, 2), 2), name="Q(2sin72)")
        s = L.gen
        if m == 5:
            cs = ((s * s - 3) / 2, s / 2)
        else:
            c = (s * s - 2) / 2
            cs = (c, (1 - c * c).sqrt())
    elif m == 8:
        # generator 2 cos(pi/8), root of x^4 - 4x^2 + 2
        L = AlgebraicField([2, 0, -4, 0, 1], RealRoot(F(3, 2), 2), name="Q(2cos(pi/8))")
        c = (L.gen**2 - 2) / 2
        cs = (c, c)
    elif m == 12:
        # generator 2 cos(pi/12), root of x^4 - 4x^2 + 1
        L = AlgebraicField([1, 0, -4, 0, 1], RealRoot(F(3, 2), 2), name="Q(2cos(pi/12))")
        cs = ((L.gen**2 - 2) / 2, L(F(1, 2)))
    else:
        raise UnsupportedM(f"cyclotomic module for m = {m} is not available "
                           "(supported: 3, 4, 5, 6, 8, 10, 12)")
    cos, sin = cs
    if cos * cos + sin * sin != 1 or sin.sign() <= 0:
        raise InternalMismatch("bad root of unity")
    # zeta has order exactly m
    z, k = (cos, sin), 1
    while z != (L.one, L.zero):
        z, k = _cmul(z, cs), k + 1
    if k != m:
        raise InternalMismatch(f"root of unity has order {k}, expected {m}")
    return L, cos, sin


def cyclotomic_module(m: int) -> FreeModule:
    """Z[zeta_m] as the Z[zeta + conj zeta]-span of (1, 0) and (cos, sin)(2 pi/m).

    Ambient fields: m = 3, 6: Q(sqrt 3); m = 4: Q(sqrt 2); m = 5, 10:
    Q(2 sin 72 deg); m = 8: Q(2 cos(pi/8)); m = 12: Q(2 cos(pi/12)).  For m = 4,
    8, 12 these are one quadratic step above Q(cos, sin), so that rotations
    such as (1+zeta)/|1+zeta| exist.
    """
    L, cos, sin = _cyclotomic_setup(m)
    g = 2 * cos
    K = SubfieldEmbedding(L, g)
    ring = CoefficientRing.monogenic(K, g)
    G = FreeModule(ring, ExactMatrix([[L.one, cos], [L.zero, sin]], L), name=f"cyclotomic:{m}")
    zeta = (cos, sin)
    one = (L.one, L.zero)

    def random_element(rng):
        x = sum((p * rng.randint(-2, 2) for p in ring.zbasis), L.zero)
        y = sum((p * rng.randint(-2, 2) for p in ring.zbasis), L.zero)
        return (x + y * cos, y * sin)

    cands = [one, (1 + cos, sin), (1 - cos, -sin)]
    z2 = _cmul(zeta, zeta)
    cands += [(1 + z2[0], z2[1]), (1 - z2[0], -z2[1])]
    seeds = _seed_elements(L, cands)
    sampler = _planar_sampler(L, random_element, seeds, [zeta])
    return _attach(CatalogEntry(G.name, G, 2, ring.rank, True, sampler, {"zeta": zeta}))


def quadratic_order(D: int, f: int = 1) -> PlanarOrder:
    """The order Z + f O_K of Q(sqrt D), D < 0 squarefree, with basis {1, f w}.

    The real ambient field is Q(sqrt 2) for D = -1 and Q(sqrt |D|) otherwise.
    """
    if not isinstance(D, int) or D >= 0:
        raise InvalidDiscriminant("D must be a negative integer")
    if any(D % (p * p) == 0 for p in range(2, math.isqrt(-D) + 1)):
        raise InvalidDiscriminant(f"{D} is not squarefree")
    if f < 1:
        raise InvalidDiscriminant("conductor must be positive")
    A = -D
    Kf = AlgebraicField([A, 0, 1], ComplexRoot(-1, 1, F(1, 2), A + 1),
                        name=f"Q(sqrt{D})", conjugate=[0, -1])
    theta = Kf.gen
    omega = (1 + theta) / 2 if D % 4 == 1 else theta
    Lr = real_quadratic(2) if A == 1 else real_quadratic(A)
    im = Lr.one if A == 1 else Lr.gen
    name = f"order:{D}:{f}"
    O = PlanarOrder(Kf, [Kf.one, omega * f], Lr, 0, im, name=name)

    def random_element(rng):
        a = O.element([rng.randint(-3, 3), rng.randint(-3, 3)])
        return O.realize(a)

    cands = [O.realize(O.element([x, y])) for x in range(-2, 3) for y in range(-2, 3) if x or y]
    seeds = _seed_elements(Lr, cands)
    units = [O.realize(u) for u in _order_units(O)]
    sampler = _planar_sampler(Lr, random_element, seeds, units)
    return _attach(CatalogEntry(name, O, 2, 1, True, sampler, {"omega": omega}))


def _order_units(O: PlanarOrder):
    out = []
    for x in range(-2, 3):
        for y in range(-2, 3):
            a = O.element([x, y])
            if a and abs(a.norm()) == 1:
                out.append(a)
    return out


def planar_free_module(O: PlanarOrder) -> FreeModule:
    """The order as a Z-lattice in the real ambient plane (cached)."""
    G = getattr(O, "_free", None)
    if G is None:
        G = O._free = O.as_free_module()
    return G


# -- lookup -------------------------------------------------------------------------------


NAMES = ("hypercubic:d", "example315:d:n", "icosian", "cubian", "icosahedral:B",
         "icosahedral:F", "cyclotomic:m", "order:D:f")


def build(name: str):
    """Construct a catalog module from a name such as ``hypercubic:3`` or ``order:-1:2``.

    Names not in the built-in list are looked up as ``<name>.json`` module
    descriptors in the directory named by COINCIDENCE_KIT_CATALOG.
    """
    parts = name.split(":")
    head, args = parts[0], parts[1:]
    try:
        if head == "hypercubic" and len(args) == 1:
            return hypercubic(int(args[0]))
        if head == "example315" and len(args) == 2:
            return example_315(int(args[0]), int(args[1]))[0]
        if head == "icosian" and not args:
            return icosian_ring()
        if head == "cubian" and not args:
            return cubian_ring()
        if head == "icosahedral" and len(args) == 1:
            return icosahedral_module(args[0])
        if head == "cyclotomic" and len(args) == 1:
            return cyclotomic_module(int(args[0]))
        if head == "order" and len(args) in (1, 2):
            return quadratic_order(int(args[0]), int(args[1]) if len(args) == 2 else 1)
    except ValueError as exc:
        if isinstance(exc, DescriptorError):
            raise
        raise DescriptorError(f"bad catalog name {name!r}: {exc}") from None
    extra = os.environ.get("COINCIDENCE_KIT_CATALOG")
    if extra:
        path = os.path.join(extra, name + ".json")
        if os.path.isfile(path):
            with open(path) as fh:
                return FreeModule.from_descriptor(json.load(fh))
    raise DescriptorError(f"unknown catalog name {name!r}; known: {', '.join(NAMES)}")


# -- sampling -------------------------------------------------------------------------------


def as_free_module(G) -> FreeModule:
    return planar_free_module(G) if isinstance(G, PlanarOrder) else G


def sample_similarity_isometries(G, count: int, seed: int = 0, max_tries: int | None = None):
    """``count`` seeded isometries of a catalog module, each validated by classify."""
    entry = catalog_entry(G)
    if entry.sampler is None:
        raise UnsupportedModule(f"no sampler for {entry.name}")
    rng = random.Random(seed)
    M = as_free_module(G)
    out = []
    tries = 0
    limit = max_tries if max_tries is not None else 20 * count + 50
    while len(out) < count:
        tries += 1
        if tries > limit:
            raise InternalMismatch(f"sampler for {entry.name} produced too few similarity isometries")
        R = entry.sampler(rng)
        if R is None:
            continue
        if classify(M, R, with_sigma=False).verdict is not Verdict.NOT_SIMILARITY:
            out.append(R)
    return out


def candidate_isometries(G, count: int, seed: int = 0):
    """Raw sampler output, including candidates that are not similarity isometries."""
    entry = catalog_entry(G)
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        R = entry.sampler(rng)
        if R is not None:
            out.append(R)
    return out


__all__ = [
    "CatalogEntry",
    "build",
    "catalog_entry",
    "cubian_ring",
    "cyclotomic_module",
    "example_315",
    "hypercubic",
    "icosahedral_module",
    "icosian_ring",
    "quadratic_order",
    "sample_similarity_isometries",
]
