import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from coincidence_kit import (
    AlgebraicField,
    Isometry,
    RealRoot,
    ScalarCoset,
    SubfieldEmbedding,
    Verdict,
    classify,
    coset_equal,
    eta_order,
    eta_product_check,
    intersect,
    module_index,
    principal_ideal_index,
    sos_direction,
    verify_os_squared,
)
from coincidence_kit.catalog import (
    as_free_module,
    cyclotomic_module,
    example_315,
    hypercubic,
    quadratic_order,
    real_quadratic,
    sample_similarity_isometries,
)
from coincidence_kit.errors import (
    DimensionMismatch,
    MixedAmbient,
    NotAKModule,
    NotASimilarity,
    NotOrthogonal,
    NotRepresentable,
    ZeroElement,
)
from coincidence_kit.isometry import conjugated

L = real_quadratic(2)
r2 = L.gen
Z2 = hypercubic(2)
Q = SubfieldEmbedding.rationals(L)


def rot(c, s):
    return Isometry([[c, -s], [s, c]], L)


ROT90 = rot(0, 1)
ROT345 = rot(F(3, 5), F(4, 5))
ROT45 = rot(r2 / 2, r2 / 2)


def brute_force_sigma(R):
    """[Z^2 : Z^2 ∩ R Z^2] by coset enumeration over representatives in [0, N)^2."""
    M = R.matrix
    N = max(x.to_fraction().denominator for x in M.entries())

    def in_meet(v):
        w = M.T @ tuple(L(c) for c in v)
        return all(x.is_rational() and x.to_fraction().denominator == 1 for x in w)

    reps = []
    for p in itertools.product(range(N), repeat=2):
        if not any(in_meet((a - b for a, b in zip(p, q))) for q in reps):
            reps.append(p)
    return len(reps)


# -- construction -----------------------------------------------------------------------


def test_isometry_requires_orthogonality():
    with pytest.raises(NotOrthogonal, match="RᵀR ≠ I"):
        Isometry([[1, 1], [0, 1]], L)
    R = ROT45
    assert R.det == 1
    assert Isometry([[1, 0], [0, -1]], L).det == -1
    assert (R @ R.T).matrix.is_identity()
    assert R**8 == Isometry.identity(2, L)


def test_descriptor_round_trip():
    assert Isometry.from_descriptor(ROT45.descriptor()) == ROT45


# -- classify -------------------------------------------------------------------------------


def test_rot90_is_symmetry():
    c = classify(Z2, ROT90)
    assert c.verdict is Verdict.COINCIDENCE and c.sigma == 1


def test_pythagorean_rotation_sigma():
    c = classify(Z2, ROT345)
    assert c.verdict is Verdict.COINCIDENCE
    assert c.sigma == 5 == brute_force_sigma(ROT345)


@pytest.mark.parametrize("a,b,c", [(5, 12, 13), (8, 15, 17), (7, 24, 25)])
def test_pythagorean_sigma_is_hypotenuse(a, b, c):
    R = rot(F(a, c), F(b, c))
    assert classify(Z2, R).sigma == c == brute_force_sigma(R)


def test_rot45_is_similarity():
    c = classify(Z2, ROT45)
    assert c.verdict is Verdict.SIMILARITY
    assert c.eta_order == 2
    assert coset_equal(c.coset, ScalarCoset(r2, Q))
    assert not c.coset.is_trivial()


def test_example_cyclic_permutation():
    G, R, m = example_315(3, 2)
    c = classify(G, R)
    assert c.verdict is Verdict.SIMILARITY and c.eta_order == 3 == m
    xi = G.ambient.gen
    assert coset_equal(c.coset, ScalarCoset(xi, G.K))
    assert eta_order(example_315(6, 12)[0], example_315(6, 12)[1]) == 6


def test_irrational_non_similarity():
    G = hypercubic(3)
    h = r2 / 2
    R = Isometry([[h, -h, 0], [h, h, 0], [0, 0, 1]], L)
    assert classify(G, R).verdict is Verdict.NOT_SIMILARITY
    with pytest.raises(NotASimilarity):
        eta_order(G, R)


def test_proper_only_filter():
    refl = Isometry([[1, 0], [0, -1]], L)
    assert classify(Z2, refl).is_coincidence
    assert classify(Z2, refl, proper_only=True).verdict is Verdict.NOT_SIMILARITY
    assert classify(Z2, ROT345, proper_only=True).is_coincidence


def test_dimension_one():
    Z1 = hypercubic(1)
    for s in (1, -1):
        c = classify(Z1, Isometry([[s]], L))
        assert c.is_coincidence and c.sigma == 1


def test_pair_checks():
    with pytest.raises(DimensionMismatch):
        classify(hypercubic(3), ROT45)
    other = AlgebraicField([-3, 0, 1], RealRoot(1, 2))
    with pytest.raises(MixedAmbient):
        classify(Z2, Isometry([[0, 1], [1, 0]], other))


def test_coset_independent_of_pivot():
    for G in (Z2, cyclotomic_module(8), example_315(4, 8)[0]):
        for R in sample_similarity_isometries(G, 10, seed=3):
            c = classify(G, R, with_sigma=False)
            H = conjugated(G, R)
            for h in H.entries():
                if h:
                    assert coset_equal(c.coset, ScalarCoset(h.inverse(), G.K))


def test_sigma_two_sided():
    for R in sample_similarity_isometries(hypercubic(3), 10, seed=4):
        G = hypercubic(3)
        meet = intersect(G, G.image(R))
        assert module_index(G, meet) == module_index(G.image(R), meet) == classify(G, R).sigma


# -- cosets and eta ------------------------------------------------------------------------


def test_coset_equality_examples():
    assert coset_equal(ScalarCoset(r2, Q), ScalarCoset(3 * r2, Q))
    assert not coset_equal(ScalarCoset(r2, Q), ScalarCoset(L.one, Q))
    L4 = AlgebraicField([-2, 0, 0, 0, 1], RealRoot(1, 2))
    t = L4.gen
    K = SubfieldEmbedding(L4, t * t)
    assert coset_equal(ScalarCoset(t, K), ScalarCoset(t**3, K))
    assert ScalarCoset(-r2, Q).rep == r2


def test_eta_product_examples():
    assert eta_product_check(Z2, ROT45, ROT45)
    assert eta_product_check(Z2, ROT345, ROT45)
    assert classify(Z2, ROT45 @ ROT45).is_coincidence
    h = r2 / 2
    bad = Isometry([[h, -h, 0], [h, h, 0], [0, 0, 1]], L)
    with pytest.raises(NotASimilarity):
        eta_product_check(hypercubic(3), bad, bad)


# -- squares are coincidences -------------------------------------------------------------


def test_verify_os_squared_examples():
    assert verify_os_squared(Z2, ROT45)
    Z3 = hypercubic(3)
    for R in sample_similarity_isometries(Z3, 10, seed=5):
        assert verify_os_squared(Z3, R)
    G = cyclotomic_module(5)
    zeta = (G.basis[0, 1], G.basis[1, 1])
    a = (1 + zeta[0], zeta[1])
    modulus = (a[0] * a[0] + a[1] * a[1]).sqrt()
    R = Isometry([[a[0] / modulus, -a[1] / modulus], [a[1] / modulus, a[0] / modulus]], G.ambient)
    assert verify_os_squared(G, R)
    assert classify(G, R @ R).sigma >= 1


def test_verify_os_squared_needs_K_module():
    G, R, _ = example_315(3, 2)
    with pytest.raises(NotAKModule):
        verify_os_squared(G, R)


# -- planar orders ------------------------------------------------------------------------


def test_sos_direction_examples():
    O = quadratic_order(-1, 1)
    i = O.field.gen
    assert sos_direction(O, O.field.one) == Isometry.identity(2, O.ambient)
    R = sos_direction(O, 1 + i)
    s = O.ambient.gen / 2
    assert R == Isometry([[s, -s], [s, s]], O.ambient)
    E = quadratic_order(-3, 1)
    w = (E.field.gen - 1) / 2
    R = sos_direction(E, w)
    assert R**3 == Isometry.identity(2, E.ambient)
    assert classify(as_free_module(E), R).is_coincidence
    with pytest.raises(ZeroElement):
        sos_direction(O, O.field.zero)
    with pytest.raises(NotRepresentable):
        sos_direction(O, 1 + 2 * i)


def test_principal_ideal_index_examples():
    O = quadratic_order(-1, 1)
    i = O.field.gen
    assert principal_ideal_index(O, 1 + i) == 2
    assert principal_ideal_index(O, 1 + 2 * i) == 5
    O2 = quadratic_order(-1, 2)
    assert principal_ideal_index(O2, 2 * O2.field.gen) == 4
    with pytest.raises(ZeroElement):
        principal_ideal_index(O, O.field.zero)


@settings(max_examples=60)
@given(x=st.integers(-15, 15), y=st.integers(-15, 15), D=st.sampled_from([-1, -2, -3, -7]))
def test_principal_ideal_index_is_norm(x, y, D):
    O = quadratic_order(D, 1)
    k = O.element([x, y])
    if k.is_zero():
        return
    a, b = O.realize(k)
    assert principal_ideal_index(O, k) == a * a + b * b


# -- group properties on sampled isometries -------------------------------------------------


GROUP_TARGETS = ["hypercubic:2", "hypercubic:4", "cyclotomic:5", "icosian", "example315:4:8"]


@pytest.mark.parametrize("name", GROUP_TARGETS)
@settings(max_examples=8)
@given(seed=st.integers(0, 10_000))
def test_closure_and_kernel(name, seed):
    from coincidence_kit.catalog import build

    G = build(name)
    M = as_free_module(G)
    R, S = sample_similarity_isometries(G, 2, seed=seed)
    cr, cs = classify(M, R, with_sigma=False), classify(M, S, with_sigma=False)
    prod = classify(M, R @ S, with_sigma=False)
    assert prod.is_similarity and classify(M, R.T, with_sigma=False).is_similarity
    if cr.is_coincidence and cs.is_coincidence:
        assert prod.is_coincidence
    for c in (cr, cs, prod):
        assert c.is_coincidence == (c.eta_order == 1) == c.coset.is_trivial()
        assert M.dim % c.eta_order == 0
    assert eta_product_check(M, R, S)
