import itertools
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, strategies as st
from sympy.matrices.normalforms import smith_normal_form

from coincidence_kit import (
    AlgebraicField,
    ExactMatrix,
    IntegerLattice,
    RealRoot,
    det,
    hnf,
    invert,
    lattice_index,
    lattice_intersect,
    snf_diagonal,
    transition_matrix,
)
from coincidence_kit.errors import InfiniteIndex, NotSquare, NotSubmodule, Singular

SQRT2 = AlgebraicField([-2, 0, 1], RealRoot(1, 2))


def int_matrix(n, m=None, lo=-6, hi=6):
    m = n if m is None else m
    return st.lists(st.lists(st.integers(lo, hi), min_size=m, max_size=m), min_size=n, max_size=n)


def nonsingular(n, lo=-6, hi=6):
    return int_matrix(n, n, lo, hi).filter(lambda A: sympy.Matrix(A).det() != 0)


def _coset_count(basis):
    """[Z^n : span(basis)] by enumerating a box of representatives (oracle)."""
    n = len(basis)
    N = abs(int(sympy.Matrix(basis).det()))
    inv = sympy.Matrix(basis).T.inv()

    def member(v):
        return all(c.is_integer for c in inv * sympy.Matrix(v))

    reps = []
    for p in itertools.product(range(N), repeat=n):
        if not any(member([a - b for a, b in zip(p, q)]) for q in reps):
            reps.append(p)
    return len(reps)


# -- matrices over fields ----------------------------------------------------------


def test_det_and_inverse_over_quadratic_field():
    t = SQRT2.gen
    A = ExactMatrix([[1, t], [t, 3]], SQRT2)
    assert det(A) == 1
    assert (A @ invert(A)).is_identity()
    B = ExactMatrix([[1, t], [t, 2]], SQRT2)
    with pytest.raises(Singular):
        invert(B)
    with pytest.raises(NotSquare):
        det(ExactMatrix([[1, 2, 3]], SQRT2))


@given(A=nonsingular(3))
def test_inverse_over_rationals(A):
    M = ExactMatrix(A)
    assert (invert(M) @ M).is_identity()
    assert det(M) == int(sympy.Matrix(A).det())


def test_matrix_helpers():
    M = ExactMatrix([[1, 2], [3, 4]])
    assert M.T == ExactMatrix([[1, 3], [2, 4]])
    assert M @ (1, 1) == (3, 7)
    assert M**-1 @ M == ExactMatrix.identity(2)
    assert ExactMatrix.from_columns([(1, 3), (2, 4)]) == M


# -- normal forms -----------------------------------------------------------------------


def _check_hnf(A, H, U):
    assert abs(sympy.Matrix(U).det()) == 1
    assert (sympy.Matrix(U) * sympy.Matrix(A)).tolist() == [list(r) for r in H]
    col = -1
    for row in H:
        nz = [j for j, v in enumerate(row) if v != 0]
        if not nz:
            continue
        assert nz[0] > col
        col = nz[0]
        assert row[col] > 0
    # entries above a pivot are reduced into [0, pivot)
    for i, row in enumerate(H):
        nz = [j for j, v in enumerate(row) if v != 0]
        if nz:
            p = nz[0]
            for k in range(i):
                assert 0 <= H[k][p] < row[p]


def test_hnf_example():
    H, U = hnf([[2, 4], [1, 3]])
    assert H == [[1, 1], [0, 2]]
    _check_hnf([[2, 4], [1, 3]], H, U)
    # same row lattice as the non-reduced echelon form [[1,3],[0,2]]
    assert IntegerLattice(H) == IntegerLattice([[1, 3], [0, 2]])


@given(A=int_matrix(3, 4))
def test_hnf_invariants(A):
    H, U = hnf(A)
    _check_hnf(A, H, U)


@given(A=nonsingular(3))
def test_snf_matches_sympy(A):
    ours = snf_diagonal(A)
    theirs = smith_normal_form(sympy.Matrix(A), domain=sympy.ZZ)
    expected = sorted(abs(int(theirs[i, i])) for i in range(3))
    assert sorted(ours) == expected
    for a, b in zip(ours, ours[1:]):
        assert b % a == 0


def test_snf_example():
    assert snf_diagonal([[2, 4], [1, 3]]) == [1, 2]
    assert snf_diagonal([[2, 0], [0, 3]]) == [1, 6]


# -- lattices ----------------------------------------------------------------------------


@given(B=nonsingular(2, -4, 4))
def test_index_matches_coset_enumeration(B):
    assert lattice_index(IntegerLattice.standard(2), IntegerLattice(B)) == _coset_count(B)


def test_index_examples():
    Z2 = IntegerLattice.standard(2)
    assert lattice_index(Z2, IntegerLattice([[2, 0], [0, 3]])) == 6
    assert lattice_index(Z2, IntegerLattice([[1, -2], [2, 1]])) == 5
    with pytest.raises(InfiniteIndex):
        lattice_index(Z2, IntegerLattice([[1, 0]], dim=2))
    with pytest.raises(NotSubmodule):
        lattice_index(IntegerLattice([[2, 0], [0, 1]]), Z2)


def test_index_of_rational_lattices():
    M = IntegerLattice([[F(1, 2), 0], [0, F(1, 3)]])
    N = IntegerLattice.standard(2)
    assert lattice_index(M, N) == 6
    T = transition_matrix(M, N)
    assert abs(sympy.Matrix(T).det()) == 6


@given(A=nonsingular(2, -4, 4), B=nonsingular(2, -4, 4))
def test_intersection_against_box_search(A, B):
    M, N = IntegerLattice(A), IntegerLattice(B)
    P = lattice_intersect(M, N)
    assert P.rank == 2
    assert M.contains_lattice(P) and N.contains_lattice(P)
    for v in itertools.product(range(-6, 7), repeat=2):
        assert (v in P) == (v in M and v in N)


def test_intersection_of_rank_deficient():
    M = IntegerLattice([[1, 0]], dim=2)
    N = IntegerLattice([[0, 1]], dim=2)
    assert lattice_intersect(M, N).rank == 0


@given(A=nonsingular(3, -3, 3), Z1=nonsingular(3, -3, 3), Z2=nonsingular(3, -3, 3))
def test_index_multiplicative(A, Z1, Z2):
    M = IntegerLattice(A)
    Nb = (sympy.Matrix(Z1) * sympy.Matrix(A)).tolist()
    Pb = (sympy.Matrix(Z2) * sympy.Matrix(Nb)).tolist()
    N, P = IntegerLattice(Nb), IntegerLattice(Pb)
    assert lattice_index(M, P) == lattice_index(M, N) * lattice_index(N, P)


def test_canonical_form_identifies_bases():
    a = IntegerLattice([[1, 2], [3, 4]])
    b = IntegerLattice([[1, 2], [4, 6]])
    assert a == b and hash(a) == hash(b)
    assert IntegerLattice.from_generators([[2, 0], [0, 2], [1, 1]]) == IntegerLattice([[1, 1], [0, 2]])


@given(A=nonsingular(2, -5, 5), v=st.tuples(st.integers(-20, 20), st.integers(-20, 20)))
def test_membership_matches_rational_solve(A, v):
    M = IntegerLattice(A)
    sol = sympy.Matrix(A).T.solve(sympy.Matrix(v))
    assert (v in M) == all(c.is_integer for c in sol)
