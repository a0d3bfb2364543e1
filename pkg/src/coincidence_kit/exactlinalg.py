"""Exact linear algebra over number fields and integer lattice normal forms."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from . import _ratmat
from .errors import FieldMismatch, InfiniteIndex, NotSquare, NotSubmodule, Singular
from .numberfield import QQ, AlgebraicField, FieldElement


class ExactMatrix:
    """Dense matrix whose entries are elements of one number field."""

    __slots__ = ("field", "rows")

    def __init__(self, rows: Iterable[Iterable], field: AlgebraicField | None = None):
        raw = [list(r) for r in rows]
        if not raw or not raw[0]:
            raise ValueError("matrix must have at least one row and column")
        if any(len(r) != len(raw[0]) for r in raw):
            raise ValueError("ragged matrix")
        if field is None:
            owners = {x.field for r in raw for x in r if isinstance(x, FieldElement)}
            if len(owners) > 1:
                raise FieldMismatch("entries belong to different fields")
            field = owners.pop() if owners else QQ
        self.field = field
        self.rows: tuple[tuple[FieldElement, ...], ...] = tuple(
            tuple(field(x) for x in r) for r in raw)

    @classmethod
    def identity(cls, n: int, field: AlgebraicField = QQ) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], field)

    @classmethod
    def diagonal(cls, entries: Sequence, field: AlgebraicField | None = None) -> "ExactMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: AlgebraicField | None = None):
        return cls(list(zip(*columns)), field)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def column(self, j: int) -> tuple[FieldElement, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[FieldElement, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def entries(self) -> Iterable[FieldElement]:
        for r in self.rows:
            yield from r

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows)), self.field)

    def _check(self, other: "ExactMatrix"):
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch("matrices over different fields")

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            self._check(other)
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in matrix product")
            cols = other.columns()
            zero = self.field.zero
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = zero
                    for a, b in zip(r, c):
                        if a and b:
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return ExactMatrix(out, self.field)
        vec = list(other)
        if len(vec) != self.ncols:
            raise ValueError("shape mismatch in matrix-vector product")
        zero = self.field.zero
        result = []
        for r in self.rows:
            acc = zero
            for a, b in zip(r, vec):
                if a and b:
                    acc = acc + a * b
            result.append(acc)
        return tuple(result)

    def __mul__(self, scalar):
        return ExactMatrix([[x * scalar for x in r] for r in self.rows], self.field)

    __rmul__ = __mul__

    def __add__(self, other: "ExactMatrix"):
        self._check(other)
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                           self.field)

    def __sub__(self, other: "ExactMatrix"):
        self._check(other)
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                           self.field)

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash(self.rows)

    def is_identity(self) -> bool:
        return all(x == int(i == j) for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def __pow__(self, k: int):
        if self.nrows != self.ncols:
            raise NotSquare("power of a non-square matrix")
        if k < 0:
            return invert(self) ** (-k)
        result = ExactMatrix.identity(self.nrows, self.field)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def det(self) -> FieldElement:
        return det(self)

    def inverse(self) -> "ExactMatrix":
        return invert(self)

    def descriptor(self) -> list[list[list[str]]]:
        return [[x.descriptor() for x in r] for r in self.rows]

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"ExactMatrix([{body}])"


def det(A: ExactMatrix) -> FieldElement:
    """Determinant by Gaussian elimination with exact zero tests."""
    n, m = A.shape
    if n != m:
        raise NotSquare("determinant of a non-square matrix")
    rows = [list(r) for r in A.rows]
    result = A.field.one
    for c in range(n):
        p = next((r for r in range(c, n) if rows[r][c]), None)
        if p is None:
            return A.field.zero
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            result = -result
        piv = rows[c][c]
        result = result * piv
        inv = piv.inverse()
        for r in range(c + 1, n):
            if rows[r][c]:
                f = rows[r][c] * inv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return result


def invert(A: ExactMatrix) -> ExactMatrix:
    """Exact inverse by Gauss-Jordan elimination."""
    n, m = A.shape
    if n != m:
        raise NotSquare("inverse of a non-square matrix")
    F = A.field
    aug = [list(r) + [F.one if i == j else F.zero for j in range(n)]
           for i, r in enumerate(A.rows)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c]), None)
        if p is None:
            raise Singular("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        inv = aug[c][c].inverse()
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return ExactMatrix([r[n:] for r in aug], F)


# -- integer lattices --------------------------------------------------------


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf(A: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row Hermite normal form ``H = U A`` with ``U`` unimodular.

    ``H`` is upper echelon with positive pivots, entries above each pivot
    reduced into ``[0, pivot)``, and zero rows last.
    """
    H = [[int(x) for x in row] for row in A]
    m = len(H)
    n = len(H[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if H[i][c]), None)
        if p is None:
            continue
        H[r], H[p] = H[p], H[r]
        U[r], U[p] = U[p], U[r]
        for i in range(r + 1, m):
            b = H[i][c]
            if not b:
                continue
            a = H[r][c]
            g, x, y = _xgcd(a, b)
            ag, bg = a // g, b // g
            hr, hi = H[r], H[i]
            H[r] = [x * u + y * v for u, v in zip(hr, hi)]
            H[i] = [ag * v - bg * u for u, v in zip(hr, hi)]
            ur, ui = U[r], U[i]
            U[r] = [x * u + y * v for u, v in zip(ur, ui)]
            U[i] = [ag * v - bg * u for u, v in zip(ur, ui)]
        if H[r][c] < 0:
            H[r] = [-v for v in H[r]]
            U[r] = [-v for v in U[r]]
        piv = H[r][c]
        for i in range(r):
            q = H[i][c] // piv
            if q:
                H[i] = [u - q * v for u, v in zip(H[i], H[r])]
                U[i] = [u - q * v for u, v in zip(U[i], U[r])]
        r += 1
    return H, U


def snf_diagonal(A: Sequence[Sequence[int]]) -> list[int]:
    """Elementary divisors d_1 | d_2 | ... of an integer matrix (length min(m, n))."""
    M = [[int(x) for x in row] for row in A]
    m = len(M)
    n = len(M[0]) if m else 0
    k = min(m, n)
    for t in range(k):
        while True:
            nz = [(abs(M[i][j]), i, j) for i in range(t, m) for j in range(t, n) if M[i][j]]
            if not nz:
                return [abs(M[i][i]) for i in range(t)] + [0] * (k - t)
            _, pi, pj = min(nz)
            M[t], M[pi] = M[pi], M[t]
            for row in M:
                row[t], row[pj] = row[pj], row[t]
            piv = M[t][t]
            clean = True
            for i in range(t + 1, m):
                q = M[i][t] // piv
                if q:
                    M[i] = [u - q * v for u, v in zip(M[i], M[t])]
                if M[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = M[t][j] // piv
                if q:
                    for row in M:
                        row[j] -= q * row[t]
                if M[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if M[i][j] % piv), None)
            if bad is None:
                break
            M[t] = [u + v for u, v in zip(M[t], M[bad[0]])]
    return [abs(M[i][i]) for i in range(k)]


class IntegerLattice:
    """A free Z-module given by linearly independent rational row vectors."""

    __slots__ = ("basis", "dim", "_canonical")

    def __init__(self, basis: Iterable[Iterable], dim: int | None = None):
        rows = tuple(tuple(Fraction(x) for x in r) for r in basis)
        if dim is None:
            if not rows:
                raise ValueError("dimension required for the zero lattice")
            dim = len(rows[0])
        if any(len(r) != dim for r in rows):
            raise ValueError("basis vectors have inconsistent length")
        if rows and _ratmat.rank(rows) != len(rows):
            raise ValueError("lattice basis is linearly dependent")
        self.basis = rows
        self.dim = dim
        self._canonical = None

    @classmethod
    def from_generators(cls, gens: Iterable[Iterable], dim: int | None = None) -> "IntegerLattice":
        gens = [tuple(Fraction(x) for x in g) for g in gens]
        if not gens:
            return cls([], dim)
        if dim is None:
            dim = len(gens[0])
        den = _common_denominator(gens)
        H, _ = hnf([[int(x * den) for x in g] for g in gens])
        rows = [[Fraction(x, den) for x in h] for h in H if any(h)]
        return cls(rows, dim)

    @classmethod
    def standard(cls, n: int) -> "IntegerLattice":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def rank(self) -> int:
        return len(self.basis)

    def canonical(self) -> tuple[tuple[Fraction, ...], ...]:
        """HNF basis; two lattices are equal iff their canonical bases agree."""
        if self._canonical is None:
            if not self.basis:
                self._canonical = ()
            else:
                den = _common_denominator(self.basis)
                H, _ = hnf([[int(x * den) for x in r] for r in self.basis])
                self._canonical = tuple(tuple(Fraction(x, den) for x in h) for h in H if any(h))
        return self._canonical

    def __eq__(self, other):
        if not isinstance(other, IntegerLattice):
            return NotImplemented
        return self.dim == other.dim and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def coordinates(self, v: Sequence) -> list[Fraction] | None:
        """Rational coordinates of ``v`` in this basis, or None outside the span."""
        return _ratmat.RowSolver(self.basis).solve([Fraction(x) for x in v])

    def __contains__(self, v) -> bool:
        c = self.coordinates(v)
        return c is not None and all(x.denominator == 1 for x in c)

    def contains_lattice(self, other: "IntegerLattice") -> bool:
        solver = _ratmat.RowSolver(self.basis)
        for b in other.basis:
            c = solver.solve(b)
            if c is None or any(x.denominator != 1 for x in c):
                return False
        return True

    def scaled(self, k) -> "IntegerLattice":
        return IntegerLattice([[x * k for x in r] for r in self.basis], self.dim)

    def __repr__(self):
        return f"IntegerLattice(rank={self.rank}, dim={self.dim})"


def _common_denominator(rows) -> int:
    return math.lcm(1, *(x.denominator for r in rows for x in r))


def transition_matrix(M: IntegerLattice, N: IntegerLattice) -> list[list[Fraction]]:
    """Rows of T with ``N.basis = T @ M.basis``.

    Raises NotSubmodule if some basis vector of N lies outside the Q-span of M.
    """
    if M.dim != N.dim:
        raise ValueError("lattices live in different ambient spaces")
    solver = _ratmat.RowSolver(M.basis)
    T = []
    for b in N.basis:
        c = solver.solve(b)
        if c is None:
            raise NotSubmodule("vector outside the rational span of the lattice")
        T.append(c)
    return T


def lattice_index(M: IntegerLattice, N: IntegerLattice) -> int:
    """[M : N] for a sublattice N of M, as |det| of the transition matrix."""
    T = transition_matrix(M, N)
    if any(x.denominator != 1 for r in T for x in r):
        raise NotSubmodule("sublattice has non-integral coordinates")
    if N.rank < M.rank:
        raise InfiniteIndex(f"rank {N.rank} sublattice of a rank {M.rank} lattice")
    d = _ratmat.det(T)
    return abs(int(d))


def lattice_intersect(M: IntegerLattice, N: IntegerLattice) -> IntegerLattice:
    """Z-basis of M ∩ N from the left kernel of the stacked basis matrix."""
    if M.dim != N.dim:
        raise ValueError("lattices live in different ambient spaces")
    if not M.basis or not N.basis:
        return IntegerLattice([], M.dim)
    den = _common_denominator(M.basis + N.basis)
    stacked = [[int(x * den) for x in r] for r in M.basis + N.basis]
    H, U = hnf(stacked)
    k = M.rank
    gens = []
    for h, u in zip(H, U):
        if any(h):
            continue
        a = u[:k]
        gens.append([sum((a[i] * M.basis[i][j] for i in range(k)), Fraction(0))
                     for j in range(M.dim)])
    if not gens:
        return IntegerLattice([], M.dim)
    return IntegerLattice.from_generators(gens, M.dim)
