"""Small dense matrix helpers over Q (row lists of Fractions)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Mat = list  # list[list[Fraction]]


def to_fractions(rows: Sequence[Sequence]) -> Mat:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Mat:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Mat:
    bt = list(zip(*b)) if b else []
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def det(a: Sequence[Sequence]) -> Fraction:
    m = to_fractions(a)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    result = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        piv = m[c][c]
        result *= piv
        for r in range(c + 1, n):
            f = m[r][c] / piv
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return result


def row_echelon(a: Sequence[Sequence]) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = to_fractions(a)
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Sequence[Sequence]) -> int:
    if not a:
        return 0
    return len(row_echelon(a)[1])


def inverse(a: Sequence[Sequence]) -> Mat:
    n = len(a)
    aug = [list(row) + e for row, e in zip(to_fractions(a), identity(n))]
    red, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


class RowSolver:
    """Solve ``c @ P = x`` for a fixed full-row-rank matrix ``P``.

    A set of independent columns is fixed once, so each solve costs one
    small matrix-vector product plus an exact back-substitution check.
    """

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = to_fractions(rows)
        k = len(self.rows)
        if k == 0:
            self.cols: list[int] = []
            self.pinv: Mat = []
            return
        # pivot columns of the echelon form are independent columns of P
        _, pivots = row_echelon(self.rows)
        if len(pivots) != k:
            raise ValueError("rows are linearly dependent")
        self.cols = pivots
        sub = [[row[c] for c in pivots] for row in self.rows]
        self.pinv = inverse(sub)

    def solve(self, x: Sequence) -> list[Fraction] | None:
        if not self.rows:
            return [] if all(v == 0 for v in x) else None
        xs = [Fraction(x[c]) for c in self.cols]
        coeffs = [sum((xs[i] * self.pinv[i][j] for i in range(len(xs))), Fraction(0))
                  for j in range(len(self.rows))]
        n = len(self.rows[0])
        for col in range(n):
            if sum((coeffs[i] * self.rows[i][col] for i in range(len(coeffs))), Fraction(0)) != x[col]:
                return None
        return coeffs
