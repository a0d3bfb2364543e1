"""Dense univariate polynomials over Q.

Polynomials are lists of :class:`~fractions.Fraction` coefficients, lowest
degree first, with no trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Poly = list  # list[Fraction]


def poly(coeffs: Iterable) -> Poly:
    return trim([Fraction(c) for c in coeffs])


def trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(p) - 1


def add(a: Sequence, b: Sequence) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a: Sequence, b: Sequence) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def scale(a: Sequence, c) -> Poly:
    return trim([x * c for x in a])


def mul(a: Sequence, b: Sequence) -> Poly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def divmod_(a: Sequence, b: Sequence) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(r) >= len(b) and r:
        c = r[-1] / lead
        k = len(r) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            r[k + i] -= c * y
        r.pop()
        trim(r)
    return trim(q), trim(r)


def monic(p: Sequence) -> Poly:
    return [c / p[-1] for c in p] if p else []


def gcd(a: Sequence, b: Sequence) -> Poly:
    a, b = list(a), list(b)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def xgcd(a: Sequence, b: Sequence) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    lead = r0[-1]
    return monic(r0), scale(s0, 1 / lead), scale(t0, 1 / lead)


def derivative(p: Sequence) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree_part(p: Sequence) -> Poly:
    g = gcd(p, derivative(p))
    return monic(divmod_(p, g)[0]) if len(g) > 1 else monic(list(p))


def is_squarefree(p: Sequence) -> bool:
    return len(gcd(p, derivative(p))) == 1


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_sequence(p: Sequence) -> list[Poly]:
    seq = [list(p), derivative(p)]
    while seq[-1]:
        r = divmod_(seq[-2], seq[-1])[1]
        seq.append(scale(r, -1))
    seq.pop()
    return seq


def _variations(seq: Sequence[Poly], x) -> int:
    signs = [_sign(evaluate(q, x)) for q in seq]
    signs = [s for s in signs if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def count_real_roots(p: Sequence, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in the closed interval [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        return 0
    p = squarefree_part(p)
    if len(p) <= 1:
        return 0
    extra = 0
    if evaluate(p, lo) == 0:
        p = divmod_(p, [-lo, Fraction(1)])[0]
        extra = 1
        if len(p) <= 1:
            return extra
    seq = sturm_sequence(p)
    return extra + _variations(seq, lo) - _variations(seq, hi)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def integer_coefficients(p: Sequence) -> list[int]:
    den = math.lcm(*(Fraction(c).denominator for c in p)) if p else 1
    ints = [int(Fraction(c) * den) for c in p]
    g = math.gcd(*ints) if ints else 1
    return [c // g for c in ints] if g else ints


def rational_roots(p: Sequence) -> list[Fraction]:
    p = trim(list(p))
    if len(p) <= 1:
        return []
    roots = []
    shift = 0
    while p[0] == 0:
        p = p[1:]
        shift += 1
    if shift:
        roots.append(Fraction(0))
    if len(p) <= 1:
        return roots
    ints = integer_coefficients(p)
    for num in _divisors(ints[0]):
        for den in _divisors(ints[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and evaluate(ints, cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def interval_evaluate(p: Sequence, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of ``{p(x) : lo <= x <= hi}`` by interval Horner evaluation."""
    a = b = Fraction(0)
    for c in reversed(p):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


# -- complex root counting -------------------------------------------------


def _complex_compose(p: Sequence, z0: tuple, dz: tuple) -> tuple[Poly, Poly]:
    """Real and imaginary parts of ``p(z0 + t*dz)`` as polynomials in t."""
    u: Poly = []
    v: Poly = []
    zr = poly([z0[0], dz[0]])
    zi = poly([z0[1], dz[1]])
    for c in reversed(p):
        u, v = sub(mul(u, zr), mul(v, zi)), add(mul(u, zi), mul(v, zr))
        u = add(u, [Fraction(c)])
    return u, v


def _edge_winding(p: Sequence, z0: tuple, z1: tuple) -> float:
    dz = (z1[0] - z0[0], z1[1] - z0[1])
    u, v = _complex_compose(p, z0, dz)
    g = gcd(u, v) if (u and v) else (monic(u) if u else monic(v))
    if len(g) > 1 and count_real_roots(g, 0, 1) > 0:
        raise ValueError("polynomial has a root on the rectangle boundary")
    su = squarefree_part(u) if len(u) > 1 else u
    sv = squarefree_part(v) if len(v) > 1 else v

    def free_of_roots(q, a, b):
        return len(q) <= 1 or count_real_roots(q, a, b) == 0

    total = 0.0
    stack = [(Fraction(0), Fraction(1))]
    while stack:
        a, b = stack.pop()
        if free_of_roots(su, a, b) or free_of_roots(sv, a, b):
            ua, va = evaluate(u, a), evaluate(v, a)
            ub, vb = evaluate(u, b), evaluate(v, b)
            diff = math.atan2(float(vb), float(ub)) - math.atan2(float(va), float(ua))
            while diff > math.pi:
                diff -= 2 * math.pi
            while diff < -math.pi:
                diff += 2 * math.pi
            total += diff
        else:
            mid = (a + b) / 2
            stack.append((mid, b))
            stack.append((a, mid))
    return total


def count_roots_in_rectangle(p: Sequence, re_lo, re_hi, im_lo, im_hi) -> int:
    """Number of roots (with multiplicity) of ``p`` inside an open rectangle.

    The argument principle is applied along the four edges; each edge is split
    until the real or imaginary part of ``p`` has no real root on a piece, so
    every piece contributes less than a half turn and the floating-point sum
    rounds to the exact winding number.
    """
    re_lo, re_hi, im_lo, im_hi = map(Fraction, (re_lo, re_hi, im_lo, im_hi))
    corners = [(re_lo, im_lo), (re_hi, im_lo), (re_hi, im_hi), (re_lo, im_hi)]
    total = sum(_edge_winding(p, corners[k], corners[(k + 1) % 4]) for k in range(4))
    turns = total / (2 * math.pi)
    n = round(turns)
    if abs(turns - n) > 0.25:
        raise ArithmeticError("winding number did not resolve to an integer")
    return n
