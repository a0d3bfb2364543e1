"""Exact arithmetic in algebraic number fields Q(theta).

A field is presented by a monic minimal polynomial together with an isolating
region (a rational interval for a real root, or a rational rectangle in the
upper half plane for a complex one) that fixes the embedding into C.  Field
elements are polynomials in theta of degree below the field degree with
rational coefficients, so equality is coefficient comparison.

>>> K = AlgebraicField([-2, 0, 1], RealRoot(1, 2), name="Q(sqrt2)")
>>> r2 = K.gen
>>> r2 * r2
2
>>> (1 / r2).coeffs
(Fraction(0, 1), Fraction(1, 2))
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

import mpmath

from . import _poly
from ._ratmat import RowSolver, det as _rat_det
from .errors import (
    DescriptorError,
    DivisionByZero,
    FieldMismatch,
    NotImaginaryField,
    NotRealField,
    NotRepresentable,
)

Rational = Union[int, Fraction]


class RealRoot(NamedTuple):
    lo: Fraction
    hi: Fraction


class ComplexRoot(NamedTuple):
    re_lo: Fraction
    re_hi: Fraction
    im_lo: Fraction
    im_hi: Fraction


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass int, Fraction or 'p/q'")
    return Fraction(x)


def _mpf(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


_PSLQ_MAXCOEFF = 10**12


class AlgebraicField:
    """The number field Q[x]/(minpoly) embedded via an isolating region.

    ``minpoly`` is given lowest degree first.  Irreducibility is the caller's
    assertion; squarefreeness, monicity, absence of rational roots (for degree
    above one) and isolation of exactly one root are verified here.
    """

    def __init__(self, minpoly: Iterable, root, name: str | None = None,
                 conjugate: Sequence | None = None):
        coeffs = _poly.trim([_q(c) for c in minpoly])
        if len(coeffs) < 2:
            raise DescriptorError("minpoly must have degree at least 1")
        if coeffs[-1] != 1:
            raise DescriptorError("minpoly not monic")
        self.minpoly: tuple[Fraction, ...] = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.name = name
        if self.degree > 1:
            if not _poly.is_squarefree(coeffs):
                raise DescriptorError("minpoly not squarefree")
            if _poly.rational_roots(coeffs):
                raise DescriptorError("minpoly has a rational root")

        if isinstance(root, RealRoot) or (isinstance(root, tuple) and len(root) == 2):
            root = RealRoot(_q(root[0]), _q(root[1]))
            if root.lo > root.hi:
                raise DescriptorError("empty isolating interval")
            if _poly.count_real_roots(coeffs, root.lo, root.hi) != 1:
                raise DescriptorError("isolating interval does not contain exactly one root")
            self.is_real = True
        elif isinstance(root, ComplexRoot) or (isinstance(root, tuple) and len(root) == 4):
            root = ComplexRoot(*(_q(v) for v in root))
            if root.im_lo <= 0:
                raise DescriptorError("complex isolating rectangle must lie in the upper half plane")
            try:
                count = _poly.count_roots_in_rectangle(coeffs, *root)
            except ValueError as exc:
                raise DescriptorError(str(exc)) from None
            if count != 1:
                raise DescriptorError("isolating rectangle does not contain exactly one root")
            self.is_real = False
        else:
            raise DescriptorError(f"unrecognised root specification {root!r}")
        self.root = root
        self._interval = (root.lo, root.hi) if self.is_real else None
        self._approx_cache: dict[int, object] = {}

        n = self.degree
        # theta^k for k = n .. 2n-2 reduced to the power basis
        table = []
        if n > 1:
            base = [-c for c in self.minpoly[:-1]]
            cur = base
            for _ in range(n - 1):
                table.append(tuple(cur))
                top = cur[-1]
                cur = [Fraction(0)] + cur[:-1]
                cur = [c + top * b for c, b in zip(cur, base)]
        self._reduction = table

        self._conj: FieldElement | None = None
        if not self.is_real:
            if conjugate is not None:
                cand = self.element(conjugate)
                if not self._is_conjugation(cand):
                    raise DescriptorError("supplied conjugate is not the complex conjugate of the root")
                self._conj = cand
        elif conjugate is not None:
            raise DescriptorError("conjugate only applies to complex embeddings")

    # -- construction helpers ---------------------------------------------

    def element(self, coeffs: Iterable) -> "FieldElement":
        c = [_q(x) for x in coeffs]
        if len(c) > self.degree:
            return FieldElement(self, _poly.divmod_(_poly.trim(c), list(self.minpoly))[1])
        return FieldElement(self, c)

    def __call__(self, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch("element belongs to a different field")
            return x
        if isinstance(x, (int, Fraction, str)):
            return self.from_rational(x)
        return self.element(x)

    def from_rational(self, q: Rational) -> "FieldElement":
        return FieldElement(self, [_q(q)])

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, [])

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, [Fraction(1)])

    @property
    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return FieldElement(self, [-self.minpoly[0]])
        return FieldElement(self, [Fraction(0), Fraction(1)])

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, AlgebraicField):
            return NotImplemented
        if self.minpoly != other.minpoly or self.is_real != other.is_real:
            return False
        if self.is_real:
            lo = max(self._interval[0], other._interval[0])
            hi = min(self._interval[1], other._interval[1])
            return _poly.count_real_roots(list(self.minpoly), lo, hi) == 1
        with mpmath.workdps(40):
            a, b = self.approx(30), other.approx(30)
            roots = self._all_roots(30)
            nearest = lambda z: min(range(len(roots)), key=lambda i: abs(roots[i] - z))
            return nearest(a) == nearest(b)

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        if self.name:
            return f"AlgebraicField({self.name})"
        return f"AlgebraicField(minpoly={[str(c) for c in self.minpoly]})"

    # -- embedding -----------------------------------------------------------

    def _bisect(self):
        lo, hi = self._interval
        if lo == hi:
            return
        p = self.minpoly
        mid = (lo + hi) / 2
        vm = _poly.evaluate(p, mid)
        if vm == 0:
            self._interval = (mid, mid)
        elif (_poly.evaluate(p, lo) < 0) == (vm < 0):
            self._interval = (mid, hi)
        else:
            self._interval = (lo, mid)

    def _refined_interval(self, width: Fraction) -> tuple[Fraction, Fraction]:
        if not self.is_real:
            raise NotRealField("field has no real embedding")
        if self.degree == 1:
            r = -self.minpoly[0]
            return (r, r)
        while self._interval[1] - self._interval[0] > width:
            self._bisect()
        return self._interval

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self._interval

    def _all_roots(self, dps: int):
        with mpmath.workdps(dps + 10):
            return mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator
                                     for c in reversed(self.minpoly)],
                                    maxsteps=400, extraprec=4 * dps + 50)

    def approx(self, dps: int = 30):
        """High precision value of theta (mpf for real, mpc for complex)."""
        if dps in self._approx_cache:
            return self._approx_cache[dps]
        with mpmath.workdps(dps + 10):
            if self.is_real:
                lo, hi = self._refined_interval(Fraction(1, 2**40))
                if lo == hi:
                    value = mpmath.mpf(lo.numerator) / lo.denominator
                else:
                    f = lambda x: mpmath.polyval([mpmath.mpf(c.numerator) / c.denominator
                                                  for c in reversed(self.minpoly)], x)
                    x0 = mpmath.mpf((lo + hi).numerator) / (2 * (lo + hi).denominator)
                    try:
                        value = mpmath.findroot(f, x0)
                    except (ValueError, ZeroDivisionError):
                        value = None
                    lo_m = mpmath.mpf(lo.numerator) / lo.denominator
                    hi_m = mpmath.mpf(hi.numerator) / hi.denominator
                    if value is None or not (lo_m <= value <= hi_m):
                        lo, hi = self._refined_interval(Fraction(1, 10 ** (dps + 5)))
                        value = mpmath.mpf(lo.numerator) / lo.denominator
            else:
                re_lo, re_hi, im_lo, im_hi = (_mpf(v) for v in self.root)
                inside = [z for z in self._all_roots(dps)
                          if re_lo < z.real < re_hi and im_lo < z.imag < im_hi]
                if len(inside) != 1:
                    raise ArithmeticError("numerical root isolation failed")
                value = inside[0]
        self._approx_cache[dps] = value
        return value

    def recognize(self, value, dps: int = 60) -> "FieldElement | None":
        """Find the element whose embedded value is ``value``, if it exists.

        Integer relation detection proposes a candidate; callers must verify
        it exactly (this method only checks numerical agreement).
        """
        n = self.degree
        with mpmath.workdps(dps):
            theta = self.approx(dps)
            powers = [mpmath.mpf(1)]
            for _ in range(n - 1):
                powers.append(powers[-1] * theta)
            if self.is_real:
                vec = [mpmath.mpf(mpmath.re(value))] + [mpmath.re(p) for p in powers]
            else:
                lam = mpmath.pi
                proj = lambda z: mpmath.re(z) + lam * mpmath.im(z)
                vec = [proj(mpmath.mpc(value))] + [proj(p) for p in powers]
            if n == 1 and not self.is_real:
                return None
            try:
                rel = mpmath.pslq(vec, maxcoeff=_PSLQ_MAXCOEFF, maxsteps=20000)
            except (ValueError, ZeroDivisionError):
                rel = None
            if not rel or rel[0] == 0:
                return None
            cand = self.element([Fraction(-r, rel[0]) for r in rel[1:]])
            if abs(cand.approx(dps) - value) > mpmath.mpf(10) ** (-(dps // 2)):
                return None
            return cand

    def _is_conjugation(self, c: "FieldElement") -> bool:
        if _poly.evaluate(list(self.minpoly), c) != 0:
            return False
        with mpmath.workdps(40):
            target = mpmath.conj(self.approx(30))
            roots = self._all_roots(30)
            val = c.approx(30)
            nearest = min(roots, key=lambda z: abs(z - val))
            return abs(nearest - target) < mpmath.mpf(10) ** -20

    def conjugation(self) -> "FieldElement":
        """Image of theta under complex conjugation, as an element of the field."""
        if self.is_real:
            raise NotImaginaryField("field has a real embedding")
        if self._conj is None:
            cand = None
            for dps in (60, 150):
                with mpmath.workdps(dps):
                    cand = self.recognize(mpmath.conj(self.approx(dps)), dps=dps)
                if cand is not None and self._is_conjugation(cand):
                    break
            if cand is None or not self._is_conjugation(cand):
                raise NotRepresentable("complex conjugation does not map the field to itself")
            self._conj = cand
        return self._conj

    # -- serialisation -------------------------------------------------------

    def descriptor(self) -> dict:
        if self.is_real:
            root = {"kind": "real", "lo": str(self.root.lo), "hi": str(self.root.hi)}
        else:
            r = self.root
            root = {"kind": "complex", "re_lo": str(r.re_lo), "re_hi": str(r.re_hi),
                    "im_lo": str(r.im_lo), "im_hi": str(r.im_hi)}
        out = {"minpoly": [str(c) for c in self.minpoly], "root": root}
        if self.name:
            out["name"] = self.name
        if self._conj is not None:
            out["conjugate"] = self._conj.descriptor()
        return out

    @classmethod
    def from_descriptor(cls, desc: dict) -> "AlgebraicField":
        try:
            minpoly = [_q(c) for c in desc["minpoly"]]
            root = desc["root"]
            kind = root.get("kind", "real")
            if kind == "real":
                where = RealRoot(_q(root["lo"]), _q(root["hi"]))
            elif kind == "complex":
                where = ComplexRoot(_q(root["re_lo"]), _q(root["re_hi"]),
                                    _q(root["im_lo"]), _q(root["im_hi"]))
            else:
                raise DescriptorError(f"unknown root kind {kind!r}")
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, DescriptorError):
                raise
            raise DescriptorError(f"malformed field descriptor: {exc}") from None
        return cls(minpoly, where, name=desc.get("name"), conjugate=desc.get("conjugate"))


class FieldElement:
    """c_0 + c_1 theta + ... + c_{n-1} theta^{n-1} with rational c_i."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: AlgebraicField, coeffs: Sequence[Fraction]):
        c = list(coeffs)
        if len(c) > field.degree:
            raise ValueError("coefficient vector longer than field degree")
        c.extend([Fraction(0)] * (field.degree - len(c)))
        self.field = field
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    # -- coercion ------------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("operands belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, [Fraction(other)])
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return FieldElement(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return FieldElement(self.field, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, [a * other for a in self.coeffs])
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = self.field.degree
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = prod[:n]
        for k, high in enumerate(prod[n:]):
            if high:
                row = self.field._reduction[k]
                for i in range(n):
                    out[i] += high * row[i]
        return FieldElement(self.field, out)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("division by zero in number field")
        if self.field.degree == 1:
            return FieldElement(self.field, [1 / self.coeffs[0]])
        g, s, _ = _poly.xgcd(_poly.trim(list(self.coeffs)), list(self.field.minpoly))
        if len(g) != 1:
            raise DescriptorError("minpoly is reducible: element is a zero divisor")
        return FieldElement(self.field, s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero in number field")
            return FieldElement(self.field, [a / other for a in self.coeffs])
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                return False
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    # -- embedding-dependent ---------------------------------------------------

    def approx(self, dps: int = 30):
        theta = self.field.approx(dps)
        with mpmath.workdps(dps + 10):
            acc = mpmath.mpf(0)
            for c in reversed(self.coeffs):
                acc = acc * theta + mpmath.mpf(c.numerator) / c.denominator
            return +acc

    def __float__(self):
        return float(mpmath.re(self.approx(20)))

    def sign(self) -> int:
        return sign(self)

    def conjugate(self) -> "FieldElement":
        """Complex conjugate (only for fields with a complex embedding)."""
        if self.field.is_real:
            raise NotImaginaryField("complex conjugation needs a complex embedding")
        c = self.field.conjugation()
        acc = self.field.zero
        for coef in reversed(self.coeffs):
            acc = acc * c + coef
        return acc

    def norm(self) -> Fraction:
        return field_norm(self)

    def sqrt(self) -> "FieldElement":
        """The positive square root inside the field, or NotRepresentable."""
        if not self.field.is_real:
            raise NotRealField("square roots are taken under a real embedding")
        if self.is_zero():
            return self
        if sign(self) < 0:
            raise NotRepresentable("negative element has no real square root")
        if self.is_rational():
            q = self.coeffs[0]
            rn, rd = _isqrt_exact(q.numerator), _isqrt_exact(q.denominator)
            if rn is not None and rd is not None:
                return self.field.from_rational(Fraction(rn, rd))
            if self.field.degree == 1:
                raise NotRepresentable(f"sqrt({q}) is irrational")
            mp = self.field.minpoly
            if self.field.degree == 2 and mp[1] == 0:
                # L = Q(sqrt(D)): sqrt(q) = k * theta with k = sqrt(q / D)
                k2 = -q / mp[0]
                kn, kd = _isqrt_exact(k2.numerator), _isqrt_exact(k2.denominator)
                if kn is None or kd is None:
                    raise NotRepresentable(f"sqrt({q}) does not lie in the field")
                root = self.field.gen * Fraction(kn, kd)
                return root if sign(root) > 0 else -root
        for dps in (60, 150):
            with mpmath.workdps(dps):
                target = mpmath.sqrt(self.approx(dps))
            cand = self.field.recognize(target, dps=dps)
            if cand is not None and cand * cand == self:
                return cand if sign(cand) > 0 else -cand
        raise NotRepresentable("square root does not lie in the field")

    # -- display ---------------------------------------------------------------

    def descriptor(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        return str(self)

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def _isqrt_exact(n: int) -> int | None:
    import math

    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def _check_same(a: FieldElement, b: FieldElement):
    if a.field is not b.field and a.field != b.field:
        raise FieldMismatch("operands belong to different fields")


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Binary field operation ``op`` in {'add', 'sub', 'mul', 'div'}."""
    _check_same(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def sign(a: FieldElement) -> int:
    """Sign of ``a`` under the real embedding of its field.

    The exact zero test runs first; a nonzero element is then evaluated over
    the isolating interval, bisecting until the enclosure excludes zero.
    """
    if not a.field.is_real:
        raise NotRealField("sign requires a real embedding")
    if a.is_zero():
        return 0
    if a.is_rational():
        return 1 if a.coeffs[0] > 0 else -1
    field = a.field
    p = list(a.coeffs)
    width = field._interval[1] - field._interval[0]
    while True:
        lo, hi = field._refined_interval(width)
        vlo, vhi = _poly.interval_evaluate(p, lo, hi)
        if vlo > 0:
            return 1
        if vhi < 0:
            return -1
        width = (hi - lo) / 2


def field_norm(k: FieldElement) -> Fraction:
    """Absolute norm N(k): determinant of multiplication-by-k on the power basis."""
    field = k.field
    n = field.degree
    rows = []
    basis = FieldElement(field, [Fraction(1)])
    for _ in range(n):
        rows.append(list((k * basis).coeffs))
        basis = basis * field.gen if n > 1 else basis
    return _rat_det(rows)


def complex_abs_square(a: FieldElement) -> FieldElement:
    """|a|^2 = a * conj(a); the result is fixed by complex conjugation."""
    if a.field.is_real:
        raise NotImaginaryField("complex_abs_square needs a complex embedding")
    return a * a.conjugate()


class SubfieldEmbedding:
    """A subfield K = Q(g) of an ambient field L, given by the image g in L."""

    def __init__(self, ambient: AlgebraicField, generator, k_degree: int | None = None):
        if not isinstance(generator, FieldElement):
            generator = ambient.from_rational(generator)
        if generator.field != ambient:
            raise FieldMismatch("generator does not belong to the ambient field")
        self.ambient = ambient
        self.generator = generator
        powers = [ambient.one]
        if k_degree is None:
            while True:
                nxt = powers[-1] * generator
                test = [list(p.coeffs) for p in powers]
                try:
                    solver = RowSolver(test)
                except ValueError:
                    raise DescriptorError("subfield generator powers are dependent") from None
                if solver.solve(nxt.coeffs) is not None:
                    break
                powers.append(nxt)
        else:
            for _ in range(k_degree - 1):
                powers.append(powers[-1] * generator)
            try:
                solver = RowSolver([list(p.coeffs) for p in powers])
            except ValueError:
                raise DescriptorError("subfield generator powers are linearly dependent") from None
            if solver.solve((powers[-1] * generator).coeffs) is None:
                raise DescriptorError("k_degree is smaller than the degree of the generator")
        self.k_degree = len(powers)
        self.powers = tuple(powers)
        self._solver = RowSolver([list(p.coeffs) for p in powers])

    @classmethod
    def rationals(cls, ambient: AlgebraicField) -> "SubfieldEmbedding":
        return cls(ambient, ambient.one, 1)

    @classmethod
    def whole(cls, ambient: AlgebraicField) -> "SubfieldEmbedding":
        return cls(ambient, ambient.gen, ambient.degree)

    def coordinates(self, x: FieldElement) -> list[Fraction] | None:
        if x.field is not self.ambient and x.field != self.ambient:
            raise FieldMismatch("element does not belong to the ambient field")
        return self._solver.solve(x.coeffs)

    def __contains__(self, x) -> bool:
        if isinstance(x, (int, Fraction)):
            return True
        return self.coordinates(x) is not None

    def element(self, coords: Sequence) -> FieldElement:
        acc = self.ambient.zero
        for c, p in zip(coords, self.powers):
            acc = acc + p * _q(c)
        return acc

    def __eq__(self, other):
        if not isinstance(other, SubfieldEmbedding):
            return NotImplemented
        return (self.ambient == other.ambient and self.k_degree == other.k_degree
                and other.generator in self)

    def __hash__(self):
        return hash((self.ambient, self.k_degree))

    def __repr__(self):
        return f"SubfieldEmbedding(degree {self.k_degree} in {self.ambient!r})"


def in_subfield(x: FieldElement, K: SubfieldEmbedding) -> list[Fraction] | None:
    """Coordinates of ``x`` in the basis 1, g, ..., g^(k-1) of K, or None."""
    return K.coordinates(x)


@functools.lru_cache(maxsize=None)
def rationals() -> AlgebraicField:
    """Q as the degree-one field Q[x]/(x)."""
    return AlgebraicField([0, 1], RealRoot(-1, 1), name="Q")


QQ = rationals()
