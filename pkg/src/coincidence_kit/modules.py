"""Free S-modules in R^d and planar orders of imaginary number fields.

A :class:`FreeModule` is the S-span of the columns of a nonsingular d x d
matrix over the ambient field L.  As a Z-module it has rank r*d, with the
Z-basis ``s_1 g_1, s_2 g_1, ..., s_r g_d`` where ``s_j`` runs over the
Z-basis of S and ``g_i`` over the basis columns.  Each ambient coordinate is
expanded in the power basis of L, which embeds the module as a lattice in
Q^(d*n) without loss of information.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import _ratmat
from .errors import (
    DescriptorError,
    DimensionMismatch,
    MixedAmbient,
    NotImaginaryField,
    NotRealField,
    NotSubmodule,
    UnsupportedModule,
)
from .exactlinalg import ExactMatrix, IntegerLattice, invert, lattice_index, lattice_intersect
from .numberfield import AlgebraicField, FieldElement, SubfieldEmbedding, _q


class CoefficientRing:
    """An order S of K (a subfield of L) given by a Z-basis of elements of L."""

    def __init__(self, field: SubfieldEmbedding, zbasis: Sequence):
        L = field.ambient
        self.field = field
        self.zbasis: tuple[FieldElement, ...] = tuple(L(s) for s in zbasis)
        if not self.zbasis:
            raise DescriptorError("ring basis is empty")
        for s in self.zbasis:
            if s not in field:
                raise DescriptorError("ring basis element lies outside the coefficient field")
        try:
            self._solver = _ratmat.RowSolver([list(s.coeffs) for s in self.zbasis])
        except ValueError:
            raise DescriptorError("ring basis is linearly dependent over Q") from None
        if not self.contains(L.one):
            raise DescriptorError("ring does not contain 1")
        for a in self.zbasis:
            for b in self.zbasis:
                if not self.contains(a * b):
                    raise DescriptorError("ring basis is not multiplicatively closed")

    @classmethod
    def integers(cls, ambient: AlgebraicField) -> "CoefficientRing":
        return cls(SubfieldEmbedding.rationals(ambient), [ambient.one])

    @classmethod
    def monogenic(cls, field: SubfieldEmbedding, g: FieldElement | None = None) -> "CoefficientRing":
        """Z[g] with basis 1, g, ..., g^(k-1); ``g`` defaults to the field generator."""
        g = field.generator if g is None else g
        return cls(field, [g**k for k in range(field.k_degree)])

    @property
    def ambient(self) -> AlgebraicField:
        return self.field.ambient

    @property
    def rank(self) -> int:
        return len(self.zbasis)

    def coordinates(self, x: FieldElement) -> list[Fraction] | None:
        return self._solver.solve(x.coeffs)

    def contains(self, x) -> bool:
        x = self.ambient(x)
        c = self.coordinates(x)
        return c is not None and all(v.denominator == 1 for v in c)

    def element(self, coords: Sequence[int]) -> FieldElement:
        acc = self.ambient.zero
        for c, s in zip(coords, self.zbasis):
            acc = acc + s * _q(c)
        return acc

    def _lattice(self) -> IntegerLattice:
        return IntegerLattice([s.coeffs for s in self.zbasis])

    def __eq__(self, other):
        if not isinstance(other, CoefficientRing):
            return NotImplemented
        if self is other:
            return True
        return self.field == other.field and self._lattice() == other._lattice()

    def __hash__(self):
        return hash((self.field, self.rank))

    def __repr__(self):
        return f"CoefficientRing(rank={self.rank}, K degree={self.field.k_degree})"


class CoordinateMap:
    """Expands vectors of L^d into Q^(d*n) via the power basis of L."""

    def __init__(self, ambient: AlgebraicField, dim: int):
        self.ambient = ambient
        self.dim = dim

    def to_coords(self, v: Sequence[FieldElement]) -> tuple[Fraction, ...]:
        if len(v) != self.dim:
            raise DimensionMismatch("vector has the wrong dimension")
        out: list[Fraction] = []
        for x in v:
            out.extend(self.ambient(x).coeffs)
        return tuple(out)

    def from_coords(self, c: Sequence) -> tuple[FieldElement, ...]:
        n = self.ambient.degree
        return tuple(self.ambient.element(c[i * n:(i + 1) * n]) for i in range(self.dim))


class FreeModule:
    """Gamma = S g_1 + ... + S g_d, with the g_i the columns of ``basis``."""

    def __init__(self, ring: CoefficientRing, basis, name: str | None = None):
        if not isinstance(basis, ExactMatrix):
            basis = ExactMatrix(basis, ring.ambient)
        if basis.field != ring.ambient:
            raise MixedAmbient("basis entries and ring live in different fields")
        if basis.nrows != basis.ncols:
            raise DimensionMismatch("basis matrix must be square")
        self.ring = ring
        self.basis = basis
        self.name = name
        self._inverse: ExactMatrix | None = None
        self._lattice: IntegerLattice | None = None
        if not basis.det():
            raise DescriptorError("basis matrix is singular")

    @property
    def dim(self) -> int:
        return self.basis.nrows

    d = dim

    @property
    def ambient(self) -> AlgebraicField:
        return self.ring.ambient

    @property
    def K(self) -> SubfieldEmbedding:
        return self.ring.field

    @property
    def basis_inverse(self) -> ExactMatrix:
        if self._inverse is None:
            self._inverse = invert(self.basis)
        return self._inverse

    def columns(self) -> list[tuple[FieldElement, ...]]:
        return self.basis.columns()

    def zgenerators(self) -> list[tuple[FieldElement, ...]]:
        """The Z-basis s_j g_i, ordered with the ring index varying fastest."""
        out = []
        for col in self.columns():
            for s in self.ring.zbasis:
                out.append(tuple(s * x for x in col))
        return out

    def coordinate_map(self) -> CoordinateMap:
        return CoordinateMap(self.ambient, self.dim)

    def lattice(self) -> IntegerLattice:
        if self._lattice is None:
            cmap = self.coordinate_map()
            self._lattice = IntegerLattice([cmap.to_coords(v) for v in self.zgenerators()])
        return self._lattice

    def image(self, R, scale=None, name: str | None = None) -> "FreeModule":
        """The module ``scale * R * Gamma`` (same ring)."""
        M = R.matrix if hasattr(R, "matrix") else R
        B = M @ self.basis
        if scale is not None:
            B = B * scale
        return FreeModule(self.ring, B, name=name)

    def scaled(self, s) -> "FreeModule":
        return FreeModule(self.ring, self.basis * self.ambient(s))

    def sublattice(self, Z) -> "FreeModule":
        """The S-module spanned by the columns of B @ Z (Z over S, nonsingular)."""
        Zm = Z if isinstance(Z, ExactMatrix) else ExactMatrix(Z, self.ambient)
        return FreeModule(self.ring, self.basis @ Zm)

    def gram(self) -> ExactMatrix:
        return self.basis.T @ self.basis

    def contains(self, v: Sequence) -> bool:
        return self.coordinate_map().to_coords([self.ambient(x) for x in v]) in self.lattice()

    def __eq__(self, other):
        if not isinstance(other, FreeModule):
            return NotImplemented
        return (self.ambient == other.ambient and self.dim == other.dim
                and self.ring == other.ring and self.lattice() == other.lattice())

    def __hash__(self):
        return hash((self.dim, self.lattice()))

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"FreeModule{label}(d={self.dim}, r={self.ring.rank})"

    # -- descriptors -----------------------------------------------------------

    def descriptor(self) -> dict:
        out = {
            "field": self.ambient.descriptor(),
            "subfield_generator": self.K.generator.descriptor(),
            "ring_zbasis": [s.descriptor() for s in self.ring.zbasis],
            "basis_columns": [[x.descriptor() for x in col] for col in self.columns()],
        }
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_descriptor(cls, desc: dict) -> "FreeModule":
        try:
            L = AlgebraicField.from_descriptor(desc["field"])
            gen = L.element(desc.get("subfield_generator", ["1"]))
            K = SubfieldEmbedding(L, gen)
            ring = CoefficientRing(K, [L.element(e) for e in desc.get("ring_zbasis", [["1"]])])
            cols = [[L.element(e) for e in col] for col in desc["basis_columns"]]
        except (KeyError, TypeError) as exc:
            raise DescriptorError(f"malformed module descriptor: {exc}") from None
        except (ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, DescriptorError):
                raise
            raise DescriptorError(f"malformed module descriptor: {exc}") from None
        if any(len(c) != len(cols) for c in cols):
            raise DescriptorError("basis_columns must form a square matrix")
        return cls(ring, ExactMatrix.from_columns(cols, L), name=desc.get("name"))


def as_integer_lattice(G: FreeModule) -> tuple[IntegerLattice, CoordinateMap]:
    return G.lattice(), G.coordinate_map()


def _compatible(G1: FreeModule, G2: FreeModule):
    if G1.ambient != G2.ambient:
        raise MixedAmbient("modules live in different ambient fields")
    if G1.dim != G2.dim:
        raise DimensionMismatch("modules have different dimensions")
    if G1.ring != G2.ring:
        raise MixedAmbient("modules have different coefficient rings")


def commensurate(G1: FreeModule, G2: FreeModule) -> bool:
    """Decide G1 ~ G2 by testing whether inv(B2) B1 has all entries in K."""
    _compatible(G1, G2)
    M = G2.basis_inverse @ G1.basis
    K = G1.K
    return all(x in K for x in M.entries())


def module_index(G: FreeModule, sub) -> int:
    """[G : sub] as Z-modules; ``sub`` is a FreeModule or an IntegerLattice."""
    if isinstance(sub, FreeModule):
        _compatible(G, sub)
        sub = sub.lattice()
    M = G.lattice()
    if not M.contains_lattice(sub):
        raise NotSubmodule("not a submodule")
    return lattice_index(M, sub)


def intersect(G1: FreeModule, G2: FreeModule) -> IntegerLattice:
    if G1.ambient != G2.ambient:
        raise MixedAmbient("modules live in different ambient fields")
    if G1.dim != G2.dim:
        raise DimensionMismatch("modules have different dimensions")
    return lattice_intersect(G1.lattice(), G2.lattice())


def is_submodule(sub: FreeModule, G: FreeModule) -> bool:
    if sub.ambient != G.ambient:
        raise MixedAmbient("modules live in different ambient fields")
    if sub.dim != G.dim:
        raise DimensionMismatch("modules have different dimensions")
    return G.lattice().contains_lattice(sub.lattice())


def is_K_module(G: FreeModule) -> bool:
    """Whether <x, x> lies in K for every x in G.

    Equivalent to the Gram matrix of an S-basis having entries in K: the
    condition is sufficient because S-coefficients lie in K, and necessary by
    polarisation, <x, y> = (<x+y, x+y> - <x, x> - <y, y>) / 2.
    """
    K = G.K
    return all(x in K for x in G.gram().entries())


class PlanarOrder:
    """An order O of an imaginary number field, viewed in the plane.

    ``re_gen`` and ``im_gen`` are the real and imaginary parts of the field
    generator written in the real ambient field ``ambient``; they realise O
    as a subset of ambient^2.
    """

    def __init__(self, field: AlgebraicField, zbasis: Sequence, ambient: AlgebraicField,
                 re_gen, im_gen, name: str | None = None):
        if field.is_real:
            raise NotImaginaryField("planar orders live in imaginary fields")
        if not ambient.is_real:
            raise NotRealField("the planar ambient field must be real")
        self.field = field
        self.ambient = ambient
        self.name = name
        self.re_gen = ambient(re_gen)
        self.im_gen = ambient(im_gen)
        self.zbasis: tuple[FieldElement, ...] = tuple(field(b) for b in zbasis)
        n = field.degree
        if len(self.zbasis) != n:
            raise DescriptorError("an order needs degree-many basis elements")
        try:
            self._solver = _ratmat.RowSolver([list(b.coeffs) for b in self.zbasis])
        except ValueError:
            raise DescriptorError("order basis is linearly dependent") from None
        if not self.contains(field.one):
            raise DescriptorError("order does not contain 1")
        for a in self.zbasis:
            for b in self.zbasis:
                if not self.contains(a * b):
                    raise DescriptorError("order basis is not multiplicatively closed")
        # the pair (re_gen, im_gen) must be a root of the minimal polynomial ...
        u, v = ambient.zero, ambient.zero
        for c in reversed(field.minpoly):
            u, v = u * self.re_gen - v * self.im_gen + c, u * self.im_gen + v * self.re_gen
        if u or v:
            raise DescriptorError("re/im parts do not satisfy the minimal polynomial")
        # ... and it must be the chosen one
        theta = field.approx(30)
        if abs(complex(theta) - complex(float(self.re_gen), float(self.im_gen))) > 1e-9:
            raise DescriptorError("re/im parts describe a different root")

    def coordinates(self, a: FieldElement) -> list[Fraction] | None:
        return self._solver.solve(self.field(a).coeffs)

    def contains(self, a) -> bool:
        c = self.coordinates(self.field(a))
        return c is not None and all(x.denominator == 1 for x in c)

    def element(self, coords: Sequence[int]) -> FieldElement:
        acc = self.field.zero
        for c, b in zip(coords, self.zbasis):
            acc = acc + b * _q(c)
        return acc

    def realize(self, a: FieldElement) -> tuple[FieldElement, FieldElement]:
        """(Re a, Im a) as elements of the real ambient field."""
        a = self.field(a)
        u, v = self.ambient.zero, self.ambient.zero
        for c in reversed(a.coeffs):
            u, v = u * self.re_gen - v * self.im_gen + c, u * self.im_gen + v * self.re_gen
        return u, v

    def multiplication_matrix(self, k: FieldElement) -> list[list[int]]:
        """Row j holds the coordinates of k * b_j in the order basis."""
        if not self.contains(k):
            raise NotSubmodule("element does not lie in the order")
        rows = []
        for b in self.zbasis:
            c = self.coordinates(k * b)
            rows.append([int(x) for x in c])
        return rows

    def as_free_module(self) -> FreeModule:
        if self.field.degree != 2:
            raise UnsupportedModule("only quadratic orders form a rank-2 lattice in the plane")
        ring = CoefficientRing.integers(self.ambient)
        cols = [self.realize(b) for b in self.zbasis]
        return FreeModule(ring, ExactMatrix.from_columns(cols, self.ambient), name=self.name)

    def __repr__(self):
        return f"PlanarOrder({self.name or self.field!r})"


__all__ = [
    "CoefficientRing",
    "CoordinateMap",
    "FreeModule",
    "PlanarOrder",
    "as_integer_lattice",
    "commensurate",
    "intersect",
    "is_K_module",
    "is_submodule",
    "module_index",
]
