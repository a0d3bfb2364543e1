"""Similarity and coincidence isometries of free S-modules.

With H = inv(B) R B, an orthogonal R is a coincidence isometry of Gamma iff
every entry of H lies in K, and a similarity isometry iff some nonzero
multiple alpha*H has all entries in K.  In the latter case the admissible
scaling factors form the single coset alpha*K^x, recovered exactly from the
ratios of the entries of H, so no search over the reals is ever needed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DimensionMismatch,
    InternalMismatch,
    MixedAmbient,
    NotAKModule,
    NotASimilarity,
    NotOrthogonal,
    NotRepresentable,
    NotSquare,
    ZeroElement,
)
from .exactlinalg import ExactMatrix, snf_diagonal
from .modules import FreeModule, PlanarOrder, intersect, is_K_module, module_index
from .numberfield import FieldElement, SubfieldEmbedding, field_norm


class Isometry:
    """An orthogonal d x d matrix over a real number field (R^T R = I exactly)."""

    __slots__ = ("matrix", "_det")

    def __init__(self, matrix, field=None, check: bool = True):
        if not isinstance(matrix, ExactMatrix):
            matrix = ExactMatrix(matrix, field)
        if matrix.nrows != matrix.ncols:
            raise NotSquare("isometry matrix must be square")
        if check and not (matrix.T @ matrix).is_identity():
            raise NotOrthogonal("RᵀR ≠ I")
        self.matrix = matrix
        self._det = None

    @classmethod
    def identity(cls, d: int, field) -> "Isometry":
        return cls(ExactMatrix.identity(d, field), check=False)

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    @property
    def field(self):
        return self.matrix.field

    @property
    def det(self) -> int:
        if self._det is None:
            self._det = 1 if self.matrix.det() == 1 else -1
        return self._det

    @property
    def T(self) -> "Isometry":
        return Isometry(self.matrix.T, check=False)

    inverse = T

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return Isometry(self.matrix @ other.matrix, check=False)

    def __pow__(self, k: int) -> "Isometry":
        if k < 0:
            return self.T ** (-k)
        return Isometry(self.matrix ** k, check=False)

    def __eq__(self, other):
        if not isinstance(other, Isometry):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def descriptor(self) -> dict:
        return {"field": self.field.descriptor(), "matrix": self.matrix.descriptor(),
                "check_orthogonal": True}

    @classmethod
    def from_descriptor(cls, desc: dict, field=None) -> "Isometry":
        from .errors import DescriptorError
        from .numberfield import AlgebraicField

        try:
            F = AlgebraicField.from_descriptor(desc["field"]) if "field" in desc else field
            if F is None:
                raise DescriptorError("isometry descriptor needs a field")
            rows = [[F.element(e) for e in row] for row in desc["matrix"]]
        except (KeyError, TypeError) as exc:
            raise DescriptorError(f"malformed isometry descriptor: {exc}") from None
        return cls(ExactMatrix(rows, F), check=desc.get("check_orthogonal", True))

    def __repr__(self):
        return f"Isometry({self.matrix!r})"


class ScalarCoset:
    """The coset alpha * K^x, with alpha normalised to be positive."""

    __slots__ = ("rep", "K")

    def __init__(self, rep: FieldElement, K: SubfieldEmbedding):
        if rep.is_zero():
            raise ZeroElement("scaling coset representative must be nonzero")
        self.rep = rep if rep.sign() > 0 else -rep
        self.K = K

    @classmethod
    def trivial(cls, K: SubfieldEmbedding) -> "ScalarCoset":
        return cls(K.ambient.one, K)

    def is_trivial(self) -> bool:
        return self.rep in self.K

    def __mul__(self, other: "ScalarCoset") -> "ScalarCoset":
        return ScalarCoset(self.rep * other.rep, self.K)

    def __pow__(self, k: int) -> "ScalarCoset":
        return ScalarCoset(self.rep ** k, self.K)

    def __eq__(self, other):
        if not isinstance(other, ScalarCoset):
            return NotImplemented
        return coset_equal(self, other, self.K)

    __hash__ = None

    def __repr__(self):
        return f"ScalarCoset({self.rep} * K^x)"


class Verdict(str, enum.Enum):
    NOT_SIMILARITY = "NotSimilarity"
    SIMILARITY = "Similarity"
    COINCIDENCE = "Coincidence"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    coset: ScalarCoset | None = None
    eta_order: int | None = None
    sigma: int | None = None

    @property
    def is_similarity(self) -> bool:
        """True for every element of OS (coincidences included)."""
        return self.verdict is not Verdict.NOT_SIMILARITY

    @property
    def is_coincidence(self) -> bool:
        return self.verdict is Verdict.COINCIDENCE

    def __str__(self):
        if self.verdict is Verdict.COINCIDENCE:
            return f"Coincidence, sigma = {self.sigma}" if self.sigma else "Coincidence"
        if self.verdict is Verdict.SIMILARITY:
            return f"Similarity, coset rep {self.coset.rep}, eta_order {self.eta_order}"
        return "NotSimilarity"


def _check_pair(G: FreeModule, R: Isometry):
    if R.dim != G.dim:
        raise DimensionMismatch(f"isometry is {R.dim}-dimensional, module is {G.dim}-dimensional")
    if R.field != G.ambient:
        raise MixedAmbient("isometry entries live outside the module's ambient field")


def conjugated(G: FreeModule, R: Isometry) -> ExactMatrix:
    """H = inv(B) R B."""
    return G.basis_inverse @ R.matrix @ G.basis


def coincidence_index(G: FreeModule, R: Isometry) -> int:
    """Sigma = [G : G ∩ RG]."""
    return module_index(G, intersect(G, G.image(R)))


def classify(G: FreeModule, R: Isometry, proper_only: bool = False,
             with_sigma: bool = True) -> Classification:
    """Classify R as a coincidence, similarity or non-similarity isometry of G.

    ``proper_only`` restricts to orientation preserving isometries (SOS/SOC):
    an R with det -1 is then reported as NotSimilarity.  ``with_sigma=False``
    skips the lattice intersection for coincidence isometries.
    """
    _check_pair(G, R)
    if proper_only and R.det != 1:
        return Classification(Verdict.NOT_SIMILARITY)
    K = G.K
    H = conjugated(G, R)
    entries = list(H.entries())
    if all(h in K for h in entries):
        sigma = coincidence_index(G, R) if with_sigma else None
        return Classification(Verdict.COINCIDENCE, ScalarCoset.trivial(K), 1, sigma)
    h0 = next(h for h in entries if h)
    inv0 = h0.inverse()
    if not all((h * inv0) in K for h in entries if h):
        return Classification(Verdict.NOT_SIMILARITY)
    coset = ScalarCoset(inv0, K)
    alpha = coset.rep
    power = alpha
    for n in range(1, G.dim + 1):
        if power in K:
            return Classification(Verdict.SIMILARITY, coset, n)
        power = power * alpha
    raise InternalMismatch("alpha^d outside K although alpha*H is over K")


def scal_coset(G: FreeModule, R: Isometry) -> ScalarCoset:
    c = classify(G, R, with_sigma=False)
    if not c.is_similarity:
        raise NotASimilarity("R is not a similarity isometry of the module")
    return c.coset


def eta_order(G: FreeModule, R: Isometry) -> int:
    """Order of eta(R) in R^x / K^x: the least n with alpha^n in K."""
    c = classify(G, R, with_sigma=False)
    if not c.is_similarity:
        raise NotASimilarity("R is not a similarity isometry of the module")
    return c.eta_order


def coset_equal(a: ScalarCoset, b: ScalarCoset, K: SubfieldEmbedding | None = None) -> bool:
    K = a.K if K is None else K
    return (a.rep / b.rep) in K


def eta_product_check(G: FreeModule, R: Isometry, S: Isometry) -> bool:
    """Whether eta(RS) equals eta(R) * eta(S)."""
    cr = classify(G, R, with_sigma=False)
    cs = classify(G, S, with_sigma=False)
    crs = classify(G, R @ S, with_sigma=False)
    if not (cr.is_similarity and cs.is_similarity and crs.is_similarity):
        raise NotASimilarity("eta is only defined on similarity isometries")
    return coset_equal(crs.coset, cr.coset * cs.coset, G.K)


def verify_os_squared(G: FreeModule, R: Isometry) -> bool:
    """Check R^2 in OC(G) and, for odd d, R itself in OC(G)."""
    if not is_K_module(G):
        raise NotAKModule("the module is not a module over K")
    c = classify(G, R, with_sigma=False)
    if not c.is_similarity:
        raise NotASimilarity("R is not a similarity isometry of the module")
    ok = classify(G, R @ R, with_sigma=False).is_coincidence
    if G.dim % 2 == 1:
        ok = ok and c.is_coincidence
    return ok


# -- planar orders -----------------------------------------------------------


def sos_direction(O: PlanarOrder, a: FieldElement) -> Isometry:
    """The rotation by the direction a/|a| of a nonzero order element."""
    a = O.field(a)
    if a.is_zero():
        raise ZeroElement("a must be nonzero")
    if not O.contains(a):
        raise ValueError("element does not lie in the order")
    re, im = O.realize(a)
    try:
        modulus = (re * re + im * im).sqrt()
    except NotRepresentable:
        raise NotRepresentable("|a| does not lie in the real ambient field") from None
    x, y = re / modulus, im / modulus
    return Isometry(ExactMatrix([[x, -y], [y, x]], O.ambient), check=False)


def element_modulus(O: PlanarOrder, a: FieldElement) -> FieldElement:
    re, im = O.realize(a)
    return (re * re + im * im).sqrt()


def principal_ideal_index(O: PlanarOrder, k: FieldElement) -> int:
    """[O : kO], computed as |N(k)| and as an elementary-divisor product."""
    k = O.field(k)
    if k.is_zero():
        raise ZeroElement("k must be nonzero")
    by_norm = abs(field_norm(k))
    divisors = snf_diagonal(O.multiplication_matrix(k))
    by_lattice = 1
    for dv in divisors:
        by_lattice *= dv
    if by_norm != by_lattice:
        raise InternalMismatch(f"|N(k)| = {by_norm} but [O : kO] = {by_lattice}")
    return int(by_lattice)


def planar_rotation(c, s, field) -> Isometry:
    """[[c, -s], [s, c]], checked orthogonal."""
    return Isometry(ExactMatrix([[c, -s], [s, c]], field))


def embed_block(block: Isometry, d: int, at: Sequence[int]) -> Isometry:
    """Act by ``block`` on the coordinates ``at`` and trivially elsewhere."""
    F = block.field
    rows = [[F.one if i == j else F.zero for j in range(d)] for i in range(d)]
    for a, i in enumerate(at):
        for b, j in enumerate(at):
            rows[i][j] = block.matrix[a, b]
    return Isometry(ExactMatrix(rows, F), check=False)
