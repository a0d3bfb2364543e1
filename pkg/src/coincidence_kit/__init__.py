"""Exact similarity and coincidence isometries of free modules over number fields."""

from .errors import *  # noqa: F401,F403
from .numberfield import (
    QQ,
    AlgebraicField,
    ComplexRoot,
    FieldElement,
    RealRoot,
    SubfieldEmbedding,
    arith,
    complex_abs_square,
    field_norm,
    in_subfield,
    sign,
)
from .exactlinalg import (
    ExactMatrix,
    IntegerLattice,
    det,
    hnf,
    invert,
    lattice_index,
    lattice_intersect,
    snf_diagonal,
    transition_matrix,
)
from .modules import (
    CoefficientRing,
    FreeModule,
    PlanarOrder,
    as_integer_lattice,
    commensurate,
    intersect,
    is_K_module,
    is_submodule,
    module_index,
)
from .isometry import (
    Classification,
    Isometry,
    ScalarCoset,
    Verdict,
    classify,
    coset_equal,
    eta_order,
    eta_product_check,
    principal_ideal_index,
    sos_direction,
    verify_os_squared,
)

__version__ = "0.1.0"
