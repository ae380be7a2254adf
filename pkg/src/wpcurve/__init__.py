"""Exact K-theory of weighted smooth projective curves.

The reduced Grothendieck group of a weighted curve is materialized as a
finite-rank bilinear lattice in exact integer arithmetic: Euler forms,
Coxeter matrices and polynomials, orbifold Euler characteristics, weighted
Riemann-Roch, point-shift actions, and Picard/divisor class groups.
"""

from .abgroup import (
    AbelianPresentation,
    GroupInvariants,
    adjoin_fractions,
    invariants,
    is_isomorphic,
)
from .classify import (
    CurveClass,
    GeometryType,
    RepresentationType,
    classify,
    has_exceptional_sheaves,
)
from .picdiv import (
    cl_from_k0,
    divisor_class,
    lgroup,
    linearly_equivalent,
    picard_invariants,
    quotient_weight,
    riemann_hurwitz,
)
from .sheafclass import (
    Divisor,
    KClass,
    line_bundle_class,
    point_shift,
    rank_degree,
    shift_matrix,
    simple_class,
    structure_class,
)
from .weightedk import TubeLattice, WeightedCurveSpec, WeightedLattice, build, tube
from .zlinalg import (
    IntMatrix,
    IntPoly,
    char_poly,
    rational_inverse,
    smith_normal_form,
    v_poly,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianPresentation",
    "CurveClass",
    "Divisor",
    "GeometryType",
    "GroupInvariants",
    "IntMatrix",
    "IntPoly",
    "KClass",
    "RepresentationType",
    "TubeLattice",
    "WeightedCurveSpec",
    "WeightedLattice",
    "adjoin_fractions",
    "build",
    "char_poly",
    "cl_from_k0",
    "classify",
    "divisor_class",
    "has_exceptional_sheaves",
    "invariants",
    "is_isomorphic",
    "lgroup",
    "line_bundle_class",
    "linearly_equivalent",
    "picard_invariants",
    "point_shift",
    "quotient_weight",
    "rank_degree",
    "rational_inverse",
    "riemann_hurwitz",
    "shift_matrix",
    "simple_class",
    "smith_normal_form",
    "structure_class",
    "tube",
    "v_poly",
]
