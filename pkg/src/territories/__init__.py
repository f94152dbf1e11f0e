"""Exact-arithmetic computations with territories of reduced curve singularities.

A territory parametrizes the multiplicatively closed, corank-``g``
subspaces of a truncated branch algebra fixed by a conductance vector.
This package computes their defining chart equations, canonical point
representations and invariants, branch operations (join, restriction,
contraction, gluing), torus and one-automorphism limits, numerical-monoid
fixed points, and the spine-dimension smoothability bounds.
"""

from .algebra import (
    CONST,
    AlgebraElement,
    ConductanceVector,
    Grading,
    LaurentElement,
    Monomial,
    apply_phi_a_symbolic,
    apply_torus,
    filtration_basis,
    substitute_branches,
)
from .branches import (
    BranchSplit,
    GluingHom,
    IsomHilbData,
    QuotientAlgebra,
    StratumLabel,
    assemble_from_gluing,
    contract,
    extract_gluing,
    gorenstein_contraction_check,
    isom_hilb_assemble,
    isom_hilb_data,
    join,
    restrict,
    stratum_label,
)
from .charts import (
    ChartIdeal,
    SpineDescriptor,
    based_equations,
    chart_coordinates,
    chart_equations,
    random_spine_point,
    spine,
    spine_intersection,
    spine_relative_dimension,
)
from .errors import TerritoryError
from .groebner import groebner_basis, ideal_membership, radical_membership
from .laurent import LaurentPoly
from .limits import (
    DegenerationChain,
    MonoidTuple,
    ParametricSubspace,
    decomposable_limit,
    degenerate_to_partition,
    fixed_point_tuples,
    fixed_points,
    gamma_limit,
    limit_at_zero,
    phi_a_limit,
    stratum_realizable,
    t_fix,
    torus_family,
)
from .linalg import RationalMatrix
from .monoids import NumericalMonoid, enumerate_monoids
from .points import (
    NormalBasis,
    SubalgebraPoint,
    VanishingData,
    make_point,
    monomial_point,
)
from .polynomials import MultiPoly, det_poly, parse_poly
from .smoothability import (
    SmoothabilityVerdict,
    best_conductances,
    nonsmoothable_exists,
    smoothability_map,
    spine_lower_bound,
)

__version__ = "0.1.0"
