"""Symplectic line-spreads of PG(3,q) and their permutation-polynomial families.

Construction and bit-exact verification of the known spread families over
small finite fields, the equivalence between the spread condition and
families of permutation polynomials, recovery of generating polynomials
under the coordinate-swap transform, check-count reduction through scaling
classes, and a desk-scale exhaustive search over two-term generators.
"""

from .field import GF
from .poly import BiPoly, UniPoly, interpolate_bi, interpolate_uni
from .geometry import (
    Spread,
    VerifyReport,
    Violation,
    canonical_point,
    flock_check,
    general_spread_check,
    l_infinity,
    line_points,
    line_span,
    point_count,
    spread_from_fg,
    spread_from_g,
    symplectic_form,
    permutation_criterion,
    permutation_criterion_additive,
    verify_spread,
)
from .families import (
    FAMILY_NAMES,
    FamilySpec,
    default_spec,
    g_of,
    ree_tits_fa,
    scaling_conjugate,
    tits_luneburg_closed_form,
)
from .equivalence import (
    StandardForm,
    StandardFormError,
    recover_g,
    tau_grid_via_formulas,
    tau_spread,
    to_standard_form,
)
from .classdelta import DeltaCert, FamilyGen, family_gen, find_class, reduced_pp_check, verify_class
from .search import SearchReport, SearchSpace, Survivor, classify_survivor, run_search

__version__ = "0.1.0"

__all__ = [
    "GF", "UniPoly", "BiPoly", "interpolate_uni", "interpolate_bi",
    "Spread", "VerifyReport", "Violation", "canonical_point", "l_infinity",
    "line_span", "line_points", "point_count", "symplectic_form",
    "spread_from_g", "spread_from_fg", "verify_spread", "permutation_criterion",
    "permutation_criterion_additive", "general_spread_check", "flock_check",
    "FAMILY_NAMES", "FamilySpec", "default_spec", "g_of", "ree_tits_fa",
    "tits_luneburg_closed_form", "scaling_conjugate",
    "StandardForm", "StandardFormError", "tau_spread", "to_standard_form",
    "recover_g", "tau_grid_via_formulas",
    "FamilyGen", "DeltaCert", "family_gen", "verify_class", "find_class",
    "reduced_pp_check",
    "SearchSpace", "SearchReport", "Survivor", "run_search", "classify_survivor",
    "__version__",
]
