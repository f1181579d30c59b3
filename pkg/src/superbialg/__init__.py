"""Exact arithmetic for low-dimensional Lie superalgebras and super-bialgebras.

Everything is computed over Gaussian rationals; a check passes only when
its residual is identically zero. The shipped catalog, the dual-structure
solver, and the morphism certificates are re-exported here; the command
line lives in ``superbialg.cli``.
"""

__version__ = "0.1.0"

from .scalars import GScalar, GradedDims
from .supermatrix import SuperMatrix, format_matrix, parse_matrix
from .algebra import LieSuperAlgebra
from .bialgebra import (
    CheckResult,
    DualStructure,
    algebra_as_dual,
    build_double,
    cocycle_residual,
    dual_algebra,
    dual_jacobi_residual,
    manin_swap,
    mixed_jacobi_residual,
    pair_checks,
    pairing_ad_invariance,
)
from .solver import DualSolutionFamily, grid_completeness_check, solve_duals
from .morphism import (
    AutFamily,
    aut_membership,
    bialgebra_equivalent,
    family_membership,
    transform_dual,
    transport_upper,
    verify_automorphism,
    verify_isomorphism,
)
from .parser import (
    format_algebra,
    format_dual,
    parse_dual_statements,
    parse_file,
    parse_text,
)
from . import catalog, witnesses

__all__ = [
    "GScalar",
    "GradedDims",
    "SuperMatrix",
    "format_matrix",
    "parse_matrix",
    "LieSuperAlgebra",
    "CheckResult",
    "DualStructure",
    "algebra_as_dual",
    "build_double",
    "cocycle_residual",
    "dual_algebra",
    "dual_jacobi_residual",
    "manin_swap",
    "mixed_jacobi_residual",
    "pair_checks",
    "pairing_ad_invariance",
    "DualSolutionFamily",
    "grid_completeness_check",
    "solve_duals",
    "AutFamily",
    "aut_membership",
    "bialgebra_equivalent",
    "family_membership",
    "transform_dual",
    "transport_upper",
    "verify_automorphism",
    "verify_isomorphism",
    "format_algebra",
    "format_dual",
    "parse_dual_statements",
    "parse_file",
    "parse_text",
    "catalog",
    "witnesses",
]
