"""Modal advection stencils and their exact modified equations.

The `exact` subpackage derives Taylor tables for the semi-discrete moment
evolution over the field of rationals extended by sqrt(3) and sqrt(5); the
floating-point modules run the matching schemes so that every derived
coefficient can be re-measured from the live operator.
"""
from .analysis import (
    EOC_BANDS,
    SCHEMES,
    InitialCondition,
    ResultTable,
    RunConfig,
    check_convergence,
    check_correction,
    check_residual,
    check_spectrum,
    exact_solution,
    initial_condition,
    run_compare,
    run_convergence,
    run_correction,
    run_residual,
    run_spectrum,
    taylor_statements,
)
from .basis import ModalBasis, gauss_legendre_halfcell
from .dg import (
    ExactInterface,
    UpdateMatrices,
    Upwind,
    correction_term,
    rhs_matrix,
    rhs_weak,
    symbol,
    update_matrices,
)
from .exact import (
    EXACT_POINT,
    MODES,
    UPWIND_TRACE,
    QF,
    DerivationError,
    DerivativeSeries,
    ModifiedPDE,
    StencilSpec,
    basis_moments,
    correction_series,
    modified_equation,
    moment_evolution_laws,
    update_matrices_exact,
)
from .field import ModalField, Norms, error_norms, project
from .fv import (
    AverageField,
    average_error_norms,
    project_averages,
    rhs_fv1,
    rhs_fv2,
    total_variation,
)
from .mesh import Mesh1D
from .timestepping import METHODS, Integrator

__version__ = "0.1.0"

__all__ = [
    "EOC_BANDS",
    "EXACT_POINT",
    "METHODS",
    "MODES",
    "SCHEMES",
    "UPWIND_TRACE",
    "AverageField",
    "DerivationError",
    "DerivativeSeries",
    "ExactInterface",
    "InitialCondition",
    "Integrator",
    "Mesh1D",
    "ModalBasis",
    "ModalField",
    "ModifiedPDE",
    "Norms",
    "QF",
    "ResultTable",
    "RunConfig",
    "StencilSpec",
    "UpdateMatrices",
    "Upwind",
    "average_error_norms",
    "basis_moments",
    "check_convergence",
    "check_correction",
    "check_residual",
    "check_spectrum",
    "correction_series",
    "correction_term",
    "error_norms",
    "exact_solution",
    "gauss_legendre_halfcell",
    "initial_condition",
    "modified_equation",
    "moment_evolution_laws",
    "project",
    "project_averages",
    "rhs_fv1",
    "rhs_fv2",
    "rhs_matrix",
    "rhs_weak",
    "run_compare",
    "run_convergence",
    "run_correction",
    "run_residual",
    "run_spectrum",
    "symbol",
    "taylor_statements",
    "total_variation",
    "update_matrices",
    "update_matrices_exact",
    "__version__",
]
