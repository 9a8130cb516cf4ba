"""Closed-form cubic, quartic, and quintic solvers in complex arithmetic,
an independent iterative root oracle, and a verification harness that
measures whether claimed roots satisfy their input polynomials.
"""

from .errors import (
    DegenerateLeading,
    DegenerateReduction,
    DegenerateResolvent,
    FifthRootUndefined,
    Gamma3Zero,
    NonFiniteInput,
    SolverError,
    Y3Zero,
)
from .harness import (
    CUBIC_CARDANO,
    QUARTIC_FERRARI,
    QUARTIC_T1,
    QUINTIC_T2,
    QUINTIC_T3,
    CaseRecord,
    EnsembleConfig,
    EnsembleReport,
    candidate_census_theorem2,
    generate_polynomial,
    match_roots,
    render_report,
    run_ensemble,
    verify_solver,
    write_report,
)
from .numerics import ccbrt, csqrt
from .oracle import OracleResult, ferrari_quartic, polish_root, roots_iterative
from .poly import (
    DepressedQuartic,
    RealPolynomial,
    ReducedQuintic,
    depressed_quartic_coeffs,
    eval_horner,
    eval_with_derivative,
    normalize_monic,
    quintic_reduction_coeffs,
    residual,
)
from .radical_solvers import (
    QuarticSolution,
    QuinticTrace,
    resolvent_y01,
    solve_cubic_depressed,
    solve_cubic_general,
    solve_quadratic,
    solve_quartic_depressed,
    solve_quartic_theorem1,
    solve_quintic_theorem2,
    solve_quintic_theorem3,
)

__version__ = "0.1.0"

__all__ = [
    "SolverError", "NonFiniteInput", "DegenerateLeading", "DegenerateResolvent",
    "DegenerateReduction", "Gamma3Zero", "Y3Zero", "FifthRootUndefined",
    "csqrt", "ccbrt",
    "RealPolynomial", "DepressedQuartic", "ReducedQuintic",
    "eval_horner", "eval_with_derivative", "normalize_monic",
    "depressed_quartic_coeffs", "quintic_reduction_coeffs", "residual",
    "solve_quadratic", "solve_cubic_depressed", "solve_cubic_general",
    "resolvent_y01", "solve_quartic_depressed", "solve_quartic_theorem1",
    "solve_quintic_theorem2", "solve_quintic_theorem3",
    "QuarticSolution", "QuinticTrace",
    "OracleResult", "roots_iterative", "ferrari_quartic", "polish_root",
    "CUBIC_CARDANO", "QUARTIC_T1", "QUARTIC_FERRARI", "QUINTIC_T2", "QUINTIC_T3",
    "CaseRecord", "EnsembleConfig", "EnsembleReport",
    "match_roots", "verify_solver", "candidate_census_theorem2",
    "generate_polynomial", "run_ensemble", "render_report", "write_report",
]
