"""Numerical verification of harmonic convexity and its consequences.

The heavy lifting lives in the compiled ``_core`` module; this package
re-exports its public names.
"""

from ._core import (
    BoundKind,
    BoundReport,
    Conclusion,
    ConvexityVerdict,
    DomainSign,
    EvaluationError,
    ExpressionParseError,
    FunctionSpec,
    FunctionTraits,
    HHReport,
    IdentityReport,
    Implication,
    Interval,
    LambdaConstants,
    MeanValues,
    MuConstants,
    PropositionReport,
    QuadratureError,
    QuadResult,
    Tri,
    Witness,
    check_harmonic_convexity,
    check_via_reciprocal_transform,
    classify_by_proposition,
    compute_means,
    derive_traits,
    harmonic_combination,
    harmonic_convexity_defect,
    harmonic_path,
    hh_triple,
    hoelder_bound_check,
    identity_check,
    integrate,
    lambda_constants,
    lp_mean,
    lp_monotonicity_check,
    mu_constants,
    parse,
    powermean_bound_check,
    proposition_check,
)

__all__ = [
    "BoundKind",
    "BoundReport",
    "Conclusion",
    "ConvexityVerdict",
    "DomainSign",
    "EvaluationError",
    "ExpressionParseError",
    "FunctionSpec",
    "FunctionTraits",
    "HHReport",
    "IdentityReport",
    "Implication",
    "Interval",
    "LambdaConstants",
    "MeanValues",
    "MuConstants",
    "PropositionReport",
    "QuadratureError",
    "QuadResult",
    "Tri",
    "Witness",
    "check_harmonic_convexity",
    "check_via_reciprocal_transform",
    "classify_by_proposition",
    "compute_means",
    "derive_traits",
    "harmonic_combination",
    "harmonic_convexity_defect",
    "harmonic_path",
    "hh_triple",
    "hoelder_bound_check",
    "identity_check",
    "integrate",
    "lambda_constants",
    "lp_mean",
    "lp_monotonicity_check",
    "mu_constants",
    "parse",
    "powermean_bound_check",
    "proposition_check",
]

__version__ = "0.1.0"
