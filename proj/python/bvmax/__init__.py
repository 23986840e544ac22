"""Best constants, thresholds, and ball maximizers for the D_alpha(a, b, q) family."""

from ._core import (
    BallMaximizer,
    BVNorms,
    EndpointLimits,
    MaximizerSet,
    OptCandidate,
    OptResult,
    ProblemParams,
    RadialStepFunction,
    ReducedFunctions,
    RegimeReport,
    Threshold,
    ThresholdRelation,
    ThresholdSource,
    Verdict,
    VerifyReport,
    __version__,
    alpha_c,
    alpha_v,
    b0_zero_q,
    classify,
    concentrating_element,
    critical_b0,
    d_alpha,
    functional_value,
    gn_best_constant,
    height_of_t,
    maximizer_set,
    mazya_constant,
    monte_carlo_bound_check,
    normalize_to_constraint,
    norms,
    radius_of_t,
    scaled,
    sobolev_conjugate,
    unit_sphere_area,
    vanishing_element,
)

__all__ = [
    "BallMaximizer",
    "BVNorms",
    "EndpointLimits",
    "MaximizerSet",
    "OptCandidate",
    "OptResult",
    "ProblemParams",
    "RadialStepFunction",
    "ReducedFunctions",
    "RegimeReport",
    "Threshold",
    "ThresholdRelation",
    "ThresholdSource",
    "Verdict",
    "VerifyReport",
    "__version__",
    "alpha_c",
    "alpha_v",
    "b0_zero_q",
    "classify",
    "concentrating_element",
    "critical_b0",
    "d_alpha",
    "functional_value",
    "gn_best_constant",
    "height_of_t",
    "maximizer_set",
    "mazya_constant",
    "monte_carlo_bound_check",
    "normalize_to_constraint",
    "norms",
    "radius_of_t",
    "scaled",
    "sobolev_conjugate",
    "unit_sphere_area",
    "vanishing_element",
]
