"""Sure-success weight decision for Boolean functions with generalized Grover iterations."""

from .decider import (
    M2Analysis,
    NotFoundWithin,
    PreconditionError,
    Scheme,
    angular_span,
    decide,
    decide_fixed_m,
    diagnose,
    m2_analysis,
    min_iterations_pair,
)
from .scalar import (
    CurvePoint,
    QueryEstimates,
    WeightPair,
    cheb_t,
    cheb_u,
    curve_arrays,
    curve_point,
    grover_angle,
    query_estimates,
)
from .zero_weight import (
    Undecidable,
    ZeroWeightScheme,
    min_iterations_zero,
    min_weight_zero,
    zero_scheme,
)

__version__ = "0.1.0"
