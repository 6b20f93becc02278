"""Sharp subordination thresholds for Briot-Bouquet type differential implications."""

from .dominant import DominantSpec, JanowskiParams, chi, q_beta_eval, xi
from .errors import (
    DegenerateCurve,
    DomainError,
    InadmissibleSample,
    NoFiniteThreshold,
    NonConvergence,
    ZeroEncountered,
)
from .hypergeom import HypergeomParams, SeriesTolerance, gauss_2f1
from .targets import Tag, TargetFunction, target_boundary_curve, target_endpoints
from .thresholds import ThresholdResult, sharp_threshold, solve_beta1, solve_beta2
from .verify import TaylorFunction, is_subordinate_numeric

__version__ = "0.1.0"
