"""Digamma function from an explicit rational approximant of its power series."""

from .accel import (
    EpsilonTable,
    ModelSequence,
    TTransformState,
    elementary_symmetric,
    model_transformed_tail,
    t_transform_diagonal,
    t_transform_explicit,
    t_transform_push,
    wynn_epsilon,
)
from .digamma import DigammaConfig, DigammaResult, digamma, psi, reduce_argument
from .error_series import (
    ErrorSeriesResult,
    poch_hat_coeffs,
    pochhammer,
    transform_error_direct,
    transform_error_hurwitz,
)
from .exceptions import (
    ConfigurationError,
    DomainError,
    PoleError,
    SingularTransformError,
    StabilityWarning,
    TruncationWarning,
)
from .series import (
    EULER_GAMMA,
    SeriesResult,
    ZetaCache,
    hurwitz_zeta_int,
    partial_sums_Z,
    remainder_closed_form,
    riemann_zeta_int,
)

__version__ = "0.1.0"

__all__ = [
    "EULER_GAMMA",
    "ConfigurationError",
    "DigammaConfig",
    "DigammaResult",
    "DomainError",
    "EpsilonTable",
    "ErrorSeriesResult",
    "ModelSequence",
    "PoleError",
    "SeriesResult",
    "SingularTransformError",
    "StabilityWarning",
    "TTransformState",
    "TruncationWarning",
    "ZetaCache",
    "digamma",
    "elementary_symmetric",
    "hurwitz_zeta_int",
    "model_transformed_tail",
    "partial_sums_Z",
    "poch_hat_coeffs",
    "pochhammer",
    "psi",
    "reduce_argument",
    "remainder_closed_form",
    "riemann_zeta_int",
    "t_transform_diagonal",
    "t_transform_explicit",
    "t_transform_push",
    "transform_error_direct",
    "transform_error_hurwitz",
    "wynn_epsilon",
]
