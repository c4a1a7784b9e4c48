"""Sabban frames, geodesic curvature and Smarandache curves on the unit sphere."""

__version__ = "0.1.0"

from .curves import (
    CurveSource,
    arclength_table,
    expression_curve,
    fixture,
    great_circle,
    is_unit_speed,
    latitude_circle,
    paper_example,
    reparameterize_unit_speed,
)
from .errors import (
    ConfigurationError,
    DegenerateVector,
    DomainEdge,
    InvalidRadius,
    NonMonotoneArcLength,
    NotUnitSpeed,
    NumericalError,
    OutOfRange,
    SphereCurveError,
)
from .sabban import (
    FrameSample,
    SabbanFrame,
    frame_sample,
    geodesic_curvature,
    kappa_prime,
    sabban_frame,
    verify_sabban_odes,
)
from .smarandache import (
    SmarandacheKind,
    erratum_report,
    generate,
    kappa_beta_definitional,
    speed_ratio,
)
