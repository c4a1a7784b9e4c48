"""Parametric curves on the unit sphere.

A :class:`CurveSource` bundles an evaluator with optional analytic first
and second derivatives. Missing derivatives are filled in by finite
differences with step ``1e-4 * domain length`` unless overridden.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, NamedTuple, Optional, Tuple

import numpy as np

from . import linalg3 as la
from .errors import DegenerateVector, InvalidRadius, NonMonotoneArcLength
from .numerics import (
    ArcLengthTable,
    DifferenceScheme,
    Domain,
    differentiate,
    invert_monotone,
)

VecFn = Callable[[float], np.ndarray]

SPHERE_TOL = 1e-6
DEFAULT_TABLE_SIZE = 2000


@dataclass(frozen=True)
class CurveSource:
    name: str
    domain: Domain
    evaluate: VecFn = field(repr=False)
    derivative: Optional[VecFn] = field(default=None, repr=False)
    second_derivative: Optional[VecFn] = field(default=None, repr=False)
    fd_step: Optional[float] = None

    def __post_init__(self):
        a, b = self.domain
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ValueError(f"bad domain {self.domain!r}")
        object.__setattr__(self, "domain", (float(a), float(b)))

    def __call__(self, s: float) -> np.ndarray:
        return la.vec3(self.evaluate(s))

    @property
    def length(self) -> float:
        return self.domain[1] - self.domain[0]

    @property
    def step(self) -> float:
        return self.fd_step if self.fd_step is not None else 1e-4 * self.length

    @property
    def scheme(self) -> DifferenceScheme:
        return DifferenceScheme(self.step, 4)

    @property
    def derivative_strategy(self) -> str:
        return "analytic" if self.derivative is not None else "finite-difference"

    def velocity(self, s: float) -> np.ndarray:
        if self.derivative is not None:
            return la.vec3(self.derivative(s))
        value, _ = differentiate(self.evaluate, s, self.scheme, self.domain)
        return la.vec3(value)

    def grid(self, n: int, margin: float = 0.0) -> np.ndarray:
        a, b = self.domain
        return np.linspace(a + margin, b - margin, n)

    def with_domain(self, a: float, b: float) -> "CurveSource":
        return replace(self, domain=(a, b))

    def with_finite_differences(self) -> "CurveSource":
        return replace(self, derivative=None, second_derivative=None)

    def with_step(self, h: Optional[float]) -> "CurveSource":
        return replace(self, fd_step=h)


@dataclass(frozen=True)
class ReparameterizedCurve(CurveSource):
    """Unit-speed version of ``source``, parameterized by its arc length."""

    source: Optional[CurveSource] = field(default=None, repr=False)
    table: Optional[ArcLengthTable] = field(default=None, repr=False)

    def source_parameter(self, s_star: float) -> float:
        return invert_monotone(self.table, s_star)

    def arclength(self, s: float) -> float:
        return self.table.arclength_at(s)


def great_circle() -> CurveSource:
    return CurveSource(
        "great-circle",
        (0.0, 2 * math.pi),
        lambda s: (math.cos(s), math.sin(s), 0.0),
        lambda s: (-math.sin(s), math.cos(s), 0.0),
        lambda s: (-math.cos(s), -math.sin(s), 0.0),
    )


def latitude_circle(r: float) -> CurveSource:
    """Small circle of radius ``r`` at height ``sqrt(1 - r**2)``, unit speed."""
    if not 0.0 < r < 1.0:
        raise InvalidRadius(f"latitude circle radius must lie in (0, 1), got {r!r}")
    z0 = math.sqrt(1.0 - r * r)
    return CurveSource(
        f"latitude-circle(r={r!r})",
        (0.0, 2 * math.pi * r),
        lambda s: (r * math.cos(s / r), r * math.sin(s / r), z0),
        lambda s: (-math.sin(s / r), math.cos(s / r), 0.0),
        lambda s: (-math.cos(s / r) / r, -math.sin(s / r) / r, 0.0),
    )


def _paper_position(s):
    th, sh = math.tanh(s), 1.0 / math.cosh(s)
    return (math.cos(s) * th, math.sin(s) * th, sh)


def _paper_velocity(s):
    c, si = math.cos(s), math.sin(s)
    th, sh = math.tanh(s), 1.0 / math.cosh(s)
    sh2 = sh * sh
    return (-si * th + c * sh2, c * th + si * sh2, -sh * th)


def _paper_acceleration(s):
    c, si = math.cos(s), math.sin(s)
    th, sh = math.tanh(s), 1.0 / math.cosh(s)
    sh2 = sh * sh
    return (
        -c * th - 2 * si * sh2 - 2 * c * sh2 * th,
        -si * th + 2 * c * sh2 - 2 * si * sh2 * th,
        sh * th * th - sh2 * sh,
    )


def paper_example(domain: Domain = (-5.0, 5.0)) -> CurveSource:
    """``s -> (cos s tanh s, sin s tanh s, sech s)``, unit speed on all of R."""
    return CurveSource("paper-example", domain, _paper_position, _paper_velocity, _paper_acceleration)


FIXTURES = {
    "great-circle": great_circle,
    "latitude-circle": lambda: latitude_circle(1 / math.sqrt(2)),
    "paper-example": paper_example,
}


def fixture(name: str) -> CurveSource:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None


class UnitSpeedCheck(NamedTuple):
    ok: bool
    defect: float

    def __bool__(self):
        return self.ok


def sphere_defect(c: CurveSource, samples: int = 1000) -> float:
    """Worst ``| |c(s)| - 1 |`` over a uniform grid."""
    return max(abs(la.norm(c(s)) - 1.0) for s in c.grid(samples))


def is_unit_speed(c: CurveSource, samples: int = 1000, tol: float = 1e-6) -> UnitSpeedCheck:
    if samples < 2:
        raise ValueError("need at least 2 samples")
    worst = 0.0
    for s in c.grid(samples):
        speed = la.norm(c.velocity(s))
        if speed == 0.0:
            raise DegenerateVector(f"zero speed at s={s!r}")
        worst = max(worst, abs(speed - 1.0))
    return UnitSpeedCheck(worst <= tol, worst)


def _speed_fn(c: CurveSource) -> Callable[[float], float]:
    return lambda u: la.norm(c.velocity(u))


def arclength_table(c: CurveSource, n: int = DEFAULT_TABLE_SIZE) -> ArcLengthTable:
    """Cumulative arc length on ``n`` uniform nodes (Simpson per cell)."""
    if n < 2:
        raise ValueError("arc length table needs n >= 2")
    speed = _speed_fn(c)
    s = c.grid(n)
    mid = 0.5 * (s[:-1] + s[1:])
    at_nodes = np.array([speed(u) for u in s])
    at_mid = np.array([speed(u) for u in mid])
    if np.any(at_nodes <= 1e-12) or np.any(at_mid <= 1e-12):
        raise NonMonotoneArcLength(f"speed of {c.name} vanishes on its domain")
    cells = np.diff(s) / 6 * (at_nodes[:-1] + 4 * at_mid + at_nodes[1:])
    s_star = np.concatenate(([0.0], np.cumsum(cells)))
    return ArcLengthTable(s, s_star, speed)


def reparameterize_with_table(c: CurveSource, table: ArcLengthTable) -> ReparameterizedCurve:
    def evaluate(u):
        return c(invert_monotone(table, u))

    def derivative(u):
        return la.normalize(c.velocity(invert_monotone(table, u)))

    return ReparameterizedCurve(
        f"{c.name}|arclength",
        (0.0, table.total),
        evaluate,
        derivative,
        source=c,
        table=table,
    )


def reparameterize_unit_speed(c: CurveSource, n: int = DEFAULT_TABLE_SIZE) -> ReparameterizedCurve:
    """Re-express ``c`` by its own arc length.

    The tangent is the normalized source velocity at the inverted parameter
    (inverse function rule), so no extra differencing layer is introduced.
    """
    return reparameterize_with_table(c, arclength_table(c, n))


def expression_curve(text: str, domain: Domain) -> CurveSource:
    """Curve from ``"fx; fy; fz"`` in ``s``; derivatives by finite differences."""
    from .expr import parse_triple

    fx, fy, fz = parse_triple(text)
    return CurveSource(f"expr({text.strip()})", domain, lambda s: (fx(s), fy(s), fz(s)))
