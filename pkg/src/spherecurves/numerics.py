"""Finite differences, composite Simpson quadrature and monotone table inversion.

These are the numerical oracles the rest of the package leans on. Every
routine is a pure function of its arguments.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Literal, Optional, Tuple, Union

import numpy as np
from scipy.interpolate import PchipInterpolator
from scipy.optimize import brentq

from .errors import DomainEdge, NonMonotoneArcLength, OutOfRange

Value = Union[float, np.ndarray]
Domain = Tuple[float, float]

DEFAULT_STEP_FRACTION = 1e-4
DEFAULT_PANELS = 2048

_FIRST_WEIGHTS = {
    2: ((-1, -0.5), (1, 0.5)),
    4: ((-2, 1 / 12), (-1, -8 / 12), (1, 8 / 12), (2, -1 / 12)),
}
_SECOND_WEIGHTS = {
    2: ((-1, 1.0), (0, -2.0), (1, 1.0)),
    4: ((-2, -1 / 12), (-1, 16 / 12), (0, -30 / 12), (1, 16 / 12), (2, -1 / 12)),
}


@dataclass(frozen=True)
class DifferenceScheme:
    """Central stencil of the given accuracy order (2: 3-point, 4: 5-point)."""

    h: float
    order: Literal[2, 4] = 4

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError(f"step must be positive, got {self.h!r}")
        if self.order not in (2, 4):
            raise ValueError(f"order must be 2 or 4, got {self.order!r}")

    @property
    def reach(self) -> float:
        """Distance from the centre to the outermost stencil node."""
        return self.h * self.order / 2

    def halved(self) -> "DifferenceScheme":
        return DifferenceScheme(self.h / 2, self.order)


@dataclass(frozen=True)
class QuadratureSpec:
    panels: int = DEFAULT_PANELS

    def __post_init__(self):
        if self.panels < 2 or self.panels % 2:
            raise ValueError(f"Simpson needs an even panel count >= 2, got {self.panels}")


def default_scheme(domain: Domain, order: Literal[2, 4] = 4) -> DifferenceScheme:
    a, b = domain
    return DifferenceScheme(DEFAULT_STEP_FRACTION * (b - a), order)


def _check_reach(s: float, reach: float, domain: Optional[Domain]):
    if domain is None:
        return
    a, b = domain
    # a little slack so stencils centred on grid points that were computed
    # with rounding still count as inside
    slack = 1e-12 * max(1.0, abs(a), abs(b))
    if s - reach < a - slack or s + reach > b + slack:
        raise DomainEdge(f"stencil [{s - reach!r}, {s + reach!r}] leaves domain [{a!r}, {b!r}]")


def _apply(f, s, h, weights, scale):
    acc = 0.0
    for offset, w in weights:
        acc = acc + w * np.asarray(f(s + offset * h), dtype=float)
    out = acc / scale
    return float(out) if np.ndim(out) == 0 else out


def central_difference(f: Callable[[float], Value], s: float, scheme: DifferenceScheme,
                       domain: Optional[Domain] = None) -> Value:
    """First derivative of ``f`` at ``s`` with a 3- or 5-point central stencil."""
    _check_reach(s, scheme.reach, domain)
    return _apply(f, s, scheme.h, _FIRST_WEIGHTS[scheme.order], scheme.h)


def second_difference(f: Callable[[float], Value], s: float, scheme: DifferenceScheme,
                      domain: Optional[Domain] = None) -> Value:
    """Second derivative of ``f`` at ``s`` with a 3- or 5-point central stencil."""
    _check_reach(s, scheme.reach, domain)
    return _apply(f, s, scheme.h, _SECOND_WEIGHTS[scheme.order], scheme.h ** 2)


Stencil = Literal["central5", "central3", "forward", "backward"]


def differentiate(f: Callable[[float], Value], s: float, scheme: DifferenceScheme,
                  domain: Optional[Domain] = None, second: bool = False) -> Tuple[Value, Stencil]:
    """Like :func:`central_difference` but degrades gracefully near domain edges.

    Tries the requested central stencil, then the 3-point one, then a
    second-order one-sided stencil. Returns the value and the stencil used,
    so callers can flag edge samples.
    """
    central = central_difference if not second else second_difference
    try:
        return central(f, s, scheme, domain), ("central5" if scheme.order == 4 else "central3")
    except DomainEdge:
        if scheme.order == 4:
            try:
                return central(f, s, DifferenceScheme(scheme.h, 2), domain), "central3"
            except DomainEdge:
                pass
    a, b = domain
    h = scheme.h
    span = 3 * h if second else 2 * h
    if s - a >= b - s:
        direction, stencil = -1.0, "backward"
    else:
        direction, stencil = 1.0, "forward"
    _check_reach(s + direction * span / 2, span / 2, domain)
    hd = direction * h
    if second:
        # 4-point one-sided, second order accurate
        value = (2 * np.asarray(f(s)) - 5 * np.asarray(f(s + hd)) + 4 * np.asarray(f(s + 2 * hd))
                 - np.asarray(f(s + 3 * hd))) / h ** 2
    else:
        value = (-3 * np.asarray(f(s)) + 4 * np.asarray(f(s + hd)) - np.asarray(f(s + 2 * hd))) / (2 * hd)
    return (float(value) if np.ndim(value) == 0 else value), stencil


def integrate(f: Callable[[float], float], a: float, b: float,
              spec: QuadratureSpec = QuadratureSpec()) -> float:
    """Composite Simpson rule on ``[a, b]``."""
    if b < a:
        raise ValueError(f"integration bounds reversed: {a!r} > {b!r}")
    if b == a:
        return 0.0
    n = spec.panels
    h = (b - a) / n
    odd = sum(f(a + k * h) for k in range(1, n, 2))
    even = sum(f(a + k * h) for k in range(2, n, 2))
    return float(h / 3 * (f(a) + 4 * odd + 2 * even + f(b)))


@dataclass(frozen=True, eq=False)
class ArcLengthTable:
    """Cumulative arc length ``s_star`` at source parameters ``s``.

    When ``speed`` is attached, intermediate values are computed by
    integrating from the nearest tabulated node, which keeps the inverse
    accurate to rounding. Without it the table is interpolated with a
    monotone cubic.
    """

    s: np.ndarray
    s_star: np.ndarray
    speed: Optional[Callable[[float], float]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float)
        s_star = np.asarray(self.s_star, dtype=float)
        if s.ndim != 1 or s.shape != s_star.shape or s.size < 2:
            raise ValueError("table needs two equal-length sequences of at least 2 entries")
        if s_star[0] != 0.0:
            raise ValueError(f"arc length must start at 0, got {s_star[0]!r}")
        if np.any(np.diff(s) <= 0):
            raise ValueError("source parameters must be strictly increasing")
        if np.any(np.diff(s_star) <= 0):
            raise NonMonotoneArcLength("arc length is not strictly increasing")
        s.flags.writeable = False
        s_star.flags.writeable = False
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "s_star", s_star)

    @property
    def total(self) -> float:
        return float(self.s_star[-1])

    @property
    def domain(self) -> Domain:
        return float(self.s[0]), float(self.s[-1])

    @cached_property
    def _forward(self):
        return PchipInterpolator(self.s, self.s_star, extrapolate=False)

    @cached_property
    def _inverse(self):
        return PchipInterpolator(self.s_star, self.s, extrapolate=False)

    def _cell(self, grid: np.ndarray, x: float) -> int:
        i = int(np.searchsorted(grid, x, side="right")) - 1
        return min(max(i, 0), grid.size - 2)

    def arclength_at(self, s: float) -> float:
        a, b = self.domain
        if not a <= s <= b:
            raise OutOfRange(f"parameter {s!r} outside table range [{a!r}, {b!r}]")
        if self.speed is None:
            return float(self._forward(s))
        i = self._cell(self.s, s)
        return float(self.s_star[i]) + integrate(self.speed, float(self.s[i]), s, QuadratureSpec(2))

    def invert(self, target: float) -> float:
        return invert_monotone(self, target)


def invert_monotone(table: ArcLengthTable, target: float) -> float:
    """Source parameter whose arc length equals ``target``.

    A monotone cubic through the table provides the first guess; the guess
    then splits the bracketing cell and Brent's method polishes the root.
    """
    total = table.total
    slack = 1e-12 * max(1.0, total)
    if not -slack <= target <= total + slack:
        raise OutOfRange(f"arc length {target!r} outside [0, {total!r}]")
    target = min(max(target, 0.0), total)
    j = table._cell(table.s_star, target)
    lo, hi = float(table.s[j]), float(table.s[j + 1])
    if target == table.s_star[j]:
        return lo
    if target == table.s_star[j + 1]:
        return hi

    def residual(u):
        return table.arclength_at(u) - target

    guess = float(table._inverse(target))
    if lo < guess < hi:
        r = residual(guess)
        if r == 0.0:
            return guess
        if r > 0:
            hi = guess
        else:
            lo = guess
    r_lo, r_hi = residual(lo), residual(hi)
    if r_lo >= 0:
        return lo
    if r_hi <= 0:
        return hi
    return float(brentq(residual, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps))
