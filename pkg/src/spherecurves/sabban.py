"""Sabban frame ``{gamma, t, d}`` and geodesic curvature of spherical curves.

For a unit-speed curve ``gamma`` on the unit sphere, ``t = gamma'`` and
``d = gamma x t``. The frame obeys::

    gamma' = t
    t'     = -gamma + kappa_g d
    d'     = -kappa_g t

with geodesic curvature ``kappa_g = <t', d>``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Tuple, Union

import numpy as np

from . import linalg3 as la
from .curves import SPHERE_TOL, CurveSource
from .errors import DegenerateVector, NotUnitSpeed, OffSphere
from .numerics import DifferenceScheme, Stencil, central_difference, differentiate

SPEED_TOL = 1e-4
ORTHO_TOL = 1e-6
REORTHO_TOL = 1e-8


@dataclass(frozen=True)
class SabbanFrame:
    gamma: np.ndarray
    tangent: np.ndarray
    normal: np.ndarray

    def matrix(self) -> np.ndarray:
        """Rows are ``gamma``, ``t``, ``d``."""
        return np.vstack((self.gamma, self.tangent, self.normal))

    def coordinates(self, v) -> Tuple[float, float, float]:
        """Components of ``v`` in the frame basis."""
        return la.dot(v, self.gamma), la.dot(v, self.tangent), la.dot(v, self.normal)

    def orthonormality_defect(self) -> float:
        m = self.matrix()
        return float(np.max(np.abs(m @ m.T - np.eye(3))))

    def handedness(self) -> float:
        return la.dot(la.cross(self.gamma, self.tangent), self.normal)


@dataclass(frozen=True)
class FrameSample:
    s: float
    frame: SabbanFrame
    kappa_g: float
    kappa_g_prime: float
    speed_ratio: Optional[float] = None
    stencil: Stencil = "central5"


def sabban_frame(c: CurveSource, s: float) -> SabbanFrame:
    position = c(s)
    radial_defect = abs(la.norm(position) - 1.0)
    if radial_defect > SPHERE_TOL:
        raise OffSphere(f"{c.name} is off the sphere at s={s!r} (defect {radial_defect:.3g})")
    velocity = c.velocity(s)
    speed = la.norm(velocity)
    if abs(speed - 1.0) > SPEED_TOL:
        raise NotUnitSpeed(f"{c.name} has speed {speed!r} at s={s!r}")
    gamma = la.normalize(position)
    t = la.normalize(velocity)
    skew = abs(la.dot(gamma, t))
    if skew > ORTHO_TOL:
        raise DegenerateVector(f"tangent not orthogonal to position at s={s!r} (defect {skew:.3g})")
    if skew > REORTHO_TOL:
        t = la.normalize(t - la.dot(t, gamma) * gamma)
    return SabbanFrame(gamma, t, la.cross(gamma, t))


def _tangent_derivative(c: CurveSource, s: float) -> Tuple[np.ndarray, Stencil]:
    if c.second_derivative is not None:
        return la.vec3(c.second_derivative(s)), "central5"
    if c.derivative is not None:
        value, stencil = differentiate(c.derivative, s, c.scheme, c.domain)
    else:
        value, stencil = differentiate(c.evaluate, s, c.scheme, c.domain, second=True)
    return la.vec3(value), stencil


def tangent_derivative(c: CurveSource, s: float) -> np.ndarray:
    """``t'(s)``: analytic if available, else differenced velocity, else positions."""
    return _tangent_derivative(c, s)[0]


def geodesic_curvature(c: CurveSource, s: float) -> float:
    return la.dot(tangent_derivative(c, s), sabban_frame(c, s).normal)


def kappa_prime(c: CurveSource, s: float, scheme: Optional[DifferenceScheme] = None,
                edge_ok: bool = False) -> float:
    """Derivative of the geodesic curvature, always by central differences.

    With ``edge_ok`` the stencil degrades near the domain ends instead of
    raising :class:`DomainEdge`.
    """
    return _kappa_prime(c, s, scheme, edge_ok)[0]


def _kappa_prime(c, s, scheme, edge_ok):
    scheme = scheme or c.scheme
    f = lambda u: geodesic_curvature(c, u)
    if edge_ok:
        return differentiate(f, s, scheme, c.domain)
    return central_difference(f, s, scheme, c.domain), "central5" if scheme.order == 4 else "central3"


def frame_sample(c: CurveSource, s: float, edge_ok: bool = False) -> FrameSample:
    frame = sabban_frame(c, s)
    kappa = la.dot(tangent_derivative(c, s), frame.normal)
    kp, stencil = _kappa_prime(c, s, None, edge_ok)
    return FrameSample(float(s), frame, kappa, kp, stencil=stencil)


class OdeResiduals(NamedTuple):
    position: float
    tangent: float
    normal: float

    def max(self) -> float:
        return max(self)


def ode_residuals(c: CurveSource, s: float) -> OdeResiduals:
    """Residual norms of the three frame equations at ``s``.

    ``d'`` is obtained by differencing the frame normal, so the check is
    independent of how ``kappa_g`` was computed.
    """
    frame = sabban_frame(c, s)
    t_prime = tangent_derivative(c, s)
    kappa = la.dot(t_prime, frame.normal)
    d_prime, _ = differentiate(lambda u: sabban_frame(c, u).normal, s, c.scheme, c.domain)
    return OdeResiduals(
        la.norm(c.velocity(s) - frame.tangent),
        la.norm(t_prime + frame.gamma - kappa * frame.normal),
        la.norm(d_prime + kappa * frame.tangent),
    )


def verify_sabban_odes(c: CurveSource, samples: Union[int, Iterable[float]] = 100) -> float:
    """Worst frame-equation residual over ``samples`` (a count or explicit parameters)."""
    grid = c.grid(samples) if isinstance(samples, int) else samples
    return max(ode_residuals(c, s).max() for s in grid)
