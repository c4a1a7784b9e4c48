"""Smarandache curves built from the Sabban frame of a spherical curve.

Three combinations are supported::

    GT:  beta = (gamma + t) / sqrt(2)
    TD:  beta = (t + d) / sqrt(2)
    GTD: beta = (gamma + t + d) / sqrt(3)

Their invariants are available in three flavours:

* ``*_paper`` functions evaluate the published closed forms verbatim, typos
  included. They exist to be audited, not trusted.
* ``*_derived`` functions evaluate coefficients re-derived by differentiating
  the tangent with the product rule and the frame equations.
* ``*_definitional`` functions never use a closed form: the curve is
  generated, reparameterized by arc length numerically, and its geodesic
  curvature is measured from the definition.

:func:`erratum_report` compares all three.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Sequence

import numpy as np

from . import linalg3 as la
from .curves import DEFAULT_TABLE_SIZE, CurveSource, ReparameterizedCurve, reparameterize_unit_speed
from .numerics import central_difference
from .sabban import SabbanFrame, geodesic_curvature, kappa_prime, sabban_frame, tangent_derivative

CONSISTENCY_TOL = 1e-5
SQRT2 = math.sqrt(2.0)


class SmarandacheKind(enum.Enum):
    GT = "gt"
    TD = "td"
    GTD = "gtd"

    @property
    def coefficients(self) -> tuple:
        """Unscaled combination of ``(gamma, t, d)``."""
        return {"gt": (1, 1, 0), "td": (0, 1, 1), "gtd": (1, 1, 1)}[self.value]

    @property
    def scale(self) -> float:
        return 1.0 / math.sqrt(sum(self.coefficients))

    @property
    def weights(self) -> tuple:
        return tuple(self.scale * a for a in self.coefficients)

    @classmethod
    def parse(cls, name) -> "SmarandacheKind":
        if isinstance(name, cls):
            return name
        return cls(str(name).lower())


GT, TD, GTD = SmarandacheKind.GT, SmarandacheKind.TD, SmarandacheKind.GTD


class LambdaTriple(NamedTuple):
    lambda1: float
    lambda2: float
    lambda3: float


def _combine(frame: SabbanFrame, coeffs, scale=1.0) -> np.ndarray:
    return la.combine([scale * x for x in coeffs], (frame.gamma, frame.tangent, frame.normal))


def smarandache_point(kind: SmarandacheKind, frame: SabbanFrame) -> np.ndarray:
    return _combine(frame, kind.weights)


def generate(kind: SmarandacheKind, c: CurveSource) -> CurveSource:
    """The Smarandache curve of ``c`` on ``c``'s own (non arc-length) parameter.

    Its velocity is the product-rule derivative of the frame combination,
    using ``gamma' = t`` and ``d' = gamma x t'``; no closed form is involved.
    """
    kind = SmarandacheKind.parse(kind)
    a, b, cc = kind.weights

    def evaluate(s):
        return smarandache_point(kind, sabban_frame(c, s))

    def derivative(s):
        frame = sabban_frame(c, s)
        t_prime = tangent_derivative(c, s)
        return la.combine((a, b, cc), (frame.tangent, t_prime, la.cross(frame.gamma, t_prime)))

    return CurveSource(f"{kind.value}({c.name})", c.domain, evaluate, derivative, fd_step=c.fd_step)


# -- closed forms shared by the published text and the re-derivation ---------

def normalizer(kind: SmarandacheKind, kappa_g: float) -> float:
    """Squared norm of the unscaled derivative ``sqrt(w^-2) * beta'``."""
    k = kappa_g
    kind = SmarandacheKind.parse(kind)
    if kind is GT:
        return 2 + k * k
    if kind is TD:
        return 1 + 2 * k * k
    return 2 * (1 - k + k * k)


def speed_ratio(kind: SmarandacheKind, kappa_g: float) -> float:
    """``ds*/ds``; the GTD radicand ``1 - k + k^2`` is positive for every real k."""
    kind = SmarandacheKind.parse(kind)
    return kind.scale * math.sqrt(normalizer(kind, kappa_g))


def _tangent_coefficients(kind: SmarandacheKind, k: float) -> tuple:
    if kind is GT:
        return (-1.0, 1.0, k)
    if kind is TD:
        return (-1.0, -k, k)
    return (-1.0, 1.0 - k, k)


def tangent_beta(kind: SmarandacheKind, frame: SabbanFrame, kappa_g: float) -> np.ndarray:
    kind = SmarandacheKind.parse(kind)
    return _combine(frame, _tangent_coefficients(kind, kappa_g), 1.0 / math.sqrt(normalizer(kind, kappa_g)))


def d_beta(kind: SmarandacheKind, frame: SabbanFrame, kappa_g: float) -> np.ndarray:
    """``beta x t_beta`` computed as a cross product."""
    return la.cross(smarandache_point(kind, frame), tangent_beta(kind, frame, kappa_g))


# -- published forms, verbatim -----------------------------------------------

def lambda_triple(kind: SmarandacheKind, kappa_g: float, kappa_g_prime: float) -> LambdaTriple:
    """Coefficients of ``t_beta' ds*/ds`` as printed (GT's second entry is a typo)."""
    k, kp = kappa_g, kappa_g_prime
    kind = SmarandacheKind.parse(kind)
    if kind is GT:
        return LambdaTriple(k * kp - k**2 - 2, -k * kp - 2 - 2 * k**2 - k**4, 2 * k + 2 * kp + k**3)
    if kind is TD:
        return LambdaTriple(2 * k * kp + k + 2 * k**3, -1 - kp - 3 * k**2 - 2 * k**4, -k**2 + kp - 2 * k**4)
    return LambdaTriple(
        -kp + 2 * k * kp - 2 + 4 * k - 4 * k**2 + 2 * k**3,
        -kp - k * kp - 2 - 4 * k**2 + 2 * k + 2 * k**3 - 2 * k**4,
        -k * kp + 2 * k - 4 * k**2 + 2 * kp + 4 * k**3 - 2 * k**4,
    )


def _d_beta_paper_coefficients(kind: SmarandacheKind, k: float) -> tuple:
    if kind is GT:
        return (k, -1 - k, 2.0), 1.0 / math.sqrt(4 + 2 * k * k)
    if kind is TD:
        return (k, -1.0, 1 + k), 1.0 / math.sqrt(2 + 4 * k * k)
    return (2 * k - 1, -1 - k, 2 - k), 1.0 / (math.sqrt(6) * math.sqrt(1 - k + k * k))


def d_beta_paper(kind: SmarandacheKind, frame: SabbanFrame, kappa_g: float) -> np.ndarray:
    """Printed expansion of ``d_beta``. Not necessarily a unit vector."""
    kind = SmarandacheKind.parse(kind)
    coeffs, scale = _d_beta_paper_coefficients(kind, kappa_g)
    return _combine(frame, coeffs, scale)


def kappa_beta_closed_paper(kind: SmarandacheKind, kappa_g: float, kappa_g_prime: float) -> float:
    """Printed geodesic curvature of ``beta``, including its printed normalizing power."""
    k = kappa_g
    kind = SmarandacheKind.parse(kind)
    l1, l2, l3 = lambda_triple(kind, k, kappa_g_prime)
    if kind is GT:
        return (l1 * k + l2 * (-1 - k) + 2 * l3) / (2 + k * k) ** 1.5
    if kind is TD:
        return (l1 * k - l2 + l3 * (1 + k)) / (1 + 2 * k * k) ** 1.5
    return (l1 * (2 * k - 1) + l2 * (-1 - k) + l3 * (2 - k)) / (4 * SQRT2 * (1 - k + k * k) ** 1.5)


# -- re-derived forms --------------------------------------------------------
#
# With v the unscaled tangent coefficients and N = |v|^2, the product rule
# gives  d t_beta/ds = (N v' - N'/2 v) / N^(3/2)  where, in frame coordinates,
# (p, q, r)' = (p' - q, p - k r + q', k q + r').  Dividing by ds*/ds and
# projecting on d_beta = scale * (a, b, c) x v / sqrt(N) yields
# kappa_beta = <lambda, (a, b, c) x v> / N^(5/2).

def lambda_triple_derived(kind: SmarandacheKind, kappa_g: float, kappa_g_prime: float) -> LambdaTriple:
    k, kp = kappa_g, kappa_g_prime
    kind = SmarandacheKind.parse(kind)
    if kind is GT:
        return LambdaTriple(k * kp - k**2 - 2, -k * kp - 2 - 3 * k**2 - k**4, 2 * k + 2 * kp + k**3)
    # TD and GTD printed lists survive re-derivation unchanged
    return lambda_triple(kind, k, kp)


def _d_beta_cross_coefficients(kind: SmarandacheKind, k: float) -> tuple:
    """``(a, b, c) x v`` in frame coordinates."""
    if kind is GT:
        return (k, -k, 2.0)
    if kind is TD:
        return (2 * k, -1.0, 1.0)
    return (2 * k - 1, -1 - k, 2 - k)


def d_beta_derived(kind: SmarandacheKind, frame: SabbanFrame, kappa_g: float) -> np.ndarray:
    kind = SmarandacheKind.parse(kind)
    u = _d_beta_cross_coefficients(kind, kappa_g)
    return _combine(frame, u, kind.scale / math.sqrt(normalizer(kind, kappa_g)))


def kappa_beta_closed_derived(kind: SmarandacheKind, kappa_g: float, kappa_g_prime: float) -> float:
    kind = SmarandacheKind.parse(kind)
    lam = lambda_triple_derived(kind, kappa_g, kappa_g_prime)
    u = _d_beta_cross_coefficients(kind, kappa_g)
    return float(np.dot(lam, u)) / normalizer(kind, kappa_g) ** 2.5


# -- definitional pipeline ---------------------------------------------------

@lru_cache(maxsize=64)
def definitional_curve(kind: SmarandacheKind, c: CurveSource, n: int = DEFAULT_TABLE_SIZE) -> ReparameterizedCurve:
    """``generate(kind, c)`` reparameterized by its own arc length."""
    return reparameterize_unit_speed(generate(SmarandacheKind.parse(kind), c), n)


def kappa_beta_definitional(kind: SmarandacheKind, c: CurveSource, s: float,
                            n: int = DEFAULT_TABLE_SIZE, fd_step: Optional[float] = None) -> float:
    """Geodesic curvature of the Smarandache curve measured from the definition.

    ``fd_step`` overrides the difference step used on the reparameterized
    curve (in arc-length units).
    """
    beta_hat = definitional_curve(SmarandacheKind.parse(kind), c, n)
    s_star = beta_hat.arclength(s)
    if fd_step is not None:
        beta_hat = beta_hat.with_step(fd_step)
    return geodesic_curvature(beta_hat, s_star)


@dataclass(frozen=True)
class DerivedFrameSet:
    beta: np.ndarray
    t_beta: np.ndarray
    d_beta: np.ndarray
    speed_ratio: float
    kappa_beta: float


def derived_frame_set(kind: SmarandacheKind, c: CurveSource, s: float,
                      n: int = DEFAULT_TABLE_SIZE) -> DerivedFrameSet:
    """Sabban frame and invariants of the Smarandache curve, all definitional."""
    kind = SmarandacheKind.parse(kind)
    beta_hat = definitional_curve(kind, c, n)
    s_star = beta_hat.arclength(s)
    frame = sabban_frame(beta_hat, s_star)
    return DerivedFrameSet(
        frame.gamma,
        frame.tangent,
        frame.normal,
        la.norm(beta_hat.source.velocity(s)),
        geodesic_curvature(beta_hat, s_star),
    )


# -- adjudication ------------------------------------------------------------

FORMULAS = (
    # name, gating (False: published-verbatim check, reported only)
    ("speed_ratio", True),
    ("t_beta", True),
    ("lambda_derived", True),
    ("lambda_paper", False),
    ("d_beta_derived", True),
    ("d_beta_paper", False),
    ("kappa_beta_derived", True),
    ("kappa_beta_paper", False),
)


@dataclass
class Verdict:
    formula: str
    gating: bool
    max_gap: float
    tolerance: float
    extra: Dict[str, float] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return self.max_gap <= self.tolerance

    @property
    def label(self) -> str:
        return "CONSISTENT" if self.consistent else "INCONSISTENT"

    def as_dict(self) -> dict:
        return {"verdict": self.label, "max_gap": self.max_gap, "tolerance": self.tolerance,
                "gating": self.gating, **self.extra}


@dataclass
class ErratumReport:
    kind: SmarandacheKind
    curve: str
    records: List[dict]
    verdicts: Dict[str, Verdict]

    @property
    def passed(self) -> bool:
        """True when every gating (non-verbatim) check is consistent."""
        return all(v.consistent for v in self.verdicts.values() if v.gating)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "curve": self.curve,
            "passed": self.passed,
            "verdicts": {name: v.as_dict() for name, v in self.verdicts.items()},
            "samples": self.records,
        }


def default_sample_params(c: CurveSource, count: int = 64) -> np.ndarray:
    return c.grid(count, margin=2 * c.step)


def _gap(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float))))


def _as_list(v):
    return [float(x) for x in np.atleast_1d(v)]


def erratum_report(kind: SmarandacheKind, c: CurveSource, sample_params: Optional[Sequence[float]] = None,
                   tol: float = CONSISTENCY_TOL, n: int = DEFAULT_TABLE_SIZE) -> ErratumReport:
    """Compare published, re-derived and definitional invariants sample by sample.

    Every closed form is checked against a quantity obtained without it:
    speed and tangent against differenced positions of the generated curve,
    lambda triples against the differenced closed-form tangent, ``d_beta``
    and ``kappa_beta`` against the arc-length reparameterized curve.
    """
    kind = SmarandacheKind.parse(kind)
    if sample_params is None:
        sample_params = default_sample_params(c)
    beta = generate(kind, c)
    beta_hat = definitional_curve(kind, c, n)
    scheme = c.scheme

    def kappa(u):
        return geodesic_curvature(c, u)

    def closed_tangent(u):
        return tangent_beta(kind, sabban_frame(c, u), kappa(u))

    records = []
    gaps: Dict[str, List[float]] = {name: [] for name, _ in FORMULAS}
    paper_norm_defect = 0.0
    for s in sample_params:
        s = float(s)
        frame = sabban_frame(c, s)
        k = kappa(s)
        kp = kappa_prime(c, s, scheme)
        N = normalizer(kind, k)

        velocity = central_difference(beta.evaluate, s, scheme, c.domain)
        numeric_speed = la.norm(velocity)
        numeric_tangent = velocity / numeric_speed
        fd_lambda = N**1.5 * np.array(frame.coordinates(central_difference(closed_tangent, s, scheme, c.domain)))

        s_star = beta_hat.arclength(s)
        beta_frame = sabban_frame(beta_hat, s_star)
        kappa_def = geodesic_curvature(beta_hat, s_star)

        d_paper = d_beta_paper(kind, frame, k)
        paper_norm_defect = max(paper_norm_defect, abs(la.norm(d_paper) - 1.0))

        checks = {
            "speed_ratio": (speed_ratio(kind, k), numeric_speed),
            "t_beta": (tangent_beta(kind, frame, k), numeric_tangent),
            "lambda_derived": (lambda_triple_derived(kind, k, kp), fd_lambda),
            "lambda_paper": (lambda_triple(kind, k, kp), fd_lambda),
            "d_beta_derived": (d_beta_derived(kind, frame, k), beta_frame.normal),
            "d_beta_paper": (d_paper, beta_frame.normal),
            "kappa_beta_derived": (kappa_beta_closed_derived(kind, k, kp), kappa_def),
            "kappa_beta_paper": (kappa_beta_closed_paper(kind, k, kp), kappa_def),
        }
        record = {"s": s, "s_star": s_star, "kappa_g": k, "kappa_g_prime": kp, "checks": {}}
        for name, (value, oracle) in checks.items():
            g = _gap(value, oracle)
            gaps[name].append(g)
            record["checks"][name] = {"value": _as_list(value), "oracle": _as_list(oracle), "gap": g}
        records.append(record)

    verdicts = {}
    for name, gating in FORMULAS:
        verdicts[name] = Verdict(name, gating, max(gaps[name]) if gaps[name] else 0.0, tol)
    verdicts["d_beta_paper"].extra["max_unit_norm_defect"] = paper_norm_defect
    return ErratumReport(kind, c.name, records, verdicts)
