import math

import numpy as np
import pytest

from spherecurves import curves, sabban
from spherecurves.curves import CurveSource
from spherecurves.errors import DomainEdge, NotUnitSpeed
from spherecurves.numerics import DifferenceScheme

R = 1 / math.sqrt(2)


def fixtures():
    return [curves.great_circle(), curves.latitude_circle(R), curves.paper_example()]


def test_frame_examples():
    f = sabban.sabban_frame(curves.great_circle(), 0.0)
    np.testing.assert_allclose(f.matrix(), np.eye(3), atol=1e-16)

    f = sabban.sabban_frame(curves.paper_example(), 0.0)
    np.testing.assert_allclose(f.gamma, (0, 0, 1), atol=1e-16)
    np.testing.assert_allclose(f.tangent, (1, 0, 0), atol=1e-16)
    np.testing.assert_allclose(f.normal, (0, 1, 0), atol=1e-16)

    f = sabban.sabban_frame(curves.latitude_circle(R), 0.0)
    np.testing.assert_allclose(f.gamma, (R, 0, R))
    np.testing.assert_allclose(f.tangent, (0, 1, 0), atol=1e-16)
    np.testing.assert_allclose(f.normal, (-R, 0, R))


def test_frame_rejects_non_unit_speed():
    fast = CurveSource("fast", (0, math.pi), lambda s: (math.cos(2 * s), math.sin(2 * s), 0.0))
    with pytest.raises(NotUnitSpeed):
        sabban.sabban_frame(fast, 1.0)


@pytest.mark.parametrize("s", [0.0, 1.0, 2.5, 6.0])
def test_great_circle_curvature(s):
    assert abs(sabban.geodesic_curvature(curves.great_circle(), s)) <= 1e-7


@pytest.mark.parametrize("r", [0.2, R, 0.9])
def test_latitude_curvature_sign_and_value(r):
    c = curves.latitude_circle(r)
    expected = math.sqrt(1 - r * r) / r
    for s in c.grid(7):
        assert sabban.geodesic_curvature(c, s) == pytest.approx(expected, abs=1e-6 * max(1, expected))


def test_paper_example_curvature_at_zero():
    # t'(0) = (0, 2, -1) and d(0) = (0, 1, 0) by hand differentiation
    c = curves.paper_example()
    np.testing.assert_allclose(sabban.tangent_derivative(c, 0.0), (0, 2, -1), atol=1e-15)
    assert sabban.geodesic_curvature(c, 0.0) == pytest.approx(2, abs=1e-5)
    assert sabban.geodesic_curvature(c.with_finite_differences(), 0.0) == pytest.approx(2, abs=1e-5)


@pytest.mark.parametrize("c", fixtures(), ids=lambda c: c.name)
def test_curvature_strategy_cross_check(c):
    fd = c.with_finite_differences()
    for s in c.grid(30, margin=0.05):
        assert sabban.geodesic_curvature(c, s) == pytest.approx(sabban.geodesic_curvature(fd, s), abs=1e-4)


def test_kappa_prime_constant_fixtures():
    assert abs(sabban.kappa_prime(curves.great_circle(), 1.0)) <= 1e-7
    assert abs(sabban.kappa_prime(curves.latitude_circle(R), 1.0)) <= 1e-5


def test_kappa_prime_against_half_step_oracle():
    c = curves.paper_example()
    h = c.step
    value = sabban.kappa_prime(c, 0.0)
    oracle = sabban.kappa_prime(c, 0.0, DifferenceScheme(h / 2, 4))
    assert value == pytest.approx(oracle, abs=1e-4)


def test_kappa_prime_edges():
    c = curves.paper_example()
    with pytest.raises(DomainEdge):
        sabban.kappa_prime(c, -5.0)
    assert math.isfinite(sabban.kappa_prime(c, -5.0, edge_ok=True))
    sample = sabban.frame_sample(c, 5.0, edge_ok=True)
    assert sample.stencil == "backward"


def test_ode_residuals():
    assert sabban.verify_sabban_odes(curves.great_circle(), 100) <= 1e-6
    assert sabban.verify_sabban_odes(curves.latitude_circle(R), 100) <= 1e-5
    c = curves.paper_example((-4.0, 4.0)).with_finite_differences()
    assert sabban.verify_sabban_odes(c, 100) <= 1e-4


@pytest.mark.parametrize("c", fixtures(), ids=lambda c: c.name)
def test_frame_sample_invariant(c):
    for s in c.grid(9, margin=0.1):
        sample = sabban.frame_sample(c, s)
        recomputed = np.dot(sabban.tangent_derivative(c.with_finite_differences(), s), sample.frame.normal)
        assert sample.kappa_g == pytest.approx(recomputed, abs=1e-5)
        assert sample.frame.orthonormality_defect() <= 1e-6
        assert sample.frame.handedness() >= 1 - 1e-6
