"""Exit criteria. Each test checks one criterion at its stated tolerance.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""
import json
import math
import re

import numpy as np
import pytest
from click.testing import CliRunner

from spherecurves import curves, linalg3 as la, sabban
from spherecurves import smarandache as sm
from spherecurves.cli import main
from spherecurves.numerics import central_difference

R2 = 1 / math.sqrt(2)
KINDS = list(sm.SmarandacheKind)


def fixtures():
    return [curves.great_circle(), curves.latitude_circle(R2), curves.paper_example()]


def interior(c, count=64):
    return c.grid(count, margin=2 * c.step)


def frame_defect(frame):
    return max(frame.orthonormality_defect(), 1 - frame.handedness())


def test_c01_frame_orthonormality():
    """C1 frame orthonormality: <=1e-6 analytic, <=1e-4 finite differences, 1000 samples"""
    for c in fixtures():
        fd = c.with_finite_differences()
        for s in c.grid(1000):
            assert frame_defect(sabban.sabban_frame(c, s)) <= 1e-6
            assert frame_defect(sabban.sabban_frame(fd, s)) <= 1e-4


def test_c02_sabban_ode_residuals():
    """C2 Sabban ODE residuals <= 1e-4 at 1000 samples"""
    worst = max(sabban.verify_sabban_odes(c, 1000) for c in fixtures())
    assert worst <= 1e-4


def test_c03_fixture_curvatures():
    """C3 fixture curvatures: 0 (1e-7), 1 (1e-6), kappa_g(0)=2 (1e-5)"""
    gc, lat, paper = fixtures()
    assert all(abs(sabban.geodesic_curvature(gc, s)) <= 1e-7 for s in gc.grid(100))
    assert all(abs(sabban.geodesic_curvature(lat, s) - 1) <= 1e-6 for s in lat.grid(100))
    assert abs(sabban.geodesic_curvature(paper, 0.0) - 2) <= 1e-5


def _numerical_velocity(beta, c, s):
    return central_difference(beta.evaluate, s, c.scheme, c.domain)


def test_c04_speed_ratio_law():
    """C4 speed-ratio law: numerical |dbeta/ds| vs closed form within 1e-5"""
    for c in fixtures():
        for kind in KINDS:
            beta = sm.generate(kind, c)
            for s in interior(c):
                speed = la.norm(_numerical_velocity(beta, c, s))
                expected = sm.speed_ratio(kind, sabban.geodesic_curvature(c, s))
                assert abs(speed - expected) <= 1e-5


def test_c05_tangent_law():
    """C5 tangent law: normalized dbeta/ds vs closed-form t_beta within 1e-5"""
    for c in fixtures():
        for kind in KINDS:
            beta = sm.generate(kind, c)
            for s in interior(c):
                numeric = la.normalize(_numerical_velocity(beta, c, s))
                closed = sm.tangent_beta(kind, sabban.sabban_frame(c, s), sabban.geodesic_curvature(c, s))
                assert np.max(np.abs(numeric - closed)) <= 1e-5


def test_c06_great_circle_derived_curvatures():
    """C6 great-circle derived curvatures constant at 0, 1, 1/sqrt(2) within 1e-5"""
    c = curves.great_circle()
    for kind, expected in zip(KINDS, (0.0, 1.0, R2)):
        values = [sm.kappa_beta_definitional(kind, c, s) for s in interior(c)]
        assert max(abs(v - expected) for v in values) <= 1e-5


def test_c07_derived_vs_definitional():
    """C7 re-derived lambda / d_beta / kappa_beta match definitional pipeline within 2e-5"""
    cases = [curves.great_circle(), curves.latitude_circle(R2), curves.paper_example((-4.0, 4.0))]
    for c in cases:
        for kind in KINDS:
            report = sm.erratum_report(kind, c, tol=2e-5)
            for name in ("lambda_derived", "d_beta_derived", "kappa_beta_derived"):
                assert report.verdicts[name].max_gap <= 2e-5, (c.name, kind, name)


def test_c08_erratum_detection():
    """C8 verify on great circle: GT gap 0.7071, TD and GTD consistent, exit 0"""
    result = CliRunner().invoke(main, ["verify", "--fixture", "great-circle"])
    assert result.exit_code == 0
    kinds = json.loads(result.stdout)["report"]["kinds"]
    gt = kinds["gt"]["verdicts"]["kappa_beta_paper"]
    assert gt["verdict"] == "INCONSISTENT" and abs(gt["max_gap"] - R2) <= 1e-4
    for name in ("td", "gtd"):
        v = kinds[name]["verdicts"]["kappa_beta_paper"]
        assert v["verdict"] == "CONSISTENT" and v["max_gap"] <= 1e-5


def test_c09_reparameterization():
    """C9 reparameterized Smarandache curves unit speed (1e-5); great-circle lengths (1e-6)"""
    for c in fixtures():
        for kind in KINDS:
            beta_hat = sm.definitional_curve(kind, c)
            check = curves.is_unit_speed(beta_hat, samples=200, tol=1e-5)
            assert check, (c.name, kind, check.defect)
    gc = curves.great_circle()
    for kind, factor in zip(KINDS, (1.0, R2, math.sqrt(2 / 3))):
        total = sm.definitional_curve(kind, gc).table.total
        assert abs(total - 2 * math.pi * factor) <= 1e-6


def test_c10_determinism_and_figure():
    """C10 byte-identical repeated CLI output; Figure-1 SVG inside unit disk"""
    runner = CliRunner()
    invocations = [
        ["frame", "--fixture", "paper-example", "--n", "51"],
        ["frame", "--fixture", "latitude-circle", "--n", "21", "--format", "json"],
        ["generate", "--fixture", "paper-example", "--kind", "gtd", "--n", "21"],
        ["verify", "--fixture", "latitude-circle", "--kind", "td", "--n", "4"],
        ["plot", "--fixture", "paper-example", "--kind", "td", "--n", "200"],
    ]
    for args in invocations:
        first, second = runner.invoke(main, args), runner.invoke(main, args)
        assert first.exit_code == 0
        assert first.stdout_bytes == second.stdout_bytes
    svg = runner.invoke(main, ["plot", "--fixture", "paper-example", "--n", "400"]).stdout
    points = re.search(r'class="curve"[^>]*points="([^"]*)"', svg).group(1).split()
    assert len(points) == 400
    assert all(math.hypot(*map(float, p.split(","))) <= 1 + 1e-6 for p in points)
