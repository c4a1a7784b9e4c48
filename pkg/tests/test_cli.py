import csv
import io
import json
import math
import re

import pytest
from click.testing import CliRunner

from spherecurves.cli import FRAME_COLUMNS, GENERATE_COLUMNS, main


def run(*args):
    result = CliRunner().invoke(main, list(args))
    return result


def rows_of(text):
    reader = csv.DictReader(io.StringIO(text))
    return reader.fieldnames, [{k: float(v) for k, v in row.items()} for row in reader]


def test_frame_great_circle():
    result = run("frame", "--fixture", "great-circle", "--n", "5")
    assert result.exit_code == 0
    header, rows = rows_of(result.stdout)
    assert header == FRAME_COLUMNS
    assert len(rows) == 5
    assert rows[0]["s"] == 0 and abs(rows[0]["kappa_g"]) <= 1e-7


def test_frame_paper_example_json():
    result = run("frame", "--fixture", "paper-example", "--n", "101", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    row = min(payload["rows"], key=lambda r: abs(r["s"]))
    assert row["kappa_g"] == pytest.approx(2, abs=1e-5)
    assert set(row) == set(FRAME_COLUMNS)
    assert payload["meta"]["config"]["n"] == 101
    assert {d["s"] for d in payload["meta"]["degraded_stencils"]} == {-5.0, 5.0}


def test_csv_format_details():
    text = run("frame", "--fixture", "great-circle", "--n", "7").stdout
    assert "\r" not in text and text.endswith("\n")
    assert not any(line.endswith(",") for line in text.splitlines())
    # shortest round-trip decimals reproduce the text exactly
    for line in text.splitlines()[1:]:
        assert ",".join(repr(float(x)) for x in line.split(",")) == line


@pytest.mark.parametrize("args", [
    ("frame", "--fixture", "nope"),
    ("frame", "--n", "1"),
    ("plot", "--n", "1"),
    ("frame", "--format", "svg"),
    ("verify", "--format", "csv"),
    ("frame", "--expr", "cos(s);sin(s);0"),
    ("frame", "--expr", "cos(s);sin(s)", "--domain", "0:1"),
    ("frame", "--expr", "s;s;s", "--domain", "0:1"),
    ("frame", "--fixture", "great-circle", "--expr", "cos(s);sin(s);0"),
    ("frame", "--domain", "3:1"),
    ("frame", "--fd-step", "-1"),
    ("frame", "--kind", "xyz"),
])
def test_configuration_errors_exit_2(args):
    result = run(*args)
    assert result.exit_code == 2, result.output


def test_numerical_failure_exit_3():
    # a fast great circle is on the sphere but not unit speed
    result = run("frame", "--expr", "cos(2*s);sin(2*s);0", "--domain", "0:1", "--n", "3")
    assert result.exit_code == 3
    assert "numerical failure" in result.stderr


def test_expr_matches_fixture():
    a = run("frame", "--expr", "cos(s)*tanh(s); sin(s)*tanh(s); sech(s)", "--domain", "-5:5", "--n", "11")
    b = run("frame", "--fixture", "paper-example", "--n", "11")
    _, ra = rows_of(a.stdout)
    _, rb = rows_of(b.stdout)
    for x, y in zip(ra[1:-1], rb[1:-1]):
        for col in FRAME_COLUMNS[:-1]:
            assert x[col] == pytest.approx(y[col], abs=1e-4)


def test_generate_gt_great_circle():
    result = run("generate", "--fixture", "great-circle", "--kind", "gt", "--n", "9")
    header, rows = rows_of(result.stdout)
    assert header == GENERATE_COLUMNS
    assert all(abs(r["kappa_beta_definitional"]) <= 1e-5 for r in rows)


def test_generate_td_great_circle():
    _, rows = rows_of(run("generate", "--fixture", "great-circle", "--kind", "td", "--n", "9").stdout)
    assert all(abs(r["speed_ratio"] - math.sqrt(0.5)) <= 1e-9 for r in rows)


def test_generate_gtd_paper_example():
    result = run("generate", "--fixture", "paper-example", "--kind", "gtd", "--n", "201")
    _, rows = rows_of(result.stdout)
    assert len(rows) == 201
    margin = 2 * 1e-4 * 10
    assert rows[0]["s"] == pytest.approx(-5 + margin) and rows[-1]["s"] == pytest.approx(5 - margin)
    stars = [r["s_star"] for r in rows]
    assert all(b > a for a, b in zip(stars, stars[1:]))


def test_verify_latitude_td():
    result = run("verify", "--fixture", "latitude-circle", "--kind", "td", "--n", "8")
    assert result.exit_code == 0
    report = json.loads(result.stdout)["report"]
    assert list(report["kinds"]) == ["td"]
    assert all(rec["kappa_g"] == pytest.approx(1, abs=1e-6) for rec in report["kinds"]["td"]["samples"])


def test_verify_paper_example_grid():
    result = run("verify", "--fixture", "paper-example", "--kind", "gtd")
    assert result.exit_code == 0
    report = json.loads(result.stdout)["report"]
    assert len(report["kinds"]["gtd"]["samples"]) == 64


def test_verify_failing_check_exits_1():
    result = run("verify", "--fixture", "great-circle", "--kind", "gt", "--n", "4", "--tol", "1e-30")
    assert result.exit_code == 1


def _polyline(svg):
    points = re.search(r'class="curve"[^>]*points="([^"]*)"', svg).group(1).split()
    return [tuple(map(float, p.split(","))) for p in points]


def test_plot_inside_silhouette(tmp_path):
    out = tmp_path / "fig1.svg"
    result = run("plot", "--fixture", "paper-example", "--n", "300", "--out", str(out))
    assert result.exit_code == 0
    svg = out.read_text()
    assert '<circle class="silhouette" cx="0" cy="0" r="1"' in svg
    pts = _polyline(svg)
    assert len(pts) == 300
    assert all(math.hypot(x, y) <= 1 + 1e-6 for x, y in pts)


@pytest.mark.parametrize("plane", ["xy", "xz", "yz"])
def test_plot_smarandache_planes(plane):
    result = run("plot", "--fixture", "paper-example", "--kind", "gt", "--plane", plane, "--n", "50")
    assert result.exit_code == 0
    assert len(_polyline(result.stdout)) == 50
