"""Command line entry point ``sabban``.

Usage::

    sabban frame    --fixture paper-example --n 101 --format csv
    sabban generate --fixture great-circle --kind td --out td.csv
    sabban verify   --fixture great-circle
    sabban plot     --fixture paper-example --kind gt --out fig2.svg

Exit codes: 0 success, 1 a definitional-vs-derived check failed (verify
only), 2 configuration error, 3 numerical failure.
"""
from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass
from typing import Optional

import click

from . import __version__
from . import curves, sabban, smarandache
from .errors import ConfigurationError, NumericalError
from .expr import parse_constant
from .svg import PLANES, render_projection

EXIT_FAILED_CHECK = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

DEFAULT_SAMPLES = {"frame": 101, "generate": 101, "verify": 64, "plot": 401}
FORMATS = {"frame": ("csv", "json"), "generate": ("csv", "json"), "verify": ("json",), "plot": ("svg",)}
TOLERANCE_SET = {
    "name": "v1",
    "unit_speed": sabban.SPEED_TOL,
    "sphere": curves.SPHERE_TOL,
    "orthogonality": sabban.ORTHO_TOL,
}

FRAME_COLUMNS = ["s", "gx", "gy", "gz", "tx", "ty", "tz", "dx", "dy", "dz", "kappa_g", "kappa_g_prime"]
GENERATE_COLUMNS = ["s", "s_star", "bx", "by", "bz", "speed_ratio",
                    "kappa_beta_definitional", "kappa_beta_paper"]


@dataclass(frozen=True)
class RunConfig:
    command: str
    fixture: Optional[str]
    expr: Optional[str]
    domain: Optional[tuple]
    n: int
    kind: Optional[str]
    format: str
    out: Optional[str]
    fd_step: Optional[float]
    tol: float
    plane: str

    def curve(self) -> curves.CurveSource:
        if self.expr is not None:
            if self.domain is None:
                raise ConfigurationError("--expr requires --domain")
            c = curves.expression_curve(self.expr, self.domain)
            defect = curves.sphere_defect(c)
            if defect > curves.SPHERE_TOL:
                raise ConfigurationError(f"expression curve leaves the unit sphere (defect {defect:.3g})")
        else:
            try:
                c = curves.fixture(self.fixture)
            except KeyError as exc:
                raise ConfigurationError(exc.args[0]) from None
            if self.domain is not None:
                c = c.with_domain(*self.domain)
        return c.with_step(self.fd_step)

    def meta(self) -> dict:
        echo = {k: v for k, v in asdict(self).items() if k != "out"}
        if echo["domain"] is not None:
            echo["domain"] = list(echo["domain"])
        return {"version": __version__, "config": echo, "tolerances": {**TOLERANCE_SET, "consistency": self.tol}}


def _parse_domain(text: Optional[str]) -> Optional[tuple]:
    if text is None:
        return None
    parts = text.split(":")
    if len(parts) != 2:
        raise ConfigurationError(f"--domain expects A:B, got {text!r}")
    a, b = (parse_constant(p) for p in parts)
    if not (math.isfinite(a) and math.isfinite(b) and a < b):
        raise ConfigurationError(f"--domain needs finite A < B, got {text!r}")
    return a, b


def _build_config(command: str, fixture, expr, domain, n, kind, fmt, out, fd_step, tol, plane) -> RunConfig:
    if fixture is not None and expr is not None:
        raise ConfigurationError("--fixture and --expr are mutually exclusive")
    if fixture is None and expr is None:
        fixture = "paper-example"
    n = DEFAULT_SAMPLES[command] if n is None else n
    if n < 2:
        raise ConfigurationError(f"--n must be at least 2, got {n}")
    fmt = fmt or FORMATS[command][0]
    if fmt not in FORMATS[command]:
        raise ConfigurationError(f"{command} cannot emit {fmt}; choose from {', '.join(FORMATS[command])}")
    if fd_step is not None and not fd_step > 0:
        raise ConfigurationError("--fd-step must be positive")
    if not tol > 0:
        raise ConfigurationError("--tol must be positive")
    return RunConfig(command, fixture, expr, _parse_domain(domain), n, kind, fmt, out, fd_step, tol, plane)


def _num(x: float) -> str:
    # repr is the shortest string that round-trips
    return repr(float(x))


def _csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_num(row[c]) for c in columns])
    return buf.getvalue()


def _json(payload) -> str:
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def _emit(config: RunConfig, text: str):
    if config.out is None:
        click.echo(text, nl=False)
    else:
        with open(config.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def frame_rows(c: curves.CurveSource, n: int):
    rows, degraded = [], []
    for s in c.grid(n):
        sample = sabban.frame_sample(c, s, edge_ok=True)
        f = sample.frame
        rows.append(dict(zip(FRAME_COLUMNS, [sample.s, *f.gamma, *f.tangent, *f.normal,
                                             sample.kappa_g, sample.kappa_g_prime])))
        if sample.stencil != "central5":
            degraded.append({"s": sample.s, "stencil": sample.stencil})
    return rows, degraded


def generate_rows(kind, c: curves.CurveSource, n: int):
    kind = smarandache.SmarandacheKind.parse(kind)
    beta = smarandache.definitional_curve(kind, c)
    rows = []
    for s in c.grid(n, margin=2 * c.step):
        s = float(s)
        k = sabban.geodesic_curvature(c, s)
        kp = sabban.kappa_prime(c, s)
        point = beta.source(s)
        s_star = beta.arclength(s)
        rows.append(dict(zip(GENERATE_COLUMNS, [
            s, s_star, *point,
            smarandache.speed_ratio(kind, k),
            sabban.geodesic_curvature(beta, s_star),
            smarandache.kappa_beta_closed_paper(kind, k, kp),
        ])))
    return rows


def verify_payload(c: curves.CurveSource, kinds, n: int, tol: float) -> dict:
    reports = {}
    for kind in kinds:
        params = c.grid(n, margin=2 * c.step)
        reports[kind.value] = smarandache.erratum_report(kind, c, params, tol=tol).as_dict()
    return {"passed": all(r["passed"] for r in reports.values()), "samples": n, "kinds": reports}


def plot_svg(config: RunConfig, c: curves.CurveSource) -> str:
    if config.kind is not None:
        c = smarandache.generate(config.kind, c)
    points = [c(s) for s in c.grid(config.n)]
    return render_projection(points, config.plane, title=c.name)


def _common(f):
    options = [
        click.option("--fixture", type=str, default=None, help=f"One of {', '.join(curves.FIXTURES)}."),
        click.option("--expr", type=str, default=None, help='Parametric triple "fx;fy;fz" in s.'),
        click.option("--domain", type=str, default=None, help="Parameter interval A:B."),
        click.option("--n", "n", type=int, default=None, help="Number of samples."),
        click.option("--kind", type=click.Choice(["gt", "td", "gtd"]), default=None),
        click.option("--format", "fmt", type=click.Choice(["csv", "json", "svg"]), default=None),
        click.option("--out", type=click.Path(dir_okay=False), default=None),
        click.option("--fd-step", type=float, default=None, help="Finite-difference step override."),
        click.option("--tol", type=float, default=smarandache.CONSISTENCY_TOL, show_default=True),
        click.option("--plane", type=click.Choice(sorted(PLANES)), default="xy", show_default=True),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _run(command: str, body, **options):
    try:
        config = _build_config(command, **options)
        code = body(config, config.curve())
    except ConfigurationError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CONFIG)
    except (NumericalError, ArithmeticError) as exc:
        click.echo(f"numerical failure: {exc}", err=True)
        sys.exit(EXIT_NUMERICAL)
    sys.exit(code or 0)


@click.group()
@click.version_option(__version__)
def main():
    """Sabban frames, geodesic curvature and Smarandache curves on the unit sphere."""


@main.command()
@_common
def frame(**options):
    """Tabulate the Sabban frame and geodesic curvature."""

    def body(config, c):
        rows, degraded = frame_rows(c, config.n)
        if degraded:
            click.echo(f"warning: {len(degraded)} edge samples used one-sided or 3-point stencils", err=True)
        if config.format == "csv":
            _emit(config, _csv(FRAME_COLUMNS, rows))
        else:
            _emit(config, _json({"meta": {**config.meta(), "degraded_stencils": degraded}, "rows": rows}))

    _run("frame", body, **options)


@main.command()
@_common
def generate(**options):
    """Tabulate a Smarandache curve with its arc length and curvatures."""

    def body(config, c):
        rows = generate_rows(config.kind or "gt", c, config.n)
        if config.format == "csv":
            _emit(config, _csv(GENERATE_COLUMNS, rows))
        else:
            _emit(config, _json({"meta": config.meta(), "rows": rows}))

    _run("generate", body, **options)


@main.command()
@_common
def verify(**options):
    """Audit closed forms against the definitional pipeline (JSON report)."""

    def body(config, c):
        kinds = ([smarandache.SmarandacheKind.parse(config.kind)] if config.kind
                 else list(smarandache.SmarandacheKind))
        report = verify_payload(c, kinds, config.n, config.tol)
        _emit(config, _json({"meta": config.meta(), "report": report}))
        return 0 if report["passed"] else EXIT_FAILED_CHECK

    _run("verify", body, **options)


@main.command()
@_common
def plot(**options):
    """Render an orthographic SVG projection of the curve (or its Smarandache curve)."""

    def body(config, c):
        _emit(config, plot_svg(config, c))

    _run("plot", body, **options)


if __name__ == "__main__":
    main()
