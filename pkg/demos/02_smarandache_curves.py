"""
Smarandache curves and their figures
====================================

Generates the gamma-t, t-d and gamma-t-d curves of the example spiral,
checks that arc-length reparameterization makes them unit speed, and writes
SVG projections of the spiral and the three derived curves.

Run with ``python demos/02_smarandache_curves.py [output-dir]``.
"""

# %%
import pathlib
import sys

from spherecurves import curves, smarandache as sm
from spherecurves.svg import render_projection

out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
out.mkdir(parents=True, exist_ok=True)
c = curves.paper_example()

# %% [markdown]
# The derived curves are not unit speed on the parameter of the source.
# Their speed is ds*/ds, which depends on the geodesic curvature.

# %%
for kind in sm.SmarandacheKind:
    beta = sm.generate(kind, c)
    beta_hat = curves.reparameterize_unit_speed(beta)
    print(f"{kind.value:4s} length {beta_hat.table.total:.6f}  "
          f"unit speed after reparameterization: {bool(curves.is_unit_speed(beta_hat, 100, 1e-5))}")

# %%
grid = c.grid(600)
(out / "curve.svg").write_text(render_projection([c(s) for s in grid], title="gamma"))
for kind in sm.SmarandacheKind:
    beta = sm.generate(kind, c)
    (out / f"{kind.value}.svg").write_text(render_projection([beta(s) for s in grid], title=beta.name))
print("figures written to", out.resolve())
