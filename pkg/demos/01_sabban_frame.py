"""
Sabban frames and geodesic curvature
====================================

Walks through the three built-in curves and shows the frame
``{gamma, t, d}`` and the geodesic curvature along each of them.
Run with ``python demos/01_sabban_frame.py``.
"""

# %%
import math

import numpy as np

from spherecurves import curves, sabban

# %% [markdown]
# A great circle is a geodesic, so its geodesic curvature vanishes. A small
# circle of radius r has constant curvature sqrt(1 - r^2) / r.

# %%
for c in (curves.great_circle(), curves.latitude_circle(0.5), curves.latitude_circle(1 / math.sqrt(2))):
    ks = [sabban.geodesic_curvature(c, s) for s in c.grid(50)]
    print(f"{c.name:40s} kappa_g in [{min(ks):+.6f}, {max(ks):+.6f}]")

# %% [markdown]
# The example curve (cos s tanh s, sin s tanh s, sech s) spirals out from the
# north pole towards the equator. Its curvature peaks at s = 0.

# %%
c = curves.paper_example()
print("frame at s=0:\n", sabban.sabban_frame(c, 0.0).matrix())
for s in np.linspace(-4, 4, 9):
    sample = sabban.frame_sample(c, s)
    print(f"s={s:+.1f}  kappa_g={sample.kappa_g:+.6f}  kappa_g'={sample.kappa_g_prime:+.6f}")

# %% [markdown]
# The frame equations gamma' = t, t' = -gamma + kappa_g d, d' = -kappa_g t
# hold up to discretization error, with analytic or with finite-difference
# derivatives.

# %%
print("ODE residual, analytic derivatives:", sabban.verify_sabban_odes(c, 200))
print("ODE residual, finite differences:  ", sabban.verify_sabban_odes(c.with_finite_differences(), 200))
