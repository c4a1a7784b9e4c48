"""
Auditing the published closed forms
===================================

Each closed-form invariant of the Smarandache curves is compared with a
value obtained without it. Published forms that disagree are reported;
the re-derived forms are expected to agree everywhere.

Run with ``python demos/03_erratum_audit.py``.
"""

# %%
import math

from spherecurves import curves, smarandache as sm

cases = [curves.great_circle(), curves.latitude_circle(1 / math.sqrt(2)), curves.paper_example((-4.0, 4.0))]

# %%
for c in cases:
    print(f"\n== {c.name}")
    for kind in sm.SmarandacheKind:
        report = sm.erratum_report(kind, c, c.grid(16, margin=2 * c.step))
        flagged = [f"{name} ({v.max_gap:.3g})" for name, v in report.verdicts.items() if not v.consistent]
        status = "ok" if report.passed else "FAILED"
        print(f"  {kind.value:4s} derived checks {status}; inconsistent: {', '.join(flagged) or 'none'}")

# %% [markdown]
# At kappa_g = 0 and kappa_g' = 0 the GT closed form gives 1/sqrt(2), but
# the gamma-t curve of a great circle is itself a great circle.

# %%
print("GT published kappa_beta at (0, 0):", sm.kappa_beta_closed_paper(sm.GT, 0, 0))
print("GT re-derived kappa_beta at (0, 0):", sm.kappa_beta_closed_derived(sm.GT, 0, 0))
