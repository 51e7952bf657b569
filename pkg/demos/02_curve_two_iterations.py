# The (A, B) curve for m = 2, rho = 0.95, rho' = 0.45.
#
# Two weights are distinguishable when the origin sits in the convex hull of
# the curve.  The curve starts at (1, 0); here it ends in the third quadrant,
# so a point near the start and the end point mu = 1 are anti-parallel.

import numpy as np

from weightdecision import WeightPair, curve_point, decide_fixed_m, m2_analysis
from weightdecision.scan import curve_csv, curve_table

w = WeightPair(0.95, 0.45)
for mu in np.linspace(0, 1, 6):
    p = curve_point(2, w, float(mu))
    print(f"mu={p.mu:.1f}  A={p.a:+.4f}  B={p.b:+.4f}")

# Closed-form view: the collinearity condition with mu2 = 1 is a cubic with
# the trivial root mu = 1, leaving a quadratic K mu^2 + L mu + M.
a = m2_analysis(w)
print(f"K={a.k:.4f} L={a.l:.4f} M={a.m_coef:.4f} Delta={a.delta:.4f}")
print("published conditions:", a.ratio, a.half, a.gap, a.discriminant)
print("admissible root:", a.admissible_root)

scheme = decide_fixed_m(2, w)
print(scheme)
print("residual c1^2 P1 + c2^2 P2 =", scheme.residual())

# The same data the `curve` subcommand writes; pipe into any plotting tool.
print(curve_csv(curve_table(2, w, 11)))

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    t = curve_table(2, w, 501)
    plt.plot(t[:, 1], t[:, 2])
    plt.axhline(0, color="k", lw=0.5)
    plt.axvline(0, color="k", lw=0.5)
    plt.xlabel("A(mu)")
    plt.ylabel("B(mu)")
    plt.savefig("curve_m2.png", dpi=120)
    print("saved curve_m2.png")
