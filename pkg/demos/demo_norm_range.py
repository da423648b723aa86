# Norm-based ranges: each comparison matrix B with ||B||_F >= 1 produces a
# disc, every disc sits inside the Frobenius-radius disc, and the rotated
# copies of A attain its boundary exactly.  The union over all B recovers a
# B-independent set.

import numpy as np

from nrange import norm_range_disc, norm_range_union
from nrange.reference import WIDE_EXAMPLE

A = WIDE_EXAMPLE
frob = np.linalg.norm(A)
print(f"Frobenius radius: {frob:.6f} (squared: {frob**2:.2f})")

rng = np.random.default_rng(7)
print("\nsix sampled comparison discs:")
for i in range(6):
    g = rng.standard_normal(A.shape) + 1j * rng.standard_normal(A.shape)
    b = g / np.linalg.norm(g) * rng.uniform(1.0, 2.5)
    disc = norm_range_disc(A, b)
    reach = abs(disc.center) + disc.radius
    print(f"  {i}: centre {disc.center: .4f}, radius {disc.radius:.4f}, reach {reach:.4f}")

# The rotated copy of A with unit Frobenius norm collapses the disc to a
# single boundary point of the outer disc.
theta = 0.9
b0 = np.exp(-1j * theta) * A / frob
print("\nrotated-copy comparison gives:", norm_range_disc(A, b0))

report = norm_range_union(A, 2000, seed=3)
print(
    f"\nunion sweep: {report.n_discs} discs, "
    f"violations={report.containment_violations}, sup={report.sup_abs:.9f}"
)
print("sup equals the Frobenius radius to", abs(report.sup_abs - frob))
