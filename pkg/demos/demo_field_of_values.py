# Field of values of a square matrix: supporting-hyperplane sweep, corner
# detection, and SVG emission without any plotting dependency.

import numpy as np

from nrange import ConvexBoundary, fov_boundary, mc_fov_samples, region_contains, sharp_points
from nrange.svgplot import render_regions

# the decoupled eigenvalue 2 is reducing, so the boundary has a corner there
A = np.array([[2.0, 0.0, 0.0], [0.0, -1.0 + 2j, 2.5], [0.0, 0.0, 0.5j]])

curve = fov_boundary(A, 720)
region = ConvexBoundary(curve)
print("eigenvalues:", np.round(np.linalg.eigvals(A), 6))
print("all eigenvalues inside the swept boundary:",
      all(region_contains(region, complex(z), 1e-8) for z in np.linalg.eigvals(A)))

samples = mc_fov_samples(A, 20_000, seed=0)
print("20000 sampled quadratic-form values inside:",
      all(region_contains(region, complex(z), 1e-8) for z in samples.points))

corners = sharp_points(curve)
print("corners:", [(np.round(c.location, 6), round(c.normal_cone_width, 3)) for c in corners]
      or "none (smooth boundary)")

svg = render_regions(
    [(region, 'stroke="#1f6fb2" stroke-width="2"')],
    outer_radius=float(np.max(np.abs(curve.points))),
    annotations=["field of values, 720-angle sweep"],
    markers=[(complex(z), 'stroke="#c0392b" stroke-width="2"') for z in np.linalg.eigvals(A)],
)
with open("field_of_values.svg", "w") as fh:
    fh.write(svg)
print("wrote field_of_values.svg")
