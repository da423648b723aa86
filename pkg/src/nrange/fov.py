"""Field of values of a square matrix via a supporting-hyperplane sweep.

Each direction contributes the top eigenvalue of the rotated Hermitian part
together with the quadratic form of its eigenvector; corners show up as
boundary points that win the sweep over a whole run of angles.
"""

from __future__ import annotations

import numpy as np

from .geometry import BoundaryCurve, SharpPoint, default_angles
from .linalg import as_matrix, hermitian_eigen

__all__ = ["fov_boundary", "sharp_points", "support_point"]


def _require_square(a) -> np.ndarray:
    arr = as_matrix(a)
    if arr.shape[0] != arr.shape[1]:
        raise ValueError("the field of values needs a square matrix")
    return arr


def support_point(a, theta: float) -> tuple[float, complex]:
    """Support value and attaining boundary point in direction theta.

    Returns ``(p, z)`` where p is the top eigenvalue of the Hermitian part of
    exp(-i theta) a and z the quadratic form of the corresponding unit
    eigenvector, so Re(exp(-i theta) z) = p.
    """
    arr = _require_square(a)
    rot = np.exp(-1j * theta) * arr
    eig = hermitian_eigen((rot + rot.conj().T) / 2.0)
    x = eig.frame[:, 0]
    return float(eig.lam[0]), complex(x.conj() @ arr @ x)


def fov_boundary(a, n_angles: int = 720) -> BoundaryCurve:
    """Sampled boundary of the field of values.

    Angle evaluations are independent, so the result does not depend on
    evaluation order.
    """
    arr = _require_square(a)
    if n_angles < 8:
        raise ValueError("need at least eight angles")
    angles = default_angles(n_angles)
    support = np.empty(n_angles, dtype=float)
    points = np.empty(n_angles, dtype=complex)
    for j, theta in enumerate(angles):
        support[j], points[j] = support_point(arr, theta)
    return BoundaryCurve(angles, support, points)


def sharp_points(
    curve: BoundaryCurve,
    min_cone_width: float | None = None,
    cluster_tol: float | None = None,
) -> list[SharpPoint]:
    """Corners of a convex boundary curve.

    A corner is a boundary point that stays the support maximizer across a
    cyclic run of grid angles whose total width reaches ``min_cone_width``.
    Defaults: three grid steps of cone width, and clustering at 1e-6 relative
    to the curve scale.  Smooth boundaries yield an empty list.
    """
    n = len(curve.angles)
    step = curve.grid_step()
    if min_cone_width is None:
        min_cone_width = 3.0 * step
    if cluster_tol is None:
        cluster_tol = 1e-6 * curve.scale()
    pts = curve.points
    same = np.abs(np.diff(pts, append=pts[:1])) <= cluster_tol
    if same.all():
        return [SharpPoint(location=complex(pts[n // 2]), normal_cone_width=2.0 * np.pi)]
    breaks = np.flatnonzero(~same)
    found = []
    for start_break, end_break in zip(breaks, np.roll(breaks, -1)):
        start = (int(start_break) + 1) % n
        length = (int(end_break) - start) % n + 1
        width = length * step
        if width + 1e-12 < min_cone_width:
            continue
        idx = (start + np.arange(length)) % n
        # the run's middle angle sits strictly inside the normal cone, where
        # the stored point is the corner itself; run edges can drift by the
        # clustering tolerance
        found.append(
            SharpPoint(location=complex(pts[idx[length // 2]]), normal_cone_width=width)
        )
    return found
