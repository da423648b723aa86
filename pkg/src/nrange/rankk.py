"""Rank-k ranges of rectangular matrices.

The set of values z for which some pair of k-column isometries M, N solves
M* A N = z I_k is circular around the origin and falls into three regimes by
the index k: a disc of radius sigma_k while 2k stays within the larger
dimension, the ring between sigma_{m+n-2k+1} and sigma_k up to
3k <= m + n + 1, and empty past that.  Membership can also be read off the
singular-value interlacing inequalities, and ``find_witness`` certifies
individual values with an explicit isometry pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Annulus, Disc, Empty, Point, Region, Segment, normalize_region
from .linalg import as_matrix, hermitian_eigen, isometry_defect, random_isometry, svd

__all__ = [
    "ProjectorBoundReport",
    "RankKRegion",
    "WitnessPair",
    "find_witness",
    "hermitian_rank_interval",
    "projector_intersection_check",
    "rank_k_contains",
    "rank_k_region",
]


@dataclass(frozen=True)
class RankKRegion:
    """Closed-form classification of one rank-k range."""

    k: int
    regime: str  # "low" | "ring" | "empty"
    region: Region


@dataclass(frozen=True)
class WitnessPair:
    """Isometry pair certifying (or best approximating) one range value."""

    left: np.ndarray   # m x k
    right: np.ndarray  # n x k
    value: complex
    residual: float    # ||left* A right - value I||_F
    restarts_used: int


def rank_k_region(a, k: int) -> RankKRegion:
    """Region of the rank-k range by the index trichotomy.

    Singular values indexed past min(m, n) read as zero, which collapses the
    ring to a disc; a ring with equal radii collapses to a circle and a zero
    outer radius to the origin.
    """
    arr = as_matrix(a)
    m, n = arr.shape
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > min(m, n):
        return RankKRegion(k, "empty", Empty())
    sig = svd(arr).sigma
    outer = float(sig[k - 1])
    if 2 * k <= max(m, n):
        return RankKRegion(k, "low", normalize_region(Disc(0j, outer)))
    if 3 * k <= m + n + 1:
        j = m + n - 2 * k + 1
        inner = float(sig[j - 1]) if j <= min(m, n) else 0.0
        return RankKRegion(k, "ring", normalize_region(Annulus(0j, inner, outer)))
    return RankKRegion(k, "empty", Empty())


def rank_k_contains(a, k: int, z, tol: float = 1e-12) -> bool:
    """Membership through the singular-value interlacing inequalities.

    |z| must stay below the top k singular values and, when 2k exceeds both
    dimensions, above the shifted tail family; indices beyond min(m, n) read
    as zero.  The tolerance matches ``region_contains`` at 1e-12 so the two
    routes agree on boundaries.
    """
    arr = as_matrix(a)
    m, n = arr.shape
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > min(m, n):
        return False
    sig = svd(arr).sigma

    def sv(j: int) -> float:  # 1-based, zero past min(m, n)
        return float(sig[j - 1]) if j <= min(m, n) else 0.0

    r = abs(complex(z))
    for i in range(1, k + 1):
        if r > sv(i) + tol:
            return False
    for i in range(1, min(2 * k - m, 2 * k - n) + 1):
        if r < sv(i + m + n - 2 * k) - tol:
            return False
    return True


def hermitian_rank_interval(hm, k: int) -> Region:
    """Rank-k range of a Hermitian matrix: an eigenvalue-indexed interval.

    With descending eigenvalues the interval runs from the k-th smallest up
    to the k-th largest; it is a point when they meet and empty when they
    cross (or when k exceeds the dimension).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    lam = hermitian_eigen(hm).lam
    n = len(lam)
    if k > n:
        return Empty()
    hi = float(lam[k - 1])
    lo = float(lam[n - k])
    if hi > lo:
        return Segment(complex(lo), complex(hi))
    if hi == lo:
        return Point(complex(hi))
    return Empty()


# ---------------------------------------------------------------------------
# witness search


def _polar_factor(x: np.ndarray) -> np.ndarray:
    """Nearest matrix with orthonormal columns (deterministic throughout)."""
    u, _, vh = np.linalg.svd(x, full_matrices=False)
    return u @ vh


def _exact_frame(b: np.ndarray, z: complex) -> np.ndarray | None:
    """Isometry F with F* b = z I, when one exists for this b.

    Writes F as the column-space part U diag(conj(z)/s) plus corrections in
    the orthogonal complement; feasible when no singular value of b falls
    below |z| and the complement has a direction for every strictly larger
    one.  Returns None when infeasible.
    """
    m, k = b.shape
    u, s, vh = np.linalg.svd(b, full_matrices=True)
    r = abs(z)
    scale = max(float(s[0]), 1.0) if len(s) else 1.0
    if r <= 1e-14 * scale:
        rank = int(np.sum(s > 1e-12 * scale))
        if m - rank < k:
            return None
        return u[:, rank:rank + k].copy()
    if float(s[-1]) < r * (1.0 - 1e-10):
        return None
    coef = np.conj(z) / s
    defect = 1.0 - (r / s) ** 2
    need = defect > 1e-12
    if int(np.sum(need)) > m - k:
        return None
    frame = u[:, :k] * coef
    slot = k
    for i in np.flatnonzero(need):
        frame[:, i] += np.sqrt(defect[i]) * u[:, slot]
        slot += 1
    frame = frame @ vh
    if isometry_defect(frame) > 1e-12:
        frame = _polar_factor(frame)
    return frame


def _fallback_frame(b: np.ndarray, z: complex) -> np.ndarray:
    """Polar-factor update steering towards the phase of z.

    For z at the origin the least-aligned directions replace the polar
    factor, which would otherwise maximize exactly the wrong correlation.
    """
    m, k = b.shape
    if abs(z) > 1e-14 * max(1.0, float(np.linalg.norm(b))):
        return _polar_factor(b * np.conj(z))
    u = np.linalg.svd(b, full_matrices=True)[0]
    return u[:, m - k:].copy()


def _initial_right_frame(dec, m: int, n: int, k: int, z: complex) -> np.ndarray:
    """Deterministic start frame from (possibly mixed) singular vectors.

    While 2k fits inside m the top-k right singular vectors suffice; past
    that, the surplus columns must compress to norm |z| exactly, so each one
    either reuses an index whose singular value already equals |z| or mixes
    the largest and smallest unused indices.  Requires m >= n; all column
    index sets stay disjoint, so the frame is orthonormal by construction.
    """
    sig, v = dec.sigma, dec.right
    pins = max(0, 2 * k - m)
    cols = [v[:, i] for i in range(k - pins)]
    available = list(range(k - pins, n))
    r = abs(z)
    match_tol = 1e-9 * max(float(sig[0]), 1.0)
    for _ in range(pins):
        if not available:
            break
        exact = next((j for j in available if abs(float(sig[j]) - r) <= match_tol), None)
        if exact is not None:
            cols.append(v[:, exact])
            available.remove(exact)
            continue
        if len(available) >= 2:
            hi, lo = available[0], available[-1]
            sa, sp = float(sig[hi]), float(sig[lo])
            if sa - sp > match_tol:
                c2 = np.clip((r * r - sp * sp) / (sa * sa - sp * sp), 0.0, 1.0)
                cols.append(np.sqrt(c2) * v[:, hi] + np.sqrt(1.0 - c2) * v[:, lo])
                available = available[1:-1]
                continue
        cols.append(v[:, available.pop(0)])
    frame = np.column_stack(cols)
    missing = k - frame.shape[1]
    if missing > 0:
        # mixes can exhaust the index pool past the ring regime; top up from
        # the orthogonal complement of what was collected
        comp = np.linalg.svd(frame, full_matrices=True)[0][:, frame.shape[1]:]
        frame = np.hstack([frame, comp[:, :missing]])
    return frame


def _alternate(arr, k, z, right0, max_iter, tol):
    """Block-coordinate descent on the witness residual from one start frame."""
    eye = np.eye(k)
    best_left, best_right, best_res = None, None, np.inf
    right = right0
    stall = 0
    for _ in range(max_iter):
        image = arr @ right
        left = _exact_frame(image, z)
        if left is None:
            left = _fallback_frame(image, z)
        res = float(np.linalg.norm(left.conj().T @ arr @ right - z * eye))
        if res < best_res - 1e-15:
            best_left, best_right, best_res = left, right, res
            stall = 0
        else:
            stall += 1
        if best_res <= tol or stall >= 3:
            break
        coimage = arr.conj().T @ left
        right = _exact_frame(coimage, np.conj(z))
        if right is None:
            right = _fallback_frame(coimage, np.conj(z))
    return best_left, best_right, best_res


def find_witness(a, k: int, z, seed: int = 0, restarts: int = 20,
                 max_iter: int = 500, tol: float = 1e-8) -> WitnessPair:
    """Search for an isometry pair certifying z in the rank-k range.

    Multi-start block-coordinate descent on ||M* A N - z I||_F: each
    half-step solves the one-sided isometry subproblem exactly whenever it is
    feasible and otherwise falls back to the phase-steered polar update.
    Restart 0 starts from (possibly mixed) singular-vector frames, the rest
    from random frames derived from the seed.  Always returns the best pair
    found; a residual at or below ``tol`` certifies the value, anything else
    is inconclusive.
    """
    arr = as_matrix(a)
    m, n = arr.shape
    if not 1 <= k <= min(m, n):
        raise ValueError(f"need 1 <= k <= min(m, n) = {min(m, n)}, got {k}")
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    z = complex(z)
    if m < n:
        # Work on the adjoint so the exact step sees the taller side.
        flipped = find_witness(arr.conj().T, k, np.conj(z), seed=seed,
                               restarts=restarts, max_iter=max_iter, tol=tol)
        return WitnessPair(left=flipped.right, right=flipped.left, value=z,
                           residual=flipped.residual,
                           restarts_used=flipped.restarts_used)
    dec = svd(arr)
    best = None
    for attempt in range(restarts):
        if attempt == 0:
            start = _initial_right_frame(dec, m, n, k, z)
        else:
            start = random_isometry(n, k, seed=(seed, attempt))
        cand = _alternate(arr, k, z, start, max_iter, tol)
        if best is None or cand[2] < best[2]:
            best = cand
        if best[2] <= tol:
            return WitnessPair(left=best[0], right=best[1], value=z,
                               residual=best[2], restarts_used=attempt + 1)
    return WitnessPair(left=best[0], right=best[1], value=z,
                       residual=best[2], restarts_used=restarts)


# ---------------------------------------------------------------------------
# projector intersection bound


@dataclass(frozen=True)
class ProjectorBoundReport:
    """Sampled and deterministic projector bounds for one (matrix, k)."""

    k: int
    n_trials: int
    sigma_k: float
    min_right_sampled: float
    right_star_value: float
    min_left_sampled: float
    left_star_value: float
    outer_radius: float
    sampled_bounds_hold: bool
    star_attains: bool
    outer_within_sampled: bool


def projector_intersection_check(a, k: int, n_trials: int, seed: int) -> ProjectorBoundReport:
    """Projections onto random co-dimension-(k-1) subspaces never cut below sigma_k.

    Random (n-k+1)-dimensional right subspaces and (m-k+1)-dimensional left
    subspaces keep the projected spectral norm at or above sigma_k, and the
    deterministic frames built from the trailing singular vectors attain it
    exactly.
    """
    arr = as_matrix(a)
    m, n = arr.shape
    if not 1 <= k <= min(m, n):
        raise ValueError(f"need 1 <= k <= min(m, n) = {min(m, n)}, got {k}")
    if n_trials < 1:
        raise ValueError("n_trials must be >= 1")
    u_full, sig, vh_full = np.linalg.svd(arr, full_matrices=True)
    sigma_k = float(sig[k - 1])
    right_dim = n - k + 1
    left_dim = m - k + 1
    min_right = np.inf
    min_left = np.inf
    for trial in range(n_trials):
        g = random_isometry(n, right_dim, seed=(seed, 2 * trial))
        min_right = min(min_right, float(np.linalg.norm(arr @ (g @ g.conj().T), 2)))
        l = random_isometry(m, left_dim, seed=(seed, 2 * trial + 1))
        min_left = min(min_left, float(np.linalg.norm((l @ l.conj().T) @ arr, 2)))
    g_star = vh_full.conj().T[:, k - 1:]
    right_star = float(np.linalg.norm(arr @ (g_star @ g_star.conj().T), 2))
    l_star = u_full[:, k - 1:]
    left_star = float(np.linalg.norm((l_star @ l_star.conj().T) @ arr, 2))
    outer = sigma_k  # outer radius of the closed-form region
    return ProjectorBoundReport(
        k=k,
        n_trials=n_trials,
        sigma_k=sigma_k,
        min_right_sampled=float(min_right),
        right_star_value=right_star,
        min_left_sampled=float(min_left),
        left_star_value=left_star,
        outer_radius=outer,
        sampled_bounds_hold=bool(min_right >= sigma_k - 1e-9 and min_left >= sigma_k - 1e-9),
        star_attains=bool(abs(right_star - sigma_k) <= 1e-9 and abs(left_star - sigma_k) <= 1e-9),
        outer_within_sampled=bool(outer <= min(min_right, min_left) + 1e-9),
    )
