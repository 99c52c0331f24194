"""Pure NumPy fallback for the hot numerical kernels.

Mirrors the surface of the compiled extension ``cocircular._kernels``.
All functions take plain float64 arrays (no domain objects) and assume the
angles are strictly increasing; only collisions are checked here.

Sums of pairwise terms use ``math.fsum`` so that invariance checks hold at
the 1e-12 scale regardless of summation order.
"""

from __future__ import annotations

import math

import numpy as np

# Chords below this length are treated as collisions rather than returning
# a huge-but-finite energy; the minimizer never reaches them from a feasible
# start, so they signal caller bugs.
COLLISION_EPS = 1e-13

BACKEND_NAME = "python"


def _half_diffs(theta: np.ndarray) -> np.ndarray:
    return 0.5 * (theta[:, None] - theta[None, :])


def _chords(theta: np.ndarray) -> np.ndarray:
    """Pairwise chord matrix 2|sin((t_i - t_j)/2)| with unit diagonal."""
    r = 2.0 * np.abs(np.sin(_half_diffs(theta)))
    np.fill_diagonal(r, 1.0)
    if r.min() < COLLISION_EPS:
        from .errors import CollisionError

        i, j = divmod(int(r.argmin()), r.shape[0])
        raise CollisionError(f"bodies {i} and {j} collide (chord {r.min():.3e})")
    return r


def potential(m: np.ndarray, theta: np.ndarray, alpha: float) -> float:
    r = _chords(theta)
    iu, ju = np.triu_indices(len(theta), k=1)
    terms = m[iu] * m[ju] * r[iu, ju] ** (-alpha)
    return math.fsum(terms)


def gradient(m: np.ndarray, theta: np.ndarray, alpha: float) -> np.ndarray:
    n = len(theta)
    d = _half_diffs(theta)
    r = _chords(theta)
    s = np.sin(d)
    np.fill_diagonal(s, 1.0)
    cot = np.cos(d) / s
    terms = m[None, :] * r ** (-alpha) * cot
    np.fill_diagonal(terms, 0.0)
    out = np.empty(n)
    for k in range(n):
        out[k] = -0.5 * alpha * m[k] * math.fsum(terms[k])
    return out


def hessian(m: np.ndarray, theta: np.ndarray, alpha: float) -> np.ndarray:
    n = len(theta)
    d = _half_diffs(theta)
    r = _chords(theta)
    s = np.sin(d)
    np.fill_diagonal(s, 1.0)
    cot = np.cos(d) / s
    # second derivative of r^(-alpha) in the angle difference
    f2 = 0.25 * alpha * r ** (-alpha) * ((alpha + 1.0) * cot * cot + 1.0)
    np.fill_diagonal(f2, 0.0)
    mm = m[:, None] * m[None, :]
    out = -mm * f2
    np.fill_diagonal(out, 0.0)
    for k in range(n):
        out[k, k] = math.fsum(mm[k] * f2[k])
    return out


def row_sums(m: np.ndarray, theta: np.ndarray, alpha: float) -> np.ndarray:
    """S_k = sum_{j != k} m_j r_jk^(-alpha)."""
    n = len(theta)
    r = _chords(theta)
    terms = m[None, :] * r ** (-alpha)
    np.fill_diagonal(terms, 0.0)
    out = np.empty(n)
    for k in range(n):
        out[k] = math.fsum(terms[k])
    return out


def pair_matrix(theta: np.ndarray, alpha: float) -> np.ndarray:
    """Matrix of inverse chord powers r_ij^(-alpha) with zero diagonal."""
    r = _chords(theta)
    out = r ** (-alpha)
    np.fill_diagonal(out, 0.0)
    return out


def quad_gaps(
    ta: np.ndarray, tb: np.ndarray, tc: np.ndarray, td: np.ndarray, alpha: float
) -> np.ndarray:
    """Batched 1/AC^a + 1/BD^a - 1/AD^a - 1/BC^a for angle quadruples."""

    def inv_chord(x, y):
        r = 2.0 * np.abs(np.sin(0.5 * (x - y)))
        if r.min() < COLLISION_EPS:
            from .errors import CollisionError

            raise CollisionError("coincident quadruple points")
        return r ** (-alpha)

    return inv_chord(ta, tc) + inv_chord(tb, td) - inv_chord(ta, td) - inv_chord(tb, tc)
