"""Geometric and energetic primitives for bodies on the unit circle.

Conventions: body i sits at angle theta_i with 0 < theta_1 < ... <
theta_n = 2*pi (the last angle pins the rotational gauge), the chord between
bodies j and k is 2|sin((theta_j - theta_k)/2)|, and the interaction energy
is U = sum_{i<j} m_i m_j r_ij^(-alpha) for a fixed exponent alpha > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _backend
from ._backend import COLLISION_EPS
from .errors import CollisionError

TAU = 2.0 * math.pi

__all__ = [
    "TAU",
    "COLLISION_EPS",
    "MassVector",
    "AngleConfig",
    "InteractionMatrix",
    "CentrednessDiagnostics",
    "chord_distance",
    "positions",
    "potential",
    "potential_gradient",
    "potential_hessian",
    "interaction_matrix",
    "quadratic_form",
    "centredness_diagnostics",
]


def _freeze(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class MassVector:
    """Ordered positive masses m_1..m_n; the order encodes circle placement."""

    masses: np.ndarray

    def __init__(self, masses: Sequence[float] | np.ndarray):
        arr = _freeze(np.asarray(masses, dtype=np.float64))
        if arr.ndim != 1 or arr.size < 3:
            raise ValueError("need at least 3 masses")
        if not np.all(arr > 0.0) or not np.all(np.isfinite(arr)):
            raise ValueError("masses must be finite and strictly positive")
        object.__setattr__(self, "masses", arr)

    @property
    def n(self) -> int:
        return self.masses.size

    def __len__(self) -> int:
        return self.masses.size


@dataclass(frozen=True)
class AngleConfig:
    """Strictly increasing angles 0 < theta_1 < ... < theta_n = 2*pi."""

    angles: np.ndarray

    def __init__(self, angles: Sequence[float] | np.ndarray):
        arr = _freeze(np.asarray(angles, dtype=np.float64))
        if arr.ndim != 1 or arr.size < 3:
            raise ValueError("need at least 3 angles")
        if not np.all(np.isfinite(arr)):
            raise ValueError("angles must be finite")
        if arr[0] <= 0.0 or np.any(np.diff(arr) <= 0.0):
            raise ValueError("angles must satisfy 0 < theta_1 < ... < theta_n")
        if arr[-1] != TAU:
            raise ValueError("gauge requires theta_n = 2*pi exactly")
        object.__setattr__(self, "angles", arr)

    @property
    def n(self) -> int:
        return self.angles.size

    def __len__(self) -> int:
        return self.angles.size

    @classmethod
    def regular(cls, n: int) -> "AngleConfig":
        """The regular n-gon 2*pi*k/n, k = 1..n."""
        angles = TAU * np.arange(1, n + 1) / n
        angles[-1] = TAU
        return cls(angles)


@dataclass(frozen=True)
class InteractionMatrix:
    """Symmetric matrix of inverse chord powers r_ij^(-alpha), zero diagonal."""

    entries: np.ndarray
    alpha: float

    def __post_init__(self) -> None:
        e = _freeze(self.entries)
        object.__setattr__(self, "entries", e)
        if self.alpha <= 0.0:
            raise ValueError("alpha must be positive")
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValueError("entries must be square")
        if np.any(np.diag(e) != 0.0) or not np.array_equal(e, e.T):
            raise ValueError("entries must be symmetric with zero diagonal")
        if np.any(e[~np.eye(e.shape[0], dtype=bool)] <= 0.0):
            raise ValueError("off-diagonal entries must be strictly positive")

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class CentrednessDiagnostics:
    """One-pass summary of how far (m, theta) is from a centered configuration.

    row_sums holds S_k = sum_{j != k} m_j r_jk^(-alpha); at a centered
    co-circular central configuration all S_k coincide (their common value
    is 2*lambda/alpha) and the center of mass sits at the circle center.
    """

    center_of_mass: np.ndarray
    com_norm: float
    row_sums: np.ndarray
    row_spread: float
    lambda_estimate: float
    grad_norm: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "center_of_mass", _freeze(self.center_of_mass))
        object.__setattr__(self, "row_sums", _freeze(self.row_sums))


def as_mass_array(m: MassVector | Sequence[float]) -> np.ndarray:
    if isinstance(m, MassVector):
        return m.masses
    return MassVector(m).masses


def as_angle_array(theta: AngleConfig | Sequence[float]) -> np.ndarray:
    if isinstance(theta, AngleConfig):
        return theta.angles
    return AngleConfig(theta).angles


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (alpha > 0.0) or not math.isfinite(alpha):
        raise ValueError("alpha must be a positive finite real")
    return alpha


def chord_distance(theta_j: float, theta_k: float) -> float:
    """Chord 2|sin((theta_j - theta_k)/2)| between unit-circle points."""
    r = 2.0 * abs(math.sin(0.5 * (theta_j - theta_k)))
    if r < COLLISION_EPS:
        raise CollisionError(f"angles {theta_j} and {theta_k} coincide mod 2*pi")
    return r


def positions(config: AngleConfig | Sequence[float]) -> np.ndarray:
    """Cartesian unit-circle positions q_i = (cos theta_i, sin theta_i)."""
    t = as_angle_array(config)
    return np.column_stack([np.cos(t), np.sin(t)])


def potential(
    m: MassVector | Sequence[float],
    theta: AngleConfig | Sequence[float],
    alpha: float,
) -> float:
    """Interaction energy sum_{i<j} m_i m_j r_ij^(-alpha)."""
    mm, tt = as_mass_array(m), as_angle_array(theta)
    if mm.size != tt.size:
        raise ValueError("mass and angle lengths differ")
    return float(_backend.impl.potential(mm, tt, _check_alpha(alpha)))


def potential_gradient(
    m: MassVector | Sequence[float],
    theta: AngleConfig | Sequence[float],
    alpha: float,
) -> np.ndarray:
    """Partial derivatives of the energy in each angle.

    dU/dtheta_k = -(alpha/2) m_k sum_{j != k} m_j r_kj^(-alpha)
    cot((theta_k - theta_j)/2); the components sum to zero because the
    energy is invariant under rigid rotation.
    """
    mm, tt = as_mass_array(m), as_angle_array(theta)
    if mm.size != tt.size:
        raise ValueError("mass and angle lengths differ")
    return _backend.impl.gradient(mm, tt, _check_alpha(alpha))


def potential_hessian(
    m: MassVector | Sequence[float],
    theta: AngleConfig | Sequence[float],
    alpha: float,
) -> np.ndarray:
    """Second derivatives of the energy in the angles (full n x n matrix)."""
    mm, tt = as_mass_array(m), as_angle_array(theta)
    if mm.size != tt.size:
        raise ValueError("mass and angle lengths differ")
    return _backend.impl.hessian(mm, tt, _check_alpha(alpha))


def interaction_matrix(
    theta: AngleConfig | Sequence[float], alpha: float
) -> InteractionMatrix:
    tt = as_angle_array(theta)
    return InteractionMatrix(_backend.impl.pair_matrix(tt, _check_alpha(alpha)), float(alpha))


def quadratic_form(H: InteractionMatrix | np.ndarray, v: Sequence[float]) -> float:
    """v^T H v, accumulated with compensated summation; exactly 0 for v = 0."""
    entries = H.entries if isinstance(H, InteractionMatrix) else np.asarray(H)
    vv = np.asarray(v, dtype=np.float64)
    if vv.ndim != 1 or entries.shape != (vv.size, vv.size):
        raise ValueError("dimension mismatch between matrix and vector")
    iu, ju = np.triu_indices(vv.size, k=1)
    terms = vv[iu] * vv[ju] * entries[iu, ju]
    return 2.0 * math.fsum(terms)


def centredness_diagnostics(
    m: MassVector | Sequence[float],
    theta: AngleConfig | Sequence[float],
    alpha: float,
) -> CentrednessDiagnostics:
    """Center of mass, row sums S_k, their spread, and the gradient norm."""
    mm, tt = as_mass_array(m), as_angle_array(theta)
    if mm.size != tt.size:
        raise ValueError("mass and angle lengths differ")
    alpha = _check_alpha(alpha)
    q = np.column_stack([np.cos(tt), np.sin(tt)])
    com = np.array(
        [math.fsum(mm * q[:, 0]), math.fsum(mm * q[:, 1])]
    ) / math.fsum(mm)
    s = _backend.impl.row_sums(mm, tt, alpha)
    grad = _backend.impl.gradient(mm, tt, alpha)
    return CentrednessDiagnostics(
        center_of_mass=com,
        com_norm=float(np.hypot(com[0], com[1])),
        row_sums=s,
        row_spread=float(s.max() - s.min()),
        lambda_estimate=float(0.5 * alpha * s.mean()),
        grad_norm=float(np.max(np.abs(grad))),
    )
