"""Minimization of the interaction energy over ordered circle configurations.

With the gauge theta_n = 2*pi fixed, the energy is a sum of strictly convex
functions of the angle differences, so it has a unique interior minimizer
for every mass vector and exponent. The solver runs gradient descent with
backtracking far from the optimum and switches to a damped Newton step once
the gradient is small; the energy blowup at collisions acts as a barrier,
so feasibility reduces to rejecting steps that break the strict ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _backend
from .core import TAU, AngleConfig, MassVector, as_angle_array, as_mass_array
from .errors import CollisionError, InfeasibleStepError

__all__ = [
    "MinimizeOptions",
    "MinimizeResult",
    "minimize_potential",
    "finite_difference_gradient",
    "random_feasible_config",
]

_ARMIJO = 1e-4
_MIN_GAP = 1e-12  # feasibility margin for line-search iterates


@dataclass(frozen=True)
class MinimizeOptions:
    grad_tol: float = 1e-12
    max_iters: int = 10000
    initial: AngleConfig | None = None
    # switch from plain descent to Newton once max|grad| falls below this
    newton_threshold: float = 1e-1
    keep_history: bool = False

    def __post_init__(self) -> None:
        if self.grad_tol <= 0.0:
            raise ValueError("grad_tol must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")


@dataclass(frozen=True)
class MinimizeResult:
    theta_min: AngleConfig
    iterations: int
    final_grad_norm: float
    converged: bool
    energy: float
    history: tuple[float, ...] | None = None  # energies at accepted iterates


def _feasible(theta: np.ndarray) -> bool:
    return theta[0] > _MIN_GAP and bool(np.all(np.diff(theta) > _MIN_GAP))


def _safe_potential(m: np.ndarray, theta: np.ndarray, alpha: float) -> float:
    try:
        return _backend.impl.potential(m, theta, alpha)
    except CollisionError:
        return math.inf


def minimize_potential(
    m: MassVector | list[float],
    alpha: float,
    opts: MinimizeOptions | None = None,
) -> MinimizeResult:
    """Find the unique ordered minimizer with theta_n = 2*pi.

    Convergence is declared on max_{k<n} |dU/dtheta_k| <= grad_tol. Failure
    to converge within max_iters is reported in the result, never raised.
    """
    opts = opts or MinimizeOptions()
    mm = as_mass_array(m)
    n = mm.size
    alpha = float(alpha)
    if alpha <= 0.0:
        raise ValueError("alpha must be positive")
    if opts.initial is not None:
        if opts.initial.n != n:
            raise ValueError("initial config length does not match masses")
        theta = np.array(opts.initial.angles)
    else:
        theta = AngleConfig.regular(n).angles.copy()

    f = _backend.impl.potential(mm, theta, alpha)
    grad = _backend.impl.gradient(mm, theta, alpha)[: n - 1]
    gnorm = float(np.max(np.abs(grad)))
    step = 1.0 / (1.0 + gnorm)
    iterations = 0
    noise_floor = 4e-16 * (1.0 + abs(f))
    history = [f] if opts.keep_history else None

    while gnorm > opts.grad_tol and iterations < opts.max_iters:
        use_newton = gnorm <= opts.newton_threshold
        direction = None
        if use_newton:
            hess = _backend.impl.hessian(mm, theta, alpha)[: n - 1, : n - 1]
            try:
                direction = np.linalg.solve(hess, -grad)
            except np.linalg.LinAlgError:
                direction = None
            if direction is not None and grad @ direction >= 0.0:
                direction = None
        if direction is None:
            direction = -grad * step
        slope = float(grad @ direction)

        t = 1.0
        accepted = False
        for _ in range(60):
            trial = theta.copy()
            trial[: n - 1] += t * direction
            if _feasible(trial):
                f_trial = _safe_potential(mm, trial, alpha)
                if f_trial <= f + _ARMIJO * t * slope + noise_floor:
                    theta, f = trial, f_trial
                    accepted = True
                    break
            t *= 0.5
        iterations += 1
        if not accepted:
            break
        if history is not None:
            history.append(f)
        if not use_newton:
            # crude trust-region update for the descent step scale
            step = step * 2.0 if t == 1.0 else step * t
        grad = _backend.impl.gradient(mm, theta, alpha)[: n - 1]
        gnorm = float(np.max(np.abs(grad)))
        noise_floor = 4e-16 * (1.0 + abs(f))

    theta[-1] = TAU
    return MinimizeResult(
        theta_min=AngleConfig(theta),
        iterations=iterations,
        final_grad_norm=gnorm,
        converged=gnorm <= opts.grad_tol,
        energy=f,
        history=tuple(history) if history is not None else None,
    )


def finite_difference_gradient(
    m: MassVector | list[float],
    theta: AngleConfig | list[float],
    alpha: float,
    step: float = 1e-6,
) -> np.ndarray:
    """Central-difference energy gradient, the independent check on the
    analytic formula. Raises if a perturbation breaks the strict ordering."""
    mm, tt = as_mass_array(m), as_angle_array(theta)
    if step <= 0.0:
        raise ValueError("step must be positive")
    n = tt.size
    out = np.empty(n)
    for k in range(n):
        hi = tt.copy()
        lo = tt.copy()
        hi[k] += step
        lo[k] -= step
        for pert in (hi, lo):
            if pert[0] <= 0.0 or np.any(np.diff(pert) <= 0.0):
                raise InfeasibleStepError(
                    f"step {step} breaks ordering at index {k}"
                )
        out[k] = (_backend.impl.potential(mm, hi, alpha) - _backend.impl.potential(mm, lo, alpha)) / (
            2.0 * step
        )
    return out


def random_feasible_config(
    n: int, rng: np.random.Generator, min_gap: float = 1e-2
) -> AngleConfig:
    """Uniformly random strictly ordered angles with a minimum gap, last = 2*pi."""
    if n < 3:
        raise ValueError("need n >= 3")
    while True:
        inner = np.sort(rng.uniform(0.0, TAU, n - 1))
        theta = np.append(inner, TAU)
        if theta[0] > min_gap and np.all(np.diff(theta) > min_gap):
            return AngleConfig(theta)
