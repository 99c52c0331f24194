"""Named verification suites, each exercising one documented property.

Every suite returns a SuiteReport with one line per check so the CLI can
print counts and worst-case margins; `passed` aggregates all assertions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .analysis import exhaustive_theorem_check, run_lemma_suite
from .certificate import (
    CENTERED_CANDIDATE,
    antipodal_certificate_value,
    certificate_search,
    classify,
)
from .core import TAU, MassVector, potential, potential_gradient
from .optimizer import (
    MinimizeOptions,
    finite_difference_gradient,
    minimize_potential,
    random_feasible_config,
)
from .symmetry import SpecialMassPattern, act_on_angles, act_on_masses, enumerate_group

__all__ = ["SUITES", "SuiteReport", "run_suite"]


@dataclass(frozen=True)
class SuiteReport:
    name: str
    passed: bool
    lines: tuple[str, ...]


def verify_gradient(
    seed: int = 0,
    instances: int = 100,
    n_max: int = 8,
    alphas: tuple[float, ...] = (0.5, 1.0, 2.0),
    step: float = 1e-6,
) -> SuiteReport:
    """Analytic gradient vs central differences plus the rotation sum rule."""
    rng = np.random.default_rng(seed)
    worst_fd = 0.0
    worst_sum = 0.0
    failures = 0
    for i in range(instances):
        n = int(rng.integers(3, n_max + 1))
        alpha = float(alphas[i % len(alphas)])
        m = MassVector(rng.uniform(0.3, 4.0, n))
        theta = random_feasible_config(n, rng, min_gap=0.05)
        grad = potential_gradient(m, theta, alpha)
        fd = finite_difference_gradient(m, theta, alpha, step)
        scale = 1.0 + float(np.max(np.abs(grad)))
        fd_err = float(np.max(np.abs(grad - fd))) / scale
        sum_err = abs(float(np.sum(grad))) / (n + float(np.max(np.abs(grad))))
        worst_fd = max(worst_fd, fd_err)
        worst_sum = max(worst_sum, sum_err)
        if fd_err > 1e-6 or sum_err > 1e-12:
            failures += 1
    return SuiteReport(
        "gradient",
        failures == 0,
        (
            f"instances: {instances} (n <= {n_max}, alphas {alphas})",
            f"worst finite-difference relative error: {worst_fd:.3e} (tol 1e-06)",
            f"worst rotation sum residual: {worst_sum:.3e} (tol 1e-12)",
            f"failures: {failures}",
        ),
    )


def verify_equivariance(
    seed: int = 0,
    vectors: int = 25,
    n_range: tuple[int, int] = (4, 8),
    alphas: tuple[float, ...] = (0.5, 1.0, 2.0),
    theta_tol: float = 1e-8,
    energy_rtol: float = 1e-12,
) -> SuiteReport:
    """minimize(gm) must equal g acting on minimize(m), for the whole group."""
    rng = np.random.default_rng(seed)
    worst_theta = 0.0
    worst_energy = 0.0
    failures = 0
    unconverged = 0
    for i in range(vectors):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        alpha = float(alphas[i % len(alphas)])
        m = MassVector(rng.uniform(0.4, 3.0, n))
        base = minimize_potential(m, alpha)
        if not base.converged:
            unconverged += 1
            failures += 1
            continue
        u0 = potential(m, base.theta_min, alpha)
        for g in enumerate_group(n):
            gm = act_on_masses(g, m)
            moved = act_on_angles(g, base.theta_min)
            u1 = potential(gm, moved, alpha)
            worst_energy = max(worst_energy, abs(u1 - u0) / (1.0 + abs(u0)))
            res = minimize_potential(gm, alpha)
            if not res.converged:
                unconverged += 1
                failures += 1
                continue
            err = float(np.max(np.abs(res.theta_min.angles - moved.angles)))
            worst_theta = max(worst_theta, err)
            if err > theta_tol or abs(u1 - u0) > energy_rtol * (1.0 + abs(u0)):
                failures += 1
    return SuiteReport(
        "equivariance",
        failures == 0,
        (
            f"mass vectors: {vectors}, n in {n_range}, all 2n group elements",
            f"worst minimizer deviation: {worst_theta:.3e} (tol {theta_tol:g})",
            f"worst energy invariance residual: {worst_energy:.3e} (tol {energy_rtol:g})",
            f"unconverged: {unconverged}, failures: {failures}",
        ),
    )


def verify_quadrilateral(
    seed: int = 0,
    trials: int = 100000,
    alphas: tuple[float, ...] = (0.5, 1.0, 2.0, 3.0),
) -> SuiteReport:
    """The crossing-chord combination must be negative for every quadruple."""
    rng = np.random.default_rng(seed)
    quads = np.sort(rng.uniform(0.0, TAU, (trials, 4)), axis=1)
    gaps = np.diff(quads, axis=1).min(axis=1)
    wrap = TAU - (quads[:, 3] - quads[:, 0])
    keep = (gaps > 1e-6) & (wrap > 1e-6)
    quads = quads[keep]
    lines = [f"quadruples: {quads.shape[0]} (of {trials} sampled), alphas {alphas}"]
    passed = True
    for alpha in alphas:
        vals = _backend.impl.quad_gaps(
            np.ascontiguousarray(quads[:, 0]),
            np.ascontiguousarray(quads[:, 1]),
            np.ascontiguousarray(quads[:, 2]),
            np.ascontiguousarray(quads[:, 3]),
            float(alpha),
        )
        vmax = float(vals.max())
        ok = vmax < 0.0
        passed = passed and ok
        lines.append(f"alpha={alpha:g}: max value {vmax:.6e} ({'OK' if ok else 'VIOLATION'})")
    return SuiteReport("quadrilateral", passed, tuple(lines))


def verify_antipodal(
    seed: int = 0,
    patterns: int = 50,
    n_set: tuple[int, ...] = (4, 6, 8, 10),
    alphas: tuple[float, ...] = (0.5, 1.0, 2.0),
    rtol: float = 1e-12,
) -> SuiteReport:
    """Reflection entry vs the closed form, and its rank in the value table.

    The closed-form identity holds to round-off. The minimum-or-tied check
    is reported as stated but routinely fails: other group elements couple
    the remaining special masses and usually produce a more negative value.
    """
    rng = np.random.default_rng(seed)
    worst_eq = 0.0
    eq_failures = 0
    min_failures = 0
    worst_gap = 0.0
    unconverged = 0
    for i in range(patterns):
        n = int(n_set[int(rng.integers(0, len(n_set)))])
        half = n // 2
        ell = int(rng.integers(1, n - 1))
        ifell = ell >= half
        ell = ell + 1 if ifell else ell  # skip the slot at n/2
        pos_l, pos_s = (min(ell, half), max(ell, half))
        signs = tuple(1 if rng.integers(0, 2) else -1 for _ in range(3))
        vals = []
        for sg in signs:
            vals.append(1.0 + rng.uniform(0.1, 1.5) if sg > 0 else 1.0 - rng.uniform(0.1, 0.6))
        pat = SpecialMassPattern.from_values(n, pos_l, pos_s, *vals)
        alpha = float(alphas[i % len(alphas)])
        res = minimize_potential(pat.to_masses(), alpha)
        if not res.converged:
            unconverged += 1
            continue
        closed = antipodal_certificate_value(pat, res, alpha)
        cert = certificate_search(pat.to_masses(), res, alpha)
        rel = abs(cert.reflection_value - closed) / abs(closed)
        worst_eq = max(worst_eq, rel)
        if rel > rtol:
            eq_failures += 1
        gap = cert.reflection_value - cert.best_value
        if gap > 1e-12 * (1.0 + abs(cert.best_value)):
            min_failures += 1
            worst_gap = max(worst_gap, gap)
    passed = eq_failures == 0 and min_failures == 0 and unconverged == 0
    return SuiteReport(
        "antipodal",
        passed,
        (
            f"patterns: {patterns}, n in {n_set}",
            f"closed form vs reflection entry: worst rel err {worst_eq:.3e} "
            f"(tol {rtol:g}), failures {eq_failures}",
            f"minimum-or-tied: failures {min_failures} (worst gap above minimum "
            f"{worst_gap:.6e})",
            f"unconverged: {unconverged}",
        ),
    )


def verify_lemma_chain(seed: int = 0, trials: int = 200) -> SuiteReport:
    rep = run_lemma_suite(seed=seed, trials=trials)
    return SuiteReport(
        "lemma-chain",
        rep.passed,
        (
            f"trials: {rep.trials} "
            f"(one_side {rep.count('one_side')}, opposite_sides "
            f"{rep.count('opposite_sides')}, reflection_pair "
            f"{rep.count('reflection_pair')}, control {rep.count('control')})",
            f"worst expansion relative error: {rep.worst_rel_err:.3e} (tol 1e-10)",
            f"unconverged: {rep.unconverged}, failures: {rep.failures}",
        ),
    )


def verify_theorem_integer(n_max: int = 200) -> SuiteReport:
    rep = exhaustive_theorem_check(n_max)
    return SuiteReport(
        "theorem-integer",
        rep.passed,
        (
            f"n_max: {rep.n_max}, placements: {rep.placements_checked}, "
            f"sign systems: {rep.sign_systems_checked}",
            f"antipodal placements routed to the closed form: {rep.antipodal_routed}",
            f"satisfiable systems found: {rep.satisfiable} (must be 0)",
            f"elapsed: {rep.elapsed_s:.3f}s",
        ),
    )


def _classify_batch(
    masses_list: list[np.ndarray], alpha: float
) -> tuple[int, int, float, dict[str, int]]:
    candidates = 0
    unconverged = 0
    min_com = np.inf
    counts: dict[str, int] = {}
    for m in masses_list:
        verdict = classify(list(m), alpha)
        counts[verdict.tag] = counts.get(verdict.tag, 0) + 1
        if verdict.tag == CENTERED_CANDIDATE:
            candidates += 1
        if verdict.tag == "UNCONVERGED":
            unconverged += 1
        if verdict.certificate is None or not verdict.certificate.is_negative:
            min_com = min(min_com, verdict.diagnostics.com_norm)
    return candidates, unconverged, min_com, counts


def verify_two_unequal(
    seed: int = 0,
    per_n: int = 20,
    n_range: tuple[int, int] = (4, 8),
    alpha: float = 1.0,
) -> SuiteReport:
    """All-but-two equal masses never classify as centered candidates."""
    rng = np.random.default_rng(seed)
    batch = []
    for n in range(n_range[0], n_range[1] + 1):
        for _ in range(per_n):
            i, j = sorted(rng.choice(n, size=2, replace=False))
            m = np.ones(n)
            for k in (i, j):
                m[k] = 1.0 + rng.uniform(0.1, 2.0) if rng.integers(0, 2) else 1.0 - rng.uniform(0.1, 0.6)
            batch.append(m)
    candidates, unconverged, min_com, counts = _classify_batch(batch, alpha)
    return SuiteReport(
        "two-unequal",
        candidates == 0 and unconverged == 0,
        (
            f"instances: {len(batch)}, n in {n_range}, alpha {alpha:g}",
            f"verdicts: {dict(sorted(counts.items()))}",
            "min com_norm among uncertified rows: "
            + (f"{min_com:.6e}" if np.isfinite(min_com) else "n/a (all certified)"),
            f"centered candidates: {candidates} (must be 0), unconverged: {unconverged}",
        ),
    )


def verify_two_groups(
    seed: int = 0,
    per_n: int = 20,
    n_range: tuple[int, int] = (4, 8),
    alpha: float = 1.0,
) -> SuiteReport:
    """Two groups of equal masses with distinct values are never candidates."""
    rng = np.random.default_rng(seed)
    batch = []
    for n in range(n_range[0], n_range[1] + 1):
        for _ in range(per_n):
            k = int(rng.integers(1, n))
            idx = rng.choice(n, size=k, replace=False)
            w = 1.0 + rng.uniform(0.1, 2.0) if rng.integers(0, 2) else 1.0 - rng.uniform(0.1, 0.6)
            m = np.ones(n)
            m[idx] = w
            batch.append(m)
    candidates, unconverged, min_com, counts = _classify_batch(batch, alpha)
    return SuiteReport(
        "two-groups",
        candidates == 0 and unconverged == 0,
        (
            f"instances: {len(batch)}, n in {n_range}, alpha {alpha:g}",
            f"verdicts: {dict(sorted(counts.items()))}",
            "min com_norm among uncertified rows: "
            + (f"{min_com:.6e}" if np.isfinite(min_com) else "n/a (all certified)"),
            f"centered candidates: {candidates} (must be 0), unconverged: {unconverged}",
        ),
    )


SUITES = {
    "gradient": verify_gradient,
    "equivariance": verify_equivariance,
    "quadrilateral": verify_quadrilateral,
    "antipodal": verify_antipodal,
    "lemma-chain": verify_lemma_chain,
    "theorem-integer": verify_theorem_integer,
    "two-unequal": verify_two_unequal,
    "two-groups": verify_two_groups,
}


def run_suite(name: str, **kwargs) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](**kwargs)
