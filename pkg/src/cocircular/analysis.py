"""Exact sign conditions for three-special-mass placements.

For masses (1,...,1,m_l,1,...,1,m_s,1,...,1,m_n) with the specials at
positions l < s < n, a centered co-circular central configuration forces
three placement products to match the signs of the pairwise mass products:

    p1 = (l - n/2)(s - n/2)            must match sign((m_l-1)(m_s-1))
    p2 = (s - l - n/2)(n - l - n/2)    must match sign((m_s-1)(m_n-1))
    p3 = (l + n - s - n/2)(n - s - n/2) must match sign((m_l-1)(m_n-1))

Away from antipodal placements the product p1*p2*p3 is a negative perfect
square, while any realizable sign requirement multiplies to +1, so the full
system is always violated: nonexistence follows by pure integer arithmetic.
The numeric side of the story (run_lemma_suite) certifies each violated
instance with an explicitly negative reflection quadratic form and matches
its structural expansion term by term.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .certificate import certificate_search, quadrilateral_gap
from .core import interaction_matrix
from .optimizer import MinimizeOptions, minimize_potential
from .symmetry import (
    SpecialMassPattern,
    is_ordered_symmetrically,
    symmetric_order_conventions,
)

__all__ = [
    "ANTIPODAL_CERTIFICATE",
    "LEMMA_CHAIN_INFEASIBLE",
    "HYPOTHESES_NOT_MET",
    "SignConstraintSystem",
    "PredictionVerdict",
    "side_predicates",
    "required_signs",
    "sign_system",
    "antipodal_pair",
    "predict_nonexistence",
    "exhaustive_theorem_check",
    "run_lemma_suite",
    "TheoremCheckReport",
    "LemmaSuiteReport",
]

ANTIPODAL_CERTIFICATE = "ANTIPODAL_CERTIFICATE"
LEMMA_CHAIN_INFEASIBLE = "LEMMA_CHAIN_INFEASIBLE"
HYPOTHESES_NOT_MET = "HYPOTHESES_NOT_MET"


@dataclass(frozen=True)
class SignConstraintSystem:
    p1: Fraction
    p2: Fraction
    p3: Fraction
    required_signs: tuple[int, int, int]
    violated: frozenset[int]

    @property
    def predicates(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.p1, self.p2, self.p3)


@dataclass(frozen=True)
class PredictionVerdict:
    tag: str
    witness: str
    system: SignConstraintSystem | None = None
    conventions_disagree: bool = False


def side_predicates(l: int, s: int, n: int) -> tuple[Fraction, Fraction, Fraction]:
    """The three placement products, exact over rationals (n/2 stays a fraction)."""
    if not (1 <= l < s < n):
        raise ValueError("need 1 <= l < s < n")
    half = Fraction(n, 2)
    p1 = (Fraction(l) - half) * (Fraction(s) - half)
    p2 = (Fraction(s - l) - half) * (Fraction(n - l) - half)
    p3 = (Fraction(l + n - s) - half) * (Fraction(n - s) - half)
    return (p1, p2, p3)


def required_signs(signs: tuple[int, int, int]) -> tuple[int, int, int]:
    """Required signs of (p1, p2, p3) from the signs of (m_l-1, m_s-1, m_n-1)."""
    sl, ss, sn = signs
    if sl * ss * sn == 0 or {abs(sl), abs(ss), abs(sn)} != {1}:
        raise ValueError("signs must be +1 or -1 (special masses differ from 1)")
    return (sl * ss, ss * sn, sl * sn)


def antipodal_pair(n: int, l: int, s: int) -> tuple[int, int] | None:
    """The special pair separated by exactly n/2 - 1 bodies, if any."""
    if n % 2 != 0:
        return None
    half = n // 2
    if s - l == half:
        return (l, s)
    if n - s == half:
        return (s, n)
    if n - l == half:
        return (l, n)
    return None


def sign_system(
    l: int, s: int, n: int, signs: tuple[int, int, int]
) -> SignConstraintSystem:
    preds = side_predicates(l, s, n)
    req = required_signs(signs)
    violated = frozenset(
        i + 1
        for i, (p, r) in enumerate(zip(preds, req))
        if (1 if p > 0 else -1 if p < 0 else 0) != r
    )
    return SignConstraintSystem(*preds, req, violated)


def predict_nonexistence(
    p: SpecialMassPattern, value_tol: float = 1e-9
) -> PredictionVerdict:
    """Integer-side verdict for a three-special pattern.

    Antipodal placements route to the closed-form reflection certificate;
    symmetrically ordered patterns fall outside the hypotheses; everything
    else is excluded by a violated sign constraint.
    """
    pair = antipodal_pair(p.n, p.pos_l, p.pos_s)
    if pair is not None:
        return PredictionVerdict(
            ANTIPODAL_CERTIFICATE,
            f"special masses at positions {pair[0]} and {pair[1]} are "
            f"separated by exactly {p.n // 2 - 1} bodies",
        )
    away, shortest = symmetric_order_conventions(p, value_tol)
    if away:
        return PredictionVerdict(
            HYPOTHESES_NOT_MET,
            "two equal special masses flank the third evenly",
            conventions_disagree=(away != shortest),
        )
    system = sign_system(p.pos_l, p.pos_s, p.n, p.signs)
    if not system.violated:
        raise RuntimeError(
            f"sign system unexpectedly satisfiable for {p}; this contradicts "
            "the negative-product identity"
        )
    k = min(system.violated)
    pk = system.predicates[k - 1]
    rel = ">" if system.required_signs[k - 1] > 0 else "<"
    return PredictionVerdict(
        LEMMA_CHAIN_INFEASIBLE,
        f"p{k} = {pk} violates required p{k} {rel} 0",
        system=system,
        conventions_disagree=(away != shortest),
    )


_SIGN_TRIPLES = [
    (sl, ss, sn) for sl in (1, -1) for ss in (1, -1) for sn in (1, -1)
]


@dataclass(frozen=True)
class TheoremCheckReport:
    n_max: int
    placements_checked: int
    sign_systems_checked: int
    satisfiable: int
    antipodal_routed: int
    elapsed_s: float

    @property
    def passed(self) -> bool:
        return self.satisfiable == 0


def exhaustive_theorem_check(n_max: int) -> TheoremCheckReport:
    """Enumerate every placement and sign pattern up to n_max.

    For each n <= n_max, each 1 <= l < s < n that is not antipodal, and all
    eight sign triples, checks that at least one of the three constraints is
    violated. Doubled integer arithmetic (2l - n etc.) keeps signs exact.
    """
    if n_max < 4:
        raise ValueError("n_max must be at least 4")
    t0 = time.perf_counter()
    placements = 0
    systems = 0
    satisfiable = 0
    antipodal = 0
    for n in range(4, n_max + 1):
        li, si = np.triu_indices(n - 1, k=1)
        l = (li + 1).astype(np.int64)
        s = (si + 1).astype(np.int64)
        anti = (2 * l == n) | (2 * s == n) | (2 * (s - l) == n)
        antipodal += int(anti.sum())
        l, s = l[~anti], s[~anti]
        placements += l.size
        a = 2 * l - n
        b = 2 * s - n
        t1 = np.sign(a * b)
        t2 = np.sign((b - a - n) * (-a))
        t3 = np.sign((a - b + n) * (-b))
        for sl, ss, sn in _SIGN_TRIPLES:
            systems += l.size
            sat = (t1 == sl * ss) & (t2 == ss * sn) & (t3 == sl * sn)
            satisfiable += int(sat.sum())
    return TheoremCheckReport(
        n_max=n_max,
        placements_checked=placements,
        sign_systems_checked=systems,
        satisfiable=satisfiable,
        antipodal_routed=antipodal,
        elapsed_s=time.perf_counter() - t0,
    )


@dataclass(frozen=True)
class LemmaTrial:
    family: str
    n: int
    l: int
    s: int
    alpha: float
    values: tuple[float, float, float]
    reflection_value: float
    expansion: float
    rel_err: float
    converged: bool
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class LemmaSuiteReport:
    trials: int
    records: tuple[LemmaTrial, ...]
    failures: int
    unconverged: int
    worst_rel_err: float

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def count(self, family: str) -> int:
        return sum(1 for r in self.records if r.family == family)


_FAMILIES = ("one_side", "opposite_sides", "reflection_pair", "control")


def _draw_value(rng: np.random.Generator, sign: int) -> float:
    if sign > 0:
        return 1.0 + rng.uniform(0.2, 2.0)
    return 1.0 - rng.uniform(0.2, 0.65)


def _one_side_placement(rng: np.random.Generator, n: int) -> tuple[int, int]:
    # both specials strictly inside the first half of the circle
    top = (n - 1) // 2 if n % 2 else n // 2 - 1
    l = int(rng.integers(1, top))
    s = int(rng.integers(l + 1, top + 1))
    return l, s


def _opposite_placement(rng: np.random.Generator, n: int) -> tuple[int, int]:
    # l in the first half, s in the second, l + s < n, never antipodal
    while True:
        l = int(rng.integers(1, (n - 1) // 2 + 1 if n % 2 else n // 2))
        lo = n // 2 + 1
        if lo >= n - l:
            continue
        s = int(rng.integers(lo, n - l))
        if 2 * l != n and 2 * s != n and 2 * (s - l) != n:
            return l, s


def run_lemma_suite(
    seed: int,
    trials: int,
    n_range: tuple[int, int] = (5, 10),
    alpha_set: Sequence[float] = (0.5, 1.0, 2.0),
    grad_tol: float = 1e-12,
    rel_tol: float = 1e-10,
) -> LemmaSuiteReport:
    """Numerically certify randomly constructed sign-violating instances.

    Each non-control trial builds masses whose special values violate one of
    the placement constraints, minimizes the energy, and checks that the
    reflection entry of the certificate search is strictly negative and
    matches its structural expansion (two negative squares plus a signed
    multiple of a four-point chord gap) within rel_tol. Optimizer failures
    are recorded per trial, not raised.
    """
    records: list[LemmaTrial] = []
    failures = 0
    unconverged = 0
    worst = 0.0
    n_lo, n_hi = n_range
    if n_lo < 5:
        raise ValueError("lemma constructions need n >= 5")
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        family = _FAMILIES[t % len(_FAMILIES)]
        alpha = float(alpha_set[t % len(alpha_set)])
        if family == "reflection_pair":
            n = int(2 * rng.integers((n_lo + 1) // 2, n_hi // 2 + 1))
        else:
            n = int(rng.integers(n_lo, n_hi + 1))
            if family == "opposite_sides":
                # n = 6 admits no non-antipodal split placement with l + s != n
                for _ in range(64):
                    if n != 6:
                        break
                    n = int(rng.integers(n_lo, n_hi + 1))
                else:
                    raise ValueError("n_range offers no valid split placement")

        if family == "control":
            m = np.ones(n)
            res = minimize_potential(m, alpha, MinimizeOptions(grad_tol=grad_tol))
            cert = certificate_search(m, res, alpha)
            ok = res.converged and float(np.max(np.abs(cert.all_values))) == 0.0
            records.append(
                LemmaTrial(family, n, 0, 0, alpha, (1.0, 1.0, 1.0),
                           cert.reflection_value, 0.0, 0.0, res.converged, ok)
            )
            if not ok:
                failures += 1
            continue

        if family == "one_side":
            l, s = _one_side_placement(rng, n)
            flip = bool(rng.integers(0, 2))
            vl = _draw_value(rng, -1 if flip else 1)
            vs = _draw_value(rng, 1 if flip else -1)
        elif family == "opposite_sides":
            l, s = _opposite_placement(rng, n)
            side = 1 if rng.integers(0, 2) else -1
            vl = _draw_value(rng, side)
            vs = _draw_value(rng, side)
        else:  # reflection_pair: s is the mirror position of l
            l = int(rng.integers(1, n // 2))
            s = n - l
            side = 1 if rng.integers(0, 2) else -1
            vl = _draw_value(rng, side)
            vs = _draw_value(rng, side)
            while abs(vl - vs) < 0.05:
                vs = _draw_value(rng, side)
        vn = _draw_value(rng, 1 if rng.integers(0, 2) else -1)

        masses = np.ones(n)
        masses[l - 1], masses[s - 1], masses[n - 1] = vl, vs, vn
        res = minimize_potential(masses, alpha, MinimizeOptions(grad_tol=grad_tol))
        if not res.converged:
            unconverged += 1
            records.append(
                LemmaTrial(family, n, l, s, alpha, (vl, vs, vn), 0.0, 0.0, 0.0,
                           False, False, note="optimizer did not converge")
            )
            failures += 1
            continue
        cert = certificate_search(masses, res, alpha)
        s_val = cert.reflection_value
        H = interaction_matrix(res.theta_min, alpha).entries
        theta = res.theta_min
        if family == "reflection_pair":
            expansion = -2.0 * (vl - vs) ** 2 * H[l - 1, s - 1]
            note = ""
        else:
            sq_l = -2.0 * (1.0 - vl) ** 2 * H[l - 1, n - l - 1]
            sq_s = -2.0 * (1.0 - vs) ** 2 * H[s - 1, n - s - 1]
            if family == "one_side":
                gap = quadrilateral_gap(theta, s, n - s, n - l, l, alpha)
                cross = 2.0 * (1.0 - vl) * (vs - 1.0) * gap
            else:
                gap = quadrilateral_gap(theta, n - s, s, n - l, l, alpha)
                cross = 2.0 * (vl - 1.0) * (vs - 1.0) * gap
            expansion = sq_l + sq_s + cross
            note = f"gap={gap:.6e}"
        rel = abs(expansion - s_val) / max(1.0, abs(s_val))
        worst = max(worst, rel)
        ok = s_val < 0.0 and rel <= rel_tol
        if not ok:
            failures += 1
        records.append(
            LemmaTrial(family, n, l, s, alpha, (vl, vs, vn), s_val,
                       expansion, rel, True, ok, note)
        )
    return LemmaSuiteReport(
        trials=trials,
        records=tuple(records),
        failures=failures,
        unconverged=unconverged,
        worst_rel_err=worst,
    )
