"""Nonexistence certificates from the dihedral quadratic form.

At the minimizer theta_m of the energy for masses m, let H be the matrix of
inverse chord powers. If H(gm - m) < 0 for some group element g, then
(m, theta_m) cannot be a centered co-circular central configuration, because
a centered configuration would minimize the energy over the whole group
orbit of its mass labeling. The search evaluates all 2n elements so reports
show the full certificate landscape; the identity contributes exactly 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    AngleConfig,
    CentrednessDiagnostics,
    InteractionMatrix,
    MassVector,
    as_mass_array,
    centredness_diagnostics,
    chord_distance,
    interaction_matrix,
    quadratic_form,
)
from .errors import NotApplicableError, OrderingError, UnconvergedError
from .optimizer import MinimizeOptions, MinimizeResult, minimize_potential
from .symmetry import DihedralElement, SpecialMassPattern, act_on_masses, enumerate_group

__all__ = [
    "CERTIFIED_NOT_CC",
    "NOT_CENTERED",
    "CENTERED_CANDIDATE",
    "UNCONVERGED",
    "CertificateResult",
    "Verdict",
    "ClassifyTolerances",
    "certificate_search",
    "antipodal_certificate_value",
    "quadrilateral_gap",
    "classify",
]

CERTIFIED_NOT_CC = "CERTIFIED_NOT_CC"
NOT_CENTERED = "NOT_CENTERED"
CENTERED_CANDIDATE = "CENTERED_CANDIDATE"
UNCONVERGED = "UNCONVERGED"

# gradient bound accepted as "converged" when a bare AngleConfig is supplied
_TRUSTED_GRAD = 1e-6


@dataclass(frozen=True)
class CertificateResult:
    """Values of H(gm - m) over the whole group, in enumerate_group order."""

    n: int
    best_element: DihedralElement
    best_value: float
    all_values: np.ndarray
    is_negative: bool
    neg_margin: float

    def __post_init__(self) -> None:
        if self.all_values[0] != 0.0:
            raise ValueError("identity entry must be exactly zero")
        if self.best_value != float(np.min(self.all_values)):
            raise ValueError("best_value must be the table minimum")

    def value_of(self, g: DihedralElement) -> float:
        idx = (self.n if g.reflected else 0) + g.rotation
        return float(self.all_values[idx])

    @property
    def reflection_value(self) -> float:
        """The entry for the plain reflection S."""
        return float(self.all_values[self.n])


@dataclass(frozen=True)
class Verdict:
    tag: str
    diagnostics: CentrednessDiagnostics
    certificate: CertificateResult | None
    minimize_result: MinimizeResult

    def __post_init__(self) -> None:
        if self.tag == CERTIFIED_NOT_CC and not (
            self.certificate is not None and self.certificate.is_negative
        ):
            raise ValueError("CERTIFIED_NOT_CC requires a negative certificate")
        if self.tag == CENTERED_CANDIDATE and (
            self.certificate is None or self.certificate.is_negative
        ):
            raise ValueError("CENTERED_CANDIDATE excludes negative certificates")


@dataclass(frozen=True)
class ClassifyTolerances:
    grad_tol: float = 1e-12
    max_iters: int = 10000
    center_tol: float = 1e-8
    neg_margin: float | None = None  # None: scaled default from H entries


def _resolve_theta(
    m: np.ndarray, theta_m: AngleConfig | MinimizeResult, alpha: float
) -> AngleConfig:
    if isinstance(theta_m, MinimizeResult):
        if not theta_m.converged:
            raise UnconvergedError(
                "certificate requires a converged minimizer "
                f"(final gradient norm {theta_m.final_grad_norm:.3e})"
            )
        return theta_m.theta_min
    from . import _backend

    grad = _backend.impl.gradient(m, theta_m.angles, alpha)
    gnorm = float(np.max(np.abs(grad[: m.size - 1])))
    if gnorm > _TRUSTED_GRAD:
        raise UnconvergedError(
            f"supplied angles are not a minimizer (gradient norm {gnorm:.3e})"
        )
    return theta_m


def default_neg_margin(H: InteractionMatrix) -> float:
    off = H.entries[~np.eye(H.n, dtype=bool)]
    return 1e-10 * (1.0 + float(off.min()))


def certificate_search(
    m: MassVector | list[float],
    theta_m: AngleConfig | MinimizeResult,
    alpha: float,
    neg_margin: float | None = None,
) -> CertificateResult:
    """Evaluate H(gm - m) for every element of the dihedral group.

    theta_m must be a converged minimizer for (m, alpha): pass the
    MinimizeResult, or a bare AngleConfig whose gradient is verifiably small.
    """
    mm = as_mass_array(m)
    theta = _resolve_theta(mm, theta_m, alpha)
    H = interaction_matrix(theta, alpha)
    if neg_margin is None:
        neg_margin = default_neg_margin(H)
    group = enumerate_group(mm.size)
    values = np.empty(len(group))
    for i, g in enumerate(group):
        if g.is_identity:
            values[i] = 0.0
            continue
        v = act_on_masses(g, mm).masses - mm
        values[i] = quadratic_form(H, v)
    best = int(np.argmin(values))
    return CertificateResult(
        n=mm.size,
        best_element=group[best],
        best_value=float(values[best]),
        all_values=values,
        is_negative=bool(values[best] < -neg_margin),
        neg_margin=float(neg_margin),
    )


def antipodal_certificate_value(
    p: SpecialMassPattern,
    theta_m: AngleConfig | MinimizeResult,
    alpha: float,
) -> float:
    """Closed-form reflection certificate -2 (1 - m_l)^2 r_{l,n-l}^(-alpha).

    Applies when n is even and two of the special masses sit at positions
    n/2 and n (so they are separated by exactly n/2 - 1 bodies on each arc);
    l is the remaining special position. Equals the S entry of the full
    search at the same minimizer.
    """
    n = p.n
    if n % 2 != 0:
        raise NotApplicableError("antipodal certificate needs even n")
    half = n // 2
    if p.pos_l == half:
        ell, val = p.pos_s, p.val_s
    elif p.pos_s == half:
        ell, val = p.pos_l, p.val_l
    else:
        raise NotApplicableError(
            "pattern must be rotated so the antipodal pair sits at n/2 and n"
        )
    theta = _resolve_theta(p.to_masses().masses, theta_m, alpha)
    r = chord_distance(theta.angles[ell - 1], theta.angles[n - ell - 1])
    return -2.0 * (1.0 - val) ** 2 * r ** (-alpha)


def quadrilateral_gap(
    theta: AngleConfig | list[float],
    idx_a: int,
    idx_b: int,
    idx_c: int,
    idx_d: int,
    alpha: float,
) -> float:
    """1/AC^a + 1/BD^a - (1/AD^a + 1/BC^a) for four bodies in circular order.

    Body indices are 1-based and must appear counterclockwise (some rotation
    of an increasing quadruple). For points on a circle this combination is
    always strictly negative: the crossing chords beat the opposite sides.
    """
    from .core import as_angle_array

    t = as_angle_array(theta)
    n = t.size
    idx = (idx_a, idx_b, idx_c, idx_d)
    if len(set(idx)) != 4 or not all(1 <= i <= n for i in idx):
        raise OrderingError(f"need four distinct indices in 1..{n}")
    a, b, c, d = idx
    rb, rc, rd = ((b - a) % n, (c - a) % n, (d - a) % n)
    if not (0 < rb < rc < rd):
        raise OrderingError(f"indices {idx} are not in counterclockwise order")
    ta, tb, tc, td = (t[i - 1] for i in idx)
    return (
        chord_distance(ta, tc) ** (-alpha)
        + chord_distance(tb, td) ** (-alpha)
        - chord_distance(ta, td) ** (-alpha)
        - chord_distance(tb, tc) ** (-alpha)
    )


def classify(
    m: MassVector | list[float],
    alpha: float,
    tols: ClassifyTolerances | None = None,
    initial: AngleConfig | None = None,
) -> Verdict:
    """Minimize, run diagnostics, and search for a negative certificate.

    CENTERED_CANDIDATE is an empirical label only: it means the diagnostics
    are below tolerance and no negative certificate was found, which proves
    nothing about actual existence.
    """
    tols = tols or ClassifyTolerances()
    result = minimize_potential(
        m, alpha, MinimizeOptions(grad_tol=tols.grad_tol, max_iters=tols.max_iters, initial=initial)
    )
    diag = centredness_diagnostics(m, result.theta_min, alpha)
    if not result.converged:
        return Verdict(UNCONVERGED, diag, None, result)
    cert = certificate_search(m, result, alpha, tols.neg_margin)
    if cert.is_negative:
        tag = CERTIFIED_NOT_CC
    elif diag.com_norm <= tols.center_tol and diag.row_spread <= tols.center_tol:
        tag = CENTERED_CANDIDATE
    else:
        tag = NOT_CENTERED
    return Verdict(tag, diag, cert, result)
