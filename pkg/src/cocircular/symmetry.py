"""Dihedral symmetry of labeled bodies on the circle.

The group of order 2n is generated by the cyclic relabeling P (body i takes
the mass of body i+1) and the reflection S (body i takes the mass of body
n-i, body n keeps its own). Each element g = P^h S^e acts on mass vectors
by permutation and on angle configurations by the paired affine map that
re-pins the gauge theta_n = 2*pi, so that energies are preserved when both
are transformed together.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import TAU, AngleConfig, MassVector, as_mass_array

__all__ = [
    "DihedralElement",
    "SpecialMassPattern",
    "act_on_masses",
    "act_on_angles",
    "enumerate_group",
    "special_positions",
    "is_ordered_symmetrically",
    "symmetric_order_conventions",
    "render_element",
    "parse_element",
]


@dataclass(frozen=True)
class DihedralElement:
    """Group element P^rotation S^reflected of the dihedral group of order 2n."""

    n: int
    rotation: int
    reflected: bool

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("dihedral group needs n >= 3")
        if not 0 <= self.rotation < self.n:
            raise ValueError("rotation must lie in [0, n)")

    @classmethod
    def identity(cls, n: int) -> "DihedralElement":
        return cls(n, 0, False)

    @property
    def is_identity(self) -> bool:
        return self.rotation == 0 and not self.reflected

    def compose(self, other: "DihedralElement") -> "DihedralElement":
        """Element acting as self after other acts, i.e. matrix product self*other."""
        if self.n != other.n:
            raise ValueError("elements belong to different groups")
        sign = -1 if self.reflected else 1
        return DihedralElement(
            self.n,
            (self.rotation + sign * other.rotation) % self.n,
            self.reflected ^ other.reflected,
        )

    def inverse(self) -> "DihedralElement":
        if self.reflected:
            return self
        return DihedralElement(self.n, (-self.rotation) % self.n, False)


def enumerate_group(n: int) -> list[DihedralElement]:
    """All 2n elements, identity first: I, P, ..., P^(n-1), S, PS, ..., P^(n-1)S."""
    return [
        DihedralElement(n, h, bool(e)) for e in (0, 1) for h in range(n)
    ]


def act_on_masses(g: DihedralElement, m: MassVector | Sequence[float]) -> MassVector:
    """Permute the mass labels: reflection first, then rotation."""
    arr = as_mass_array(m)
    if arr.size != g.n:
        raise ValueError("mass vector length does not match group degree")
    out = arr
    if g.reflected:
        out = np.concatenate([out[-2::-1], out[-1:]])
    if g.rotation:
        out = np.concatenate([out[g.rotation:], out[: g.rotation]])
    return MassVector(out)


def act_on_angles(g: DihedralElement, theta: AngleConfig) -> AngleConfig:
    """Apply the paired angle action; the result is again gauge-pinned."""
    t = theta.angles
    if t.size != g.n:
        raise ValueError("angle config length does not match group degree")
    out = t
    if g.reflected:
        out = np.concatenate([TAU - out[-2::-1], [TAU]])
    h = g.rotation
    if h:
        shift = out[h - 1]
        out = np.concatenate([out[h:] - shift, out[: h - 1] + (TAU - shift), [TAU]])
    out = np.array(out)
    out[-1] = TAU
    return AngleConfig(out)


def render_element(g: DihedralElement) -> str:
    """Human-readable form: "I", "P^h", "S", or "P^h S"."""
    if g.is_identity:
        return "I"
    parts = []
    if g.rotation:
        parts.append(f"P^{g.rotation}")
    if g.reflected:
        parts.append("S")
    return " ".join(parts)


def parse_element(text: str, n: int) -> DihedralElement:
    """Inverse of render_element."""
    text = text.strip()
    if text == "I":
        return DihedralElement.identity(n)
    rotation, reflected = 0, False
    for token in text.split():
        if token == "S":
            reflected = True
        elif token.startswith("P^"):
            rotation = int(token[2:])
        else:
            raise ValueError(f"cannot parse group element {text!r}")
    return DihedralElement(n, rotation, reflected)


@dataclass(frozen=True)
class SpecialMassPattern:
    """Placement of the three non-unit masses at positions l < s < n.

    All positions are 1-based. ``rotation`` records the power of P that was
    applied to bring the third special mass to position n (0 when the input
    already had it there). ``signs`` holds sign(value - 1) for the masses at
    l, s, n in that order.
    """

    n: int
    pos_l: int
    pos_s: int
    val_l: float
    val_s: float
    val_n: float
    signs: tuple[int, int, int]
    rotation: int = 0

    def __post_init__(self) -> None:
        if not (1 <= self.pos_l < self.pos_s < self.n):
            raise ValueError("need 1 <= l < s < n")
        for v, sg in zip((self.val_l, self.val_s, self.val_n), self.signs):
            if v <= 0.0 or v == 1.0:
                raise ValueError("special masses must be positive and != 1")
            if sg != (1 if v > 1.0 else -1):
                raise ValueError("sign pattern inconsistent with values")

    @classmethod
    def from_values(
        cls, n: int, pos_l: int, pos_s: int, val_l: float, val_s: float, val_n: float
    ) -> "SpecialMassPattern":
        signs = tuple(1 if v > 1.0 else -1 for v in (val_l, val_s, val_n))
        return cls(n, pos_l, pos_s, val_l, val_s, val_n, signs)  # type: ignore[arg-type]

    def to_masses(self) -> MassVector:
        """The mass vector with unit masses everywhere else."""
        m = np.ones(self.n)
        m[self.pos_l - 1] = self.val_l
        m[self.pos_s - 1] = self.val_s
        m[self.n - 1] = self.val_n
        return MassVector(m)

    @property
    def special_positions(self) -> tuple[int, int, int]:
        return (self.pos_l, self.pos_s, self.n)

    @property
    def special_values(self) -> tuple[float, float, float]:
        return (self.val_l, self.val_s, self.val_n)


def special_positions(
    m: MassVector | Sequence[float], unit_tol: float = 1e-9
) -> SpecialMassPattern | None:
    """Detect a three-special-mass pattern, rotating it into normal form.

    Returns None unless exactly three entries differ from 1 by more than
    unit_tol. When the highest special position is not n, the vector is
    rotated (recording the power of P) so that it is.
    """
    arr = as_mass_array(m)
    n = arr.size
    idx = [int(i) + 1 for i in np.flatnonzero(np.abs(arr - 1.0) > unit_tol)]
    if len(idx) != 3:
        return None
    third = idx[2]
    rotation = third % n
    rotated = [((p - third - 1) % n) + 1 for p in idx]
    pos = sorted(zip(rotated, (arr[p - 1] for p in idx)))
    (pl, vl), (ps, vs), (pn, vn) = pos
    assert pn == n
    signs = tuple(1 if v > 1.0 else -1 for v in (vl, vs, vn))
    return SpecialMassPattern(n, pl, ps, float(vl), float(vs), float(vn), signs, rotation)  # type: ignore[arg-type]


def _gap_away(n: int, a: int, b: int, c: int) -> int:
    """Bodies strictly between a and c along the arc that avoids b."""
    ccw = lambda x, y: (y - x - 1) % n
    b_on_ccw_arc = (b - a) % n < (c - a) % n
    return ccw(c, a) if b_on_ccw_arc else ccw(a, c)


def _gap_shortest(n: int, a: int, c: int) -> int:
    return min((c - a - 1) % n, (a - c - 1) % n)


def _equal_pairs(p: SpecialMassPattern, value_tol: float) -> list[tuple[int, int, int]]:
    """Position triples (a, b, c): a, b carry equal values, c the third."""
    pos = p.special_positions
    val = p.special_values
    pairs = []
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
        if abs(val[i] - val[j]) <= value_tol:
            pairs.append((pos[i], pos[j], pos[k]))
    return pairs


def is_ordered_symmetrically(
    p: SpecialMassPattern, value_tol: float = 1e-9
) -> bool:
    """True when two special values are equal and flank the third evenly.

    The body count from each of the equal pair to the third mass is taken
    along the arc that walks away from the other equal mass.
    """
    for a, b, c in _equal_pairs(p, value_tol):
        if _gap_away(p.n, a, b, c) == _gap_away(p.n, b, a, c):
            return True
    return False


def symmetric_order_conventions(
    p: SpecialMassPattern, value_tol: float = 1e-9
) -> tuple[bool, bool]:
    """Verdicts under the two gap-count conventions (walk-away, shortest-arc).

    Reports should flag instances where the conventions disagree instead of
    silently picking one.
    """
    away = is_ordered_symmetrically(p, value_tol)
    shortest = any(
        _gap_shortest(p.n, a, c) == _gap_shortest(p.n, b, c)
        for a, b, c in _equal_pairs(p, value_tol)
    )
    return away, shortest
