"""Grid scans over mass patterns with deterministic seeding.

Rows are generated in a fixed grid order and every random draw is seeded by
the grid coordinates, so a scan with the same spec is byte-identical no
matter how many workers computed it.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .analysis import predict_nonexistence
from .certificate import CERTIFIED_NOT_CC, ClassifyTolerances, classify
from .reporting import ReportRow, row_from_verdict
from .symmetry import SpecialMassPattern, is_ordered_symmetrically

__all__ = ["ScanSpec", "run_scan"]

_SIGN_TRIPLES = [
    (sl, ss, sn) for sl in (1, -1) for ss in (1, -1) for sn in (1, -1)
]
_EQUAL_PAIRS = ("ls", "sn", "ln")


@dataclass(frozen=True)
class ScanSpec:
    """What to scan and how to report it.

    Pattern sources, in precedence order: an explicit mass vector; a fixed
    value triple for every (l, s) placement; a lattice of values from
    grid_values = (lo, hi, count); or `trials` random distinct-value triples
    per sign case with `two_equal` extra equal-pair triples per combination
    (symmetrically ordered equal-pair patterns are skipped and counted).
    """

    n_list: tuple[int, ...] = ()
    alpha_list: tuple[float, ...] = (1.0,)
    masses: tuple[float, ...] | None = None
    pairs: tuple[tuple[int, int], ...] | None = None
    values: tuple[float, float, float] | None = None
    grid_values: tuple[float, float, int] | None = None
    trials: int = 0
    two_equal: int = 0
    include_control: bool = False
    seed: int = 0
    grad_tol: float = 1e-12
    center_tol: float = 1e-8
    neg_margin: float | None = None
    max_iters: int = 10000
    jobs: int = 1

    def __post_init__(self) -> None:
        if not self.alpha_list:
            raise ValueError("alpha_list must be nonempty")
        if self.masses is None and not self.n_list:
            raise ValueError("n_list must be nonempty unless masses are explicit")


@dataclass(frozen=True)
class _Item:
    masses: tuple[float, ...]
    alpha: float
    l: int | None
    s: int | None


def _value(rng: np.random.Generator, sign: int) -> float:
    if sign > 0:
        return 1.0 + float(rng.uniform(0.05, 2.0))
    return 1.0 - float(rng.uniform(0.05, 0.7))


def _distinct_triple(
    rng: np.random.Generator, signs: tuple[int, int, int]
) -> tuple[float, float, float]:
    while True:
        v = tuple(_value(rng, s) for s in signs)
        if (
            abs(v[0] - v[1]) >= 0.02
            and abs(v[0] - v[2]) >= 0.02
            and abs(v[1] - v[2]) >= 0.02
        ):
            return v


def _special_masses(n: int, l: int, s: int, vals: tuple[float, float, float]) -> tuple[float, ...]:
    m = [1.0] * n
    m[l - 1], m[s - 1], m[n - 1] = vals
    return tuple(m)


def _iter_items(spec: ScanSpec) -> Iterator[tuple[_Item, bool]]:
    """Yield (item, skipped_flag); skipped items only contribute to counts."""
    if spec.masses is not None:
        for alpha in spec.alpha_list:
            yield _Item(spec.masses, float(alpha), None, None), False
        return
    for n in spec.n_list:
        pairs = spec.pairs or tuple(
            (l, s) for l in range(1, n - 1) for s in range(l + 1, n)
        )
        for ia, alpha in enumerate(spec.alpha_list):
            alpha = float(alpha)
            if spec.include_control:
                yield _Item(tuple([1.0] * n), alpha, None, None), False
            for l, s in pairs:
                if not 1 <= l < s < n:
                    raise ValueError(f"invalid placement ({l}, {s}) for n={n}")
                if spec.values is not None:
                    yield _Item(_special_masses(n, l, s, spec.values), alpha, l, s), False
                    continue
                if spec.grid_values is not None:
                    lo, hi, count = spec.grid_values
                    axis = [v for v in np.linspace(lo, hi, int(count)) if abs(v - 1.0) > 1e-9]
                    for va in axis:
                        for vb in axis:
                            for vc in axis:
                                yield _Item(
                                    _special_masses(n, l, s, (va, vb, vc)), alpha, l, s
                                ), False
                    continue
                for case, signs in enumerate(_SIGN_TRIPLES):
                    for t in range(spec.trials):
                        rng = np.random.default_rng([spec.seed, n, ia, l, s, case, t])
                        vals = _distinct_triple(rng, signs)
                        yield _Item(_special_masses(n, l, s, vals), alpha, l, s), False
                combo = 0
                for pair_name in _EQUAL_PAIRS:
                    for sign_pair in (1, -1):
                        for sign_third in (1, -1):
                            combo += 1
                            for t in range(spec.two_equal):
                                rng = np.random.default_rng(
                                    [spec.seed, n, ia, l, s, 100 + combo, t]
                                )
                                v = _value(rng, sign_pair)
                                w = _value(rng, sign_third)
                                while abs(v - w) < 0.02:
                                    w = _value(rng, sign_third)
                                if pair_name == "ls":
                                    vals = (v, v, w)
                                elif pair_name == "sn":
                                    vals = (w, v, v)
                                else:
                                    vals = (v, w, v)
                                pat = SpecialMassPattern.from_values(n, l, s, *vals)
                                skip = is_ordered_symmetrically(pat)
                                yield _Item(
                                    _special_masses(n, l, s, vals), alpha, l, s
                                ), skip


def _compute(args: tuple[_Item, ScanSpec]) -> tuple[ReportRow, bool]:
    item, spec = args
    tols = ClassifyTolerances(
        grad_tol=spec.grad_tol,
        max_iters=spec.max_iters,
        center_tol=spec.center_tol,
        neg_margin=spec.neg_margin,
    )
    verdict = classify(list(item.masses), item.alpha, tols)
    pattern = prediction = None
    disagree = False
    if item.l is not None and item.s is not None:
        n = len(item.masses)
        pattern = SpecialMassPattern.from_values(
            n, item.l, item.s,
            item.masses[item.l - 1], item.masses[item.s - 1], item.masses[n - 1],
        )
        prediction = predict_nonexistence(pattern)
        disagree = prediction.conventions_disagree
    row = row_from_verdict(
        item.masses,
        item.alpha,
        verdict,
        pattern,
        prediction.tag if prediction else "",
    )
    return row, disagree


def run_scan(spec: ScanSpec) -> tuple[list[ReportRow], dict[str, object]]:
    """Compute all rows (optionally in a worker pool) plus a summary."""
    items: list[_Item] = []
    skipped = 0
    for item, skip in _iter_items(spec):
        if skip:
            skipped += 1
        else:
            items.append(item)
    work = [(item, spec) for item in items]
    if spec.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            results = list(pool.map(_compute, work, chunksize=32))
    else:
        results = [_compute(w) for w in work]
    rows = [r for r, _ in results]

    verdicts: dict[str, int] = {}
    predictions: dict[str, int] = {}
    for row in rows:
        verdicts[row.verdict_tag] = verdicts.get(row.verdict_tag, 0) + 1
        if row.prediction_tag:
            predictions[row.prediction_tag] = predictions.get(row.prediction_tag, 0) + 1
    uncertified = [
        row.com_norm for row in rows if row.verdict_tag != CERTIFIED_NOT_CC
    ]
    summary: dict[str, object] = {
        "rows": len(rows),
        "seed": spec.seed,
        "verdicts": dict(sorted(verdicts.items())),
        "predictions": dict(sorted(predictions.items())),
        "symmetric_skipped": skipped,
        "convention_disagreement_rows": [
            i for i, (_, d) in enumerate(results) if d
        ],
        "min_com_norm_uncertified": min(uncertified) if uncertified else None,
    }
    return rows, summary
