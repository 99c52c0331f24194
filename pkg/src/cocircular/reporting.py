"""Report rows and deterministic CSV/JSON emission.

CSV columns follow the row field order exactly, floats are printed with 17
significant digits so they round-trip, and sequences are ';'-joined inside
a single field. The JSON form is an object with a "rows" array and a
"summary" object carrying the same values field for field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from typing import IO, Iterable, Mapping, Sequence

from .certificate import CERTIFIED_NOT_CC, Verdict
from .symmetry import SpecialMassPattern, render_element

__all__ = ["ReportRow", "row_from_verdict", "write_csv", "write_json", "format_float"]

_FIELDS = (
    "n",
    "alpha",
    "masses",
    "l",
    "s",
    "theta",
    "grad_norm",
    "com_norm",
    "row_spread",
    "lambda_estimate",
    "best_g",
    "cert_value",
    "prediction_tag",
    "verdict_tag",
)


@dataclass(frozen=True)
class ReportRow:
    n: int
    alpha: float
    masses: tuple[float, ...]
    l: int | None
    s: int | None
    theta: tuple[float, ...]
    grad_norm: float
    com_norm: float
    row_spread: float
    lambda_estimate: float
    best_g: str
    cert_value: float | None
    prediction_tag: str
    verdict_tag: str

    @property
    def certified_negative(self) -> bool:
        return self.verdict_tag == CERTIFIED_NOT_CC


assert tuple(f.name for f in fields(ReportRow)) == _FIELDS


def row_from_verdict(
    masses: Sequence[float],
    alpha: float,
    verdict: Verdict,
    pattern: SpecialMassPattern | None = None,
    prediction_tag: str = "",
) -> ReportRow:
    diag = verdict.diagnostics
    cert = verdict.certificate
    return ReportRow(
        n=len(masses),
        alpha=float(alpha),
        masses=tuple(float(x) for x in masses),
        l=pattern.pos_l if pattern else None,
        s=pattern.pos_s if pattern else None,
        theta=tuple(float(x) for x in verdict.minimize_result.theta_min.angles),
        grad_norm=diag.grad_norm,
        com_norm=diag.com_norm,
        row_spread=diag.row_spread,
        lambda_estimate=diag.lambda_estimate,
        best_g=render_element(cert.best_element) if cert else "",
        cert_value=cert.best_value if cert else None,
        prediction_tag=prediction_tag,
        verdict_tag=verdict.tag,
    )


def format_float(x: float) -> str:
    return f"{x:.17g}"


def _csv_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, tuple):
        return ";".join(format_float(v) for v in value)
    return str(value)


def write_csv(rows: Iterable[ReportRow], summary: Mapping[str, object], out: IO[str]) -> None:
    out.write(",".join(_FIELDS) + "\n")
    for row in rows:
        out.write(",".join(_csv_cell(getattr(row, f)) for f in _FIELDS) + "\n")
    for key in summary:
        out.write(f"# {key}: {summary[key]}\n")


def _row_dict(row: ReportRow) -> dict[str, object]:
    d: dict[str, object] = {}
    for f in _FIELDS:
        v = getattr(row, f)
        d[f] = list(v) if isinstance(v, tuple) else v
    return d


def write_json(rows: Iterable[ReportRow], summary: Mapping[str, object], out: IO[str]) -> None:
    payload = {"rows": [_row_dict(r) for r in rows], "summary": dict(summary)}
    json.dump(payload, out, indent=2)
    out.write("\n")
