"""Command-line driver: classify one instance, scan grids, run verify suites.

Exit codes: 0 on success (any verdict), 2 on usage or input errors, 3 when
the optimizer fails to converge, 1 when a verify suite fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .analysis import predict_nonexistence
from .certificate import UNCONVERGED, ClassifyTolerances, classify
from .reporting import ReportRow, format_float, row_from_verdict, write_csv, write_json
from .scan import ScanSpec, run_scan
from .symmetry import special_positions
from .verify import SUITES, run_suite


def _ints_csv(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _floats_csv(text: str) -> tuple[float, ...]:
    return tuple(float(x) for x in text.split(","))


def _grid(text: str) -> tuple[float, float, int]:
    lo, hi, count = text.split(":")
    return (float(lo), float(hi), int(count))


def _pair(text: str) -> tuple[int, int]:
    l, s = _ints_csv(text)
    return (l, s)


def _values(text: str) -> tuple[float, float, float]:
    a, b, c = _floats_csv(text)
    return (a, b, c)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cocircular",
        description="Certificates and scans for centered co-circular "
        "central configurations of power-law potentials.",
    )
    parser.add_argument(
        "--config",
        help="JSON file whose keys mirror the long flag names; explicit "
        "flags take precedence",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tols(p: argparse.ArgumentParser) -> None:
        p.add_argument("--grad-tol", type=float, default=1e-12)
        p.add_argument("--center-tol", type=float, default=1e-8)
        p.add_argument("--neg-margin", type=float, default=None)
        p.add_argument("--max-iters", type=int, default=10000)

    c = sub.add_parser("classify", help="classify a single mass vector")
    c.add_argument("--masses", type=_floats_csv, required=True,
                   help="comma-separated positive masses, n >= 3")
    c.add_argument("--alpha", type=float, required=True)
    c.add_argument("--format", choices=("text", "json"), default="text")
    add_tols(c)

    s = sub.add_parser("scan", help="classify a grid of mass patterns")
    s.add_argument("--n", type=_ints_csv, default=(),
                   help="comma-separated body counts")
    s.add_argument("--alpha", type=_floats_csv, default=(1.0,),
                   help="comma-separated exponents")
    s.add_argument("--masses", type=_floats_csv, default=None,
                   help="explicit mass vector (overrides pattern generation)")
    s.add_argument("--special", type=_pair, action="append", default=None,
                   metavar="L,S", help="restrict to placement(s) l,s; repeatable")
    s.add_argument("--values", type=_values, default=None, metavar="A,B,C",
                   help="fixed special-value triple")
    s.add_argument("--grid-values", type=_grid, default=None, metavar="LO:HI:COUNT",
                   help="lattice of special values")
    s.add_argument("--trials", type=int, default=0,
                   help="random distinct-value triples per sign case")
    s.add_argument("--two-equal", type=int, default=0,
                   help="extra equal-pair triples per pair/sign combination")
    s.add_argument("--control", action="store_true",
                   help="add an equal-mass control row per (n, alpha)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", default=None, help="output path (default stdout)")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    add_tols(s)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=None)
    v.add_argument("--n-max", type=int, default=None)
    v.add_argument("--n", type=int, default=None,
                   help="fix the body count where the suite ranges over n")
    v.add_argument("--alpha", type=_floats_csv, default=None)
    return parser


def _apply_config(argv: list[str]) -> list[str]:
    if "--config" not in argv:
        return argv
    i = argv.index("--config")
    path = argv[i + 1]
    with open(path) as fh:
        config = json.load(fh)
    out = [a for j, a in enumerate(argv) if j not in (i, i + 1)]
    for key, value in config.items():
        flag = "--" + key.replace("_", "-")
        if flag in out:
            continue
        if isinstance(value, bool):
            if value:
                out.append(flag)
        else:
            out.extend([flag, str(value)])
    return out


def _print_row_text(row: ReportRow) -> None:
    print(f"n          : {row.n}")
    print(f"alpha      : {format_float(row.alpha)}")
    print(f"masses     : {', '.join(format_float(v) for v in row.masses)}")
    if row.l is not None:
        print(f"specials   : l={row.l}, s={row.s}, n={row.n}")
    print(f"theta      : {', '.join(format_float(v) for v in row.theta)}")
    print(f"grad_norm  : {row.grad_norm:.3e}")
    print(f"com_norm   : {row.com_norm:.6e}")
    print(f"row_spread : {row.row_spread:.6e}")
    print(f"lambda     : {format_float(row.lambda_estimate)}")
    if row.cert_value is not None:
        print(f"best_g     : {row.best_g}")
        print(f"cert_value : {format_float(row.cert_value)}")
    if row.prediction_tag:
        print(f"prediction : {row.prediction_tag}")
    print(f"verdict    : {row.verdict_tag}")


def _cmd_classify(args: argparse.Namespace) -> int:
    tols = ClassifyTolerances(
        grad_tol=args.grad_tol,
        max_iters=args.max_iters,
        center_tol=args.center_tol,
        neg_margin=args.neg_margin,
    )
    try:
        verdict = classify(list(args.masses), args.alpha, tols)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    pattern = special_positions(list(args.masses))
    prediction = predict_nonexistence(pattern) if pattern else None
    row = row_from_verdict(
        args.masses, args.alpha, verdict, pattern,
        prediction.tag if prediction else "",
    )
    if args.format == "json":
        d = asdict(row)
        d["masses"] = list(d["masses"])
        d["theta"] = list(d["theta"])
        print(json.dumps(d, indent=2))
    else:
        _print_row_text(row)
        if prediction is not None and prediction.conventions_disagree:
            print("note       : symmetric-ordering conventions disagree here")
    return 3 if verdict.tag == UNCONVERGED else 0


def _cmd_scan(args: argparse.Namespace) -> int:
    try:
        spec = ScanSpec(
            n_list=tuple(args.n),
            alpha_list=tuple(args.alpha),
            masses=args.masses,
            pairs=tuple(args.special) if args.special else None,
            values=args.values,
            grid_values=args.grid_values,
            trials=args.trials,
            two_equal=args.two_equal,
            include_control=args.control,
            seed=args.seed,
            grad_tol=args.grad_tol,
            center_tol=args.center_tol,
            neg_margin=args.neg_margin,
            max_iters=args.max_iters,
            jobs=args.jobs,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rows, summary = run_scan(spec)
    writer = write_csv if args.format == "csv" else write_json
    if args.out is None:
        writer(rows, summary, sys.stdout)
    else:
        try:
            with open(args.out, "w") as fh:
                writer(rows, summary, fh)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    kwargs: dict[str, object] = {}
    if args.suite != "theorem-integer":
        kwargs["seed"] = args.seed
    if args.trials is not None:
        if args.suite in ("two-unequal", "two-groups"):
            kwargs["per_n"] = args.trials
        elif args.suite == "equivariance":
            kwargs["vectors"] = args.trials
        elif args.suite == "gradient":
            kwargs["instances"] = args.trials
        elif args.suite == "antipodal":
            kwargs["patterns"] = args.trials
        else:
            kwargs["trials"] = args.trials
    if args.n_max is not None and args.suite == "theorem-integer":
        kwargs["n_max"] = args.n_max
    if args.n is not None:
        if args.suite in ("equivariance", "two-unequal", "two-groups"):
            kwargs["n_range"] = (args.n, args.n)
        elif args.suite == "gradient":
            kwargs["n_max"] = args.n
    if args.alpha is not None and args.suite in (
        "gradient", "equivariance", "quadrilateral", "antipodal",
    ):
        kwargs["alphas"] = args.alpha
    report = run_suite(args.suite, **kwargs)
    print(f"suite: {report.name}")
    for line in report.lines:
        print(f"  {line}")
    print("PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv = _apply_config(argv)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: bad config: {exc}", file=sys.stderr)
        return 2
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "classify":
        return _cmd_classify(args)
    if args.command == "scan":
        return _cmd_scan(args)
    return _cmd_verify(args)


if __name__ == "__main__":
    raise SystemExit(main())
