"""Command-line front end.

``wreath-eulerian <poly|table|verify|report> [flags]`` computes descent and
flag polynomials, emits flag-count tables, runs identity verification sweeps,
and produces shape-verdict reports.  All output is deterministic: no
timestamps in data payloads, coefficients rendered as decimal strings so
arbitrary precision survives JSON consumers.

Exit codes: 0 success/verified, 1 verification counterexample, 2 usage
error, 3 resource-cap refusal.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .core import ValidationError
from .enumeration import (
    STAT_DESCENT,
    STAT_FLAG,
    CapExceededError,
    StatReport,
    flag_table,
    stat_report,
    verify_abr_identity,
    verify_coset_invariance,
    verify_involution,
    verify_product_identity,
    verify_symmetry,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_STAT_NAMES = {"descent": STAT_DESCENT, "flag": STAT_FLAG}
_VERIFY_TARGETS = ("symmetry", "product-identity", "abr-identity",
                   "coset-invariance", "involution")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreath-eulerian",
        description="Descent statistics on colored permutation groups "
                    "and their cyclic-shift quotients.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default="text")
        p.add_argument("--cap", type=int, default=None,
                       help="maximum element count (default from WREATH_CAP "
                            "or 10^9)")
        p.add_argument("--threads", type=int, default=1,
                       help="worker count, 0 = auto")
        p.add_argument("--out", type=str, default=None,
                       help="write output to this path instead of stdout")

    p = sub.add_parser("poly", help="one statistic polynomial")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", choices=("descent", "flag"), default="flag")
    p.add_argument("--domain", choices=("quotient", "full", "fixed"),
                   default="quotient")
    p.add_argument("--beta", type=int, default=0,
                   help="last color for --domain fixed")
    common(p)

    p = sub.add_parser("table", help="flag count table over the quotient")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    common(p)

    p = sub.add_parser("verify", help="identity verification sweeps")
    p.add_argument("target", choices=_VERIFY_TARGETS)
    p.add_argument("--alpha", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-k", type=int, default=None)
    common(p)

    p = sub.add_parser("report", help="shape verdicts for the flag "
                                      "polynomial over the quotient")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    common(p)
    return parser


def _require_positive(name: str, value: int) -> None:
    if value is None or value < 1:
        raise ValidationError(f"{name} must be >= 1")


def _coeff_strings(report: StatReport) -> list[str]:
    return [str(c) for c in report.polynomial.coefficients]


def _report_payload(command: str, report: StatReport, stat: str) -> dict:
    return {
        "command": command,
        "alpha": report.alpha,
        "n": report.n,
        "stat": stat,
        "domain": report.domain,
        "degree": report.polynomial.nominal_degree,
        "coefficients": _coeff_strings(report),
        "cardinality": str(report.cardinality),
        "palindromic": report.palindromic,
        "unimodal": report.unimodal,
        "real_rooted": report.real_rooted,
    }


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _run_poly(args) -> int:
    _require_positive("alpha", args.alpha)
    _require_positive("n", args.n)
    report = stat_report(args.alpha, args.n, _STAT_NAMES[args.stat],
                         args.domain, beta=args.beta, cap=args.cap,
                         workers=args.threads)
    if args.format == "json":
        text = json.dumps(_report_payload("poly", report, args.stat)) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "coefficient"])
        for k, c in enumerate(report.polynomial.coefficients):
            writer.writerow([k, str(c)])
        text = buf.getvalue()
    else:
        lines = [
            "coefficients: " + " ".join(_coeff_strings(report)),
            f"degree: {report.polynomial.nominal_degree}",
            f"cardinality: {report.cardinality}",
            f"palindromic: {str(report.palindromic).lower()}",
            f"unimodal: {str(report.unimodal).lower()}",
            f"real_rooted: {str(report.real_rooted).lower()}",
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _run_table(args) -> int:
    _require_positive("alpha", args.alpha)
    _require_positive("max-n", args.max_n)
    rows = flag_table(args.alpha, args.max_n, cap=args.cap,
                      workers=args.threads)
    triples = [(n, k, str(c))
               for n, row in enumerate(rows, start=1)
               for k, c in enumerate(row.coefficients)]
    if args.format == "json":
        payload = {
            "command": "table",
            "alpha": args.alpha,
            "max_n": args.max_n,
            "rows": [{"n": n, "k": k, "count": c} for n, k, c in triples],
        }
        text = json.dumps(payload) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "count"])
        writer.writerows(triples)
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


def _run_verify(args) -> int:
    target = args.target
    if target in ("symmetry", "coset-invariance", "involution"):
        _require_positive("alpha", args.alpha)
        _require_positive("n", args.n)
        if target == "symmetry":
            results = [verify_symmetry(args.alpha, args.n, cap=args.cap)]
        elif target == "involution":
            results = [verify_involution(args.alpha, args.n, cap=args.cap)]
        else:
            results = [verify_coset_invariance(args.alpha, args.n, cap=args.cap)]
    elif target == "product-identity":
        _require_positive("max-k", args.max_k)
        results = verify_product_identity(args.max_k, cap=args.cap)
    else:
        _require_positive("max-n", args.max_n)
        results = verify_abr_identity(args.max_n, cap=args.cap)

    lines = []
    status = EXIT_OK
    for result in results:
        if result.ok:
            lines.append(f"PASS {result.description}")
        else:
            status = EXIT_COUNTEREXAMPLE
            lines.append(f"FAIL {result.description}")
            if result.counterexample is not None:
                lines.append(f"counterexample: {result.counterexample}")
            break
    _emit("\n".join(lines) + "\n", args.out)
    return status


def _run_report(args) -> int:
    _require_positive("alpha", args.alpha)
    _require_positive("max-n", args.max_n)
    rows = []
    for n in range(1, args.max_n + 1):
        report = stat_report(args.alpha, n, STAT_FLAG, "quotient",
                             cap=args.cap, workers=args.threads)
        rows.append(report)
    if args.format == "json":
        payload = {
            "command": "report",
            "alpha": args.alpha,
            "max_n": args.max_n,
            "rows": [_report_payload("report", r, "flag") for r in rows],
        }
        text = json.dumps(payload) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["alpha", "n", "degree", "cardinality",
                         "palindromic", "unimodal", "real_rooted"])
        for r in rows:
            writer.writerow([r.alpha, r.n, r.polynomial.nominal_degree,
                             str(r.cardinality),
                             str(r.palindromic).lower(),
                             str(r.unimodal).lower(),
                             str(r.real_rooted).lower()])
        text = buf.getvalue()
    else:
        lines = []
        for r in rows:
            lines.append(
                f"alpha={r.alpha} n={r.n} degree={r.polynomial.nominal_degree} "
                f"cardinality={r.cardinality} "
                f"palindromic={str(r.palindromic).lower()} "
                f"unimodal={str(r.unimodal).lower()} "
                f"real_rooted={str(r.real_rooted).lower()}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "poly":
            return _run_poly(args)
        if args.command == "table":
            return _run_table(args)
        if args.command == "verify":
            return _run_verify(args)
        return _run_report(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
