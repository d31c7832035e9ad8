"""Command-line front end.

    factpow na 2
    factpow sigma E_SEQ 55
    factpow segment E_SEQ 5
    factpow breakpoints S_SEQ 3
    factpow table 12
    factpow scan 3 100 --samples 2
    factpow certify prop22

Text output is one ``key: value`` line per field; ``--json`` prints a single
JSON object instead. Exit status: 0 success, 1 a check or prediction failed,
2 usage error, 3 computation error (guard, budget, unresolved precision).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .certify import SUITES, run_suites
from .exact_core import DEFAULT_GUARD, GuardExceeded
from .mpinterval import Interval, PrecisionConfig, Unresolved
from .predictor import predict_na, verify_range
from .sigma import BudgetExceeded, SeqKind, breakpoints, segment, sigma

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_ERROR = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, Any]
    results: dict[str, Any] = field(default_factory=dict)
    precision: dict[str, Any] = field(default_factory=dict)
    passed: bool = True

    def to_json(self) -> str:
        return json.dumps(
            {"command": self.command, "inputs": self.inputs, "results": self.results,
             "precision": self.precision, "passed": self.passed},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls(**json.loads(text))

    def to_text(self) -> str:
        lines = [f"command: {self.command}"]
        lines += [f"{k}: {_fmt(v)}" for k, v in self.inputs.items()]
        lines += [f"{k}: {_fmt(v)}" for k, v in self.results.items()]
        lines += [f"{k}: {_fmt(v)}" for k, v in self.precision.items()]
        lines.append(f"passed: {'yes' if self.passed else 'no'}")
        return "\n".join(lines)


def _fmt(value) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(_fmt(v) for v in value)
    if isinstance(value, dict):
        if set(value) == {"lo", "hi"}:
            return f"[{value['lo']}, {value['hi']}]"
        return " ".join(f"{k}={_fmt(v)}" for k, v in value.items())
    if value is None:
        return "-"
    return str(value)


def _interval(enc: Interval) -> dict[str, str]:
    return {"lo": enc.lo_str(), "hi": enc.hi_str()}


def parse_base(text: str) -> Fraction:
    """Exact rational from "p/q", an integer, or a decimal literal."""
    try:
        a = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse {text!r} as a rational or decimal number") from None
    if a <= 1:
        raise UsageError("a must exceed 1")
    return a


def _kind(text: str) -> SeqKind:
    try:
        return SeqKind.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _config(args) -> PrecisionConfig:
    try:
        return PrecisionConfig(start_bits=args.bits_start, max_bits=args.bits_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _precision(args) -> dict[str, int]:
    return {"bits_start": args.bits_start, "bits_max": args.bits_max}


def cmd_na(args) -> OutputRecord:
    a = parse_base(args.a)
    out = predict_na(a, with_oracle=args.oracle, config=_config(args), guard=args.guard)
    rec = OutputRecord("na", {"a": str(a)}, precision=_precision(args))
    rec.results = {
        "n": out.n,
        "m": out.m,
        "case": out.case_label.value if out.case_label else "TRIVIAL",
        "candidates": list(out.candidates),
        "exact": out.exact,
        "agrees": out.agrees,
    }
    rec.passed = out.agrees is not False
    return rec


def cmd_sigma(args) -> OutputRecord:
    kind = _kind(args.kind)
    r = sigma(kind, args.n, _config(args))
    rec = OutputRecord("sigma", {"kind": kind.value, "n": args.n}, precision=_precision(args))
    rec.results = {"sigma": r.sigma, "t_enclosure": _interval(r.t_enclosure)}
    rec.precision["bits_used"] = r.bits
    return rec


def cmd_segment(args) -> OutputRecord:
    kind = _kind(args.kind)
    if args.n < 3:
        raise UsageError("segment needs n >= 3")
    config = _config(args)
    seg = segment(kind, args.n, config)
    rec = OutputRecord("segment", {"kind": kind.value, "n": args.n}, precision=_precision(args))
    rec.results = {
        "m": seg.m,
        "values": list(seg.values),
        "value_count": seg.value_count,
        "ell": seg.ell,
        "case": seg.case_label.value if seg.case_label else "MORE_THAN_TWO",
        "t_enclosures": {str(k): _interval(sigma(kind, k, config).t_enclosure)
                         for k in range(seg.start, seg.n + 1)},
    }
    rec.precision["bits_used"] = max(sigma(kind, k, config).bits for k in range(seg.start, seg.n + 1))
    rec.passed = not seg.falsified
    return rec


def cmd_breakpoints(args) -> OutputRecord:
    kind = _kind(args.kind)
    if args.count < 1:
        raise UsageError("count must be positive")
    found = breakpoints(kind, args.count, _config(args), budget=args.budget)
    rec = OutputRecord("breakpoints", {"kind": kind.value, "count": args.count}, precision=_precision(args))
    rec.results = {"breakpoints": found}
    return rec


def cmd_table(args) -> OutputRecord:
    if not 1 <= args.max_exponent <= 12:
        raise UsageError("max_exponent must be between 1 and 12")
    config = _config(args)
    records = [sigma(SeqKind.E_SEQ, 10**k, config) for k in range(1, args.max_exponent + 1)]
    rec = OutputRecord("table", {"max_exponent": args.max_exponent}, precision=_precision(args))
    rec.results = {"sigma_10^k": [r.sigma for r in records]}
    rec.precision["bits_used"] = max(r.bits for r in records)
    return rec


def cmd_scan(args) -> OutputRecord:
    if not 3 <= args.n_lo <= args.n_hi:
        raise UsageError("need 3 <= n_lo <= n_hi")
    if args.samples < 1:
        raise UsageError("samples must be positive")
    report = verify_range(args.n_lo, args.n_hi, args.samples, _config(args), args.guard, args.workers)
    rec = OutputRecord("scan", {"n_lo": args.n_lo, "n_hi": args.n_hi, "samples": args.samples},
                       precision=_precision(args))
    rec.results = {
        "predictions": report.predictions,
        "agreements": report.agreements,
        "disagreements": [str(a) for a in report.disagreements],
        "singleton_outside_nm1": [str(a) for a in report.singleton_outside_nm1],
        "unconfirmed": report.unconfirmed,
        "case_counts": dict(sorted(report.case_counts.items())),
        "lower_candidate_hits": dict(sorted(report.lower_candidate_hits.items())),
    }
    rec.passed = report.passed
    return rec


def cmd_certify(args) -> OutputRecord:
    names = [args.suite] if args.suite else None
    if args.suite and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(SUITES)}")
    results = run_suites(names, _config(args))
    rec = OutputRecord("certify", {"suite": args.suite or "all"}, precision=_precision(args))
    if args.json:
        rec.results = {"checks": [r.as_dict() for r in results]}
    else:
        lines = {}
        for i, r in enumerate(results, 1):
            text = f"{'PASS' if r.passed else 'FAIL'} [{r.suite}] {r.name}"
            if r.detail:
                text += f" ({r.detail})"
            for label, (lo, hi) in r.enclosures.items():
                text += f" {label} in [{lo}, {hi}]"
            lines[f"check {i:03d}"] = text
        rec.results = lines
    failed = [r for r in results if not r.passed]
    rec.results["total"] = len(results)
    rec.results["failed"] = len(failed)
    rec.passed = not failed
    return rec


COMMANDS = {
    "na": cmd_na,
    "sigma": cmd_sigma,
    "segment": cmd_segment,
    "breakpoints": cmd_breakpoints,
    "table": cmd_table,
    "scan": cmd_scan,
    "certify": cmd_certify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bits-start", type=int, default=128, help="initial working precision")
    common.add_argument("--bits-max", type=int, default=8192, help="precision ceiling")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="largest n for exact factorials")

    parser = argparse.ArgumentParser(prog="factpow", description=__doc__.splitlines()[0],
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("na", parents=[common], help="candidates for n_a (and the exact value)")
    p.add_argument("a", help='base a > 1, as "p/q", an integer, or a decimal')
    p.add_argument("--oracle", action=argparse.BooleanOptionalAction, default=True,
                   help="confirm with the exact big-integer oracle")

    for name, helptext in (("sigma", "resolve sigma_n"), ("segment", "segment sigma_{n-m}..sigma_n")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("kind", help="S_SEQ or E_SEQ")
        p.add_argument("n", type=int)

    p = sub.add_parser("breakpoints", parents=[common], help="first breakpoints n_i")
    p.add_argument("kind", help="S_SEQ or E_SEQ")
    p.add_argument("count", type=int)
    p.add_argument("--budget", type=int, default=10_000, help="max sigma evaluations")

    p = sub.add_parser("table", parents=[common], help="sigma_(10^k) for k = 1..max_exponent")
    p.add_argument("max_exponent", type=int, nargs="?", default=12)

    p = sub.add_parser("scan", parents=[common], help="verify predictions against the oracle")
    p.add_argument("n_lo", type=int)
    p.add_argument("n_hi", type=int)
    p.add_argument("--samples", type=int, default=2, help="samples per interval (n/e, (n+1)/e]")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("certify", parents=[common], help="run certification suites")
    p.add_argument("suite", nargs="?", default="", help=f"one of: {', '.join(SUITES)}")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rec = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.exit(EXIT_USAGE, f"factpow {args.command}: error: {exc}\n")
    except (GuardExceeded, BudgetExceeded, Unresolved, ArithmeticError, ValueError) as exc:
        print(f"factpow {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(rec.to_json() if args.json else rec.to_text())
    return EXIT_OK if rec.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
