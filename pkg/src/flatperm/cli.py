"""Command-line interface.

Subcommands: ``distribution`` (one distribution polynomial, by recurrence
and/or brute force), ``table`` (avoider counts and exact averages for all
six patterns), ``series`` (generating-function coefficients), and ``verify``
(the named check suites).

Output is deterministic byte-for-byte for a given invocation: no
timestamps, fixed orderings, and big integers serialized as decimal
strings.  Exit status 0 on success, 1 when a verification suite fails,
2 on usage errors (including cap violations).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import closed_forms, perm_core, recurrences, series, verification
from .perm_core import DEFAULT_MAX_N, CapExceeded
from .qpoly import QPoly
from .recurrences import PatternId

RECURRENCE_MAX_N = 200
SERIES_MAX_ORDER = series.MAX_ORDER
ENV_BRUTE_CAP = "FLATPERM_MAX_N"

SERIES_CHOICES = ("g31_2_r0", "g31_2_r1", "g31_2_r2", "g31_2_r3",
                  "egf_21_3", "egf_12_3")
TABLE_ORDER = ("13-2", "31-2", "21-3", "32-1", "23-1", "12-3")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    format: str = "text"
    pattern: str | None = None
    n: int | None = None
    n_max: int | None = None
    method: str = "recurrence"
    order: int = series.DEFAULT_ORDER
    which: str | None = None
    suite: str | None = None
    out: str | None = None

    @property
    def brute_cap(self) -> int:
        raw = os.environ.get(ENV_BRUTE_CAP)
        if raw is None:
            return DEFAULT_MAX_N
        try:
            return int(raw)
        except ValueError:
            raise UsageError(f"{ENV_BRUTE_CAP} must be an integer, got {raw!r}")


def _coeff_map(poly: QPoly) -> dict[str, str]:
    return {str(i): str(c) for i, c in enumerate(poly.coeffs)}


def _fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def cmd_distribution(cfg: RunConfig) -> str:
    if cfg.n is None or cfg.n < 1:
        raise UsageError("distribution needs a positive --n")
    if cfg.pattern is None:
        raise UsageError("distribution needs --pattern")
    pattern = PatternId.from_string(cfg.pattern)
    results: dict[str, QPoly] = {}
    if cfg.method in ("recurrence", "both"):
        if cfg.n > RECURRENCE_MAX_N:
            raise UsageError(
                f"n={cfg.n} exceeds the recurrence cap {RECURRENCE_MAX_N}")
        results["recurrence"] = recurrences.distribution_table(
            pattern, cfg.n).g(cfg.n)
    if cfg.method in ("brute", "both"):
        try:
            results["brute"] = perm_core.brute_distribution(
                cfg.n, pattern.vincular(), max_n=cfg.brute_cap)
        except CapExceeded as exc:
            raise UsageError(str(exc))
    match = None
    if cfg.method == "both":
        match = results["recurrence"] == results["brute"]

    primary = results.get("recurrence", results.get("brute"))
    if cfg.format == "json":
        payload = {
            "command": "distribution",
            "pattern": pattern.value,
            "n": cfg.n,
            "method": cfg.method,
            "coefficients": _coeff_map(primary),
        }
        if cfg.method == "both":
            payload["brute_coefficients"] = _coeff_map(results["brute"])
            payload["match"] = match
        return json.dumps(payload, indent=2)
    if cfg.format == "csv":
        lines = ["pattern,n,source,exponent,coefficient"]
        for source in ("recurrence", "brute"):
            if source in results:
                for i, c in enumerate(results[source].coeffs):
                    lines.append(f"{pattern.value},{cfg.n},{source},{i},{c}")
        return "\n".join(lines)
    lines = [f"pattern {pattern.value}  n={cfg.n}  method={cfg.method}"]
    for source, poly in results.items():
        lines.append(f"{source}: {poly}")
        lines.extend(f"  q^{i}: {c}" for i, c in enumerate(poly.coeffs))
    if match is not None:
        lines.append(f"match: {'true' if match else 'false'}")
    return "\n".join(lines)


def cmd_table(cfg: RunConfig) -> str:
    if cfg.n_max is None or cfg.n_max < 1:
        raise UsageError("table needs a positive --n-max")
    if cfg.n_max > RECURRENCE_MAX_N:
        raise UsageError(
            f"n_max={cfg.n_max} exceeds the recurrence cap {RECURRENCE_MAX_N}")
    rows = []
    for key in TABLE_ORDER:
        for n in range(1, cfg.n_max + 1):
            avg = closed_forms.average_occurrences(key, n)
            rows.append((key, n, closed_forms.avoiders(key, n),
                         avg.numerator, avg.denominator))
    if cfg.format == "json":
        payload = {
            "command": "table",
            "n_max": cfg.n_max,
            "rows": [
                {"pattern": p, "n": n, "avoiders": str(a),
                 "average_num": str(num), "average_den": str(den)}
                for p, n, a, num, den in rows
            ],
        }
        return json.dumps(payload, indent=2)
    if cfg.format == "csv":
        lines = ["pattern,n,avoiders,average_num,average_den"]
        lines.extend(f"{p},{n},{a},{num},{den}" for p, n, a, num, den in rows)
        return "\n".join(lines)
    lines = [f"{'pattern':8} {'n':>3} {'avoiders':>14} {'average':>16} {'decimal':>12}"]
    for p, n, a, num, den in rows:
        lines.append(f"{p:8} {n:>3} {a:>14} {f'{num}/{den}':>16} "
                     f"{num / den:>12.6f}")
    return "\n".join(lines)


def cmd_series(cfg: RunConfig) -> str:
    if cfg.which not in SERIES_CHOICES:
        raise UsageError(f"--which must be one of {', '.join(SERIES_CHOICES)}")
    if cfg.order < 1:
        raise UsageError("order must be positive")
    if cfg.order > SERIES_MAX_ORDER:
        raise UsageError(
            f"order {cfg.order} exceeds the cap {SERIES_MAX_ORDER}")
    order = cfg.order
    if cfg.which.startswith("g31_2_r"):
        # the closed-form assembly needs a little working room
        expansion = series.expand_G_r_31_2(
            int(cfg.which[-1]), max(order, 4)).truncate(order)
    elif cfg.which == "egf_21_3":
        expansion = series.expand_egf_21_3_avoid(max(order, 2)).truncate(order)
    else:
        expansion = series.expand_egf_12_3_avoid(max(order, 2)).truncate(order)
    coeffs = expansion.coeffs
    if cfg.format == "json":
        return json.dumps({
            "command": "series",
            "which": cfg.which,
            "order": order,
            "coefficients": [_fraction_str(c) for c in coeffs],
        }, indent=2)
    if cfg.format == "csv":
        lines = ["which,exponent,coefficient"]
        lines.extend(f"{cfg.which},{i},{_fraction_str(c)}"
                     for i, c in enumerate(coeffs))
        return "\n".join(lines)
    lines = [f"{cfg.which} to order {order}"]
    lines.extend(f"  x^{i}: {c}" for i, c in enumerate(coeffs))
    return "\n".join(lines)


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    if cfg.suite is None:
        raise UsageError("verify needs --suite")
    try:
        report = verification.run_suite(cfg.suite, cfg.n_max)
    except ValueError as exc:
        raise UsageError(str(exc))
    status = 0 if report.ok else 1
    if cfg.format == "json":
        payload = {
            "command": "verify",
            "suite": cfg.suite,
            "ok": report.ok,
            "checks": [
                {"suite": r.suite, "name": r.name, "passed": r.passed,
                 "detail": r.detail}
                for r in report.results
            ],
        }
        return json.dumps(payload, indent=2), status
    if cfg.format == "csv":
        lines = ["suite,name,passed"]
        lines.extend(
            f"{r.suite},{r.name.replace(',', ';')},{str(r.passed).lower()}"
            for r in report.results)
        return "\n".join(lines), status
    return "\n".join(report.lines()), status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flatperm",
        description="Exact distributions of adjacent-pair pattern "
                    "occurrences over flattened permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default="text")
        p.add_argument("--out", metavar="PATH",
                       help="write the output to PATH instead of stdout")

    p = sub.add_parser("distribution",
                       help="distribution polynomial g_n(q) for one pattern")
    p.add_argument("--pattern", required=True,
                   choices=[m.value for m in PatternId])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("brute", "recurrence", "both"),
                   default="recurrence")
    add_common(p)

    p = sub.add_parser("table",
                       help="avoider counts and exact averages, six patterns")
    p.add_argument("--n-max", type=int, required=True)
    add_common(p)

    p = sub.add_parser("series", help="generating-function coefficients")
    p.add_argument("--which", required=True, choices=SERIES_CHOICES)
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER)
    add_common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=verification.SUITES + ("all",))
    p.add_argument("--n-max", type=int, default=None,
                   help="exhaustive bound for the brute-force comparisons")
    add_common(p)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        format=args.format,
        pattern=getattr(args, "pattern", None),
        n=getattr(args, "n", None),
        n_max=getattr(args, "n_max", None),
        method=getattr(args, "method", "recurrence"),
        order=getattr(args, "order", series.DEFAULT_ORDER),
        which=getattr(args, "which", None),
        suite=getattr(args, "suite", None),
        out=args.out,
    )
    try:
        if cfg.command == "distribution":
            output, status = cmd_distribution(cfg), 0
        elif cfg.command == "table":
            output, status = cmd_table(cfg), 0
        elif cfg.command == "series":
            output, status = cmd_series(cfg), 0
        else:
            output, status = cmd_verify(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as handle:
            handle.write(output + "\n")
    else:
        print(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
