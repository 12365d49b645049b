"""Command-line front end.

Exit codes: 0 holds, 1 fails, 2 not comparable, 3 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .closedform import HALF, calibrate_point
from .corpus import run_suite
from .functional import IntervalSpec
from .oracle import default_family, hinge_sweep, numeric_cross_check
from .ordering import Verdict, compare, crossing_profile
from .serialization import SpecError, certificate_to_json, load_spec, parse_rational

EXIT = {Verdict.HOLDS: 0, Verdict.FAILS: 1, Verdict.NOT_COMPARABLE: 2}
INPUT_ERROR = 3

SCAN_HEADER = [
    "a", "alpha", "b", "verdict",
    "cond_i_printed", "cond_ii_printed", "cond_ii_swapped",
    "agree_i", "agree_ii", "agree_ii_swapped",
]


def _join(xs) -> str:
    return " ".join(str(x) for x in xs)


def _describe_witness(w) -> str:
    if w.kind == "hinge":
        return f"hinge (u - {w.t})_+, violation {w.violation}"
    what = "u" if w.kind == "affine" else "1"
    sign = "" if w.sign > 0 else "-"
    return f"{w.kind} {sign}{what}, violation {w.violation}"


def cmd_check(args, out) -> int:
    spec = load_spec(args.spec)
    cert = compare(spec.lhs, spec.rhs)
    if args.json:
        json.dump(certificate_to_json(cert), out, indent=2)
        out.write("\n")
        return EXIT[cert.verdict]
    out.write(f"verdict: {cert.verdict.value}\n")
    out.write(f"mass: lhs={cert.mass_lhs} rhs={cert.mass_rhs}\n")
    out.write(f"mean: lhs={cert.mean_lhs} rhs={cert.mean_rhs}\n")
    if cert.profile is not None:
        out.write(f"crossings: {_join(cert.profile.crossings) or '-'}\n")
        out.write(f"areas: {_join(cert.profile.areas) or '-'}\n")
        out.write(f"partial sums: {_join(cert.partial_sums) or '-'}\n")
        t, v = cert.min_prefix
        out.write(f"min prefix integral: {v} at t={t}\n")
    if cert.witness is not None:
        out.write(f"witness: {_describe_witness(cert.witness)}\n")
    return EXIT[cert.verdict]


def cmd_crossings(args, out) -> int:
    spec = load_spec(args.spec)
    prof = crossing_profile(spec.lhs.transform, spec.rhs.transform)
    if not prof.crossings:
        out.write("no crossings\n")
    else:
        out.write(f"crossings: {_join(prof.crossings)}; areas: {_join(prof.areas)}\n")
    for lo, hi in prof.zero_intervals:
        out.write(f"zero interval: [{lo}, {hi}]\n")
    return 0


def cmd_suite(args, out) -> int:
    result = run_suite()
    if args.json:
        rows = [
            {
                "id": r.item.id,
                "claim": r.item.claim,
                "computed": r.verdict.value,
                "expected": r.item.expected.value,
                "agree": r.agrees_with_claim,
            }
            for r in result.rows
        ]
        json.dump({"rows": rows, "errata": list(result.errata), "ok": result.ok}, out, indent=2)
        out.write("\n")
        return 0 if result.ok else 1
    width = max(len(r.item.id) for r in result.rows)
    out.write(f"{'id':<{width}}  {'claim':<6}  {'computed':<14}  agree\n")
    for r in result.rows:
        agree = {True: "yes", False: "DISAGREE", None: "-"}[r.agrees_with_claim]
        flag = "" if r.matches_expected else "  (UNEXPECTED)"
        out.write(f"{r.item.id:<{width}}  {r.item.claim or '-':<6}  {r.verdict.value:<14}  {agree}{flag}\n")
    out.write("\nerrata:\n")
    for line in result.errata:
        out.write(f"  {line}\n")
    return 0 if result.ok else 1


def _grid(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    out = []
    v = lo
    while v <= hi:
        out.append(v)
        v += step
    return out


def _range(text: str, name: str) -> tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise SpecError(f"--{name}: expected LO:HI, got {text!r}")
    return parse_rational(lo, f"--{name} lower bound"), parse_rational(hi, f"--{name} upper bound")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, Verdict):
        return v.value
    return str(v)


def scan_rows(a_values, alpha_values) -> list[list[str]]:
    rows = []
    for a in a_values:
        for alpha in alpha_values:
            r = calibrate_point(a, alpha)
            rows.append([
                _cell(r.a), _cell(r.alpha), _cell(r.b), _cell(r.verdict),
                _cell(r.cond_i), _cell(r.cond_ii), _cell(r.cond_ii_swapped),
                _cell(r.agree_i), _cell(r.agree_ii), _cell(r.agree_ii_swapped),
            ])
    return rows


def cmd_scan(args, out) -> int:
    if args.family != "symmetric":
        raise SpecError(f"--family: only 'symmetric' is supported, got {args.family!r}")
    a_lo, a_hi = _range(args.a_range, "a-range")
    al_lo, al_hi = _range(args.alpha_range, "alpha-range")
    step = parse_rational(args.step, "--step")
    a_step = parse_rational(args.a_step, "--a-step") if args.a_step else step
    al_step = parse_rational(args.alpha_step, "--alpha-step") if args.alpha_step else step
    if a_step <= 0 or al_step <= 0:
        raise SpecError("step sizes must be positive")
    a_values = _grid(a_lo, a_hi, a_step)
    alpha_values = _grid(al_lo, al_hi, al_step)
    if alpha_values and not (0 < alpha_values[0] and alpha_values[-1] < HALF):
        raise SpecError("--alpha-range must lie inside (0, 1/2)")
    buf = io.StringIO(newline="")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCAN_HEADER)
    writer.writerows(scan_rows(a_values, alpha_values))
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    return 0


def cmd_oracle(args, out) -> int:
    spec = load_spec(args.spec)
    iv = spec.interval
    if args.interval:
        x, _, y = args.interval.partition(",")
        try:
            iv = IntervalSpec(parse_rational(x, "--interval x"), parse_rational(y, "--interval y"))
        except ValueError as exc:
            raise SpecError(f"--interval: {exc}") from None
    cert = compare(spec.lhs, spec.rhs)
    out.write(f"verdict: {cert.verdict.value}\n")
    if spec.lhs.mass != spec.rhs.mass:
        out.write(f"constant-function gap: {spec.lhs.mass - spec.rhs.mass}\n")
    elif spec.lhs.mean != spec.rhs.mean:
        out.write(f"affine (u) gap: {spec.rhs.mean - spec.lhs.mean}\n")
    else:
        v, t = hinge_sweep(spec.lhs, spec.rhs)
        out.write(f"exact max hinge violation: {v} at t={t}\n")
    report = numeric_cross_check(spec.lhs, spec.rhs, default_family(args.grid), iv)
    out.write(
        f"numeric max difference on [{iv.x}, {iv.y}]: {report.max_diff:.3e} ({report.argmax}, "
        f"{len(report.diffs)} test functions)\n"
    )
    return EXIT[cert.verdict]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hhcert", description="Exact convex-order certificates for Hermite-Hadamard-type inequalities.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide lhs <= rhs for all convex f")
    c.add_argument("spec", help="path to a JSON spec or inline JSON")
    c.add_argument("--json", action="store_true", help="emit the full certificate as JSON")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("crossings", help="print crossing points and areas")
    c.add_argument("spec")
    c.set_defaults(func=cmd_crossings)

    c = sub.add_parser("suite", aliases=["paper-suite"], help="run the regression corpus")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_suite)

    c = sub.add_parser("scan", help="scan the symmetric four-node family and write CSV")
    c.add_argument("--family", default="symmetric")
    c.add_argument("--a-range", required=True, help="LO:HI (rational)")
    c.add_argument("--alpha-range", required=True, help="LO:HI inside (0, 1/2)")
    c.add_argument("--step", default="1/10", help="grid step for both axes")
    c.add_argument("--a-step")
    c.add_argument("--alpha-step")
    c.add_argument("--out", "-o", help="CSV path (default stdout)")
    c.set_defaults(func=cmd_scan)

    c = sub.add_parser("oracle", help="exact hinge sweep plus floating cross-check")
    c.add_argument("spec")
    c.add_argument("--grid", type=int, default=50, help="number of hinge test functions")
    c.add_argument("--interval", help="x,y (overrides the spec's interval)")
    c.set_defaults(func=cmd_oracle)
    return p


# options whose values routinely start with "-" (negative ranges and intervals)
_SIGNED_OPTIONS = ("--a-range", "--alpha-range", "--interval")


def _glue_signed(argv: Sequence[str]) -> list[str]:
    # argparse reads "-3:3" as an option; rewrite "--a-range -3:3" to "--a-range=-3:3"
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _SIGNED_OPTIONS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = parser.parse_args(_glue_signed(argv))
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else 0
    try:
        return args.func(args, out)
    except SpecError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
