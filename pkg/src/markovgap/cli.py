"""Command-line surface tying the modules together.

Subcommands: markov-value, extremal, gap-constant, verify-cover, dim,
report.  Exit status is 0 iff every verdict along the way passed.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .catalog import GAUSS_SETS
from .cf import approx
from .cover import builtin_cases, get_case, load_case, min_admissible_s, verify_case
from .extremal import extremal_value, gap_constant
from .gauss import GaussSystem
from .jp import estimate_dimension
from .markov import markov_value
from .pressure import pressure_bracket
from .report import assemble
from .sft import load_spec
from .surd import Surd, SurdSum
from .words import format_word, parse_word


def _parse_bound(text: str) -> SurdSum:
    text = text.strip()
    if text.startswith("sqrt(") and text.endswith(")"):
        return SurdSum.of(Surd.sqrt_int(int(text[5:-1])))
    return SurdSum.of(Fraction(text))


def cmd_markov_value(args) -> int:
    period = parse_word(args.period)
    mv = markov_value(period)
    enc = approx(mv.value, args.precision // 2, args.precision)
    print(f"markov value of ({format_word(period)})^inf: {mv.value}")
    print(f"  enclosure: {enc.decimal_str(args.precision // 2)}")
    print(f"  attained at shift position {mv.position}")
    return 0


def cmd_extremal(args) -> int:
    spec = load_spec(args.spec_file)
    which = "min" if args.min else "max"
    res = extremal_value(spec, which, prefix=parse_word(args.prefix or ""))
    enc = res.value.enclosure(args.precision)
    pre, per = res.witness
    witness = f"[0; {format_word(pre)}, ({format_word(per)})^inf]"
    print(f"{which} of K({spec.describe()}): {res.value}")
    print(f"  witness {witness}")
    print(f"  enclosure: {enc.decimal_str(args.precision // 2)}")
    return 0


def cmd_gap_constant(args) -> int:
    B = load_spec(args.B_file)
    C = load_spec(args.C_file)
    gc = gap_constant(B, C)
    enc = gc.enclosure(args.precision)
    print(f"c(B, C) = {gc.value}")
    print(f"  enclosure: {enc.decimal_str(args.precision // 2)}")
    print(f"  worst junction letter: {gc.best.letter}")
    if args.below:
        bound = _parse_bound(args.below)
        ok = gc.value.compare(bound) < 0
        print(f"  certified < {args.below}: {'PASS' if ok else 'FAIL'}")
        return 0 if ok else 1
    return 0


def cmd_verify_cover(args) -> int:
    if args.case in {c.name for c in builtin_cases()}:
        case = get_case(args.case)
    else:
        case = load_case(args.case)
    cert = verify_case(case, digits=args.precision)
    status = "PASS" if cert.verdict else "FAIL"
    print(f"case {case.name} at s = {case.s_target}: {status}")
    print(f"  worst rule sum <= {float(cert.margin):.9f}")
    for rule, enc in zip(cert.term_maxima, cert.rule_sums):
        terms = " + ".join(format_word(t.fn.extension) for t in rule)
        print(f"  rule [{terms}]: sum <= {float(enc.hi):.9f}")
    if args.find_s:
        s_star = min_admissible_s(case.rules, Fraction(1, 10 ** 6), digits=args.precision)
        print(f"  minimal admissible s <= {float(s_star):.6f}")
    return 0 if cert.verdict else 1


def cmd_dim(args) -> int:
    if args.spec_file in GAUSS_SETS:
        spec = GAUSS_SETS[args.spec_file]
    else:
        spec = load_spec(args.spec_file)
    sys_ = GaussSystem(spec)
    est = estimate_dimension(sys_, order=args.order)
    print(
        f"dim {sys_.name}: {float(est.value):.9f} "
        f"(order {est.order}, residual {float(est.residual):.2e}) [{est.method}]"
    )
    bracket = pressure_bracket(sys_, args.oracle_depth)
    inside = bracket.contains(est.value)
    print(
        f"  oracle bracket depth {bracket.depth}: "
        f"[{bracket.lower:.6f}, {bracket.upper:.6f}] [{bracket.method}]"
    )
    print(f"  estimate inside bracket: {'PASS' if inside else 'FAIL'}")
    return 0 if inside else 1


def cmd_report(args) -> int:
    rep = assemble(mode=args.mode, precision=args.precision, threads=args.threads)
    if args.format == "structured":
        sys.stdout.write(rep.to_json())
    else:
        sys.stdout.write(rep.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markovgap",
        description="exact continued-fraction certificates and dimension reports",
    )
    parser.add_argument("--precision", type=int, default=50, help="working decimal digits")
    parser.add_argument("--threads", type=int, default=1, help="worker threads for assembly")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("markov-value", help="Markov value of a periodic sequence")
    p.add_argument("period", help="period digits, e.g. 2 or 2211 or 2,2,1,1")
    p.set_defaults(func=cmd_markov_value)

    p = sub.add_parser("extremal", help="extremal value of a shift's Cantor set")
    p.add_argument("spec_file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--min", action="store_true")
    g.add_argument("--max", action="store_true")
    p.add_argument("--prefix", help="digit prefix constraint")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("gap-constant", help="junction constant c(B, C)")
    p.add_argument("B_file")
    p.add_argument("C_file")
    p.add_argument("--below", help="certify the constant below this bound, e.g. sqrt(10)")
    p.set_defaults(func=cmd_gap_constant)

    p = sub.add_parser("verify-cover", help="verify a covering case")
    p.add_argument("case", help="builtin case name (4.1 .. 5.5) or case file")
    p.add_argument("--find-s", action="store_true", help="also bisect the minimal exponent")
    p.set_defaults(func=cmd_verify_cover)

    p = sub.add_parser("dim", help="dimension estimate plus oracle bracket")
    p.add_argument("spec_file", help="catalog set name or spec file")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--oracle-depth", type=int, default=8)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("report", help="assemble the global bound")
    p.add_argument("--mode", choices=["rigorous", "heuristic"], default="rigorous")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
