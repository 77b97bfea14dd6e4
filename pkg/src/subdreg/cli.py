"""Command-line interface.

    subdreg analyze --family primal:3,2
    subdreg analyze --mask "3/256,0,-25/256,0,150/256,1,150/256,0,-25/256,0,3/256" --offset -5
    subdreg table primal 8 [--csv | --json]
    subdreg compare primal:2,1 primal:3,2
    subdreg simulate primal:3,2 --jmax 30 --check-lemma2

Exit codes: 0 success, 1 input error, 2 method inapplicable, 3 enclosure failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple

from . import __version__
from .comparisons import compare as compare_families
from .comparisons import gap_bound, min_ratio_constant
from .documents import (
    dumps,
    format_gamma,
    load_mask_file,
    parse_coeffs,
    provenance,
    q2s,
    report_to_dict,
    table_to_dict,
)
from .errors import EnclosureTooWide, InputError, MethodInapplicable, NotSymmetric, OddCenter
from .families import FamilyId, Kind
from .laurent import LaurentPoly
from .polyq import to_str
from .regularity import RegularityReport, analyze, regularity_table
from .subdivision import cardinal_samples, central_sequence, max_center_check

EXIT_OK, EXIT_INPUT, EXIT_INAPPLICABLE, EXIT_ENCLOSURE = 0, 1, 2, 3
MAX_CENTER_DEPTH = 12


def resolve_spec(text: str) -> Tuple[LaurentPoly, Optional[FamilyId], str]:
    """A family spec ``kind:m,l`` or a path to a mask file."""
    if ":" in text and not Path(text).exists():
        fid = FamilyId.parse(text)
        return fid.symbol(), fid, str(fid)
    return load_mask_file(text), None, text


def _symbol_from_args(args) -> Tuple[LaurentPoly, Optional[FamilyId], str]:
    given = [x is not None for x in (args.family, args.mask, args.mask_file)]
    if sum(given) != 1:
        raise InputError("give exactly one of --family, --mask, --mask-file")
    if args.family is not None:
        fid = FamilyId.parse(args.family)
        return fid.symbol(), fid, str(fid)
    if args.mask is not None:
        poly = LaurentPoly(parse_coeffs(args.mask), args.offset)
        if poly.is_zero():
            raise InputError("mask is identically zero")
        return poly, None, f"mask {args.mask} @ {args.offset}"
    return load_mask_file(args.mask_file), None, args.mask_file


def _summary(rep: RegularityReport) -> str:
    lines = [
        f"symbol           : offset {rep.symbol.low}, ({', '.join(q2s(c) for c in rep.symbol.coeffs)})",
        f"factorization    : a(z) = 2^-{rep.r} (1+z)^{rep.r + 1} b(z)   "
        f"[(1+z) multiplicity {rep.multiplicity}]",
        f"difference mask  : p = {rep.p}, b = {rep.mask}",
        f"B(s), s=sin^2    : {rep.s_poly}   [{rep.positivity.kind.value}]",
    ]
    if rep.positivity.witness is not None:
        lo, hi = rep.positivity.witness
        lines.append(f"witness interval : [{lo}, {hi}]")
    if rep.matrix is not None:
        lines.append(f"folded matrix    : {rep.matrix}")
    lines.append(f"det(M - t I)     : {to_str(rep.rho.charpoly, 't')}")
    lines.append(f"rho              : {rep.rho.estimate!r} +/- {rep.rho.radius_bound:.3g}")
    if rep.gamma is None:
        lines.append("gamma            : n/a (method inapplicable)")
    else:
        tag = "optimal: exact regularity" if rep.optimal else "lower bound"
        lines.append(f"gamma = r - log2(rho) : {format_gamma(rep.gamma)}   ({tag})")
    for note in rep.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    symbol, _, desc = _symbol_from_args(args)
    rep = analyze(symbol, r=args.holds_derived)
    if args.json:
        print(dumps({"report": report_to_dict(rep), "provenance": provenance(desc, symbol)}))
    else:
        print(_summary(rep))
    return EXIT_OK if rep.applicable else EXIT_INAPPLICABLE


def _table_text(kind: str, m_max: int, reports) -> str:
    width = 10
    head = " " * 6 + "".join(f"{'l=' + str(l):>{width}}" for l in range(1, m_max))
    lines = [f"Regularities for {kind} pseudo-splines", head]
    for m in range(2, m_max + 1):
        row = f"{'m=' + str(m):<6}"
        for l in range(1, m):
            rep = reports[(m, l)]
            row += f"{format_gamma(rep.gamma, rep.integer_exponent_caveat):>{width}}"
        lines.append(row)
    return "\n".join(lines)


def cmd_table(args) -> int:
    m_max = args.mmax if args.mmax is not None else args.m_max
    if m_max < 2:
        raise InputError("m_max must be >= 2")
    reports = {k: v for k, v in regularity_table(Kind(args.kind), m_max).items() if k[0] >= 2}
    doc = table_to_dict(args.kind, m_max, reports)
    if args.json:
        print(dumps(doc))
    elif args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "l", "gamma", "formatted", "rho", "optimal"])
        for e in doc["entries"]:
            writer.writerow([e["m"], e["l"], repr(e["gamma"]), e["formatted"], repr(e["rho"]), e["optimal"]])
        sys.stdout.write(buf.getvalue())
    else:
        print(_table_text(args.kind, m_max, reports))
    return EXIT_OK


def cmd_compare(args) -> int:
    sym_a, fid_a, desc_a = resolve_spec(args.spec_a)
    sym_b, fid_b, desc_b = resolve_spec(args.spec_b)
    if fid_a is not None and fid_b is not None:
        res = compare_families(fid_a, fid_b)
        c_star, c_thm, statement, r_a, r_b = res.c_star, res.c_theorem, res.statement, res.r, res.r_tilde
    else:
        rep_a, rep_b = analyze(sym_a), analyze(sym_b)
        c_star = min_ratio_constant(rep_b.s_poly, rep_a.s_poly)
        c_thm, statement, r_a, r_b = None, None, rep_a.r, rep_b.r
    c_used = max(c_star.lower, Fraction(1))
    gap = gap_bound(c_used, r_a, r_b)
    doc = {
        "a": desc_a,
        "b": desc_b,
        "c_star": {
            "value": c_star.value,
            "lower": q2s(c_star.lower),
            "upper": q2s(c_star.upper),
            "exact": None if c_star.exact is None else q2s(c_star.exact),
            "argmax": [q2s(c_star.argmax[0]), q2s(c_star.argmax[1])],
        },
        "r": r_a,
        "r_tilde": r_b,
        "gap_bound": gap,
        "statement": statement,
        "c_theorem": None if c_thm is None else q2s(c_thm),
        "gap_bound_theorem": None if c_thm is None else gap_bound(c_thm, r_a, r_b),
    }
    if args.json:
        doc["provenance"] = provenance(f"{desc_a} vs {desc_b}")
        print(dumps(doc))
        return EXIT_OK
    exact = f" = {c_star.exact}" if c_star.exact is not None else f" +/- {c_star.radius:.3g}"
    print(f"B_b(s) <= C B_a(s) on [0,1] with smallest C = {c_star.value!r}{exact}")
    print(f"  attained at s in [{c_star.argmax[0]}, {c_star.argmax[1]}]")
    print(f"gamma(b) >= gamma(a) + {r_b} - {r_a} - log2(C) = gamma(a) + {format_gamma(gap)}")
    if statement is not None:
        print(f"matches {statement} with closed-form C = {c_thm} "
              f"(bound gamma(a) + {format_gamma(doc['gap_bound_theorem'])})")
    return EXIT_OK


def cmd_simulate(args) -> int:
    symbol, _, desc = resolve_spec(args.spec)
    rep = analyze(symbol)
    b = rep.mask
    seq = central_sequence(b, args.jmax)
    ratios = [None] + [float(seq[j] / seq[j - 1]) if seq[j - 1] else None for j in range(1, len(seq))]
    roots = [None] + [float(seq[j]) ** (1.0 / j) if seq[j] > 0 else None for j in range(1, len(seq))]
    rho = rep.rho.estimate
    last = ratios[-1] if len(ratios) > 1 else None
    doc = {
        "input": desc,
        "p": b.p,
        "jmax": args.jmax,
        "central": [q2s(x) for x in seq],
        "ratio_estimates": ratios,
        "root_estimates": roots,
        "rho_algebraic": rho,
        "rho_difference": None if last is None else last - rho,
    }
    center_depth = None
    if args.check_lemma2:
        center_depth = min(args.jmax, MAX_CENTER_DEPTH)
        doc["center_check"] = {"depth": center_depth, "max_at_center": max_center_check(b, center_depth)}
    if args.samples_csv:
        samples = cardinal_samples(symbol, args.levels)
        with open(args.samples_csv, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["x", "value"])
            for x, v in zip(samples.points(), samples.values):
                writer.writerow([repr(float(x)), repr(float(v))])
        doc["samples_csv"] = args.samples_csv
    if args.json:
        doc["provenance"] = provenance(desc, symbol)
        print(dumps(doc))
        return EXIT_OK
    print(f"central coefficients b_(j,0), p = {b.p}")
    print(f"{'j':>3}  {'b_(j,0)':>24}  {'ratio':>20}")
    for j, (x, ratio) in enumerate(zip(seq, ratios)):
        print(f"{j:>3}  {float(x):>24.16g}  {'' if ratio is None else repr(ratio):>20}")
    print(f"algebraic rho      : {rho!r}")
    if last is not None:
        print(f"ratio estimate     : {last!r} (difference {last - rho:.3g})")
        print(f"root estimate      : {roots[-1]!r}")
    if center_depth is not None:
        verdict = "PASS (exact)" if doc["center_check"]["max_at_center"] else "FAIL"
        print(f"max at center: {verdict} for j <= {center_depth}")
    if args.samples_csv:
        print(f"cardinal samples (level {args.levels}) written to {args.samples_csv}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subdreg", description=__doc__.splitlines()[0] if __doc__ else None)
    parser.add_argument("--version", action="version", version=f"subdreg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="regularity report for one symbol")
    p.add_argument("--family", help="family spec such as primal:3,2 or dual:4,3")
    p.add_argument("--mask", help="comma-separated coefficients, e.g. '1/4,3/4,3/4,1/4'")
    p.add_argument("--offset", type=int, default=0, help="exponent of the first --mask coefficient")
    p.add_argument("--mask-file", help="JSON file with 'coeffs' and 'offset'")
    p.add_argument("--holds-derived", type=int, default=None, metavar="R",
                   help="use this r instead of the maximal factorization")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table", help="regularity table of a pseudo-spline family")
    p.add_argument("kind", choices=[k.value for k in Kind])
    p.add_argument("m_max", type=int, nargs="?", default=8)
    p.add_argument("--mmax", type=int, default=None)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("compare", help="bound gamma(b) - gamma(a) from B_b <= C B_a")
    p.add_argument("spec_a")
    p.add_argument("spec_b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("simulate", help="central coefficients, rho estimates, max-at-center check")
    p.add_argument("spec")
    p.add_argument("--jmax", type=int, default=40)
    p.add_argument("--check-lemma2", action="store_true")
    p.add_argument("--samples-csv", default=None, help="write cardinal samples to this CSV file")
    p.add_argument("--levels", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotSymmetric, OddCenter, MethodInapplicable) as exc:
        print(f"error: method inapplicable: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EnclosureTooWide as exc:
        print(f"error: {exc} (best effort rho = {exc.estimate!r} +/- {exc.radius_bound!r})", file=sys.stderr)
        return EXIT_ENCLOSURE


if __name__ == "__main__":
    sys.exit(main())
