"""Command-line interface.

Exit status: 0 on success, 1 when an identity check fails (the report is
still written), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import conversions, cumulants, polynomials, suites, wire
from .errors import DomainError, IntegrityError, UsageError
from .series import Family, family_egf
from .triangles import triangle

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

FAMILY_NAMES = [f.value for f in Family]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return v


def _rational(text: str):
    try:
        return wire.parse_rational(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tanhlah", description="Exact Stirling, tanh and Lah number computations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", help="dump rows 0..N of a triangle")
    p.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p.add_argument("--n", required=True, type=_nonneg)
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("convert", help="evaluate a conversion rule over rows 0..N")
    p.add_argument("--rule", required=True, choices=sorted(conversions.RULES))
    p.add_argument("--n", required=True, type=_nonneg)

    p = sub.add_parser("poly", help="sigma, delta or lambda polynomial coefficients")
    p.add_argument("--family", required=True, choices=sorted(polynomials.POLY_FAMILIES))
    p.add_argument("--k", required=True, type=_nonneg)
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("series", help="column generating function coefficients")
    p.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p.add_argument("--m", required=True, type=_nonneg)
    p.add_argument("--order", required=True, type=_nonneg)

    p = sub.add_parser("cumulants", help="matched shifted-gamma / negative binomial cumulants")
    p.add_argument("--r", required=True, type=_rational)
    p.add_argument("--lambda", dest="lam", required=True, type=_rational)
    p.add_argument("--n", required=True, type=_nonneg)
    p.add_argument("--check-reciprocity", action="store_true")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", required=True, choices=[*suites.SUITES, "all"])
    p.add_argument("--n-max", required=True, type=_nonneg)
    return parser


def _report_record(r) -> dict:
    return {
        "identity": r.identity,
        "checked": r.checked,
        "ok": r.ok,
        "comparisons": r.count,
        "mismatches": [{"index": idx, "lhs": lhs, "rhs": rhs} for idx, lhs, rhs in r.mismatches],
    }


def _color(text: str, ok: bool) -> str:
    if os.environ.get("NO_COLOR") or not sys.stderr.isatty():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _cmd_table(args, out) -> int:
    fam = Family.parse(args.family)
    rows = triangle(fam).rows(args.n)
    out.write(wire.table_csv(fam, rows) if args.format == "csv" else wire.table_json(fam, rows))
    return EXIT_OK


def _cmd_convert(args, out) -> int:
    rule = conversions.get_rule(args.rule)
    rows = [[conversions.convert_entry(rule, n, m) for m in range(n + 1)] for n in range(args.n + 1)]
    expected = triangle(rule.target).rows(args.n)
    ok = rows == expected
    out.write(wire.dumps({
        "rule": rule.id,
        "formula": rule.formula,
        "target": rule.target,
        "partner": rule.partner,
        "rows": rows,
        "matches_target": ok,
    }))
    return EXIT_OK if ok else EXIT_MISMATCH


def _cmd_poly(args, out) -> int:
    p = polynomials.poly(args.family, args.k)
    record = {
        "family": args.family,
        "k": args.k,
        "form": "x*P_0(x)" if args.k == 0 else "P_k(x)",
        "coeffs": p,
        "degree": p.degree,
        "leading": p.leading,
    }
    if args.format == "json":
        out.write(wire.dumps(record))
    else:
        terms = [f"{wire.fmt(c)}*x^{i}" for i, c in enumerate(p.coeffs) if c]
        out.write(f"{args.family}_{args.k}(x) = {' + '.join(terms) or '0'}\n")
    return EXIT_OK


def _cmd_series(args, out) -> int:
    s = family_egf(args.family, args.m, args.order)
    out.write(wire.dumps({
        "family": args.family,
        "m": args.m,
        "order": args.order,
        "coeffs": s,
        "egf_values": s.egf_values(),
    }))
    return EXIT_OK


def _cmd_cumulants(args, out) -> int:
    nb = cumulants.NegBinParams(args.r, args.lam)
    sg = cumulants.match_nb_to_sg(nb)
    n = max(args.n, 1)
    record = {
        "negative_binomial": {"r": nb.r, "lambda": nb.lam},
        "shifted_gamma": {"a": sg.a, "b": sg.b, "c": sg.c},
        "nb_cumulants": list(cumulants.nb_cumulants(nb, n).values),
        "sg_cumulants": list(cumulants.sg_cumulants(sg, n).values),
    }
    status = EXIT_OK
    if args.check_reciprocity:
        rep = cumulants.reciprocity_check(nb.r, nb.lam, max(n - 1, 0))
        record["reciprocity"] = _report_record(rep)
        status = EXIT_OK if rep.ok else EXIT_MISMATCH
    out.write(wire.dumps(record))
    return status


def _cmd_verify(args, out) -> int:
    reports = suites.run_suite(args.suite, args.n_max)
    ok = all(r.ok for r in reports)
    out.write(wire.dumps({
        "suite": args.suite,
        "n_max": args.n_max,
        "ok": ok,
        "reports": [_report_record(r) for r in reports],
    }))
    for r in reports:
        print(_color(r.summary(), r.ok), file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {
    "table": _cmd_table,
    "convert": _cmd_convert,
    "poly": _cmd_poly,
    "series": _cmd_series,
    "cumulants": _cmd_cumulants,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, DomainError) as exc:
        print(f"tanhlah: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IntegrityError as exc:
        print(f"tanhlah: integrity failure: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


def main() -> None:
    sys.exit(run())
