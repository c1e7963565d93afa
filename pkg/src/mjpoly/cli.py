"""Command-line front end: coefficient tables, evaluation, Gram matrices and
the verification suites.

Exit codes: 0 success, 1 a verified identity failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .exact import PoleInGamma, format_rational, parse_rational
from .mpoly import MPolyKey, m_polynomial, m_zero_closed_form
from .ortho import gram_matrix, gram_to_csv
from .poly import Polynomial
from .report import Grid, run_suite
from .suites import DEFAULT_MUS, SUITE_NAMES

__all__ = [
    "main",
    "build_parser",
    "coeff_document",
    "coeffs_to_json",
    "coeffs_from_json",
    "latex_polynomial",
]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# --- coefficient documents -------------------------------------------------

def coeff_document(key: MPolyKey, poly: Polynomial | None = None) -> dict:
    poly = m_polynomial(key) if poly is None else poly
    return {
        "j": key.j,
        "ell": key.ell,
        "mu": format_rational(key.mu),
        "coeffs": [[str(c.numerator), str(c.denominator)] for c in poly.coeffs],
    }


def coeffs_to_json(key: MPolyKey, poly: Polynomial | None = None) -> str:
    return json.dumps(coeff_document(key, poly))


def coeffs_from_json(text: str) -> tuple[MPolyKey, Polynomial]:
    """Inverse of :func:`coeffs_to_json`."""
    doc = json.loads(text)
    key = MPolyKey(doc["j"], doc["ell"], parse_rational(doc["mu"]))
    poly = Polynomial(Fraction(int(n), int(d)) for n, d in doc["coeffs"])
    return key, poly


def _latex_number(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def latex_polynomial(p: Polynomial, var: str = "x") -> str:
    """Descending-degree LaTeX with ``\\frac{p}{q}`` coefficients."""
    parts = []
    for n in range(p.degree, -1, -1):
        c = p[n]
        if c == 0:
            continue
        mag = abs(c)
        power = "" if n == 0 else (var if n == 1 else f"{var}^{{{n}}}")
        body = _latex_number(mag) if (mag != 1 or n == 0) else ""
        body += power
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) or "0"


# --- argument parsing ----------------------------------------------------------

def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {n}")
    return n


def _positive_int(text: str) -> int:
    n = _nonneg_int(text)
    if n == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(_rational_arg(t) for t in text.split(",") if t.strip())


def _suite_list(text: str) -> tuple[str, ...]:
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    unknown = [n for n in names if n not in SUITE_NAMES]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown suite(s) {', '.join(unknown)}; choose from {','.join(SUITE_NAMES)}"
        )
    return names


def _add_key_args(p: argparse.ArgumentParser, mu_required: bool = True) -> None:
    p.add_argument("--j", type=_nonneg_int, required=True)
    p.add_argument("--ell", type=_nonneg_int, required=True)
    p.add_argument("--mu", type=_rational_arg, required=mu_required,
                   help='rational "p" or "p/q"; negative integers are poles')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mjpoly", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="ascending coefficient list of M_j^{mu,l}")
    _add_key_args(p)
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")

    p = sub.add_parser("eval", help="evaluate M_j^{mu,l} at a point")
    _add_key_args(p, mu_required=False)
    p.add_argument("--x", required=True, help="rational point (decimal with --float)")
    p.add_argument("--float", action="store_true", help="floating-point evaluation")

    p = sub.add_parser("gram", help="exact Gram matrix in units Gamma(mu-2l+1)")
    p.add_argument("--jmax", type=_nonneg_int, required=True)
    p.add_argument("--ell", type=_nonneg_int, required=True)
    p.add_argument("--mu", type=_rational_arg, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("latex", help="LaTeX table of M_0 .. M_jmax")
    p.add_argument("--jmax", type=_nonneg_int, required=True)
    p.add_argument("--ell", type=_nonneg_int, required=True)
    p.add_argument("--mu", type=_rational_arg, required=True)

    p = sub.add_parser("verify", help="run identity checks and print a JSON report")
    p.add_argument("--suites", type=_suite_list, default=SUITE_NAMES)
    p.add_argument("--jmax", type=_nonneg_int, default=8)
    p.add_argument("--ellmax", type=_nonneg_int, default=3)
    p.add_argument("--mus", type=_rational_list, default=DEFAULT_MUS)
    p.add_argument("--quad-panels", type=_positive_int, default=None)
    p.add_argument("--quad-order", type=_positive_int, default=None)
    p.add_argument("--timings", action="store_true", help="record wall time per entry (ms)")
    return parser


# --- subcommands ------------------------------------------------------------------

def _key(args) -> MPolyKey:
    try:
        return MPolyKey(args.j, args.ell, args.mu)
    except (PoleInGamma, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _cmd_coeffs(args, out) -> int:
    key = _key(args)
    poly = m_polynomial(key)
    if args.format == "json":
        out.write(coeffs_to_json(key, poly) + "\n")
    elif args.format == "csv":
        out.write("".join(f"{c.numerator},{c.denominator}\n" for c in poly.coeffs))
    else:
        out.write(latex_polynomial(poly) + "\n")
    return EXIT_OK


def _cmd_eval(args, out) -> int:
    if args.mu is None:
        # the bottom member does not depend on mu
        if args.j != 0:
            raise UsageError("--mu is required unless --j 0")
        poly = m_zero_closed_form(args.ell)
    else:
        poly = m_polynomial(_key(args))
    if args.float:
        try:
            x = float(args.x)
        except ValueError:
            raise UsageError(f"not a number: {args.x!r}") from None
        out.write(f"{poly.eval_float(x):.17g}\n")
    else:
        try:
            x = parse_rational(args.x)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out.write(format_rational(poly.eval_exact(x)) + "\n")
    return EXIT_OK


def _cmd_gram(args, out) -> int:
    try:
        MPolyKey(0, args.ell, args.mu)
        gram = gram_matrix(args.jmax, args.mu, args.ell)
    except (PoleInGamma, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        out.write(gram_to_csv(gram))
    else:
        doc = {
            "jmax": args.jmax,
            "ell": args.ell,
            "mu": format_rational(args.mu),
            "unit": f"Gamma({format_rational(args.mu - 2 * args.ell + 1)})",
            "gram": [[format_rational(v.value) for v in row] for row in gram],
        }
        out.write(json.dumps(doc) + "\n")
    return EXIT_OK


def _cmd_latex(args, out) -> int:
    mu_tex = _latex_number(args.mu)
    for j in range(args.jmax + 1):
        args.j = j
        poly = m_polynomial(_key(args))
        out.write(f"M_{{{j}}}^{{{mu_tex},{args.ell}}}(x) &= {latex_polynomial(poly)} \\\\\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    for mu in args.mus:
        if mu.denominator == 1 and mu < 0:
            raise UsageError(f"mu = {mu} is a pole")
    grid = Grid(
        suites=args.suites,
        jmax=args.jmax,
        ellmax=args.ellmax,
        mus=args.mus,
        quad_panels=args.quad_panels,
        quad_order=args.quad_order,
        timings=args.timings,
    )
    report = run_suite(grid)
    out.write(report.to_json() + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


COMMANDS = {
    "coeffs": _cmd_coeffs,
    "eval": _cmd_eval,
    "gram": _cmd_gram,
    "latex": _cmd_latex,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"mjpoly {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
