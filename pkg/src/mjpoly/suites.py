"""Registered identity checks, one function per suite name.

Each suite maps a :class:`~mjpoly.report.Grid` to a report.  A check that
raises is recorded as a failing entry carrying the exception text, so a
suite never aborts half way.
"""
from __future__ import annotations

import dataclasses
import math
from fractions import Fraction
from typing import Callable, Iterator

from .diffop import (
    d_symmetry_check,
    eigen_residual,
    expected_indicial_roots,
    indicial_roots,
    involution_check,
    conjugation_identity_check,
)
from .exact import PoleInGamma, UnreducibleRatio, format_rational
from .genfun import m_from_series
from .mpoly import (
    MPolyKey,
    build_via_ell_recurrence,
    constant_term,
    constant_term_float,
    laguerre,
    laguerre_identity_suite,
    m_polynomial,
    three_term_impossibility,
    verify_recurrence,
)
from .ortho import gram_matrix, in_asserted_range, norm_squared_formula
from .report import Entry, Grid, VerificationReport, make_entry, stopwatch

__all__ = ["SUITES", "SUITE_NAMES", "DEFAULT_MUS"]

DEFAULT_MUS = tuple(Fraction(m) for m in ("1", "3", "5", "7", "2", "5/2", "-1/2"))

INTEGRAL_JMAX = 4
INTEGRAL_ELLMAX = 2
HANKEL_JMAX = 4
NUMERIC_RTOL = 1e-6
CROSS_PATH_RTOL = 1e-9
CONSTANT_TERM_RTOL = 1e-10


def _x_label(x: Fraction) -> str:
    return f"[x={format_rational(x)}]"


def _checked(identity: str, j, ell, mu, check: Callable[[], object], *, asserted: bool = True,
             timings: bool = False) -> Entry:
    """Run ``check`` and wrap its residual; exceptions become failing entries."""
    with stopwatch(timings) as ms:
        try:
            residual = check()
        except (ArithmeticError, ValueError, RuntimeError) as exc:
            residual = (False, f"error: {type(exc).__name__}: {exc}")
    entry = make_entry(identity, j, ell, mu, residual, asserted=asserted)
    if timings:
        entry = dataclasses.replace(entry, ms=ms[0])
    return entry


def _keys(grid: Grid, jmax: int | None = None, ellmax: int | None = None) -> Iterator[MPolyKey]:
    jmax = grid.jmax if jmax is None else jmax
    ellmax = grid.ellmax if ellmax is None else ellmax
    for mu in grid.mus:
        for ell in range(ellmax + 1):
            for j in range(jmax + 1):
                yield MPolyKey(j, ell, mu)


def _is_odd(mu: Fraction) -> bool:
    return mu.denominator == 1 and mu.numerator % 2 == 1 and mu > 0


# --- recurrences ------------------------------------------------------------

def recurrences(grid: Grid) -> VerificationReport:
    report = VerificationReport()
    for key in _keys(grid):
        args = (key.j, key.ell, key.mu)
        for kind in (1, 2, 3, 5):
            report.add(_checked(f"recurrence-{kind}", *args,
                                lambda kind=kind: verify_recurrence(kind, key), timings=grid.timings))
        if key.ell >= 1:
            report.add(_checked("recurrence-4", *args, lambda: verify_recurrence(4, key),
                                timings=grid.timings))
            report.add(_checked("recurrence-4-literal", *args,
                                lambda: verify_recurrence("4-literal", key),
                                asserted=False, timings=grid.timings))
    return report


# --- eigen-equation ------------------------------------------------------------

def eigen(grid: Grid) -> VerificationReport:
    report = VerificationReport()
    for key in _keys(grid):
        args = (key.j, key.ell, key.mu)
        report.add(_checked("eigen", *args, lambda: eigen_residual(key), timings=grid.timings))
        if key.j == 1:
            report.add(_checked("eigen-reversed-order", *args,
                                lambda: eigen_residual(key, reversed_order=True), asserted=False,
                                timings=grid.timings))
    return report


# --- orthogonality ------------------------------------------------------------

def ortho(grid: Grid) -> VerificationReport:
    report = VerificationReport()
    for mu in grid.mus:
        for ell in range(grid.ellmax + 1):
            asserted = in_asserted_range(mu, ell)
            try:
                gram = gram_matrix(grid.jmax, mu, ell)
            except PoleInGamma as exc:
                text = f"undefined: {exc}"
                for ident in ("orthogonality", "norm"):
                    report.add(make_entry(ident, None, ell, mu, (False, text), asserted=False))
                continue
            for j in range(grid.jmax + 1):
                off = [f"<{k},{j}>={gram[k][j]}" for k in range(j) if gram[k][j].value != 0]
                report.add(make_entry("orthogonality", j, ell, mu,
                                      (not off, "; ".join(off) or "0"), asserted=asserted))

                def norm_residual(j=j):
                    diff = gram[j][j].value - norm_squared_formula(j, mu, ell).value
                    return diff == 0, format_rational(diff)

                report.add(_checked("norm", j, ell, mu, norm_residual, asserted=asserted,
                                    timings=grid.timings))
    return report


# --- constructions and explicit coefficients --------------------------------

def _constant_term_residual(key: MPolyKey):
    actual = m_polynomial(key)[0]
    try:
        return actual - constant_term(key)
    except UnreducibleRatio:
        ref = constant_term_float(key)
        err = abs(float(actual) - ref) / abs(ref) if ref else abs(float(actual))
        return err <= CONSTANT_TERM_RTOL, f"{err:.3e}"


def genfun(grid: Grid) -> VerificationReport:
    report = VerificationReport()
    t = grid.timings
    for key in _keys(grid, jmax=grid.jmax + 2):
        args = (key.j, key.ell, key.mu)
        m = m_polynomial(key)
        report.add(_checked("construction-series", *args,
                            lambda: m - m_from_series(key.j, key.mu, key.ell, order=grid.jmax + 2),
                            timings=t))
        if key.j > grid.jmax:
            continue
        if key.ell >= 1:
            report.add(_checked("construction-ell-recurrence", *args,
                                lambda: m - build_via_ell_recurrence(key), timings=t))
        report.add(make_entry("degree", *args, (m.degree == key.j + key.ell, str(m.degree))))
        top = Fraction((-1) ** key.j, math.factorial(key.j))
        report.add(make_entry("top-term", *args,
                              (m.leading_coefficient == top, format_rational(m.leading_coefficient - top))))
        report.add(_checked("constant-term", *args, lambda: _constant_term_residual(key), timings=t))
    return report


# --- operator identities ----------------------------------------------------------

def operators(grid: Grid) -> VerificationReport:
    from .diffop import square_identity_check

    report = VerificationReport()
    t = grid.timings
    for mu in grid.mus:
        report.add(_checked("square-identity", None, 0, mu, lambda: square_identity_check(mu), timings=t))
        for ell in range(grid.ellmax + 1):
            nu = 2 * ell + 1
            report.add(_checked("d-symmetry", None, ell, mu, lambda: d_symmetry_check(mu, nu), timings=t))
            report.add(_checked("conjugation-identity", None, ell, mu,
                                lambda: conjugation_identity_check(mu, ell), timings=t))
            report.add(_checked("involution", None, ell, mu, lambda: involution_check(mu, ell), timings=t))

            def roots(ell=ell):
                got = indicial_roots(mu, ell)
                return got == expected_indicial_roots(mu, ell), ",".join(map(format_rational, got))

            report.add(_checked("indicial-roots", None, ell, mu, roots, timings=t))
    return report


# --- integral representation ----------------------------------------------

def _quad_config(grid: Grid):
    from .numint.quadrature import QuadratureConfig, with_panels

    return with_panels(QuadratureConfig(), grid.quad_panels, grid.quad_order)


def _rel_text(err: float, tol: float):
    return err <= tol, f"{err:.3e}"


def integral(grid: Grid) -> VerificationReport:
    from .numint.exact_integral import integral_representation_exact
    from .numint.quadrature import integral_representation_numeric

    cfg = _quad_config(grid)
    report = VerificationReport()
    t = grid.timings
    keys = _keys(grid, jmax=min(grid.jmax, INTEGRAL_JMAX), ellmax=min(grid.ellmax, INTEGRAL_ELLMAX))
    for key in keys:
        args = (key.j, key.ell, key.mu)
        if key.mu <= -1:
            continue
        if _is_odd(key.mu):
            def exact_residual(key=key):
                lhs, rhs = integral_representation_exact(key.j, key.ell, key.mu)
                return lhs - rhs

            report.add(_checked("integral-exact", *args, exact_residual, timings=t))
        for x in grid.xs:
            def numeric(x=x, key=key):
                cmp = integral_representation_numeric(key.j, key.ell, key.mu, float(x), cfg)
                if not _is_odd(key.mu):
                    return _rel_text(cmp.rel_err, NUMERIC_RTOL)
                lhs, _ = integral_representation_exact(key.j, key.ell, key.mu)
                exact = float(lhs.eval_exact(x))
                ref = abs(exact) if exact else cmp.scale
                return _rel_text(abs(cmp.lhs - exact) / ref, CROSS_PATH_RTOL)

            ident = "integral-numeric" if not _is_odd(key.mu) else "integral-exact-vs-numeric"
            report.add(_checked(ident + _x_label(x), *args, numeric, timings=t))
    return report


# --- Hankel reproducing property (l = 0) ------------------------------

def hankel(grid: Grid) -> VerificationReport:
    from .numint.quadrature import hankel_reproducing_check

    cfg = _quad_config(grid)
    report = VerificationReport()
    t = grid.timings
    for mu in grid.mus:
        for j in range(min(grid.jmax, HANKEL_JMAX) + 1):
            for x in grid.xs:
                label = _x_label(x)
                if mu < 0 or not 0 < x <= 5:
                    text = (False, "outside the series-Bessel regime (needs mu >= 0, 0 < x <= 5)")
                    report.add(make_entry("hankel" + label, j, 0, mu, text, asserted=False))
                    continue
                box = {}

                def value(j=j, x=x, mu=mu):
                    box["cmp"] = cmp = hankel_reproducing_check(j, mu, float(x), cfg)
                    return _rel_text(cmp.rel_err, NUMERIC_RTOL)

                report.add(_checked("hankel" + label, j, 0, mu, value, timings=t))
                if "cmp" not in box:
                    continue

                lag_exact = laguerre(j, mu).eval_exact(x * x)
                if lag_exact == 0:
                    text = (False, "sign undefined: Laguerre factor vanishes")
                    report.add(make_entry("hankel-sign" + label, j, 0, mu, text, asserted=False))
                    continue

                def sign(j=j, x=x, mu=mu, cmp=box["cmp"], lag=float(lag_exact)):
                    # divide out the positive envelope and the Laguerre value
                    envelope = float(x) ** (float(mu) + 0.5) * math.exp(-float(x) ** 2 / 2)
                    factor = cmp.lhs / (envelope * lag)
                    return round(factor) == (-1) ** j, f"{factor:.6f}"

                report.add(_checked("hankel-sign" + label, j, 0, mu, sign, timings=t))
    return report


# --- classical Laguerre layer --------------------------------------------------

def laguerre_suite(grid: Grid) -> VerificationReport:
    report = laguerre_identity_suite(grid.jmax + 2, grid.mus)
    for mu in grid.mus:
        report.add(_checked("three-term-impossibility", None, 1, mu,
                            lambda: three_term_impossibility(mu, ell=1)))
        report.add(_checked("three-term-control", None, 0, mu,
                            lambda: not three_term_impossibility(mu, ell=0)))
    return report


SUITES: dict[str, Callable[[Grid], VerificationReport]] = {
    "recurrences": recurrences,
    "eigen": eigen,
    "ortho": ortho,
    "genfun": genfun,
    "operators": operators,
    "integral": integral,
    "hankel": hankel,
    "laguerre": laguerre_suite,
}
SUITE_NAMES = tuple(SUITES)
