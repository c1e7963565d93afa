"""Acceptance gate: every criterion at its stated tolerance.

Run under pytest (one verdict line per criterion in the terminal summary) or
directly with ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import io
import json
import math
import time
from fractions import Fraction

import pytest

from mjpoly.cli import coeffs_from_json, coeffs_to_json, main as cli_main
from mjpoly.diffop import (
    d_symmetry_check,
    eigen_residual,
    expected_indicial_roots,
    indicial_roots,
    involution_check,
    conjugation_identity_check,
    square_identity_check,
)
from mjpoly.genfun import m_from_series
from mjpoly.mpoly import (
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
from mjpoly.numint import (
    hankel_reproducing_check,
    integral_representation_exact,
    integral_representation_numeric,
)
from mjpoly.ortho import gram_matrix, inner_product, norm_squared_formula
from mjpoly.poly import Polynomial
from mjpoly.report import REPORTED, Grid, VerificationReport, run_suite

pytestmark = pytest.mark.acceptance

F = Fraction
MUS = (F(1), F(3), F(5), F(7), F(2), F(5, 2), F(-1, 2))
JMAX, SERIES_JMAX, ELLMAX = 8, 10, 3

CONSTANT_RTOL = 1e-10
NUMERIC_RTOL = 1e-6
CROSS_PATH_RTOL = 1e-9


def grid_keys(jmax=JMAX, ellmax=ELLMAX, mus=MUS):
    for mu in mus:
        for ell in range(ellmax + 1):
            for j in range(jmax + 1):
                yield MPolyKey(j, ell, mu)


def tag(key: MPolyKey) -> str:
    return f"(j={key.j}, l={key.ell}, mu={key.mu})"


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


def test_criterion_01_construction_consistency(verdict):
    bad = []
    with Timer() as t:
        for key in grid_keys(jmax=SERIES_JMAX):
            m = m_polynomial(key)
            if m != m_from_series(key.j, key.mu, key.ell, order=SERIES_JMAX):
                bad.append(f"series differs at {tag(key)}")
            if key.j <= JMAX and key.ell >= 1 and m != build_via_ell_recurrence(key):
                bad.append(f"l-recurrence differs at {tag(key)}")
    verdict(1, "explicit sum = generating function = l-recurrence (exact)", bad, t.seconds)


def test_criterion_02_degree_top_and_constant(verdict):
    bad = []
    with Timer() as t:
        for key in grid_keys():
            m = m_polynomial(key)
            if m.degree != key.j + key.ell:
                bad.append(f"degree {m.degree} at {tag(key)}")
            if m.leading_coefficient != F((-1) ** key.j, math.factorial(key.j)):
                bad.append(f"leading coefficient {m.leading_coefficient} at {tag(key)}")
            odd = key.mu.denominator == 1 and key.mu.numerator % 2 == 1
            if odd and constant_term(key) != m[0]:
                bad.append(f"exact constant term at {tag(key)}")
            if key.mu in (F(2), F(5, 2)):
                ref = constant_term_float(key)
                err = abs(float(m[0]) - ref) / abs(ref)
                if err > CONSTANT_RTOL:
                    bad.append(f"float constant term rel err {err:.2e} at {tag(key)}")
    verdict(2, "degree j+l, top coefficient, constant term", bad, t.seconds)


def test_criterion_03_eigen_equation(verdict):
    bad = []
    with Timer() as t:
        for key in grid_keys():
            res = eigen_residual(key)
            if res:
                bad.append(f"residual {res} at {tag(key)}")
    verdict(3, "fourth-order eigen-equation (exact)", bad, t.seconds)


def test_criterion_04_orthogonality_and_norms(verdict):
    bad = []
    with Timer() as t:
        for mu in (3, 5, 7):
            for ell in range(ELLMAX + 1):
                if mu < 2 * ell + 1:
                    continue
                g = gram_matrix(JMAX, mu, ell)
                for a in range(JMAX + 1):
                    for b in range(JMAX + 1):
                        if a != b and g[a][b].value != 0:
                            bad.append(f"<M_{a}, M_{b}> = {g[a][b]} at mu={mu}, l={ell}")
                    if g[a][a] != norm_squared_formula(a, mu, ell):
                        bad.append(f"norm of M_{a} at mu={mu}, l={ell}")
        m0, m1 = m_polynomial(j=0, ell=1, mu=3), m_polynomial(j=1, ell=1, mu=3)
        if inner_product(m0, m0, 3, 1) != 18 or inner_product(m1, m1, 3, 1) != 48:
            bad.append("spot values 18 / 48 not reproduced")
    verdict(4, "orthogonality and norms for odd mu >= 2l+1 (exact)", bad, t.seconds)


def test_criterion_05_recurrences(verdict):
    bad = []
    with Timer() as t:
        for key in grid_keys():
            kinds = (1, 2, 3, 5) + ((4,) if key.ell >= 1 else ())
            for kind in kinds:
                res = verify_recurrence(kind, key)
                if res:
                    bad.append(f"relation {kind} residual {res} at {tag(key)}")
        literal = verify_recurrence("4-literal", MPolyKey(0, 1, 3))
        if literal != Polynomial([0, 0, F(-1, 2)]):
            bad.append(f"literal relation residual {literal}, expected -1/2*x^2")
        rep = run_suite(Grid(suites=("recurrences",), jmax=0, ellmax=1, mus=(F(3),)))
        lit = [e for e in rep.entries if e.id == "recurrence-4-literal"]
        if not lit or lit[0].status != REPORTED or not rep.ok:
            bad.append("literal relation not emitted as a reported diagnostic")
    verdict(5, "five recurrences; literal l-relation reported", bad, t.seconds)


def test_criterion_06_laguerre_layer(verdict):
    bad = []
    with Timer() as t:
        rep = laguerre_identity_suite(10, [0, 1, 3, F(1, 2)])
        ids = {e.id for e in rep.entries}
        if len(ids) < 8:
            bad.append(f"only {len(ids)} identities checked")
        bad += [f"{e.id} at n={e.j}, alpha={e.mu}: {e.residual}" for e in rep.failures]
        for mu in (3, 5, 2):
            if not three_term_impossibility(mu):
                bad.append(f"three-term relation unexpectedly exists at mu={mu}")
        if three_term_impossibility(3, ell=0):
            bad.append("l=0 control failed")
    verdict(6, "Laguerre identities (n<=10) and three-term impossibility", bad, t.seconds)


def test_criterion_07_operator_identities(verdict):
    bad = []
    with Timer() as t:
        for mu in MUS:
            if not square_identity_check(mu):
                bad.append(f"square identity at mu={mu}")
            for nu in MUS + tuple(F(2 * ell + 1) for ell in range(ELLMAX + 1)):
                if not d_symmetry_check(mu, nu):
                    bad.append(f"D symmetry at ({mu}, {nu})")
            for ell in range(ELLMAX + 1):
                if not conjugation_identity_check(mu, ell):
                    bad.append(f"conjugation identity at mu={mu}, l={ell}")
                if not involution_check(mu, ell):
                    bad.append(f"involution at mu={mu}, l={ell}")
                if indicial_roots(mu, ell) != expected_indicial_roots(mu, ell):
                    bad.append(f"indicial roots at mu={mu}, l={ell}")
    verdict(7, "operator identities in normal form (exact)", bad, t.seconds)


def test_criterion_08_integral_representation(verdict):
    bad = []
    with Timer() as t:
        if integral_representation_exact(0, 0, 1) != (Polynomial([2]), Polynomial([2])):
            bad.append("instance (0,0,1) is not 2")
        if integral_representation_exact(0, 1, 1) != (Polynomial([4, 4]), Polynomial([4, 4])):
            bad.append("instance (0,1,1) is not 4x+4")
        xs = (F(1, 2), F(1), F(2))
        for key in grid_keys(jmax=4, ellmax=2, mus=(F(1), F(3), F(5))):
            lhs, rhs = integral_representation_exact(key.j, key.ell, key.mu)
            if lhs != rhs:
                bad.append(f"exact identity fails at {tag(key)}: {lhs - rhs}")
            for x in xs:
                cmp = integral_representation_numeric(key.j, key.ell, key.mu, float(x))
                ref = float(lhs.eval_exact(x))
                # an exact zero is measured against the integrand mass
                scale = abs(ref) if ref else cmp.scale
                if abs(cmp.lhs - ref) > CROSS_PATH_RTOL * scale:
                    bad.append(f"exact vs numeric at {tag(key)}, x={x}")
        for key in grid_keys(jmax=4, ellmax=2, mus=(F(1, 2), F(2), F(7, 2))):
            for x in xs:
                cmp = integral_representation_numeric(key.j, key.ell, key.mu, float(x))
                if cmp.rel_err > NUMERIC_RTOL:
                    bad.append(f"numeric rel err {cmp.rel_err:.2e} at {tag(key)}, x={x}")
    verdict(8, "integral representation: exact (odd mu) and gated quadrature", bad, t.seconds)


def test_criterion_09_hankel_reproducing(verdict):
    bad = []
    with Timer() as t:
        for mu in (1, 2, 3):
            for x in (0.5, 1.0, 2.0):
                for j in range(5):
                    cmp = hankel_reproducing_check(j, mu, x)
                    if cmp.rel_err > NUMERIC_RTOL:
                        bad.append(f"rel err {cmp.rel_err:.2e} at j={j}, mu={mu}, x={x}")
                    lag = float(laguerre(j, mu).eval_exact(F(x) ** 2))
                    if lag == 0:
                        continue
                    factor = cmp.lhs / (x ** (mu + 0.5) * math.exp(-x * x / 2) * lag)
                    if abs(factor - (-1) ** j) > NUMERIC_RTOL:
                        bad.append(f"sign factor {factor:.6f} at j={j}, mu={mu}, x={x}")
    verdict(9, "l=0 Hankel reproducing identity and (-1)^j sign", bad, t.seconds)


def _cli(*argv):
    out = io.StringIO()
    return cli_main(list(argv), out=out), out.getvalue()


def test_criterion_10_cli_contract(verdict, monkeypatch):
    bad = []
    with Timer() as t:
        verify = ("verify", "--suites", "recurrences,ortho,laguerre,hankel", "--jmax", "3",
                  "--ellmax", "2", "--mus", "1,3,2,5/2")
        first, second = _cli(*verify), _cli(*verify)
        if first != second:
            bad.append("verify output not byte-stable")
        if first[0] != 0:
            bad.append(f"verify exit {first[0]} on a passing grid")
        report = VerificationReport.from_json(first[1])
        if report.to_json() + "\n" != first[1]:
            bad.append("report JSON round trip is lossy")
        if _cli("coeffs", "--j", "0", "--ell", "1", "--mu", "3", "--format", "csv")[1] != "2,1\n1,1\n":
            bad.append("coeffs csv example")
        for argv in (("coeffs", "--j", "0", "--ell", "1", "--mu", "-2"), ("verify", "--suites", "x")):
            code = _cli(*argv)[0]
            if code != 2:
                bad.append(f"{argv[0]} usage error gave exit {code}")
        for key in grid_keys(jmax=4, ellmax=2):
            text = coeffs_to_json(key)
            back_key, poly = coeffs_from_json(text)
            if back_key != key or poly != m_polynomial(key) or coeffs_to_json(back_key, poly) != text:
                bad.append(f"coefficient file round trip at {tag(key)}")

        from mjpoly import suites
        from mjpoly.report import make_entry

        monkeypatch.setitem(
            suites.SUITES, "eigen",
            lambda grid: VerificationReport(entries=[make_entry("eigen", 0, 0, 1, False)]),
        )
        if _cli("verify", "--suites", "eigen")[0] != 1:
            bad.append("failing entry did not give exit 1")
    verdict(10, "CLI byte stability, exit codes, JSON round trips", bad, t.seconds)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
