from fractions import Fraction

import pytest

from mjpoly.report import FAIL, PASS, REPORTED, Grid, run_suite
from mjpoly.suites import SUITE_NAMES

F = Fraction
SMALL = Grid(jmax=3, ellmax=2, mus=(F(1), F(3), F(2), F(5, 2)))


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_suite_passes_on_small_grid(name):
    rep = run_suite(Grid(**{**SMALL.__dict__, "suites": (name,)}))
    assert rep.entries
    assert rep.ok, [e for e in rep.entries if e.status == FAIL][:3]


def test_ortho_status_depends_on_range():
    rep = run_suite(Grid(suites=("ortho",), jmax=2, ellmax=1, mus=(F(3), F(2))))
    by_mu = {}
    for e in rep.entries:
        by_mu.setdefault(e.mu, set()).add(e.status)
    assert by_mu["3"] == {PASS}
    assert by_mu["2"] == {REPORTED}


def test_ortho_pole_is_reported_undefined():
    rep = run_suite(Grid(suites=("ortho",), jmax=1, ellmax=1, mus=(F(1),)))
    undefined = [e for e in rep.entries if e.ell == 1]
    assert undefined and all(e.status == REPORTED and e.residual.startswith("undefined") for e in undefined)


def test_reversed_order_diagnostic_is_nonzero():
    rep = run_suite(Grid(suites=("eigen",), jmax=1, ellmax=1, mus=(F(3),)))
    rev = [e for e in rep.entries if e.id == "eigen-reversed-order"]
    assert rev and all(e.status == REPORTED and e.residual != "0" for e in rev)


def test_hankel_zero_of_the_right_side_is_reported():
    rep = run_suite(Grid(suites=("hankel",), jmax=1, ellmax=0, mus=(F(3),), xs=(F(2),)))
    sign = [e for e in rep.entries if e.id == "hankel-sign[x=2]" and e.j == 1]
    assert sign[0].status == REPORTED


def test_timings_flag():
    rep = run_suite(Grid(suites=("eigen",), jmax=1, ellmax=0, mus=(F(3),), timings=True))
    assert all(e.ms >= 0 for e in rep.entries)
    rep = run_suite(Grid(suites=("eigen",), jmax=1, ellmax=0, mus=(F(3),)))
    assert all(e.ms == 0 for e in rep.entries)
