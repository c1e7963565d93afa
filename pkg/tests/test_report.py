from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given, strategies as st

from mjpoly.poly import Polynomial
from mjpoly.report import (
    FAIL,
    PASS,
    REPORTED,
    REPORT_SCHEMA,
    Entry,
    Grid,
    VerificationReport,
    make_entry,
    run_suite,
    stopwatch,
)


def test_make_entry_statuses():
    assert make_entry("a", 0, 1, 3, Polynomial()).status == PASS
    e = make_entry("a", 0, 1, 3, Polynomial([0, 0, Fraction(-1, 2)]))
    assert e.status == FAIL and e.residual == "-1/2*x^2"
    assert make_entry("a", 0, 1, 3, Polynomial([1]), asserted=False).status == REPORTED
    assert make_entry("a", None, None, None, True).residual == "0"
    assert make_entry("a", 1, 1, Fraction(5, 2), (False, "bad")).mu == "5/2"


def test_unknown_status():
    with pytest.raises(ValueError):
        Entry("a", 0, 0, "1", "maybe", "0")


def test_sorting_by_numeric_mu():
    r = VerificationReport()
    for mu in ("7", "-1/2", "5/2", "1"):
        r.add(make_entry("x", 0, 0, Fraction(mu), True))
    r.add(make_entry("a", 1, 0, 3, True))
    r.add(make_entry("a", 0, 0, 3, True))
    ordered = [(e.id, e.mu, e.j) for e in r.sorted().entries]
    assert ordered == [("a", "3", 0), ("a", "3", 1), ("x", "-1/2", 0), ("x", "1", 0),
                       ("x", "5/2", 0), ("x", "7", 0)]


def test_ok_and_counts():
    r = VerificationReport()
    r.add(make_entry("a", 0, 0, 1, True))
    r.add(make_entry("b", 0, 0, 1, False, asserted=False))
    assert r.ok and r.counts() == {PASS: 1, FAIL: 0, REPORTED: 1}
    r.add(make_entry("c", 0, 0, 1, False))
    assert not r.ok and len(r.failures) == 1


entries = st.builds(
    make_entry,
    st.sampled_from(["eigen", "norm", "hankel[x=1/2]"]),
    st.one_of(st.none(), st.integers(0, 10)),
    st.one_of(st.none(), st.integers(0, 4)),
    st.one_of(st.none(), st.fractions(min_value="-4/5", max_value=9, max_denominator=5)),
    st.one_of(st.booleans(), st.tuples(st.booleans(), st.text(max_size=12))),
    asserted=st.booleans(),
    ms=st.integers(0, 1000),
)


@given(st.lists(entries, max_size=8))
def test_json_round_trip(items):
    r = VerificationReport(entries=items).sorted()
    text = r.to_json()
    back = VerificationReport.from_json(text)
    assert back == r
    assert back.to_json() == text
    jsonschema.validate(r.to_dict(), REPORT_SCHEMA)


def test_empty_grid_gives_empty_report():
    assert run_suite(Grid()).entries == []
    assert run_suite(Grid(suites=("eigen", "recurrences"))).entries == []


def test_literal_relation_is_reported():
    rep = run_suite(Grid(suites=("recurrences",), jmax=1, ellmax=1, mus=(Fraction(3),)))
    lit = [e for e in rep.entries if e.id == "recurrence-4-literal" and e.j == 0]
    assert len(lit) == 1
    assert lit[0].status == REPORTED and lit[0].residual == "-1/2*x^2"
    assert rep.ok


def test_stopwatch():
    with stopwatch(False) as box:
        pass
    assert box == [0]
    with stopwatch(True) as box:
        sum(range(10000))
    assert box[0] >= 0
