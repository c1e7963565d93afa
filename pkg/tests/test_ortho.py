from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mjpoly.exact import PoleInGamma
from mjpoly.mpoly import MPolyKey, m_polynomial
from mjpoly.ortho import (
    MomentValue,
    gram_matrix,
    gram_to_csv,
    in_asserted_range,
    inner_product,
    moment,
    norm_squared_formula,
)
from mjpoly.poly import Polynomial

F = Fraction


def test_moments():
    assert moment(0, 3, 1) == 1
    assert moment(1, 3, 1) == 2
    assert moment(2, 3, 1) == 6


def test_inner_products():
    m0, m1 = m_polynomial(j=0, ell=1, mu=3), m_polynomial(j=1, ell=1, mu=3)
    assert inner_product(m0, m0, 3, 1) == 18
    assert inner_product(m0, m1, 3, 1) == 0
    assert inner_product(m1, m1, 3, 1) == 48


def test_norm_formula_values():
    assert norm_squared_formula(0, 3, 1) == 18
    assert norm_squared_formula(1, 3, 1) == 48
    for mu in (F(1), F(5, 2), F(4)):
        assert norm_squared_formula(0, mu, 0) == 1


def test_gram_small():
    g = gram_matrix(1, 3, 1)
    assert [[v.value for v in row] for row in g] == [[18, 0], [0, 48]]
    assert [[v.value for v in row] for row in gram_matrix(0, 1, 0)] == [[1]]
    assert gram_to_csv(g) == "18,0\n0,48\n"


@pytest.mark.parametrize("mu, ell", [(3, 0), (3, 1), (5, 2), (7, 3)])
def test_orthogonality_and_norms(mu, ell):
    g = gram_matrix(8, mu, ell)
    for a in range(9):
        for b in range(9):
            if a != b:
                assert g[a][b] == 0
        assert g[a][a] == norm_squared_formula(a, mu, ell)


def test_gram_symmetric():
    g = gram_matrix(5, F(5, 2), 1)
    assert all(g[a][b] == g[b][a] for a in range(6) for b in range(6))


def test_poles_of_the_moment_unit():
    with pytest.raises(PoleInGamma):
        moment(0, 1, 1)


def test_unit_mismatch():
    with pytest.raises(ValueError):
        MomentValue(F(1), F(3), 1) + MomentValue(F(1), F(5), 1)


def test_asserted_range():
    assert in_asserted_range(F(3), 1)
    assert not in_asserted_range(F(1), 1)
    assert not in_asserted_range(F(2), 0)


coeff_lists = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=5)


@settings(max_examples=50)
@given(coeff_lists, coeff_lists, coeff_lists, st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_inner_product_bilinear_symmetric(a, b, c, s):
    p, q, r = Polynomial(a), Polynomial(b), Polynomial(c)
    mu, ell = F(7, 2), 1
    assert inner_product(p, q, mu, ell) == inner_product(q, p, mu, ell)
    lhs = inner_product(p.scale(s) + q, r, mu, ell)
    assert lhs.value == s * inner_product(p, r, mu, ell).value + inner_product(q, r, mu, ell).value
