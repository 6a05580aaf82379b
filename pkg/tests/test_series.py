import pytest
from hypothesis import given, settings, strategies as st

from lmchar import partitions as P
from lmchar.poly import ONE, Q, RationalPoly
from lmchar.series import SymFuncSeries, scale_t_by_q, series_divide, series_inverse, series_mul
from lmchar.symfunc import SymFunc, complete_h, schur

p = SymFunc.power_sum


def test_coefficients_must_match_degree():
    with pytest.raises(ValueError):
        SymFuncSeries([SymFunc.scalar(1), p((2,))])


def test_mul_examples():
    a = SymFuncSeries([SymFunc.scalar(1), p((1,)), p((2,), Q)])
    assert series_mul(a, SymFuncSeries.unit(2)) == a
    plus = SymFuncSeries([SymFunc.scalar(1), p((1,)), SymFunc()])
    minus = SymFuncSeries([SymFunc.scalar(1), -p((1,)), SymFunc()])
    assert series_mul(plus, minus) == SymFuncSeries([SymFunc.scalar(1), SymFunc(), -p((1, 1))])


def test_mixed_truncation_takes_minimum():
    a = SymFuncSeries.unit(5)
    b = SymFuncSeries.unit(3)
    assert series_mul(a, b).truncation_order == 3
    assert (a + b).truncation_order == 3


@pytest.mark.parametrize("order", [1, 4, 8])
def test_h_e_duality(order):
    # e_r = s_(1^r)
    h = SymFuncSeries([complete_h(r) for r in range(order + 1)])
    e = SymFuncSeries([schur(P.ones(r)).scale((-1) ** r) for r in range(order + 1)])
    assert series_mul(h, e) == SymFuncSeries.unit(order)


def test_inverse_examples():
    geo = series_inverse(SymFuncSeries([SymFunc.scalar(1), -p((1,))] + [SymFunc()] * 5))
    assert geo == SymFuncSeries([p(P.ones(n)) for n in range(7)])
    s = series_inverse(SymFuncSeries.from_terms(4, [-p((n,)) for n in range(1, 5)]))
    assert s[2] == p((1, 1)) + p((2,))
    assert s[2] == schur((2,)).scale(2)


def test_inverse_rejects_non_unit():
    with pytest.raises(ValueError, match="non-unit constant term"):
        series_inverse(SymFuncSeries([SymFunc.scalar(ONE - Q), p((1,))]))
    with pytest.raises(ValueError, match="non-unit constant term"):
        series_inverse(SymFuncSeries([SymFunc(), p((1,))]))


def test_divide_examples():
    a = SymFuncSeries([SymFunc.scalar(3), p((1,), Q), schur((2,))])
    assert series_divide(a, SymFuncSeries.unit(2)) == a
    # common factor (1 - q) cancels exactly
    b = SymFuncSeries([SymFunc.scalar(ONE - Q), p((1,), ONE - Q)])
    c = SymFuncSeries([SymFunc.scalar(Q * (ONE - Q)), p((1,), (ONE - Q) * (Q + 2))])
    quotient = series_divide(c, b)
    assert series_mul(quotient, b) == c
    assert quotient[0] == SymFunc.scalar(Q)


def test_divide_requires_exactness():
    b = SymFuncSeries([SymFunc.scalar(ONE - Q), SymFunc()])
    a = SymFuncSeries([SymFunc.scalar(1 - Q), p((1,))])
    with pytest.raises(ArithmeticError, match="non-exact series division at degree 1"):
        series_divide(a, b)


def test_scale_t_by_q():
    unit = SymFuncSeries.unit(3)
    assert scale_t_by_q(unit) == unit
    a = SymFuncSeries([SymFunc.scalar(1), complete_h(1)])
    assert scale_t_by_q(a) == SymFuncSeries([SymFunc.scalar(1), complete_h(1).scale(Q)])
    b = SymFuncSeries([complete_h(r) for r in range(4)])
    twice = scale_t_by_q(scale_t_by_q(b))
    assert all(twice[n] == b[n].scale(RationalPoly.monomial(2 * n)) for n in range(4))


# -- laws on random series -------------------------------------------------

small_poly = st.lists(st.integers(-2, 2), max_size=3).map(RationalPoly.from_list)


@st.composite
def series(draw, order=None, unit_constant=False):
    order = draw(st.integers(0, 8)) if order is None else order
    coeffs = [SymFunc.scalar(1 if unit_constant else draw(st.integers(1, 3)))]
    for n in range(1, order + 1):
        keys = st.sampled_from(P.enumerate_partitions(n))
        coeffs.append(SymFunc(draw(st.dictionaries(keys, small_poly, max_size=2))))
    return SymFuncSeries(coeffs)


@settings(max_examples=25, deadline=None)
@given(series(), series(), series())
def test_mul_laws(a, b, c):
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
    assert series_mul(a, SymFuncSeries.unit(a.truncation_order)) == a


@settings(max_examples=25, deadline=None)
@given(series(unit_constant=True))
def test_inverse_laws(a):
    inv = series_inverse(a)
    assert series_mul(a, inv) == SymFuncSeries.unit(a.truncation_order)
    assert series_inverse(inv) == a


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 8).flatmap(lambda n: st.tuples(series(order=n), series(order=n))))
def test_divide_undoes_mul(ab):
    a, b = ab
    assert series_divide(series_mul(a, b), b) == a


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 8).flatmap(lambda n: st.tuples(series(order=n), series(order=n))))
def test_scale_commutes_with_mul(ab):
    a, b = ab
    assert scale_t_by_q(series_mul(a, b)) == series_mul(scale_t_by_q(a), scale_t_by_q(b))
