from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest

from lmchar import losev_manin as lm
from lmchar import partitions as P
from lmchar.poly import ONE, Q, RationalPoly
from lmchar.series import SymFuncSeries, scale_t_by_q, series_divide
from lmchar.symfunc import (
    SymFunc,
    bi_dimension,
    bi_from_parts,
    bi_to_schur,
    complete_h,
    dimension,
    schur,
    specialize_q,
    to_schur,
)
from lmchar.verify import verify

p = SymFunc.power_sum
half = Fraction(1, 2)
T, S = (2,), (1, 1)


def s(*lam):
    return schur(lam)


def test_f_examples():
    assert lm.f(1) == p((1,))
    assert lm.f(2) == p((1, 1), (Q - 1) * half) + p((2,), (Q + 1) * half)
    assert lm.f(3) == s(3).scale(Q**2) - s(2, 1).scale(Q) + s(1, 1, 1)
    with pytest.raises(ValueError):
        lm.f(0)


def test_g_examples():
    assert lm.g(0) == SymFunc.scalar(1)
    assert lm.g(1) == s(1)
    assert lm.g(2) == s(2).scale(Q) + s(1, 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_f_g_shape(n):
    for h in (lm.f(n), lm.g(n)):
        assert h.is_homogeneous(n)
        assert max(c.degree for _, c in h.items()) == n - 1


def test_F_lambda():
    assert lm.F_lambda((4,)) == lm.f(4)
    assert lm.F_lambda(()) == SymFunc.scalar(1)
    assert lm.F_lambda((1, 1)) == p((1, 1))
    assert lm.F_lambda([1, 2]) == lm.f(2) * lm.f(1)


def test_open_stratum_class():
    assert bi_to_schur(lm.open_stratum_class(1)) == {(T, (1,)): 1}
    two = lm.open_stratum_class(2)
    expected = bi_from_parts(S, (s(2).scale(Q) - s(1, 1)).scale(half)) + bi_from_parts(
        T, (s(2).scale(Q) + s(1, 1)).scale(half)
    )
    assert two == expected
    # compactly supported Euler characteristic of C* vanishes
    assert bi_dimension(specialize_q(two, 1), 2) == 0


def test_open_stratum_alternating_hooks():
    # H^i of the torus is s_(2) or s_(1^2) on x, times the i-th hook on y
    for n in range(1, 7):
        expected = {}
        for i in range(n):
            x = T if i % 2 == 0 else S
            expected[(x, P.hook(n, i))] = RationalPoly.monomial(n - 1 - i, (-1) ** i)
        assert bi_to_schur(lm.open_stratum_class(n)) == expected


def test_equivariant_poincare_small():
    assert bi_to_schur(lm.equivariant_poincare(1)) == {(T, (1,)): 1}
    assert bi_to_schur(lm.equivariant_poincare(2)) == {(T, (2,)): Q + 1}
    assert bi_to_schur(lm.equivariant_poincare(3)) == {
        (T, (3,)): Q**2 + Q + 1,
        (T, (2, 1)): Q,
        (S, (3,)): Q,
    }


@pytest.mark.parametrize("n", range(1, 11))
def test_bottom_cohomology_is_trivial(n):
    coeffs = bi_to_schur(lm.equivariant_poincare(n))
    constant_terms = {k: c.coeff(0) for k, c in coeffs.items() if c.coeff(0)}
    assert constant_terms == {(T, (n,)): 1}
    assert all(c.degree <= n - 1 for c in coeffs.values())


def test_forget_s2():
    assert lm.forget_s2(lm.equivariant_poincare(2), 2) == s(2).scale(Q + 1)
    a, b = s(3).scale(Q), s(2, 1)
    mixed = bi_from_parts(S, a.scale(half)) + bi_from_parts(T, a.scale(half))
    mixed = mixed + bi_from_parts(S, b.scale(half)) - bi_from_parts(T, b.scale(half))
    assert lm.forget_s2(mixed, 3) == a + b
    assert lm.forget_s2(lm.equivariant_poincare(3), 3) == s(3).scale(Q**2 + 2 * Q + 1) + s(2, 1).scale(Q)
    with pytest.raises(ValueError):
        lm.forget_s2(lm.equivariant_poincare(3), 4)


def test_procesi_examples():
    E = lm.procesi(3)
    assert E[1] == s(1)
    assert E[2] == s(2).scale(1 + Q)
    assert E[3] == s(3).scale(Q**2 + 2 * Q + 1) + s(2, 1).scale(Q)
    with pytest.raises(ValueError):
        lm.procesi(0)


def test_hall_littlewood_examples():
    assert lm.hall_littlewood_row(1) == s(1)
    assert lm.hall_littlewood_row(2) == s(2) - s(1, 1).scale(Q)
    for n in range(1, 9):
        assert specialize_q(lm.hall_littlewood_row(n), 1) == p((n,))
        assert lm.f_from_hall_littlewood(n) == lm.f(n)
        assert lm.g_from_hall_littlewood(n) == lm.g(n)


def test_stembridge_examples():
    st = lm.stembridge_series(3)
    assert st[0] == SymFunc.scalar(1)
    assert st[1] == s(1)
    assert st[2] == s(2).scale(Q + 1)


def test_stembridge_without_constant_term_is_rejected_loudly():
    # H(t) starting at h_1: the quotient is undefined at t^0
    h = SymFuncSeries([SymFunc()] + [complete_h(r) for r in range(1, 4)])
    num = h.scale(ONE - Q)
    den = scale_t_by_q(h) - h.scale(Q)
    with pytest.raises(ArithmeticError, match="non-exact series division"):
        series_divide(num, den)


def test_inverse_series_examples():
    inv = lm.inverse_series(3)
    assert inv[1] == lm.f(1)
    assert inv[2] == lm.f(2) + lm.f(1) * lm.f(1)
    assert to_schur(inv[2]) == {(2,): Q + 1}
    assert inv[3] == lm.procesi(3)[3]


def test_euler_characteristic_series():
    e = lm.euler_characteristic_series(8)
    assert e[1] == p((1,))
    assert e[2] == p((1, 1)) + p((2,))
    for n in range(1, 9):
        assert dimension(e[n], n) == factorial(n)


def test_equivariant_series_degrees():
    es = lm.equivariant_poincare_series(6)
    assert es.identity_part[0] == SymFunc.scalar(1)
    assert es.swap_part[0] == SymFunc.scalar(1)
    # the assembled t^0 term is the trivial S_2 character s_(2)^x
    assert bi_to_schur(es.degree(0)) == {(T, ()): 1}
    for n in range(1, 7):
        assert es.degree(n) == lm.equivariant_poincare(n)


def test_hl_product_identity():
    assert lm.hl_product_identity_check(1).passed
    assert lm.hl_product_identity_check(6).passed

    def corrupted(n):
        row = lm.hall_littlewood_row(n)
        return (s(2) + s(1, 1).scale(Q)) if n == 2 else row

    report = lm.hl_product_identity_check(6, row=corrupted)
    assert not report.passed
    assert report.failures[0].n == 2


def descent_count_oracle(n):
    counts = {}
    for w in permutations(range(1, n + 1)):
        d = sum(w[i] > w[i + 1] for i in range(n - 1))
        counts[d] = counts.get(d, 0) + 1
    return RationalPoly(counts)


def test_eulerian_examples():
    assert lm.eulerian_polynomial(1) == 1
    assert lm.eulerian_polynomial(3) == 1 + 4 * Q + Q**2
    assert lm.eulerian_polynomial(4) == 1 + 11 * Q + 11 * Q**2 + Q**3
    for n in range(1, 9):
        assert lm.eulerian_by_descents(n) == lm.eulerian_by_recurrence(n) == descent_count_oracle(n)
    assert lm.eulerian_polynomial(12)(1) == factorial(12)


def test_poincare_polynomial_examples():
    assert lm.poincare_polynomial(2) == 1 + Q
    assert lm.poincare_polynomial(3) == 1 + 4 * Q + Q**2
    assert lm.poincare_polynomial(4) == 1 + 11 * Q + 11 * Q**2 + Q**3


def test_verify_examples():
    assert verify(6, {"appendix-table"}).passed
    assert verify(10, {"procesi", "inverse-series"}).passed
    assert verify(12, {"eulerian"}).passed
    with pytest.raises(ValueError, match="unknown suite"):
        verify(3, {"nope"})
    with pytest.raises(ValueError):
        verify(0, {"procesi"})


def test_verify_record_order_is_canonical():
    a = verify(4, ["stembridge", "procesi"])
    b = verify(4, ["procesi", "stembridge"])
    assert a.to_json() == b.to_json()
    assert [c.name for c in a.checks] == ["procesi"] * 4 + ["stembridge"] * 4
    assert [c.n for c in a.checks] == [1, 2, 3, 4] * 2
