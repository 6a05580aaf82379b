"""Equivariant Poincare-Serre polynomials of the Losev-Manin space M_{0,2|n}.

Everything here is expressed through ``SymFunc``/``BiSymFunc`` values in the
power-sum basis.  The x alphabet records the S_2 swapping the two heavy
points, the y alphabet the S_n permuting the light ones.

Main entry points:

* ``equivariant_poincare(n)``: the closed formula summing over partitions of n,
  with the S_2-fixed strata contributing through the plethysm p_2 o F_mu.
* ``equivariant_poincare_series``, ``inverse_series``, ``stembridge_series``
  and ``procesi``: independent routes to the same numbers.
* ``eulerian_polynomial``: a descent-counting oracle for the plain Poincare
  polynomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from . import partitions as P
from .partitions import Partition
from .poly import ONE, Q, RationalPoly, format_poly
from .report import VerificationReport
from .series import SymFuncSeries, scale_t_by_q, series_divide, series_inverse, series_mul
from .symfunc import (
    BiSymFunc,
    SymFunc,
    bi_dimension,
    bi_from_parts,
    complete_h,
    format_powersum,
    hook_schur,
    plethysm_by_power_sum,
    schur,
)

X_ID: Partition = (1, 1)
X_SWAP: Partition = (2,)
HALF = RationalPoly.constant(Fraction(1, 2))


def _combine(identity_part: SymFunc, swap_part: SymFunc) -> BiSymFunc:
    """1/2 (p_1^x)^2 * a + 1/2 p_2^x * b."""
    return bi_from_parts(X_ID, identity_part.scale(HALF)) + bi_from_parts(X_SWAP, swap_part.scale(HALF))


@lru_cache(maxsize=None)
def f(n: int) -> SymFunc:
    """f_n = sum_{i<n} (-1)^i s_(n-i,1^i) q^(n-1-i)."""
    if n < 1:
        raise ValueError(f"f_n is defined for n >= 1, got {n}")
    out = SymFunc()
    for i in range(n):
        out = out + hook_schur(n, i).scale(RationalPoly.monomial(n - 1 - i, (-1) ** i))
    return out


@lru_cache(maxsize=None)
def g(n: int) -> SymFunc:
    """g_0 = 1, g_n = sum_{i<n} s_(n-i,1^i) q^(n-1-i)."""
    if n < 0:
        raise ValueError(f"g_n is defined for n >= 0, got {n}")
    if n == 0:
        return SymFunc.scalar(1)
    out = SymFunc()
    for i in range(n):
        out = out + hook_schur(n, i).scale(RationalPoly.monomial(n - 1 - i))
    return out


@lru_cache(maxsize=None)
def _F(lam: Partition) -> SymFunc:
    if not lam:
        return SymFunc.scalar(1)
    return f(lam[0]) * _F(lam[1:])


def F_lambda(lam) -> SymFunc:
    """Product of f over the parts of ``lam``; the empty product is 1."""
    return _F(P.make_partition(lam))


def open_stratum_class(n: int) -> BiSymFunc:
    """Signed compactly supported class of the open stratum (C*)^(n-1) of irreducible curves."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _combine(f(n), g(n))


def _identity_sum(n: int) -> SymFunc:
    out = SymFunc()
    for lam in P.enumerate_partitions(n):
        out = out + _F(lam).scale(P.num_ordered(lam))
    return out


def _swap_sum(n: int) -> SymFunc:
    out = SymFunc()
    for k in range(n // 2 + 1):
        inner = SymFunc()
        for mu in P.enumerate_partitions(k):
            inner = inner + plethysm_by_power_sum(2, _F(mu)).scale(P.num_ordered(mu))
        out = out + g(n - 2 * k) * inner
    return out


@lru_cache(maxsize=None)
def equivariant_poincare(n: int) -> BiSymFunc:
    """E_{S_2 x S_n}(q) from the closed partition-sum formula."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _combine(_identity_sum(n), _swap_sum(n))


def forget_s2(e: BiSymFunc, n: int) -> SymFunc:
    """Restrict to S_n: twice the coefficient of (p_1^x)^2."""
    if not e.y_weights() <= {n}:
        raise ValueError(f"expected y-weight {n}, got {sorted(e.y_weights())}")
    return e.x_component(X_ID).scale(2)


# -- generating series ---------------------------------------------------


def _one_minus(order: int, terms) -> SymFuncSeries:
    return SymFuncSeries.from_terms(order, [-t for t in terms])


@dataclass(frozen=True)
class EquivariantSeries:
    """Generating series of E_{S_2 x S_n}, split by x cycle type.

    ``identity_part`` multiplies 1/2 (p_1^x)^2 and ``swap_part`` multiplies
    1/2 p_2^x; both have constant term 1.
    """

    identity_part: SymFuncSeries
    swap_part: SymFuncSeries

    @property
    def truncation_order(self) -> int:
        return self.identity_part.truncation_order

    def degree(self, n: int) -> BiSymFunc:
        return _combine(self.identity_part[n], self.swap_part[n])


def equivariant_poincare_series(order: int) -> EquivariantSeries:
    if order < 0:
        raise ValueError("order must be non-negative")
    fs = [f(n) for n in range(1, order + 1)]
    identity = series_inverse(_one_minus(order, fs))
    g_series = SymFuncSeries.from_terms(order, [g(n) for n in range(1, order + 1)])
    doubled = [plethysm_by_power_sum(2, f(n)) for n in range(1, order // 2 + 1)]
    swap = series_mul(g_series, series_inverse(_one_minus(order, doubled)))
    return EquivariantSeries(identity, swap)


def inverse_series(order: int) -> SymFuncSeries:
    """(1 - sum_n f_n)^(-1): degree n is E_{S_n}(q)."""
    return series_inverse(_one_minus(order, [f(n) for n in range(1, order + 1)]))


def complete_series(order: int) -> SymFuncSeries:
    """H(t) = sum_{r>=0} h_r t^r, with h_0 = 1."""
    return SymFuncSeries([complete_h(r) for r in range(order + 1)])


def stembridge_series(order: int) -> SymFuncSeries:
    """(1-q) H(t) / (H(qt) - q H(t)), by exact degree-wise division."""
    h = complete_series(order)
    numerator = h.scale(ONE - Q)
    denominator = scale_t_by_q(h) - h.scale(Q)
    return series_divide(numerator, denominator)


def euler_characteristic_series(order: int) -> SymFuncSeries:
    """(1 - sum_n p_n z^n)^(-1)."""
    return series_inverse(_one_minus(order, [SymFunc.power_sum((n,)) for n in range(1, order + 1)]))


def procesi(order: int) -> dict[int, SymFunc]:
    """E_{S_n}(q) for n = 1..order from the recursion in n.

    E_{n+1} = s_(n+1) (1 + ... + q^n)
              + sum_{i=0}^{n-2} s_(n-i) E_{i+1} (q + ... + q^(n-i-1))
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    E = {1: schur((1,))}
    for n in range(1, order):
        nxt = schur((n + 1,)).scale(RationalPoly.geometric(0, n))
        for i in range(n - 1):
            nxt = nxt + (schur((n - i,)) * E[i + 1]).scale(RationalPoly.geometric(1, n - i - 1))
        E[n + 1] = nxt
    return E


# -- Hall-Littlewood -----------------------------------------------------


def hall_littlewood_row(n: int) -> SymFunc:
    """P_(n)(q) = sum_{r<n} (-q)^r s_(n-r, 1^r)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = SymFunc()
    for r in range(n):
        out = out + hook_schur(n, r).scale(RationalPoly.monomial(r, (-1) ** r))
    return out


def f_from_hall_littlewood(n: int, row=hall_littlewood_row) -> SymFunc:
    """q^(n-1) P_(n)(1/q), as a coefficient reversal."""
    return row(n).map_coefficients(lambda c: c.reversed(n - 1))


def g_from_hall_littlewood(n: int, row=hall_littlewood_row) -> SymFunc:
    """q^(n-1) P_(n)(-1/q)."""
    return row(n).map_coefficients(lambda c: c.scale_variable(-1).reversed(n - 1))


def hl_product_identity_check(order: int, row=hall_littlewood_row) -> VerificationReport:
    """Check H(qt) = H(t) * (1 + sum_r (q-1) q^(r-1) P_(r)(1/q) t^r) through t^order.

    The bracket is H(qt)/H(t) written with q-denominators cleared; ``row``
    supplies P_(r) so that a deliberately broken one can be fed in.
    """
    report = VerificationReport("hall-littlewood-product", order)
    h = complete_series(order)
    lhs = scale_t_by_q(h)
    bracket = SymFuncSeries.from_terms(
        order, [f_from_hall_littlewood(r, row).scale(Q - 1) for r in range(1, order + 1)]
    )
    rhs = series_mul(h, bracket)
    for n in range(order + 1):
        ok = lhs[n] == rhs[n]
        report.record("H(qt)=H(t)*bracket", n, ok, None if ok else format_powersum(lhs[n] - rhs[n]))
    return report


# -- non-equivariant polynomials -----------------------------------------


def poincare_polynomial(n: int) -> RationalPoly:
    """E_{2|n}(q) = sum_i dim H^{2i} q^i."""
    return bi_dimension(equivariant_poincare(n), n)


def eulerian_by_descents(n: int) -> RationalPoly:
    counts = [0] * max(n, 1)
    for w in permutations(range(n)):
        counts[sum(1 for i in range(n - 1) if w[i] > w[i + 1])] += 1
    return RationalPoly.from_list(counts)


def eulerian_by_recurrence(n: int) -> RationalPoly:
    """A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1), from A(1,0) = 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    row = [1]
    for m in range(2, n + 1):
        prev = row + [0]
        row = [(k + 1) * prev[k] + ((m - k) * prev[k - 1] if k else 0) for k in range(m)]
    return RationalPoly.from_list(row)


BRUTE_FORCE_EULERIAN_MAX = 8


def eulerian_polynomial(n: int) -> RationalPoly:
    """sum_{w in S_n} q^des(w): descent enumeration up to n = 8, recurrence beyond."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rec = eulerian_by_recurrence(n)
    if n <= BRUTE_FORCE_EULERIAN_MAX:
        brute = eulerian_by_descents(n)
        if brute != rec:
            raise RuntimeError(
                f"Eulerian paths disagree at n={n}: {format_poly(brute)} vs {format_poly(rec)}"
            )
        return brute
    return rec


def clear_caches() -> None:
    """Drop all memoized values (used for honest timing)."""
    from .symfunc import clear_character_cache

    for fn in (f, g, _F, equivariant_poincare):
        fn.cache_clear()
    clear_character_cache()
    P._partitions_bounded.cache_clear()
