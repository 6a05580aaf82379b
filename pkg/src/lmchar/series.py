"""Truncated power series in t whose t^n coefficient is a weight-n ``SymFunc``.

The t-degree is never stored separately: it is the weight of the symmetric
functions, so ``coeffs[n]`` must be homogeneous of weight ``n`` and
``coeffs[0]`` is a scalar (a polynomial in q on the empty partition).
"""
from __future__ import annotations

from typing import Iterable, Sequence

from . import partitions as P
from .poly import RationalPoly
from .symfunc import SymFunc, mul


class SymFuncSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[SymFunc]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the t^0 coefficient")
        for n, c in enumerate(coeffs):
            if not c.is_homogeneous(n):
                raise ValueError(f"coefficient of t^{n} must have weight {n}, got {sorted(c.weights())}")
        self.coeffs = coeffs

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def unit(cls, order: int) -> "SymFuncSeries":
        return cls([SymFunc.scalar(1)] + [SymFunc()] * order)

    @classmethod
    def from_terms(cls, order: int, terms: Iterable[SymFunc], constant=1) -> "SymFuncSeries":
        """``constant + sum(terms)``, with each term placed at t^(its weight).

        Terms of weight above ``order`` are discarded.
        """
        coeffs = [SymFunc() for _ in range(order + 1)]
        coeffs[0] = SymFunc.scalar(constant)
        for term in terms:
            for n in term.weights():
                if n <= order:
                    coeffs[n] = coeffs[n] + term.homogeneous_part(n)
        return cls(coeffs)

    def __getitem__(self, n: int) -> SymFunc:
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SymFuncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"SymFuncSeries(order={self.truncation_order}, coeffs={list(self.coeffs)!r})"

    def truncate(self, order: int) -> "SymFuncSeries":
        if order > self.truncation_order:
            raise ValueError("cannot extend a truncated series")
        return SymFuncSeries(self.coeffs[: order + 1])

    def __add__(self, other: "SymFuncSeries") -> "SymFuncSeries":
        n = min(self.truncation_order, other.truncation_order)
        return SymFuncSeries([self[i] + other[i] for i in range(n + 1)])

    def __neg__(self):
        return SymFuncSeries([-c for c in self.coeffs])

    def __sub__(self, other: "SymFuncSeries") -> "SymFuncSeries":
        return self + (-other)

    def scale(self, c) -> "SymFuncSeries":
        return SymFuncSeries([x.scale(c) for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, SymFuncSeries):
            return series_mul(self, other)
        return NotImplemented


def _constant_of(f: SymFunc) -> RationalPoly:
    return f.coeff(P.EMPTY)


def series_mul(a: SymFuncSeries, b: SymFuncSeries) -> SymFuncSeries:
    """Cauchy product, truncated at the smaller of the two orders."""
    order = min(a.truncation_order, b.truncation_order)
    out = []
    for n in range(order + 1):
        c = SymFunc()
        for i in range(n + 1):
            if a[i] and b[n - i]:
                c = c + mul(a[i], b[n - i])
        out.append(c)
    return SymFuncSeries(out)


def series_inverse(a: SymFuncSeries) -> SymFuncSeries:
    """Multiplicative inverse; the constant term must be a nonzero rational."""
    a0 = _constant_of(a[0])
    if not a0 or not a0.is_constant():
        raise ValueError("non-unit constant term")
    inv0 = 1 / a0.coeff(0)
    out = [SymFunc.scalar(inv0)]
    for n in range(1, a.truncation_order + 1):
        acc = SymFunc()
        for i in range(1, n + 1):
            if a[i] and out[n - i]:
                acc = acc + mul(a[i], out[n - i])
        out.append(acc.scale(-inv0))
    return SymFuncSeries(out)


def series_divide(a: SymFuncSeries, b: SymFuncSeries) -> SymFuncSeries:
    """Quotient ``a / b`` solved degree by degree.

    Each step divides by the constant term of ``b`` (a polynomial in q) and
    every such division must be exact; a remainder indicates a malformed
    identity and raises ``ArithmeticError``.
    """
    b0 = _constant_of(b[0])
    if not b0:
        raise ArithmeticError("non-exact series division: zero constant term in divisor")
    order = min(a.truncation_order, b.truncation_order)
    out: list[SymFunc] = []
    for n in range(order + 1):
        rest = a[n]
        for i in range(1, n + 1):
            if b[i] and out[n - i]:
                rest = rest - mul(b[i], out[n - i])
        try:
            out.append(rest.map_coefficients(lambda c: c.exact_div(b0)))
        except ArithmeticError as exc:
            raise ArithmeticError(f"non-exact series division at degree {n}: {exc}") from None
    return SymFuncSeries(out)


def scale_t_by_q(a: SymFuncSeries) -> SymFuncSeries:
    """Substitute t -> q t: the t^n coefficient picks up q^n."""
    return SymFuncSeries([c.scale(RationalPoly.monomial(n)) for n, c in enumerate(a.coeffs)])
