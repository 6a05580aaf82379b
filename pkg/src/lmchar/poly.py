"""Univariate polynomials in q with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"exact rational coefficient expected, got {type(c).__name__}")


class RationalPoly:
    """A polynomial sum_i c_i q^i with ``Fraction`` coefficients.

    Instances are immutable and hashable.  Zero coefficients are never stored,
    so structural equality is polynomial equality.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        for e, v in (coeffs or {}).items():
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            v = _as_fraction(v)
            if v:
                c[int(e)] = v
        self._c = dict(sorted(c.items()))
        self._hash = None

    @classmethod
    def constant(cls, c) -> "RationalPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, c=1) -> "RationalPoly":
        return cls({exp: c})

    @classmethod
    def from_list(cls, coeffs: Iterable[object]) -> "RationalPoly":
        """Build from ascending coefficients [c_0, c_1, ...]."""
        return cls(dict(enumerate(coeffs)))

    @classmethod
    def geometric(cls, lo: int, hi: int) -> "RationalPoly":
        """q^lo + q^(lo+1) + ... + q^hi (zero when hi < lo)."""
        return cls({e: 1 for e in range(lo, hi + 1)})

    # -- inspection --------------------------------------------------------

    def items(self):
        return self._c.items()

    def coeff(self, exp: int) -> Fraction:
        return self._c.get(exp, Fraction(0))

    @property
    def degree(self) -> float | int:
        """Largest exponent; ``-inf`` for the zero polynomial."""
        return max(self._c) if self._c else float("-inf")

    @property
    def low_degree(self) -> float | int:
        return min(self._c) if self._c else float("inf")

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self._c.values())

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self._c.values())

    def to_list(self) -> list[Fraction]:
        if not self._c:
            return []
        return [self.coeff(e) for e in range(self.degree + 1)]

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self._c == other._c
        if isinstance(other, (int, Rational)):
            return self._c == RationalPoly.constant(other)._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"RationalPoly({format_poly(self)!r})"

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RationalPoly | None":
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, (int, Rational)):
            return RationalPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return RationalPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return RationalPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = RationalPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "RationalPoly") -> tuple["RationalPoly", "RationalPoly"]:
        """Euclidean division over Q: returns (quotient, remainder)."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = dict(self._c)
        quo: dict[int, Fraction] = {}
        d = other.degree
        lead = other._c[d]
        while rem:
            top = max(rem)
            if top < d:
                break
            factor = rem[top] / lead
            shift = top - d
            quo[shift] = factor
            for e, v in other._c.items():
                k = e + shift
                nv = rem.get(k, 0) - factor * v
                if nv:
                    rem[k] = nv
                else:
                    rem.pop(k, None)
        return RationalPoly(quo), RationalPoly(rem)

    def exact_div(self, other: "RationalPoly") -> "RationalPoly":
        """Quotient of an exact division; raises ``ArithmeticError`` on a remainder."""
        other = self._coerce(other)
        quo, rem = self.divmod(other)
        if rem:
            raise ArithmeticError(f"{format_poly(self)} is not divisible by {format_poly(other)}")
        return quo

    # -- substitutions -----------------------------------------------------

    def __call__(self, value):
        """Evaluate at an exact rational value."""
        value = _as_fraction(value)
        return sum((v * value**e for e, v in self._c.items()), Fraction(0))

    def compose_power(self, r: int) -> "RationalPoly":
        """Substitute q -> q^r."""
        return RationalPoly({r * e: v for e, v in self._c.items()})

    def scale_variable(self, s) -> "RationalPoly":
        """Substitute q -> s*q."""
        s = _as_fraction(s)
        return RationalPoly({e: v * s**e for e, v in self._c.items()})

    def reversed(self, d: int) -> "RationalPoly":
        """q^d * P(1/q); every exponent must be at most ``d``."""
        if self._c and self.degree > d:
            raise ValueError(f"cannot reverse a degree-{self.degree} polynomial at degree {d}")
        return RationalPoly({d - e: v for e, v in self._c.items()})

    def is_palindromic(self, d: int) -> bool:
        """Coefficient of q^i equals that of q^(d-i) for every i."""
        return all(self.coeff(e) == self.coeff(d - e) for e in range(d + 1)) and (
            not self._c or (self.low_degree >= 0 and self.degree <= d)
        )


ZERO = RationalPoly()
ONE = RationalPoly.constant(1)
Q = RationalPoly.monomial(1)


def _fmt_coeff(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def format_poly(p: RationalPoly, var: str = "q") -> str:
    """Plain-text rendering with descending exponents, e.g. ``q^2 + 2*q + 1``."""
    if p.is_zero():
        return "0"
    out = []
    for e, v in sorted(p.items(), reverse=True):
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if e == 0:
            body = _fmt_coeff(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text
