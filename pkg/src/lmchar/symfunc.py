"""Symmetric functions over Q[q] in the power-sum basis.

``SymFunc`` holds an element of Lambda^y[q] as a finite map from partitions
to ``RationalPoly`` coefficients of the power sums p_lambda.  ``BiSymFunc`` is
the two-alphabet analogue in Lambda^x (x) Lambda^y [q], where the x alphabet
only ever carries the weight-2 power sums p_(1,1) and p_(2) (or the weight-0
unit).  The Schur basis appears only at the boundary, through
``to_schur``/``schur`` and symmetric-group characters.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from numbers import Rational
from typing import Iterable, Mapping

from . import partitions as P
from .partitions import Partition
from .poly import ONE, ZERO, RationalPoly, format_poly

Coefficient = RationalPoly | int | Fraction


def _as_poly(c) -> RationalPoly:
    if isinstance(c, RationalPoly):
        return c
    if isinstance(c, (int, Rational)):
        return RationalPoly.constant(c)
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient")


class _Terms:
    """Shared immutable finite-support map from keys to polynomials."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        t = {}
        for key, c in (terms or {}).items():
            c = _as_poly(c)
            if c:
                t[self._check_key(key)] = c
        self._terms = t
        self._hash = None

    @staticmethod
    def _check_key(key):
        return key

    def _new(self, terms):
        return type(self)(terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coeff(self, key) -> RationalPoly:
        return self._terms.get(key, ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if type(other) is type(self):
            return self._terms == other._terms
        if isinstance(other, (int, Rational, RationalPoly)):
            return self == self._new({self._unit_key(): other})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        t = dict(self._terms)
        for k, c in other._terms.items():
            t[k] = t[k] + c if k in t else c
        return self._new(t)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self._terms.items()})

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

    def scale(self, c: Coefficient):
        c = _as_poly(c)
        return self._new({k: v * c for k, v in self._terms.items()})

    def map_coefficients(self, fn):
        return self._new({k: fn(v) for k, v in self._terms.items()})

    def _coerce(self, other):
        if type(other) is type(self):
            return other
        if isinstance(other, (int, Rational, RationalPoly)):
            return self._new({self._unit_key(): other})
        return None

    @staticmethod
    def _unit_key():
        raise NotImplementedError


class SymFunc(_Terms):
    """sum_lambda a_lambda(q) p_lambda  with exact rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        if not P.is_partition(key):
            raise ValueError(f"not a canonical partition: {key!r}")
        return key

    @staticmethod
    def _unit_key():
        return P.EMPTY

    @classmethod
    def scalar(cls, c: Coefficient) -> "SymFunc":
        return cls({P.EMPTY: c})

    @classmethod
    def power_sum(cls, lam: Iterable[int], c: Coefficient = 1) -> "SymFunc":
        return cls({P.make_partition(lam): c})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return mul(self, other)
        if isinstance(other, (int, Rational, RationalPoly)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def weights(self) -> set[int]:
        return {P.weight(lam) for lam in self._terms}

    def is_homogeneous(self, n: int | None = None) -> bool:
        """True iff every supported partition has one common weight (``n`` if given).

        The zero function is homogeneous of every weight.
        """
        w = self.weights()
        if n is None:
            return len(w) <= 1
        return w <= {n}

    def homogeneous_part(self, n: int) -> "SymFunc":
        return SymFunc({lam: c for lam, c in self._terms.items() if P.weight(lam) == n})

    def __repr__(self):
        return f"SymFunc({format_powersum(self)})"


class BiSymFunc(_Terms):
    """Two-alphabet function keyed by (x cycle type, y cycle type).

    The x partition always has weight 0 or 2.
    """

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        x, y = key
        if not (P.is_partition(x) and P.is_partition(y)):
            raise ValueError(f"not a pair of canonical partitions: {key!r}")
        if P.weight(x) not in (0, 2):
            raise ValueError(f"x alphabet carries weight 0 or 2 only, got {x!r}")
        return (x, y)

    @staticmethod
    def _unit_key():
        return (P.EMPTY, P.EMPTY)

    def y_weights(self) -> set[int]:
        return {P.weight(y) for _, y in self._terms}

    def x_component(self, x: Partition) -> SymFunc:
        """The y-function multiplying p_x."""
        return SymFunc({y: c for (xx, y), c in self._terms.items() if xx == x})

    def __mul__(self, other):
        if isinstance(other, (int, Rational, RationalPoly)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"BiSymFunc({format_bi_powersum(self)})"


ONE_SF = SymFunc.scalar(1)


def mul(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product; p_lambda * p_mu = p_(lambda + mu)."""
    t: dict[Partition, RationalPoly] = {}
    for lam, a in f.items():
        for mu, b in g.items():
            key = P.add(lam, mu)
            c = a * b
            t[key] = t[key] + c if key in t else c
    return SymFunc(t)


def plethysm_by_power_sum(r: int, f: SymFunc) -> SymFunc:
    """p_r o f, where p_r o p_m = p_(rm) and p_r o q = q^r."""
    if r < 1:
        raise ValueError(f"power-sum index must be positive: {r}")
    if r == 1:
        return f
    t: dict[Partition, RationalPoly] = {}
    for lam, c in f.items():
        key = P.stretch(r, lam)
        c = c.compose_power(r)
        t[key] = t[key] + c if key in t else c
    return SymFunc(t)


# -- characters ----------------------------------------------------------


@lru_cache(maxsize=1 << 18)
def _mn(lam: Partition, mu: Partition) -> int:
    # beta-set (abacus) form of Murnaghan-Nakayama: removing a border strip of
    # length r slides one bead from b to b - r.
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in occupied:
            continue
        between = sum(1 for x in beta if t < x < b)
        new_beta = sorted([x for x in beta if x != b] + [t], reverse=True)
        new_lam = tuple(x - (ell - 1 - i) for i, x in enumerate(new_beta))
        new_lam = tuple(p for p in new_lam if p)
        total += (-1) ** between * _mn(new_lam, rest)
    return total


def character(lam: Partition, mu: Partition) -> int:
    """chi^lam(mu): irreducible S_n character on the class of cycle type mu."""
    if P.weight(lam) != P.weight(mu):
        raise ValueError(f"incompatible weights: |{lam}| != |{mu}|")
    return _mn(tuple(lam), tuple(mu))


def clear_character_cache() -> None:
    _mn.cache_clear()
    _schur.cache_clear()


@lru_cache(maxsize=None)
def _schur(lam: Partition) -> SymFunc:
    n = P.weight(lam)
    return SymFunc(
        {mu: Fraction(character(lam, mu), P.centralizer_order(mu)) for mu in P.enumerate_partitions(n)}
    )


def schur(lam: Iterable[int]) -> SymFunc:
    """s_lam = sum_mu chi^lam(mu) / z_mu * p_mu."""
    return _schur(P.make_partition(lam))


def hook_schur(n: int, i: int) -> SymFunc:
    """s_(n-i, 1^i)."""
    if n < 1:
        raise ValueError(f"hook needs n >= 1, got {n}")
    return _schur(P.hook(n, i))


def complete_h(r: int) -> SymFunc:
    """h_r = sum_mu p_mu / z_mu;  h_0 = 1."""
    return SymFunc({mu: Fraction(1, P.centralizer_order(mu)) for mu in P.enumerate_partitions(r)})


def _single_weight(weights: set[int], what: str) -> int | None:
    if len(weights) > 1:
        raise ValueError(f"{what} is not homogeneous (weights {sorted(weights)}); split by weight first")
    return next(iter(weights)) if weights else None


def to_schur(f: SymFunc) -> dict[Partition, RationalPoly]:
    """Schur coefficients lam -> <f, s_lam> of a homogeneous ``f``.

    Uses p_mu = sum_lam chi^lam(mu) s_lam.  Keys come out lexicographically
    descending; zero coefficients are dropped.
    """
    n = _single_weight(f.weights(), "symmetric function")
    if n is None:
        return {}
    out = {}
    for lam in P.enumerate_partitions(n):
        c = ZERO
        for mu, a in f.items():
            chi = character(lam, mu)
            if chi:
                c = c + a * chi
        if c:
            out[lam] = c
    return out


def from_schur(coeffs: Mapping[Partition, Coefficient]) -> SymFunc:
    out = SymFunc()
    for lam, c in coeffs.items():
        out = out + schur(lam).scale(c)
    return out


def dimension(f: SymFunc, n: int) -> RationalPoly:
    """n! times the coefficient of p_(1^n): the graded dimension of the representation."""
    if not f.is_homogeneous(n):
        raise ValueError(f"dimension needs a homogeneous weight-{n} input, got weights {sorted(f.weights())}")
    return f.coeff(P.ones(n)) * factorial(n)


def specialize_q(f, v):
    """Evaluate every coefficient at q = v (result has constant coefficients)."""
    return f.map_coefficients(lambda c: RationalPoly.constant(c(v)))


# -- two alphabets -------------------------------------------------------


def bi_from_parts(x_part: Iterable[int], f: SymFunc) -> BiSymFunc:
    """p^x_(x_part) * f^y."""
    x = P.make_partition(x_part)
    return BiSymFunc({(x, y): c for y, c in f.items()})


def bi_add(a: BiSymFunc, b: BiSymFunc) -> BiSymFunc:
    return a + b


def bi_scale(a: BiSymFunc, c: Coefficient) -> BiSymFunc:
    return a.scale(c)


def bi_to_schur(e: BiSymFunc) -> dict[tuple[Partition, Partition], RationalPoly]:
    """Schur coefficients (lam_x, lam_y) -> sum a * chi^lam_x(nu_x) chi^lam_y(nu_y).

    Requires x-weight 2 and a single y-weight.  Keys are ordered with the x
    partition first, each lexicographically descending.
    """
    n = _single_weight(e.y_weights(), "y part")
    if n is None:
        return {}
    if any(P.weight(x) != 2 for x in {x for x, _ in e.keys()}):
        raise ValueError("bi_to_schur needs every x partition to have weight 2")
    out = {}
    for lx in P.enumerate_partitions(2):
        for ly in P.enumerate_partitions(n):
            c = ZERO
            for (nx, ny), a in e.items():
                chi = character(lx, nx) * character(ly, ny)
                if chi:
                    c = c + a * chi
            if c:
                out[(lx, ly)] = c
    return out


def bi_from_schur(coeffs: Mapping[tuple[Partition, Partition], Coefficient]) -> BiSymFunc:
    out = BiSymFunc()
    for (lx, ly), c in coeffs.items():
        sx, sy = schur(lx), schur(ly)
        for nx, a in sx.items():
            out = out + bi_from_parts(nx, sy.scale(a * _as_poly(c)))
    return out


def bi_dimension(e: BiSymFunc, n: int) -> RationalPoly:
    """2 * n! times the coefficient of p^x_(1,1) p^y_(1^n)."""
    if not e.y_weights() <= {n}:
        raise ValueError(f"bi_dimension needs y-weight {n}, got {sorted(e.y_weights())}")
    return e.coeff(((1, 1), P.ones(n))) * (2 * factorial(n))


# -- formatting & serialization ------------------------------------------


def part_label(lam: Partition) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


def _coef_times(c: RationalPoly, mono: str) -> str:
    if c == ONE:
        return mono
    if c == -ONE:
        return "-" + mono
    if c.is_constant():
        return f"{format_poly(c)}*{mono}"
    return f"({format_poly(c)})*{mono}"


def _join_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    text = terms[0]
    for t in terms[1:]:
        text += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return text


def format_powersum(f: SymFunc) -> str:
    """Power-sum rendering, partitions in ascending lexicographic order, e.g. ``p[1,1] + p[2]``."""
    terms = []
    for lam in sorted(f.keys()):
        mono = "p" + part_label(lam) if lam else "1"
        c = f.coeff(lam)
        terms.append(format_poly(c) if not lam else _coef_times(c, mono))
    return _join_terms(terms)


def format_bi_powersum(e: BiSymFunc) -> str:
    terms = []
    for x, y in sorted(e.keys()):
        mono = f"p{part_label(x)}^x p{part_label(y)}^y"
        terms.append(_coef_times(e.coeff((x, y)), mono))
    return _join_terms(terms)


def poly_to_json(p: RationalPoly) -> list[list[int]]:
    return [[e, v.numerator, v.denominator] for e, v in p.items()]


def poly_from_json(data) -> RationalPoly:
    return RationalPoly({int(e): Fraction(int(num), int(den)) for e, num, den in data})


def _lex_desc(keys):
    return sorted(keys, reverse=True)


def to_json(f: SymFunc | BiSymFunc, basis: str = "schur") -> dict:
    """Serialize to ``{"basis": ..., "terms": [{"x"?, "y", "poly"}]}``."""
    if basis not in ("schur", "powersum"):
        raise ValueError(f"unknown basis {basis!r}")
    terms = []
    if isinstance(f, BiSymFunc):
        coeffs = bi_to_schur(f) if basis == "schur" else dict(f.items())
        for lx, ly in sorted(coeffs, key=lambda k: (k[0], k[1]), reverse=True):
            terms.append({"x": list(lx), "y": list(ly), "poly": poly_to_json(coeffs[(lx, ly)])})
    else:
        coeffs = to_schur(f) if basis == "schur" else dict(f.items())
        for lam in _lex_desc(coeffs):
            terms.append({"y": list(lam), "poly": poly_to_json(coeffs[lam])})
    return {"basis": basis, "terms": terms}


def from_json(data: dict) -> SymFunc | BiSymFunc:
    basis = data["basis"]
    if basis not in ("schur", "powersum"):
        raise ValueError(f"unknown basis {basis!r}")
    two_alphabets = any("x" in t for t in data["terms"])
    if two_alphabets:
        coeffs = {
            (P.make_partition(t["x"]), P.make_partition(t["y"])): poly_from_json(t["poly"])
            for t in data["terms"]
        }
        return bi_from_schur(coeffs) if basis == "schur" else BiSymFunc(coeffs)
    coeffs = {P.make_partition(t["y"]): poly_from_json(t["poly"]) for t in data["terms"]}
    return from_schur(coeffs) if basis == "schur" else SymFunc(coeffs)
