"""Text, JSON and LaTeX rendering of Schur expansions, plus a LaTeX reader.

The reader accepts the layout of published tables (x-Schur factor times a
``\\Bigl( ... \\Bigr)`` group of y-Schur terms, ``(1^2)`` exponent notation,
``\\,`` spacing, ``&``/``\\\\`` alignment) and returns the same coefficient
map the renderer started from, which is how LaTeX output is compared in a
layout-insensitive way.
"""
from __future__ import annotations

import re
from fractions import Fraction
from itertools import groupby

from . import partitions as P
from .partitions import Partition
from .poly import ONE, RationalPoly, format_poly
from .symfunc import part_label

SchurMap = dict  # Partition -> RationalPoly, or (Partition, Partition) -> RationalPoly


def _ordered(coeffs: SchurMap):
    return sorted(coeffs.items(), key=lambda kv: kv[0], reverse=True)


# -- text ------------------------------------------------------------------


def text_lines(coeffs: SchurMap) -> list[str]:
    """One line per Schur term: ``s[2]^x s[3]^y * (q^2 + q + 1)``."""
    lines = []
    for key, c in _ordered(coeffs):
        if isinstance(key[0], tuple):
            mono = f"s{part_label(key[0])}^x s{part_label(key[1])}^y"
        else:
            mono = f"s{part_label(key)}"
        lines.append(f"{mono} * ({format_poly(c)})")
    return lines


# -- LaTeX -----------------------------------------------------------------


def latex_partition(lam: Partition) -> str:
    groups = []
    for part, run in groupby(lam):
        m = len(list(run))
        groups.append(f"{part}^{m}" if m > 1 else str(part))
    return "(" + ",".join(groups) + ")"


def _latex_number(v: Fraction) -> str:
    return str(v) if v.denominator == 1 else rf"\frac{{{v.numerator}}}{{{v.denominator}}}"


def latex_poly(p: RationalPoly) -> str:
    """Descending exponents, e.g. ``q^4+2 q^3+1``."""
    if p.is_zero():
        return "0"
    out = ""
    for e, v in sorted(p.items(), reverse=True):
        a = abs(v)
        if e == 0:
            body = _latex_number(a)
        else:
            mono = "q" if e == 1 else (f"q^{e}" if e < 10 else f"q^{{{e}}}")
            body = mono if a == 1 else f"{_latex_number(a)} {mono}"
        if not out:
            out = ("-" if v < 0 else "") + body
        else:
            out += ("-" if v < 0 else "+") + body
    return out


def _latex_coefficient(p: RationalPoly) -> str:
    if p == ONE:
        return ""
    items = list(p.items())
    if len(items) == 1 and items[0][1] == 1:
        return latex_poly(p) + r" \, "
    return f"({latex_poly(p)}) "


def _schur_x(lam):
    return f"s_{{{latex_partition(lam)}}}^x"


def _schur_y(lam):
    return f"s_{{{latex_partition(lam)}}}^y"


def latex(coeffs: SchurMap) -> str:
    """Render a Schur expansion in the grouped layout of the published table."""
    items = _ordered(coeffs)
    if not items:
        return "0"
    if not isinstance(items[0][0][0], tuple):
        return "+".join(_latex_coefficient(c) + _schur_y(lam) for lam, c in items)
    blocks = []
    for x, group in groupby(items, key=lambda kv: kv[0][0]):
        group = list(group)
        if len(group) == 1:
            (_, y), c = group[0]
            blocks.append(f"{_latex_coefficient(c)}{_schur_x(x)} {_schur_y(y)}")
        else:
            inner = "+".join(_latex_coefficient(c) + _schur_y(y) for (_, y), c in group)
            blocks.append(rf"{_schur_x(x)} \Bigl({inner}\Bigr)")
    return "+".join(blocks)


# -- LaTeX reader ------------------------------------------------------------

_NOISE = re.compile(r"\\qquad|\\quad|\\,|\\!|\\;|&|\\\\|\$|\s+")
_SCHUR = re.compile(
    r"s(?:_\{\((?P<p1>[^)]*)\)\}\^(?P<a1>[xy])|\^(?P<a2>[xy])_\{\((?P<p2>[^)]*)\)\})"
)
_COEF_PAREN = re.compile(r"\((?P<body>[^()]*)\)")
_COEF_BARE = re.compile(r"(?:\d+|\\frac\{\d+\}\{\d+\})?q(?:\^(?:\d|\{\d+\}))?|\d+|\\frac\{\d+\}\{\d+\}")
_POLY_TERM = re.compile(
    r"(?P<sign>[+-]?)(?P<num>\d+|\\frac\{(?P<fn>\d+)\}\{(?P<fd>\d+)\})?(?P<q>q(?:\^(?:(?P<e1>\d)|\{(?P<e2>\d+)\}))?)?"
)


def _parse_partition(text: str) -> Partition:
    parts = []
    for chunk in text.split(","):
        if "^" in chunk:
            k, m = chunk.split("^")
            parts += [int(k)] * int(m.strip("{}"))
        elif chunk:
            parts.append(int(chunk))
    return P.make_partition(parts)


def parse_latex_poly(text: str) -> RationalPoly:
    text = _NOISE.sub("", text)
    pos, out = 0, {}
    while pos < len(text):
        m = _POLY_TERM.match(text, pos)
        if not m or m.end() == pos or not (m.group("num") or m.group("q")):
            raise ValueError(f"cannot read polynomial term at {text[pos:]!r}")
        if m.group("fn"):
            c = Fraction(int(m.group("fn")), int(m.group("fd")))
        elif m.group("num"):
            c = Fraction(int(m.group("num")))
        else:
            c = Fraction(1)
        if m.group("sign") == "-":
            c = -c
        if m.group("q"):
            e = int(m.group("e1") or m.group("e2") or 1)
        else:
            e = 0
        out[e] = out.get(e, 0) + c
        pos = m.end()
    return RationalPoly(out)


class _Reader:
    def __init__(self, text: str):
        self.s = _NOISE.sub("", text)
        self.i = 0

    def done(self):
        return self.i >= len(self.s)

    def peek(self, lit):
        return self.s.startswith(lit, self.i)

    def take(self, lit):
        if not self.peek(lit):
            return False
        self.i += len(lit)
        return True

    def coefficient(self) -> RationalPoly:
        c = ONE
        while True:
            if self.peek("s_") or self.peek("s^") or self.peek("\\Bigl"):
                return c
            m = _COEF_PAREN.match(self.s, self.i) or _COEF_BARE.match(self.s, self.i)
            if not m or m.end() == self.i:
                return c
            body = m.group("body") if "body" in m.groupdict() else m.group(0)
            c = c * parse_latex_poly(body)
            self.i = m.end()

    def schur(self):
        m = _SCHUR.match(self.s, self.i)
        if not m:
            return None
        self.i = m.end()
        alphabet = m.group("a1") or m.group("a2")
        return alphabet, _parse_partition(m.group("p1") if m.group("p1") is not None else m.group("p2"))

    def error(self):
        return ValueError(f"cannot read LaTeX at {self.s[self.i:self.i + 40]!r}")


def parse_latex(text: str) -> SchurMap:
    """Read a Schur expansion back into a coefficient map."""
    r = _Reader(text)
    out: dict = {}

    def put(key, c):
        total = out.get(key, RationalPoly()) + c
        if total:
            out[key] = total
        else:
            out.pop(key, None)

    while not r.done():
        c = r.coefficient()
        first = r.schur()
        if first is None:
            raise r.error()
        alphabet, lam = first
        if alphabet == "y":
            put(lam, c)
        elif r.take("\\Bigl("):
            while True:
                inner_c = r.coefficient()
                ys = r.schur()
                if ys is None or ys[0] != "y":
                    raise r.error()
                put((lam, ys[1]), c * inner_c)
                if r.take("\\Bigr)"):
                    break
                if not r.take("+"):
                    raise r.error()
        else:
            c = c * r.coefficient()
            ys = r.schur()
            if ys is None or ys[0] != "y":
                raise r.error()
            put((lam, ys[1]), c)
        if not r.done() and not r.take("+"):
            raise r.error()
    return out
