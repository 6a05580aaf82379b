"""Cross-checks between the independent formulas, collected into reports."""
from __future__ import annotations

from math import factorial
from typing import Callable, Iterable

from . import appendix
from . import losev_manin as lm
from .poly import ZERO, format_poly
from .report import VerificationReport
from .symfunc import SymFunc, bi_to_schur, dimension, format_powersum, specialize_q, to_schur


def _diff(a: SymFunc, b: SymFunc) -> str:
    return format_powersum(a - b)


def _schur_diff(got: dict, want: dict) -> dict:
    keys = sorted(set(got) | set(want), reverse=True)
    return {
        str(k): {"got": format_poly(got.get(k, ZERO)), "want": format_poly(want.get(k, ZERO))}
        for k in keys
        if got.get(k) != want.get(k)
    }


def _restricted(n: int) -> SymFunc:
    return lm.forget_s2(lm.equivariant_poincare(n), n)


def suite_appendix_table(max_n: int, report: VerificationReport) -> None:
    for n in range(1, min(max_n, appendix.MAX_N) + 1):
        got = bi_to_schur(lm.equivariant_poincare(n))
        want = appendix.table_row(n)
        report.record("appendix-table", n, got == want, _schur_diff(got, want))


def suite_procesi(max_n: int, report: VerificationReport) -> None:
    rec = lm.procesi(max_n)
    for n in range(1, max_n + 1):
        a = _restricted(n)
        report.record("procesi", n, a == rec[n], _diff(a, rec[n]))


def suite_inverse_series(max_n: int, report: VerificationReport) -> None:
    s = lm.inverse_series(max_n)
    for n in range(1, max_n + 1):
        a = _restricted(n)
        report.record("inverse-series", n, a == s[n], _diff(a, s[n]))


def suite_stembridge(max_n: int, report: VerificationReport) -> None:
    try:
        s = lm.stembridge_series(max_n)
    except ArithmeticError as exc:
        report.record("stembridge", 0, False, str(exc))
        return
    for n in range(1, max_n + 1):
        a = _restricted(n)
        report.record("stembridge", n, a == s[n], _diff(a, s[n]))


def suite_generating_series(max_n: int, report: VerificationReport) -> None:
    s = lm.equivariant_poincare_series(max_n)
    for n in range(1, max_n + 1):
        a, b = lm.equivariant_poincare(n), s.degree(n)
        report.record("generating-series", n, a == b, str(a - b))


def suite_eulerian(max_n: int, report: VerificationReport) -> None:
    for n in range(1, max_n + 1):
        got = lm.poincare_polynomial(n)
        want = lm.eulerian_polynomial(n)
        detail = {"got": format_poly(got), "want": format_poly(want)}
        report.record("eulerian", n, got == want and got(1) == factorial(n), detail)


def suite_euler_char(max_n: int, report: VerificationReport) -> None:
    rec = lm.procesi(max_n)
    euler = lm.euler_characteristic_series(max_n)
    for n in range(1, max_n + 1):
        a = specialize_q(rec[n], 1)
        report.record("euler-char", n, a == euler[n], _diff(a, euler[n]))
        dim = dimension(euler[n], n)
        report.record("euler-char/dimension", n, dim == factorial(n), format_poly(dim))


def suite_hall_littlewood(max_n: int, report: VerificationReport) -> None:
    for n in range(1, max_n + 1):
        fa, fb = lm.f(n), lm.f_from_hall_littlewood(n)
        report.record("hall-littlewood/f", n, fa == fb, _diff(fa, fb))
        ga, gb = lm.g(n), lm.g_from_hall_littlewood(n)
        report.record("hall-littlewood/g", n, ga == gb, _diff(ga, gb))
        at_one = specialize_q(lm.hall_littlewood_row(n), 1)
        pn = SymFunc.power_sum((n,))
        report.record("hall-littlewood/q=1", n, at_one == pn, _diff(at_one, pn))
    product = lm.hl_product_identity_check(max_n)
    for c in product.checks:
        report.record("hall-littlewood/product", c.n, c.passed, c.detail)


def _schur_coefficients(n: int):
    return bi_to_schur(lm.equivariant_poincare(n))


def suite_palindromic(max_n: int, report: VerificationReport) -> None:
    for n in range(1, max_n + 1):
        bad = {str(k): format_poly(c) for k, c in _schur_coefficients(n).items() if not c.is_palindromic(n - 1)}
        report.record("palindromic", n, not bad, bad)


def suite_schur_positive(max_n: int, report: VerificationReport) -> None:
    for n in range(1, max_n + 1):
        bad = {
            str(k): format_poly(c)
            for k, c in _schur_coefficients(n).items()
            if not (c.is_integral() and c.is_nonnegative())
        }
        restricted_bad = {
            str(k): format_poly(c)
            for k, c in to_schur(_restricted(n)).items()
            if not (c.is_integral() and c.is_nonnegative())
        }
        bad.update(restricted_bad)
        report.record("schur-positive", n, not bad, bad)


SUITES: dict[str, Callable[[int, VerificationReport], None]] = {
    "appendix-table": suite_appendix_table,
    "procesi": suite_procesi,
    "inverse-series": suite_inverse_series,
    "stembridge": suite_stembridge,
    "generating-series": suite_generating_series,
    "eulerian": suite_eulerian,
    "euler-char": suite_euler_char,
    "hall-littlewood": suite_hall_littlewood,
    "palindromic": suite_palindromic,
    "schur-positive": suite_schur_positive,
}


def verify(max_n: int, suites: Iterable[str] = ("all",)) -> VerificationReport:
    """Run the named suites (or ``all``) for n up to ``max_n``.

    Records come out in the fixed suite order of ``SUITES`` and ascending n,
    whatever order the names were given in.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    names = set(suites)
    if "all" in names:
        names = set(SUITES)
    unknown = names - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suite(s) {sorted(unknown)}; valid: {', '.join(SUITES)}")
    selected = [name for name in SUITES if name in names]
    report = VerificationReport(",".join(selected), max_n)
    for name in selected:
        SUITES[name](max_n, report)
    return report
