"""The entropy function ξ(p) = -3p log2(p) / 2 and the binomial-tail bounds.

Every comparison runs in interval arithmetic (mpmath.iv, 200 bits) and only
returns a verdict once the two intervals are separated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import iv

PREC = 200
EXACT_TAIL_LIMIT = 4000


def xi(p: float) -> float:
    if not 0 < p <= 1:
        raise ValueError("p must lie in (0, 1]")
    return -1.5 * p * math.log2(p)


def binom_leq(n: int, m: int) -> int:
    """Σ_{i=0}^{m} C(n, i) as an exact integer."""
    if m < 0:
        return 0
    total, term = 0, 1
    for i in range(min(m, n) + 1):
        if i:
            term = term * (n - i + 1) // i
        total += term
    return total


class _prec:
    def __enter__(self):
        self.old = iv.prec
        iv.prec = PREC

    def __exit__(self, *exc):
        iv.prec = self.old


def _ivq(x: Fraction):
    return iv.mpf(x.numerator) / iv.mpf(x.denominator)


def _ivlog2(x):
    return iv.log(x) / iv.log(2)


def _le(a, b) -> bool:
    """Certified a <= b for intervals; raises if they overlap."""
    if a.b <= b.a:
        return True
    if a.a > b.b:
        return False
    raise ArithmeticError("interval comparison undecided at the working precision")


def _log2_tail_upper(n: int, m: int):
    """Interval whose upper end bounds log2 Σ_{i<=m} C(n, i) from above."""
    if m <= EXACT_TAIL_LIMIT:
        return _ivlog2(iv.mpf(binom_leq(n, m)))
    # C(n, m) <= n^m / m!, Stirling lower bound on m!, geometric tail ratio
    mm = iv.mpf(m)
    ln_fact_lo = mm * iv.log(mm) - mm + iv.log(2 * iv.pi * mm) / 2 + 1 / (12 * mm + 1)
    ln_upper = mm * iv.log(iv.mpf(n)) - ln_fact_lo + iv.log(iv.mpf(n - m + 1) / iv.mpf(n - 2 * m + 1))
    return ln_upper / iv.log(2)


@dataclass(frozen=True)
class EntropyReport:
    tail_vs_xi: bool
    xi_vs_three_quarter: bool
    # the individual links of both chains
    tail_vs_middle: bool
    middle_vs_xi: bool
    xi_vs_power_eighth: bool
    power_eighth_vs_three_quarter: bool

    @property
    def ok(self) -> bool:
        """The two end-to-end claims: tail <= 2^{ξ(p)n} and ξ(p) <= p^{3/4}."""
        return self.tail_vs_xi and self.xi_vs_three_quarter

    @property
    def chain_ok(self) -> bool:
        return self.ok and all((self.tail_vs_middle, self.middle_vs_xi, self.xi_vs_power_eighth,
                                self.power_eighth_vs_three_quarter))


def in_regime(n: int, p) -> bool:
    p = Fraction(p)
    with _prec():
        lo = 3 * _ivlog2(iv.mpf(n)) / n
        pp = _ivq(p)
        return _le(lo, pp) and p <= Fraction(1, 10**11)


def entropy_report(n: int, p, require_regime: bool = True) -> EntropyReport:
    """Each link of Σ_{i<=pn} C(n,i) <= pn (en/pn)^{pn} <= 2^{ξ(p)n},
    ξ(p) <= 1.5 p (1/p)^{1/8} <= p^{3/4}."""
    p = Fraction(p)
    if require_regime and not in_regime(n, p):
        raise ValueError("(n, p) lies outside 3 log n / n <= p <= 1e-11")
    m = math.floor(p * n)
    with _prec():
        pp = _ivq(p)
        pn = _ivq(p * n)
        tail = _log2_tail_upper(n, m)
        middle = _ivlog2(pn) + pn * _ivlog2(iv.e * iv.mpf(n) / pn)
        xin = -3 * pp * _ivlog2(pp) / 2 * n
        xi_p = -3 * pp * _ivlog2(pp) / 2
        eighth = 3 * pp * iv.exp(-iv.log(pp) / 8) / 2
        three_q = iv.exp(3 * iv.log(pp) / 4)
        return EntropyReport(
            _le(tail, xin),
            _le(xi_p, three_q),
            _le(tail, middle), _le(middle, xin), _le(xi_p, eighth), _le(eighth, three_q)
        )


def entropy_bound_holds(n: int, p, require_regime: bool = True) -> bool:
    return entropy_report(n, p, require_regime).ok


def regime_grid(count: int = 20) -> list[tuple[int, Fraction]]:
    """Deterministic (n, p) points inside the valid regime."""
    pts = []
    ns = [10**14, 10**15, 10**16, 10**17]
    per = count // len(ns)
    for n in ns:
        with mpmath.workprec(PREC):
            lo = 3 * mpmath.log(n, 2) / n
        lo_f = Fraction(str(mpmath.nstr(lo * 1.0001, 30)))
        hi_f = Fraction(1, 10**11)
        for t in range(per):
            # geometric interpolation, rounded to a short decimal
            frac = t / max(per - 1, 1)
            val = float(lo_f) ** (1 - frac) * float(hi_f) ** frac
            p = Fraction(f"{val:.6e}")
            p = min(max(p, lo_f), hi_f)
            pts.append((n, p))
    return pts
