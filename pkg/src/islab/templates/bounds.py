"""Numeric checks of the counting estimates around f_k(n) and |T_Q(n,k)|.

Irrational comparisons use mpmath interval arithmetic and only return once
the intervals separate; rational ones are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import iv

from ..errors import GuardError
from ..partitions import OrderedPartition
from .counting import count_templates_on_partition, f_exact, n_k, turan_count

PREC = 200


class _prec:
    def __enter__(self):
        self.old = iv.prec
        iv.prec = PREC

    def __exit__(self, *exc):
        iv.prec = self.old


def _log2_int(x: int):
    if x <= 0:
        raise ValueError("log of a non-positive integer")
    return iv.log(iv.mpf(x)) / iv.log(2)


def _le(a, b) -> bool:
    if a.b <= b.a:
        return True
    if a.a > b.b:
        return False
    raise ArithmeticError("interval comparison undecided at the working precision")


def _mid(x) -> float:
    lo, hi = (float(mpmath.mpf(e)) for e in x._mpi_)
    return (lo + hi) / 2


@dataclass(frozen=True)
class Estimate1:
    n: int
    k: int
    log2_f: float
    lower_log2: float
    upper_log2: float
    lower_ok: bool
    upper_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok


def f_estimate_1(n: int, k: int) -> Estimate1:
    """2^{n log n - e n log log n} <= f_k(n) <= 2^{n log n - n log log n + n}."""
    if n < 4:
        raise ValueError("estimate 1 needs n >= 4")
    f = f_exact(n, k)
    with _prec():
        lf = _log2_int(f)
        ln = iv.log(iv.mpf(n)) / iv.log(2)
        lln = iv.log(ln) / iv.log(2)
        lower = n * ln - iv.e * n * lln
        upper = n * ln - n * lln + n
        return Estimate1(n, k, _mid(lf), _mid(lower), _mid(upper), _le(lower, lf), _le(lf, upper))


def check_f_estimate_1(n: int, k: int) -> bool:
    return f_estimate_1(n, k).ok


def check_f_estimate_2(n: int, s: int, k: int) -> tuple[bool | None, bool]:
    """(lower_ok, upper_ok): upper is f(n) <= n^2 f(n-1); the lower bound
    s^{s/2} <= f(n)/f(n-s) is only claimed for s >= 10^7 and is absent below."""
    if not 0 < s < n:
        raise ValueError("need 0 < s < n")
    upper_ok = f_exact(n, k) <= n * n * f_exact(n - 1, k)
    if s < 10**7:
        return None, upper_ok
    raise GuardError("f_estimate_2.lower", "s >= 10^7 is beyond exact f_k computation")


def number_of_templates_rhs(n: int, k: int) -> Fraction:
    """(k-1)^n / (2 (k-2)! n^k) 2^{t_{k-1}(n)} f_k(n_k)."""
    return Fraction((k - 1) ** n * 2 ** turan_count(n, k - 1) * f_exact(n_k(n, k), k),
                    2 * math.factorial(k - 2) * n**k)


def check_number_of_templates(n: int, k: int, count: int) -> bool:
    return number_of_templates_rhs(n, k) <= count


@dataclass(frozen=True)
class SizeBound:
    lhs_log2: float
    rhs_log2: float
    ok: bool


def size_of_template_bound(n: int, k: int, q: OrderedPartition) -> SizeBound:
    """|T_Q(n,k)| <= 2^{6 (log n)^2} 2^{t_{k-1}(n)} f_k(n_k)."""
    if q.n != n or q.k != k:
        raise ValueError("partition does not match (n, k)")
    t = count_templates_on_partition(q, k)
    with _prec():
        lhs = _log2_int(t)
        ln = iv.log(iv.mpf(n)) / iv.log(2)
        rhs = 6 * ln * ln + turan_count(n, k - 1) + _log2_int(f_exact(n_k(n, k), k))
        return SizeBound(_mid(lhs), _mid(rhs), _le(lhs, rhs))


def check_size_of_template_bound(n: int, k: int, q: OrderedPartition) -> bool:
    return size_of_template_bound(n, k, q).ok


def _emax_table(n: int, k: int) -> list[int]:
    # most edges of a k-partite graph on n vertices with one class of size a
    return [a * (n - a) + turan_count(n - a, k - 1) for a in range(n + 1)]


def omitted_part_i(n: int, k: int, s: int, table: list[int] | None = None) -> bool:
    """Any k-partite G with a class A, |A - n/k| >= s, has e(G) <= t_k(n) - s(s/2 - k)."""
    if k < 2 or not 0 <= s < n:
        raise ValueError("need k >= 2 and 0 <= s < n")
    table = table or _emax_table(n, k)
    worst = max((e for a, e in enumerate(table) if abs(k * a - n) >= k * s), default=None)
    if worst is None:
        return True
    return 2 * worst <= 2 * turan_count(n, k) - s * (s - 2 * k)


def omitted_part_ii(n: int, k: int, s: int) -> bool:
    """t_{k-1}(n) >= t_{k-1}(n-s) + s n (k-2)/(k-1) - s(k-2) - t_{k-1}(s)."""
    if k < 2 or not 0 <= s <= n:
        raise ValueError("need k >= 2 and 0 <= s <= n")
    r = k - 1
    lhs = r * turan_count(n, r)
    rhs = r * turan_count(n - s, r) + s * n * (k - 2) - r * s * (k - 2) - r * turan_count(s, r)
    return lhs >= rhs


def check_omitted_proposition(n: int, k: int, s: int) -> bool:
    return omitted_part_i(n, k, s) and omitted_part_ii(n, k, s)


def omitted_proposition_sweep(k_range, n_max: int) -> list[tuple[int, int, int, str]]:
    """Every (n, k, s, part) failure over k in k_range, k <= n <= n_max, 0 < s < n.

    Part (i) uses prefix/suffix maxima of the per-class-size edge maximum, so
    each (n, k) costs O(n) after an O(n) table.
    """
    fails = []
    for k in k_range:
        for n in range(k, n_max + 1):
            table = _emax_table(n, k)
            pre = []
            best = None
            for e in table:
                best = e if best is None else max(best, e)
                pre.append(best)
            suf = [0] * (n + 1)
            best = None
            for a in range(n, -1, -1):
                best = table[a] if best is None else max(best, table[a])
                suf[a] = best
            tk2 = 2 * turan_count(n, k)
            for s in range(1, n):
                cands = []
                # a <= (n - k s) / k  and  a >= (n + k s) / k
                lo = (n - k * s) // k if n - k * s >= 0 else -1
                if lo >= 0:
                    cands.append(pre[lo])
                hi = -(-(n + k * s) // k)
                if hi <= n:
                    cands.append(suf[hi])
                if cands and 2 * max(cands) > tk2 - s * (s - 2 * k):
                    fails.append((n, k, s, "i"))
                if not omitted_part_ii(n, k, s):
                    fails.append((n, k, s, "ii"))
    return fails
