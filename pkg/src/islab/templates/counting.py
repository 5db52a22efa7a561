"""Exact counts: labelled k-suns, f_k(n), Turán numbers, |T_Q(n,k)|."""

from __future__ import annotations

import itertools
import math

from ..errors import GuardError
from ..graph_core import LabeledGraph, classify_components
from ..graph_core.structure import CLIQUE, OTHER, SINGLE, STAR, SUN, TRIANGLE

F_EXACT_MAX = 5000
BRUTE_MAX = 7


def sun_count_by_splits(m: int) -> int:
    """Distinct labelled connected suns on [m], by enumerating (body, side) splits."""
    if m == 1:
        return 1
    seen = set()
    for side in range(1 << m):
        body = ((1 << m) - 1) & ~side
        if not body:
            continue
        edges = frozenset(
            (u, v) for u, v in itertools.combinations(range(m), 2)
            if (side >> u & 1) + (side >> v & 1) <= 1
        )
        seen.add(edges)
    return len(seen)


def s_k(m: int, k: int) -> int:
    """Number of labelled connected k-suns on m given vertices."""
    if k < 4:
        raise ValueError("k must be at least 4")
    if m < 1:
        return 0
    if m <= 2:
        return 1
    if k == 4:
        # side sets of size 0 and 1 both give K_m; every other split is distinct
        return 2**m - m - 1
    if m == 3:
        return 4  # three stars and the triangle
    return m + 1 if k == 5 else m


def _kk(k: int) -> int:
    return min(k, 6)


# per-k DP state: f values so far and the binomial row C(len(f)-2, .)
_F_CACHE: dict[int, tuple[list[int], list[int]]] = {}


def _extend(k: int, n: int) -> list[int]:
    f, row = _F_CACHE.setdefault(k, ([1], []))
    sk = [0] + [s_k(m, k) for m in range(1, n + 1)]
    while len(f) <= n:
        m_top = len(f)
        # row becomes C(m_top - 1, j), j = 0..m_top-1
        row[:] = [1] if not row else [1] + [row[j] + row[j + 1] for j in range(len(row) - 1)] + [1]
        total = 0
        for m in range(1, m_top + 1):
            total += row[m - 1] * sk[m] * f[m_top - m]
        f.append(total)
    return f


def f_exact(n: int, k: int) -> int:
    """f_k(n) via f(n) = Σ_m C(n-1, m-1) s_k(m) f(n-m), f(0) = 1."""
    if k < 4:
        raise ValueError("k must be at least 4")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > F_EXACT_MAX:
        raise GuardError("f_exact.n", f"n={n} exceeds {F_EXACT_MAX}")
    return _extend(_kk(k), n)[n]


def sun_level(g: LabeledGraph) -> int:
    """Largest k' in {3,..,6} with G a disjoint union of k-suns for every 4 <= k <= k'.

    The families nest (k=6 inside k=5 inside k=4), so 6 means all three and
    3 means none.
    """
    level = 6
    for _, kind in classify_components(g):
        t = kind.tag
        if t == OTHER:
            return 3
        if t == SUN:
            level = 4
        elif t == CLIQUE:
            level = min(level, 5)
    return level


def f_bruteforce_all(n: int, override_guards: bool = False) -> dict[int, int]:
    """{k: f_k(n)} for k = 4, 5, 6 from one pass over all graphs on [n]."""
    if n > BRUTE_MAX and not override_guards:
        raise GuardError("f_bruteforce.n", f"n={n} exceeds {BRUTE_MAX}")
    if n == 0:
        return {4: 1, 5: 1, 6: 1}
    nbits = n * (n - 1) // 2
    full = (1 << nbits) - 1
    hist = [0] * 7
    for mask in range(1 << nbits):
        # F_k(n) is defined through the complement
        comp = LabeledGraph.from_edge_mask(n, full ^ mask)
        hist[sun_level(comp)] += 1
    return {4: hist[4] + hist[5] + hist[6], 5: hist[5] + hist[6], 6: hist[6]}


def f_bruteforce(n: int, k: int, override_guards: bool = False) -> int:
    if k < 4:
        raise ValueError("k must be at least 4")
    return f_bruteforce_all(n, override_guards)[_kk(k)]


def turan_sizes(n: int, r: int) -> list[int]:
    if r < 1:
        raise ValueError("r must be at least 1")
    return [n // r + (1 if i < n % r else 0) for i in range(r)]


def turan_count(n: int, r: int) -> int:
    sizes = turan_sizes(n, r)
    return (n * n - sum(s * s for s in sizes)) // 2


def turan_graph(n: int, r: int) -> LabeledGraph:
    sizes = turan_sizes(n, r)
    part = []
    for i, s in enumerate(sizes):
        part += [i] * s
    return LabeledGraph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]]
    )


def crossing_pairs(sizes) -> int:
    total = sum(sizes)
    return (total * total - sum(s * s for s in sizes)) // 2


def count_templates_on_partition(q, k: int | None = None) -> int:
    """|T_Q(n,k)| = f_k(|Q_0|) 2^{Σ_{i<j} |Q_i||Q_j|}."""
    k = q.k if k is None else k
    sizes = q.sizes()
    return f_exact(sizes[0], k) << crossing_pairs(sizes)


def n_k(n: int, k: int) -> int:
    return math.ceil(n / (k - 1))


__all__ = [
    "SINGLE", "STAR", "TRIANGLE",
    "count_templates_on_partition", "crossing_pairs", "f_bruteforce", "f_bruteforce_all",
    "f_exact", "n_k", "s_k", "sun_count_by_splits", "sun_level", "turan_count",
    "turan_graph", "turan_sizes",
]
