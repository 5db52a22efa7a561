"""Exact and local minimisation of h(Q, G) over ordered (k-1)-partitions."""

from __future__ import annotations

from ..errors import GuardError
from ..graph_core import LabeledGraph
from .core import OrderedPartition, internal_nonedges, nondeg_in

EXACT_STATE_GUARD = 10**9
EXACT_N_GUARD = 16


def _local_search(g: LabeledGraph, k: int, start: OrderedPartition) -> OrderedPartition:
    classes = list(start.classes)
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            i = next(c for c in range(len(classes)) if classes[c] >> v & 1)
            here = nondeg_in(g, v, classes[i])
            best, best_j = here, i
            for j, cj in enumerate(classes):
                if j != i:
                    d = nondeg_in(g, v, cj)
                    if d < best:
                        best, best_j = d, j
            if best_j != i:
                classes[i] &= ~(1 << v)
                classes[best_j] |= 1 << v
                changed = True
    return OrderedPartition(k, tuple(classes))


def _branch_and_bound(g: LabeledGraph, k: int, bound: int) -> list[int]:
    n, r = g.n, k - 1
    non = [g.full_mask & ~g.adj[v] & ~(1 << v) for v in range(n)]
    cls = [0] * r
    labels = [0] * n
    best = [bound, None]

    def rec(v: int, h: int, used: int) -> None:
        if v == n:
            if h < best[0]:
                best[0], best[1] = h, labels[:]
            return
        # every unplaced vertex pays at least its cheapest current increment
        lb = h
        if used == r:
            for u in range(v + 1, n):
                lb += min((cls[c] & non[u]).bit_count() for c in range(r))
                if lb >= best[0]:
                    return
        opts = range(min(used + 1, r))
        for c in opts:
            inc = (cls[c] & non[v]).bit_count()
            if lb + inc >= best[0]:
                continue
            cls[c] |= 1 << v
            labels[v] = c
            rec(v + 1, h + inc, max(used, c + 1))
            cls[c] &= ~(1 << v)

    rec(0, 0, 0)
    return best[1]


def optimal_partition(g: LabeledGraph, k: int, mode: str = "exact",
                      override_guards: bool = False) -> tuple[OrderedPartition, int]:
    """Minimise h(Q, G). Exact ties go to the lexicographically smallest
    membership vector with classes ordered by smallest member."""
    if k < 2:
        raise ValueError("k must be at least 2")
    start = _local_search(g, k, OrderedPartition.balanced(g.n, k))
    if mode == "local":
        return start, internal_nonedges(g, start)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    if (k - 1) ** g.n > EXACT_STATE_GUARD and g.n > EXACT_N_GUARD and not override_guards:
        raise GuardError("optimal_partition.exact", f"n={g.n}, k={k} exceeds the exact-search guard")
    labels = _branch_and_bound(g, k, internal_nonedges(g, start) + 1)
    q = OrderedPartition.from_labels(k, labels)
    return q, internal_nonedges(g, q)


__all__ = ["optimal_partition"]


def local_improve(g: LabeledGraph, q: OrderedPartition) -> OrderedPartition:
    """Single-vertex moves from q until no move strictly lowers h(Q, G)."""
    q.check_covers(g)
    return _local_search(g, q.k, q)
