"""Induced cycle detection and typed induced-subgraph embedding."""

from __future__ import annotations

from typing import Sequence

from .graph import LabeledGraph, bits


def has_induced_cycle(g: LabeledGraph, length: int) -> tuple[int, ...] | None:
    """Return vertices p1..pl inducing a cycle (in cyclic order), or None.

    The search fixes p1 as the smallest vertex of the cycle and p2 < pl to
    kill the two symmetric traversal directions. A partial path only grows
    by vertices adjacent to its head and non-adjacent to p1 and every
    interior vertex, so every partial path is itself induced.
    """
    n = g.n
    if not 3 <= length <= n:
        raise ValueError(f"cycle length must lie in [3, {n}], got {length}")
    adj = g.adj
    closed = [adj[v] | (1 << v) for v in range(n)]

    for s in range(n - length + 1):
        above = g.full_mask & ~((1 << (s + 1)) - 1)
        if (adj[s] & above).bit_count() < 2:
            continue
        ns = closed[s]
        path = [s]

        def grow(head: int, interior_closed: int, used: int, p2: int) -> bool:
            j = len(path)
            if j == length - 1:
                last = adj[head] & adj[s] & above & ~interior_closed & ~used
                last &= ~((1 << (p2 + 1)) - 1)
                if last:
                    path.append((last & -last).bit_length() - 1)
                    return True
                return False
            # the closing vertex must survive every future interior vertex
            closing = adj[s] & above & ~interior_closed & ~used & ~((1 << (p2 + 1)) - 1)
            if not closing:
                return False
            pool = above & ~interior_closed & ~ns & ~used
            if pool.bit_count() < length - j - 1:
                return False
            for v in bits(adj[head] & pool):
                path.append(v)
                # head becomes interior once v is appended
                ic = interior_closed | (closed[head] if head != s else 0)
                if grow(v, ic, used | (1 << v), p2):
                    return True
                path.pop()
            return False

        for p2 in bits(adj[s] & above):
            path.append(p2)
            if grow(p2, 0, (1 << s) | (1 << p2), p2):
                return tuple(path)
            path.pop()
    return None


def find_induced_of_type(
    g: LabeledGraph, parts: Sequence[int], pattern: LabeledGraph
) -> tuple[int, ...] | None:
    """Injection f with f(i) in parts[i] inducing exactly `pattern`, or None.

    Exhaustive backtracking in pattern-vertex order; the first hit in
    lexicographic order of images is returned.
    """
    m = pattern.n
    if len(parts) != m:
        raise ValueError("need one part per pattern vertex")
    full = g.full_mask
    image: list[int] = []

    def rec(i: int, used: int) -> bool:
        if i == m:
            return True
        cand = parts[i] & full & ~used
        for j, w in enumerate(image):
            cand &= g.adj[w] if pattern.adj[i] >> j & 1 else ~g.adj[w]
        for v in bits(cand):
            image.append(v)
            if rec(i + 1, used | (1 << v)):
                return True
            image.pop()
        return False

    return tuple(image) if rec(0, 0) else None
