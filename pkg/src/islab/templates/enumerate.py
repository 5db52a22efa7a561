"""Exact enumeration of T(n, k), the set of labelled k-templates on [n]."""

from __future__ import annotations

import numpy as np

from ..errors import GuardError
from ..graph_core import LabeledGraph, bits, is_disjoint_union_of_ksuns, pair_index
from ..partitions import OrderedPartition
from .counting import count_templates_on_partition
from .recognize import find_template_partition

GRAPH_MODE_N = 7
PARTITION_MODE_N = 10
PARTITION_MODE_VOLUME = 2 * 10**7


def ordered_partitions(n: int, k: int):
    """Each ordered (k-1)-partition of [n] once: Q_0 labelled, clique classes unordered.

    Clique classes are listed by smallest member; empty clique classes trail.
    """
    r = k - 2
    labels = [0] * n

    def rec(v: int, used: int):
        if v == n:
            masks = [0] * (r + 1)
            for u, c in enumerate(labels):
                masks[c] |= 1 << u
            yield OrderedPartition(k, tuple(masks))
            return
        for c in range(0, min(used, r) + 2):
            if c > r:
                break
            labels[v] = c
            yield from rec(v + 1, max(used, c))

    yield from rec(0, 0)


def _sun_forests_on(vertices: list[int], k: int, n: int) -> list[int]:
    """Edge masks (over [n]) of G[Q_0] for every k-sun forest complement on Q_0."""
    m = len(vertices)
    pairs = [(vertices[a], vertices[b]) for b in range(m) for a in range(b)]
    out = []
    for local in range(1 << len(pairs)):
        comp = LabeledGraph.from_edge_mask(m, local)
        if is_disjoint_union_of_ksuns(comp, k) is None:
            continue
        mask = 0
        for t, (u, v) in enumerate(pairs):
            if not local >> t & 1:
                mask |= 1 << pair_index(u, v)
        out.append(mask)
    return out


def templates_on_partition(q: OrderedPartition, n: int) -> np.ndarray:
    """All edge masks of k-templates on Q, as a uint64 array."""
    k = q.k
    labels = q.labels(n)
    fixed = 0
    crossing = []
    for v in range(1, n):
        for u in range(v):
            if labels[u] != labels[v]:
                crossing.append(pair_index(u, v))
            elif labels[u] != 0:
                fixed |= 1 << pair_index(u, v)
    q0 = list(bits(q.classes[0]))
    inner = np.array(_sun_forests_on(q0, k, n), dtype=np.uint64)
    sub = np.arange(1 << len(crossing), dtype=np.uint64)
    cross = np.zeros(sub.shape, dtype=np.uint64)
    for t, pos in enumerate(crossing):
        cross |= ((sub >> np.uint64(t)) & np.uint64(1)) << np.uint64(pos)
    return (inner[:, None] | cross[None, :] | np.uint64(fixed)).ravel()


def enumerate_templates(n: int, k: int, mode: str = "partitions", override_guards: bool = False) -> set[int]:
    if k < 4:
        raise ValueError("k must be at least 4")
    if mode == "graphs":
        if n > GRAPH_MODE_N and not override_guards:
            raise GuardError("enumerate_templates.graphs", f"n={n} exceeds {GRAPH_MODE_N}")
        out = set()
        for mask in range(1 << (n * (n - 1) // 2)):
            g = LabeledGraph.from_edge_mask(n, mask)
            if find_template_partition(g, k) is not None:
                out.add(mask)
        return out
    if mode != "partitions":
        raise ValueError(f"unknown mode {mode!r}")
    if n > PARTITION_MODE_N and not override_guards:
        raise GuardError("enumerate_templates.partitions", f"n={n} exceeds {PARTITION_MODE_N}")
    parts = list(ordered_partitions(n, k))
    volume = sum(count_templates_on_partition(q) for q in parts)
    if volume > PARTITION_MODE_VOLUME and not override_guards:
        raise GuardError("enumerate_templates.volume", f"{volume} candidate graphs exceed {PARTITION_MODE_VOLUME}")
    if not parts:
        return set()
    arrays = [templates_on_partition(q, n) for q in parts]
    uniq = np.unique(np.concatenate(arrays))
    return {int(x) for x in uniq}


def count_templates(n: int, k: int, mode: str = "partitions", override_guards: bool = False) -> int:
    return len(enumerate_templates(n, k, mode, override_guards))
