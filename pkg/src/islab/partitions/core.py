"""Ordered (k-1)-partitions and the internal non-edge objective."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..graph_core import LabeledGraph, bits


@dataclass(frozen=True)
class OrderedPartition:
    """Classes Q_0..Q_{k-2} as vertex masks; Q_0 is the labelled class."""

    k: int
    classes: tuple[int, ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be at least 2")
        if len(self.classes) != self.k - 1:
            raise ValueError(f"need k-1 = {self.k - 1} classes, got {len(self.classes)}")
        seen = 0
        for c in self.classes:
            if c < 0 or c & seen:
                raise ValueError("classes must be disjoint vertex sets")
            seen |= c

    @classmethod
    def from_lists(cls, k: int, classes) -> "OrderedPartition":
        return cls(k, tuple(sum(1 << v for v in c) for c in classes))

    @classmethod
    def from_labels(cls, k: int, labels) -> "OrderedPartition":
        masks = [0] * (k - 1)
        for v, c in enumerate(labels):
            masks[c] |= 1 << v
        return cls(k, tuple(masks))

    @classmethod
    def balanced(cls, n: int, k: int) -> "OrderedPartition":
        """Contiguous blocks, larger blocks first."""
        r = k - 1
        sizes = [n // r + (1 if i < n % r else 0) for i in range(r)]
        masks, start = [], 0
        for s in sizes:
            masks.append(((1 << s) - 1) << start)
            start += s
        return cls(k, tuple(masks))

    @property
    def ground(self) -> int:
        out = 0
        for c in self.classes:
            out |= c
        return out

    @property
    def n(self) -> int:
        return self.ground.bit_count()

    def sizes(self) -> tuple[int, ...]:
        return tuple(c.bit_count() for c in self.classes)

    def labels(self, n: int | None = None) -> list[int]:
        n = self.ground.bit_length() if n is None else n
        out = [-1] * n
        for i, c in enumerate(self.classes):
            for v in bits(c):
                out[v] = i
        return out

    def class_of(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if c >> v & 1:
                return i
        raise KeyError(v)

    def check_covers(self, g: LabeledGraph) -> None:
        if self.ground != g.full_mask:
            raise ValueError("partition does not cover exactly the vertex set of G")

    def to_json(self) -> str:
        return json.dumps(
            {"k": self.k, "classes": [list(bits(c)) for c in self.classes], "labelled": 0},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "OrderedPartition":
        obj = json.loads(text)
        if obj.get("labelled", 0) != 0:
            raise ValueError("the labelled class must be listed first")
        return cls.from_lists(obj["k"], obj["classes"])


def deg_in(g: LabeledGraph, x: int, cls: int) -> int:
    """d^i(x): neighbours of x inside the class."""
    return (g.adj[x] & cls).bit_count()


def nondeg_in(g: LabeledGraph, x: int, cls: int) -> int:
    """d̄^i(x): non-neighbours of x inside the class, x itself excluded."""
    return (cls & ~g.adj[x] & ~(1 << x)).bit_count()


def internal_nonedges(g: LabeledGraph, q: OrderedPartition) -> int:
    q.check_covers(g)
    return sum(g.non_edges_within(c) for c in q.classes)


def is_locally_optimal(g: LabeledGraph, q: OrderedPartition) -> bool:
    for i, ci in enumerate(q.classes):
        for x in bits(ci):
            own = nondeg_in(g, x, ci)
            for j, cj in enumerate(q.classes):
                if j != i and nondeg_in(g, x, cj) < own:
                    return False
    return True


def restrict(q: OrderedPartition, s: int) -> OrderedPartition:
    """Q - S: drop S from every class, keeping (possibly empty) classes in place."""
    return OrderedPartition(q.k, tuple(c & ~s for c in q.classes))


def partition_distance(q: OrderedPartition, q2: OrderedPartition) -> tuple[int, bool]:
    """(fewest moved vertices over class bijections, whether Q_0 must change label)."""
    if q.k != q2.k or q.ground != q2.ground:
        raise ValueError("partitions must share k and ground set")
    r = q.k - 1
    w = np.zeros((r, r), dtype=np.int64)
    for i, a in enumerate(q.classes):
        for j, b in enumerate(q2.classes):
            w[i, j] = 2 * (a & b).bit_count()
    # a half-unit bonus keeps Q_0 on Q'_0 among equally good matchings
    w[0, 0] += 1
    rows, cols = linear_sum_assignment(w, maximize=True)
    kept = sum(int(w[i, j]) // 2 for i, j in zip(rows, cols))
    sigma0 = int(cols[list(rows).index(0)])
    return q.n - kept, sigma0 != 0


def in_P(q: OrderedPartition, m: int, q2: OrderedPartition) -> bool:
    return partition_distance(q, q2)[0] <= m
