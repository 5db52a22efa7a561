"""Bit-row labelled graphs on [n], n <= 64.

Vertex sets are plain Python ints used as bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

MAX_N = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bits of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


def pair_index(u: int, v: int) -> int:
    """Position of pair {u, v} in graph6 column order (0,1),(0,2),(1,2),(0,3),..."""
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise ValueError(f"n must lie in [0, {MAX_N}], got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside [n]")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric pair {u},{v}")

    # construction

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "LabeledGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u},{v} outside [n]")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def _trusted(cls, n: int, rows) -> "LabeledGraph":
        # skips the symmetry scan; callers guarantee a valid row tuple
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(rows))
        return g

    @classmethod
    def empty(cls, n: int) -> "LabeledGraph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "LabeledGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "LabeledGraph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "LabeledGraph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "LabeledGraph":
        """Inverse of `edge_mask`: bit pair_index(u, v) set iff uv is an edge."""
        rows = [0] * n
        for v in range(1, n):
            back = (mask >> (v * (v - 1) // 2)) & ((1 << v) - 1)
            rows[v] |= back
            for u in bits(back):
                rows[u] |= 1 << v
        return cls._trusted(n, rows)

    # basic queries

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def edge_mask(self) -> int:
        m = 0
        for v in range(1, self.n):
            m |= (self.adj[v] & ((1 << v) - 1)) << (v * (v - 1) // 2)
        return m

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def non_neighbors(self, v: int) -> int:
        """N̄(v): vertices other than v that are not adjacent to v."""
        return self.full_mask & ~self.adj[v] & ~(1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    @cached_property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def edges_within(self, s: int) -> int:
        return sum((self.adj[v] & s).bit_count() for v in bits(s)) // 2

    def non_edges_within(self, s: int) -> int:
        m = s.bit_count()
        return m * (m - 1) // 2 - self.edges_within(s)

    def complement(self) -> "LabeledGraph":
        full = self.full_mask
        return LabeledGraph._trusted(self.n, [full & ~r & ~(1 << v) for v, r in enumerate(self.adj)])

    def restricted(self, s: int) -> "LabeledGraph":
        """Same vertex labels, keeping only edges inside `s`."""
        return LabeledGraph._trusted(
            self.n, [(r & s) if s >> v & 1 else 0 for v, r in enumerate(self.adj)]
        )

    def induced_subgraph(self, vertices: Iterable[int]) -> "LabeledGraph":
        """Induced subgraph relabelled 0..m-1 in the given order."""
        vs = list(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            rows.append(mask_of(pos[u] for u in bits(self.adj[v]) if u in pos))
        return LabeledGraph._trusted(len(vs), rows)

    def components(self, within: int | None = None) -> list[int]:
        """Connected components of G[within] as masks, ordered by smallest vertex."""
        rest = self.full_mask if within is None else within
        out = []
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                nxt &= rest & ~comp
                comp |= nxt
                frontier = nxt
            out.append(comp)
            rest &= ~comp
        return out

    def is_cycle_on(self, s: int) -> bool:
        """True iff G[s] is a single cycle through every vertex of s."""
        if s.bit_count() < 3:
            return False
        if any((self.adj[v] & s).bit_count() != 2 for v in bits(s)):
            return False
        return len(self.components(s)) == 1

    def __repr__(self) -> str:
        return f"LabeledGraph(n={self.n}, edges={self.edges()})"


def common_neighborhood(g: LabeledGraph, a: int, b: int, within: int | None = None) -> int:
    """N*(A, B) = N(A) ∩ N̄(B), minus A ∪ B, optionally intersected with a class."""
    if a & b:
        raise ValueError("A and B must be disjoint")
    out = g.full_mask
    for v in bits(a):
        out &= g.adj[v]
    for v in bits(b):
        out &= ~g.adj[v]
    out &= g.full_mask & ~(a | b)
    if within is not None:
        out &= within
    return out


def complement(g: LabeledGraph) -> LabeledGraph:
    return g.complement()
