"""Closing two linear forests into a single cycle of length 2k."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import PreconditionError
from .graph import LabeledGraph
from .structure import linear_forest_info

Edge = tuple[int, int]


@dataclass(frozen=True)
class Piece:
    """A linear forest living on `vertices` inside a graph on a shared label space."""

    graph: LabeledGraph
    vertices: int

    def __post_init__(self):
        stray = 0
        for v in range(self.graph.n):
            if not self.vertices >> v & 1:
                stray |= self.graph.adj[v]
        if stray or self.vertices & ~self.graph.full_mask:
            raise PreconditionError("piece", "edges must stay inside the vertex set")

    @classmethod
    def from_edges(cls, n: int, vertices, edges) -> "Piece":
        vmask = 0
        for v in vertices:
            vmask |= 1 << v
        return cls(LabeledGraph.from_edges(n, edges), vmask)

    def without(self, x: int) -> "Piece":
        rows = [r & ~(1 << x) for r in self.graph.adj]
        rows[x] = 0
        return Piece(LabeledGraph._trusted(self.graph.n, rows), self.vertices & ~(1 << x))

    def degree(self, x: int) -> int:
        return self.graph.degree(x)

    def edge_set(self) -> set[Edge]:
        return set(self.graph.edges())


def _paths(piece: Piece, clause: str) -> list[tuple[int, int]]:
    info = linear_forest_info(piece.graph, piece.vertices)
    if not info.is_linear_forest:
        raise PreconditionError(clause, "not a linear forest")
    return list(info.endpoints)


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _check_cycle(n: int, vertices: int, edges: set[Edge], k: int) -> None:
    g = LabeledGraph.from_edges(n, edges)
    if vertices.bit_count() != 2 * k or len(edges) != 2 * k or not g.is_cycle_on(vertices):
        raise AssertionError("completion did not produce a 2k-cycle")


def _chain(p1: list[tuple[int, int]], p2: list[tuple[int, int]]) -> set[Edge]:
    # t^1_i s^2_i and t^2_i s^1_{i+1}, cyclically
    c = len(p1)
    out = set()
    for i in range(c):
        out.add(_norm(p1[i][1], p2[i][0]))
        out.add(_norm(p2[i][1], p1[(i + 1) % c][0]))
    return out


def _complete_disjoint(l1: Piece, l2: Piece, k: int) -> set[Edge]:
    if l1.vertices & l2.vertices:
        raise PreconditionError("disjoint", "L1 and L2 share vertices")
    p1 = _paths(l1, "L1 linear forest")
    p2 = _paths(l2, "L2 linear forest")
    if len(p1) != len(p2) or not p1:
        raise PreconditionError("equal components", f"L1 has {len(p1)}, L2 has {len(p2)}")
    if (l1.vertices | l2.vertices).bit_count() != 2 * k:
        raise PreconditionError("order 2k", "|V(L1)|+|V(L2)| must equal 2k")
    return _chain(p1, p2)


def _complete_shared(l1: Piece, l2: Piece, x: int, k: int) -> set[Edge]:
    if l1.vertices & l2.vertices != 1 << x:
        raise PreconditionError("shared vertex", "V(L1) ∩ V(L2) must be exactly {x}")
    if l1.vertices.bit_count() <= 1 or l2.vertices.bit_count() <= 1:
        raise PreconditionError("non-trivial pieces", "both pieces need more than one vertex")
    d1, d2 = l1.degree(x), l2.degree(x)
    if d1 + d2 != 2:
        raise PreconditionError("degree of x", f"d_L1(x)+d_L2(x) = {d1 + d2}, expected 2")
    p1 = _paths(l1, "L1 linear forest")
    _paths(l2, "L2 linear forest")
    p2x = _paths(l2.without(x), "L2-x linear forest")
    if len(p1) != len(p2x):
        raise PreconditionError("equal components", "L1 and L2-x differ in component count")
    if (l1.vertices | l2.vertices).bit_count() != 2 * k:
        raise PreconditionError("order 2k", "|V(L1) ∪ V(L2)| must equal 2k")
    if d1 == 0:
        return _complete_disjoint(l1.without(x), l2, k)
    if d2 == 0:
        return _complete_disjoint(l1, l2.without(x), k)
    # x ends a path in both pieces: put those paths first, oriented through x
    p1 = _orient_first(p1, x, at_end=True)
    p2 = _orient_first(_paths(l2, "L2 linear forest"), x, at_end=False)
    edges = _chain(p1, p2)
    edges.discard(_norm(p1[0][1], p2[0][0]))
    return edges


def _orient_first(paths: list[tuple[int, int]], x: int, at_end: bool) -> list[tuple[int, int]]:
    idx = next(i for i, (s, t) in enumerate(paths) if x in (s, t))
    s, t = paths[idx]
    if at_end and t != x:
        s, t = t, s
    if not at_end and s != x:
        s, t = t, s
    return [(s, t)] + paths[:idx] + paths[idx + 1:]


def complete_to_cycle(l1: Piece, l2: Piece, k: int, shared: int | None = None) -> set[Edge]:
    """Crossing edges E' making E' ∪ E(L1) ∪ E(L2) a cycle on V(L1) ∪ V(L2)."""
    if l1.graph.n != l2.graph.n:
        raise PreconditionError("label space", "pieces must share a label space")
    if shared is None:
        extra = _complete_disjoint(l1, l2, k)
    else:
        extra = _complete_shared(l1, l2, shared, k)
    _check_cycle(l1.graph.n, l1.vertices | l2.vertices, extra | l1.edge_set() | l2.edge_set(), k)
    return extra


def union_graph(l1: Piece, l2: Piece, extra: set[Edge]) -> LabeledGraph:
    return LabeledGraph.from_edges(l1.graph.n, extra | l1.edge_set() | l2.edge_set())


__all__ = ["Piece", "complete_to_cycle", "union_graph"]
