"""k-template recognition on a given partition and partition search."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GuardError
from ..graph_core import ComponentKind, LabeledGraph, bits, is_disjoint_union_of_ksuns
from ..partitions import OrderedPartition

EXACT_N_GUARD = 16


@dataclass(frozen=True)
class TemplateWitness:
    partition: OrderedPartition
    clique_classes: tuple[int, ...]
    sun_decomposition: tuple[tuple[int, ComponentKind], ...]

    def recheck(self, g: LabeledGraph, k: int) -> bool:
        q = self.partition
        if q.ground != g.full_mask or q.k != k:
            return False
        if self.clique_classes != tuple(range(1, k - 1)):
            return False
        for c in q.classes[1:]:
            if any((g.adj[v] | (1 << v)) & c != c for v in bits(c)):
                return False
        comp = g.complement()
        found = is_disjoint_union_of_ksuns(comp, k, q.classes[0])
        return found is not None and tuple(found) == self.sun_decomposition

    def to_json(self) -> dict:
        return {
            "classes": [list(bits(c)) for c in self.partition.classes],
            "suns": [kind.to_json(c) for c, kind in self.sun_decomposition],
        }


def is_clique(g: LabeledGraph, s: int) -> bool:
    return all((g.adj[v] | (1 << v)) & s == s for v in bits(s))


def is_k_template_on(g: LabeledGraph, q: OrderedPartition, k: int | None = None) -> TemplateWitness | None:
    k = q.k if k is None else k
    if k != q.k:
        raise ValueError("partition has the wrong number of classes for k")
    q.check_covers(g)
    for c in q.classes[1:]:
        if not is_clique(g, c):
            return None
    suns = is_disjoint_union_of_ksuns(g.complement(), k, q.classes[0])
    if suns is None:
        return None
    return TemplateWitness(q, tuple(range(1, k - 1)), tuple(suns))


def _exact_search(g: LabeledGraph, k: int) -> OrderedPartition | None:
    n = g.n
    comp = g.complement()
    r = k - 2  # clique classes
    cl = [0] * r
    q0 = [0]
    adj = g.adj

    def q0_ok(s: int) -> bool:
        return is_disjoint_union_of_ksuns(comp, k, s) is not None

    def rec(v: int, used: int) -> bool:
        if v == n:
            return True
        # Q_0 first, then existing cliques, then one fresh clique class
        s = q0[0] | (1 << v)
        if q0_ok(s):
            q0[0] = s
            if rec(v + 1, used):
                return True
            q0[0] &= ~(1 << v)
        for c in range(min(used + 1, r)):
            if cl[c] & ~adj[v]:
                continue
            cl[c] |= 1 << v
            if rec(v + 1, max(used, c + 1)):
                return True
            cl[c] &= ~(1 << v)
        return False

    if rec(0, 0):
        return OrderedPartition(k, (q0[0],) + tuple(cl))
    return None


def _heuristic_search(g: LabeledGraph, k: int) -> OrderedPartition | None:
    # greedy clique cover: peel k-2 cliques by repeatedly taking a max-degree vertex
    rest = g.full_mask
    cliques = []
    for _ in range(k - 2):
        cl = 0
        cand = rest
        while cand:
            v = max(bits(cand), key=lambda u: ((g.adj[u] & cand).bit_count(), -u))
            cl |= 1 << v
            cand &= g.adj[v]
        cliques.append(cl)
        rest &= ~cl
    q = OrderedPartition(k, (rest,) + tuple(cliques))
    if is_k_template_on(g, q, k):
        return q
    # repair: move Q_0 vertices into a clique they fully see, if that fixes Q_0
    comp = g.complement()
    classes = list(q.classes)
    for v in bits(classes[0]):
        if is_disjoint_union_of_ksuns(comp, k, classes[0]) is not None:
            break
        for i in range(1, k - 1):
            if classes[i] & ~g.adj[v] == 0:
                classes[0] &= ~(1 << v)
                classes[i] |= 1 << v
                break
    q = OrderedPartition(k, tuple(classes))
    return q if is_k_template_on(g, q, k) else None


def find_template_partition(g: LabeledGraph, k: int, mode: str = "exact",
                            override_guards: bool = False):
    """(Q, witness) with G a k-template on Q, or None (heuristic mode may miss)."""
    if k < 4:
        raise ValueError("k must be at least 4")
    if mode == "exact":
        if g.n > EXACT_N_GUARD and not override_guards:
            raise GuardError("find_template_partition.exact", f"n={g.n} exceeds {EXACT_N_GUARD}")
        q = _exact_search(g, k)
    elif mode == "heuristic":
        q = _heuristic_search(g, k)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if q is None:
        return None
    return q, is_k_template_on(g, q, k)
