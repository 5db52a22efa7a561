"""Independent brute-force oracles. Each one re-derives its answer from the
raw definition with no shared search code."""

from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx
import numpy as np


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def naive_induced_cycle(g, length: int) -> bool:
    """Some length-subset induces a connected 2-regular graph."""
    adj = [{u for u in range(g.n) if g.has_edge(u, v)} for v in range(g.n)]
    for sub in itertools.combinations(range(g.n), length):
        s = set(sub)
        if any(len(adj[v] & s) != 2 for v in sub):
            continue
        seen, stack = {sub[0]}, [sub[0]]
        while stack:
            u = stack.pop()
            for w in adj[u] & s:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) == length:
            return True
    return False


def brute_min_h(g, k: int) -> int:
    """min over every assignment [n] -> [k-1] of the internal non-edge count."""
    n, r = g.n, k - 1
    labels = np.array(list(itertools.product(range(r), repeat=n)), dtype=np.int8).reshape(-1, n)
    h = np.zeros(len(labels), dtype=np.int32)
    for v in range(n):
        for u in range(v):
            if not g.has_edge(u, v):
                h += labels[:, u] == labels[:, v]
    return int(h.min())


def brute_partition_distance(q1, q2) -> int:
    """min over class bijections of the number of vertices whose class changes."""
    r = len(q1.classes)
    best = None
    for perm in itertools.permutations(range(r)):
        moved = sum((q1.classes[i] & ~q2.classes[perm[i]]).bit_count() for i in range(r))
        best = moved if best is None else min(best, moved)
    return best


def literal_f1(g, q, min_area: int) -> bool:
    """(F1) by iterating every pair of vertex subsets of every crossing pair of classes."""
    def subsets(mask):
        vs = [v for v in range(g.n) if mask >> v & 1]
        for r in range(1, len(vs) + 1):
            yield from itertools.combinations(vs, r)

    for i, j in itertools.combinations(range(len(q.classes)), 2):
        for ui in subsets(q.classes[i]):
            for uj in subsets(q.classes[j]):
                area = len(ui) * len(uj)
                if area < min_area:
                    continue
                e = sum(1 for a in ui for b in uj if g.has_edge(a, b))
                if Fraction(e, area) < Fraction(1, 4) or Fraction(e, area) > Fraction(3, 4):
                    return False
    return True


def brute_copy(h, red: set, blue: set, n: int) -> bool:
    """Injection of H into the multigraph by trying every injective map."""
    hedges = {(min(a, b), max(a, b)) for a, b in h.edges()}
    for image in itertools.permutations(range(n), h.n):
        ok = True
        for a, b in itertools.combinations(range(h.n), 2):
            p = (min(image[a], image[b]), max(image[a], image[b]))
            if (a, b) in hedges:
                ok = p in red
            else:
                ok = p in blue
            if not ok:
                break
        if ok:
            return True
    return False


def nx_component_kinds(g, vertices=None) -> list[str]:
    """Component shapes by networkx: 'single', 'star', 'triangle', 'clique', 'sun', 'other'."""
    h = to_nx(g)
    if vertices is not None:
        h = h.subgraph(vertices)
    out = []
    for comp in nx.connected_components(h):
        c = h.subgraph(comp)
        m, e = c.number_of_nodes(), c.number_of_edges()
        degs = [d for _, d in c.degree()]
        if m == 1:
            out.append("single")
        elif m == 3 and e == 3:
            out.append("triangle")
        elif e == m - 1 and max(degs) == m - 1:
            out.append("star")
        elif e == m * (m - 1) // 2:
            out.append("clique")
        else:
            body = [v for v, d in c.degree() if d == m - 1]
            side = set(comp) - set(body)
            if body and not any(c.has_edge(a, b) for a, b in itertools.combinations(side, 2)):
                out.append("sun")
            else:
                out.append("other")
    return out


def is_ksun_forest(g, k: int, vertices=None) -> bool:
    allowed = {4: {"single", "star", "triangle", "clique", "sun"},
               5: {"single", "star", "triangle", "clique"},
               6: {"single", "star", "triangle"}}[min(k, 6)]
    return all(kind in allowed for kind in nx_component_kinds(g, vertices))


def _components(n, adj, vs):
    left, out = set(vs), []
    while left:
        s = left.pop()
        comp, stack = {s}, [s]
        while stack:
            u = stack.pop()
            for w in adj[u] & left:
                left.discard(w)
                comp.add(w)
                stack.append(w)
        out.append(comp)
    return out


def _ksun_ok(adj, comp, k) -> bool:
    m = len(comp)
    if m <= 2:
        return True
    e = sum(len(adj[v] & comp) for v in comp) // 2
    full = [v for v in comp if len(adj[v] & comp) == m - 1]
    if k >= 6:
        return (m == 3 and e == 3) or (e == m - 1 and len(full) >= 1)
    if k == 5:
        return e == m * (m - 1) // 2 or (e == m - 1 and len(full) >= 1)
    side = comp - set(full)
    return bool(full) and all(not (adj[v] & side) for v in side)


def plain_ksun_forest(n, edges, vs, k) -> bool:
    """Graph on `vs` given by `edges`: every component is a k-sun, checked by edge counts."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    vs = set(vs)
    for v in range(n):
        adj[v] &= vs
    return all(_ksun_ok(adj, c, k) for c in _components(n, adj, vs))


def brute_is_template(g, k) -> bool:
    """Try every labelling [n] -> {0..k-2}: classes >= 1 cliques, complement of class 0 a k-sun forest."""
    n = g.n
    for labels in itertools.product(range(k - 1), repeat=n):
        ok = True
        for u, v in itertools.combinations(range(n), 2):
            if labels[u] == labels[v] != 0 and not g.has_edge(u, v):
                ok = False
                break
        if not ok:
            continue
        q0 = [v for v in range(n) if labels[v] == 0]
        non = [(u, v) for u, v in itertools.combinations(q0, 2) if not g.has_edge(u, v)]
        if plain_ksun_forest(n, non, q0, k):
            return True
    return False
