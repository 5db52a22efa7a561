"""Component recognition: linear forests, stars, triangles, cliques, suns."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import LabeledGraph, bits

SINGLE = "SingleVertex"
STAR = "Star"
TRIANGLE = "Triangle"
CLIQUE = "Clique"
SUN = "Sun"
OTHER = "Other"

TAGS = (SINGLE, STAR, TRIANGLE, CLIQUE, SUN, OTHER)


@dataclass(frozen=True)
class ComponentKind:
    tag: str
    centre: int | None = None
    body: int | None = None
    side: int | None = None

    def is_ksun(self, k: int) -> bool:
        if k < 4:
            raise ValueError("k-suns are defined for k >= 4")
        if k == 4:
            return self.tag != OTHER
        if k == 5:
            return self.tag in (SINGLE, STAR, TRIANGLE, CLIQUE)
        return self.tag in (SINGLE, STAR, TRIANGLE)

    def to_json(self, vertices: int) -> dict:
        out = {"vertices": list(bits(vertices)), "kind": self.tag}
        if self.centre is not None:
            out["centre"] = self.centre
        if self.body is not None:
            out["body"] = list(bits(self.body))
            out["side"] = list(bits(self.side))
        return out


@dataclass(frozen=True)
class LinearForestInfo:
    is_linear_forest: bool
    components: int
    endpoints: tuple[tuple[int, int], ...]


def linear_forest_info(g: LabeledGraph, within: int | None = None) -> LinearForestInfo:
    """Classify G[within]; endpoints are listed per component, (v, v) for isolated v."""
    s = g.full_mask if within is None else within
    comps = g.components(s)
    ends = []
    ok = True
    for c in comps:
        degs = {v: (g.adj[v] & s).bit_count() for v in bits(c)}
        m = len(degs)
        e = sum(degs.values()) // 2
        if e != m - 1 or max(degs.values()) > 2:
            ok = False
            continue
        if m == 1:
            v = next(iter(degs))
            ends.append((v, v))
        else:
            leaves = sorted(v for v, d in degs.items() if d == 1)
            ends.append((leaves[0], leaves[1]))
    return LinearForestInfo(ok, len(comps), tuple(ends) if ok else ())


def path_order(g: LabeledGraph, comp: int, within: int) -> list[int]:
    """Vertices of a path component listed from its smaller endpoint."""
    if comp.bit_count() == 1:
        return [comp.bit_length() - 1]
    start = min(v for v in bits(comp) if (g.adj[v] & within).bit_count() == 1)
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = [u for u in bits(g.adj[cur] & within) if u != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def _kind_of(g: LabeledGraph, comp: int) -> ComponentKind:
    m = comp.bit_count()
    low = (comp & -comp).bit_length() - 1
    if m == 1:
        return ComponentKind(SINGLE, centre=low)
    degs = {v: (g.adj[v] & comp).bit_count() for v in bits(comp)}
    edges = sum(degs.values()) // 2
    if edges == m - 1:
        hubs = [v for v, d in degs.items() if d == m - 1]
        if hubs:
            centre = hubs[0] if m >= 3 else low
            return ComponentKind(STAR, centre=centre)
    if edges == m * (m - 1) // 2:
        if m == 3:
            return ComponentKind(TRIANGLE, centre=low)
        return ComponentKind(CLIQUE, centre=low)
    body = 0
    for v, d in degs.items():
        if d == m - 1:
            body |= 1 << v
    side = comp & ~body
    if body and all((g.adj[v] & side) == 0 for v in bits(side)):
        return ComponentKind(SUN, body=body, side=side)
    return ComponentKind(OTHER)


def classify_components(g: LabeledGraph, within: int | None = None) -> list[tuple[int, ComponentKind]]:
    """Tag every component of G[within] (labels preserved), smallest vertex first."""
    s = g.full_mask if within is None else within
    h = g if within is None else g.restricted(s)
    return [(c, _kind_of(h, c)) for c in h.components(s)]


def is_disjoint_union_of_ksuns(
    g: LabeledGraph, k: int, within: int | None = None
) -> list[tuple[int, ComponentKind]] | None:
    if k < 4:
        raise ValueError("k must be at least 4")
    comps = classify_components(g, within)
    if all(kind.is_ksun(k) for _, kind in comps):
        return comps
    return None


def edges_from_kind(comp: int, kind: ComponentKind) -> set[tuple[int, int]]:
    """Rebuild a component's edge set from its tag alone."""
    vs = list(bits(comp))
    if kind.tag == SINGLE:
        return set()
    if kind.tag == STAR:
        return {tuple(sorted((kind.centre, v))) for v in vs if v != kind.centre}
    if kind.tag in (TRIANGLE, CLIQUE):
        return {(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]}
    if kind.tag == SUN:
        return {
            (u, v)
            for i, u in enumerate(vs)
            for v in vs[i + 1:]
            if ((kind.side >> u & 1) + (kind.side >> v & 1)) <= 1
        }
    raise ValueError("Other components carry no edge rule")
