"""The (F1) cross-density and (F2) class-balance predicates."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import GuardError
from ..graph_core import LabeledGraph, bits
from .core import OrderedPartition

EXACT_SIDE_GUARD = 22


@dataclass(frozen=True)
class DensityWitness:
    i: int
    j: int
    u_i: int
    u_j: int
    edges: int

    @property
    def area(self) -> int:
        return self.u_i.bit_count() * self.u_j.bit_count()


def f2_property(g: LabeledGraph, q: OrderedPartition, nu) -> bool:
    nu = Fraction(nu)
    if nu <= 0:
        raise ValueError("nu must be positive")
    n = g.n
    target = Fraction(n, q.k - 1)
    return all(abs(c.bit_count() - target) <= nu * n for c in q.classes)


def min_area_for(nu, n: int) -> int:
    """Smallest integer area A with A >= nu^2 n^2."""
    nu = Fraction(nu)
    if nu <= 0:
        raise ValueError("nu must be positive")
    return math.ceil(nu * nu * n * n)


def _bad(edges: int, area: int) -> bool:
    return 4 * edges < area or 4 * edges > 3 * area


def _peel(g: LabeledGraph, i: int, j: int, qi: int, qj: int, min_area: int, low: bool):
    ui, uj = qi, qj
    while ui and uj and ui.bit_count() * uj.bit_count() >= min_area:
        e = sum((g.adj[v] & uj).bit_count() for v in bits(ui))
        if _bad(e, ui.bit_count() * uj.bit_count()):
            return DensityWitness(i, j, ui, uj, e)
        # drop the vertex pushing density the wrong way, measured relative to its side
        best, drop_i, drop = None, True, 0
        for v in bits(ui):
            score = Fraction((g.adj[v] & uj).bit_count(), uj.bit_count())
            key = -score if low else score
            if best is None or key < best:
                best, drop_i, drop = key, True, v
        for v in bits(uj):
            score = Fraction((g.adj[v] & ui).bit_count(), ui.bit_count())
            key = -score if low else score
            if key < best:
                best, drop_i, drop = key, False, v
        if drop_i:
            ui &= ~(1 << drop)
        else:
            uj &= ~(1 << drop)
    return None


def _exact_pair(g: LabeledGraph, i: int, j: int, qi: int, qj: int, min_area: int):
    # enumerate subsets of the smaller side; the best partner of each size is
    # the run of lowest (or highest) degrees on the other side
    swap = qi.bit_count() > qj.bit_count()
    small, big = (qj, qi) if swap else (qi, qj)
    s_list, b_list = list(bits(small)), list(bits(big))
    s, m = len(s_list), len(b_list)
    if s == 0 or m == 0 or s * m < min_area:
        return None
    if s > EXACT_SIDE_GUARD:
        raise GuardError("f1_property.exact", f"class of size {s} exceeds the exact-search guard")
    subsets = np.arange(1, 1 << s, dtype=np.int64)
    sizes = np.zeros(subsets.shape, dtype=np.int64)
    for t in range(s):
        sizes += (subsets >> t) & 1
    deg = np.zeros((subsets.size, m), dtype=np.int64)
    for col, w in enumerate(b_list):
        row = 0
        for t, v in enumerate(s_list):
            if g.adj[w] >> v & 1:
                row |= 1 << t
        x = subsets & row
        for t in range(s):
            deg[:, col] += (x >> t) & 1
    order = np.argsort(deg, axis=1, kind="stable")
    asc = np.take_along_axis(deg, order, axis=1)
    low = np.cumsum(asc, axis=1)
    high = np.cumsum(asc[:, ::-1], axis=1)
    b = np.arange(1, m + 1, dtype=np.int64)
    area = sizes[:, None] * b[None, :]
    ok_area = area >= min_area
    bad = ok_area & ((4 * low < area) | (4 * high > 3 * area))
    hits = np.argwhere(bad)
    if hits.size == 0:
        return None
    r, c = (int(x) for x in hits[0])
    u_small = 0
    for t in range(s):
        if int(subsets[r]) >> t & 1:
            u_small |= 1 << s_list[t]
    bsz = c + 1
    if 4 * int(low[r, c]) < int(area[r, c]):
        cols = order[r, :bsz]
    else:
        cols = order[r, ::-1][:bsz]
    u_big = 0
    for col in cols:
        u_big |= 1 << b_list[int(col)]
    ui, uj = (u_big, u_small) if swap else (u_small, u_big)
    e = sum((g.adj[v] & uj).bit_count() for v in bits(ui))
    return DensityWitness(i, j, ui, uj, e)


def f1_witness(g: LabeledGraph, q: OrderedPartition, nu=None, *, min_area: int | None = None):
    """A pair (U_i, U_j) of large area with density outside [1/4, 3/4], or None."""
    q.check_covers(g)
    if min_area is None:
        min_area = min_area_for(nu, g.n)
    min_area = max(min_area, 1)
    r = len(q.classes)
    for i in range(r):
        for j in range(i + 1, r):
            qi, qj = q.classes[i], q.classes[j]
            if qi.bit_count() * qj.bit_count() < min_area:
                continue
            for low in (True, False):
                w = _peel(g, i, j, qi, qj, min_area, low)
                if w is not None:
                    return w
            w = _exact_pair(g, i, j, qi, qj, min_area)
            if w is not None:
                return w
    return None


def f1_property(g: LabeledGraph, q: OrderedPartition, nu=None, *, min_area: int | None = None) -> bool:
    return f1_witness(g, q, nu, min_area=min_area) is None


def check_density_witness(g: LabeledGraph, q: OrderedPartition, w: DensityWitness, min_area: int) -> bool:
    if w.u_i & ~q.classes[w.i] or w.u_j & ~q.classes[w.j] or w.i == w.j:
        return False
    e = sum(1 for u in bits(w.u_i) for v in bits(w.u_j) if g.has_edge(u, v))
    return e == w.edges and w.area >= min_area and _bad(e, w.area)
