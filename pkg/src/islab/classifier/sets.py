"""Class-level vertex sets: C/B high/low/0, Y_i, C(B), (6,3)-forests."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DecompositionError, GuardError
from ..graph_core import STAR, TRIANGLE, SINGLE, LabeledGraph, bits, classify_components
from ..partitions import OrderedPartition, internal_nonedges, nondeg_in
from .light import a_set

FOREST_GUARD = 2 * 10**7


def order_is_high(m: int, n: int, k: int) -> bool:
    """m >= n^(1 - 1/(2k^2)) / (200 k^2), decided with integers."""
    e = 2 * k * k
    return (200 * k * k * m) ** e >= n ** (e - 1)


@dataclass(frozen=True)
class ClassSets:
    i: int
    c: int
    c_high: int
    b_high: int
    c_low: int
    b_low: int
    c_0: int

    def parts(self) -> tuple[int, ...]:
        return (self.c_high, self.b_high, self.c_low, self.b_low, self.c_0)

    def to_json(self) -> dict:
        names = ("C", "C_high", "B_high", "C_low", "B_low", "C_0")
        vals = (self.c, self.c_high, self.b_high, self.c_low, self.b_low, self.c_0)
        return {name: list(bits(v)) for name, v in zip(names, vals)}


def _star_triangle_kinds(g: LabeledGraph, within: int, i: int):
    comp = g.complement()
    kinds = classify_components(comp, within)
    for verts, kind in kinds:
        if kind.tag not in (SINGLE, STAR, TRIANGLE):
            raise DecompositionError(
                list(bits(verts)),
                f"class {i}: complement component on {list(bits(verts))} is {kind.tag}, "
                "not a star or triangle")
    return kinds


def class_sets(g: LabeledGraph, q: OrderedPartition, i: int) -> ClassSets:
    """The six sets of class i; raises DecompositionError if the complement of Q_i
    is not a disjoint union of stars and triangles."""
    n, k = g.n, q.k
    cls = q.classes[i]
    kinds = _star_triangle_kinds(g, cls, i)
    c = c_high = c_low = c_0 = 0
    for verts, kind in kinds:
        if kind.tag == SINGLE:
            c_0 |= verts
            continue
        centre = 1 << kind.centre
        c |= centre
        # triangles have no "order" cut-off in the high set, so they stay low
        if kind.tag == STAR and order_is_high(verts.bit_count(), n, k):
            c_high |= centre
        else:
            c_low |= centre
    b_high = b_low = 0
    for x in bits(cls):
        non = cls & ~g.adj[x] & ~(1 << x)
        if non & c_high:
            b_high |= 1 << x
        if non & c_low:
            b_low |= 1 << x
    return ClassSets(i, c, c_high, b_high, c_low, b_low, c_0)


def y_set(g: LabeledGraph, q: OrderedPartition, i: int, beta) -> int:
    """Isolated vertices of the complement on Q_i minus A^i, plus the largest
    component (smallest-label centre on ties) without its centre."""
    within = q.classes[i] & ~a_set(g, q, i, beta)
    kinds = _star_triangle_kinds(g, within, i)
    out = 0
    best = None
    for verts, kind in kinds:
        if kind.tag == SINGLE:
            out |= verts
            continue
        key = (-verts.bit_count(), kind.centre)
        if best is None or key < best[0]:
            best = (key, verts, kind.centre)
    if best is not None:
        out |= best[1] & ~(1 << best[2])
    return out


def c_of(g: LabeledGraph, sets: ClassSets, b: int) -> int:
    """C(B): vertices of C_low with a non-neighbour in B."""
    if b & ~sets.b_low:
        raise ValueError("B must be a subset of B_low")
    out = 0
    for c in bits(sets.c_low):
        if b & ~g.adj[c] & ~(1 << c):
            out |= 1 << c
    return out


def _lf_components(g: LabeledGraph, s: int) -> int | None:
    """Component count if G[s] is a linear forest, else None."""
    edges = 0
    for v in bits(s):
        d = (g.adj[v] & s).bit_count()
        if d > 2:
            return None
        edges += d
    edges //= 2
    comps = 0
    seen = 0
    for v in bits(s):
        if seen >> v & 1:
            continue
        comps += 1
        frontier = 1 << v
        while frontier:
            seen |= frontier
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u] & s
            frontier = nxt & ~seen
    # a forest has exactly |s| - comps edges
    if edges != s.bit_count() - comps:
        return None
    return comps


def has_63_forest(g: LabeledGraph, q: OrderedPartition,
                  override_guards: bool = False) -> tuple[int, int, tuple[int, ...]] | None:
    """(i, j, six vertices) inducing a linear forest with at most three components."""
    r = len(q.classes)
    for i, j in itertools.combinations(range(r), 2):
        pool = list(bits(q.classes[i] | q.classes[j]))
        m = len(pool)
        if m < 6:
            continue
        if m * (m - 1) * (m - 2) * (m - 3) * (m - 4) * (m - 5) // 720 > FOREST_GUARD and not override_guards:
            raise GuardError("has_63_forest", f"C({m},6) subsets exceed {FOREST_GUARD}")
        chosen: list[int] = []

        def rec(start: int, s: int) -> bool:
            size = len(chosen)
            comps = _lf_components(g, s) if size else 0
            if comps is None:
                return False
            # each later vertex lowers the component count by at most one
            if comps - (6 - size) > 3:
                return False
            if size == 6:
                return True
            for t in range(start, m - (5 - size)):
                v = pool[t]
                chosen.append(v)
                if rec(t + 1, s | (1 << v)):
                    return True
                chosen.pop()
            return False

        if rec(0, 0):
            return i, j, tuple(chosen)
    return None


@dataclass(frozen=True)
class PropBeta:
    i_ok: bool
    ii_ok: bool
    iii_ok: bool

    def __iter__(self):
        return iter((self.i_ok, self.ii_ok, self.iii_ok))


def prop_beta_check(g: LabeledGraph, q: OrderedPartition, beta) -> PropBeta:
    i_ok = True
    for i in range(len(q.classes)):
        try:
            _star_triangle_kinds(g, q.classes[i], i)
        except DecompositionError:
            i_ok = False
            break
    ii_ok = internal_nonedges(g, q) <= g.n
    bn = Fraction(beta) * g.n
    iii_ok = all(nondeg_in(g, x, c) < bn for c in q.classes for x in bits(c))
    return PropBeta(i_ok, ii_ok, iii_ok)


__all__ = ["ClassSets", "PropBeta", "c_of", "class_sets", "has_63_forest",
           "order_is_high", "prop_beta_check", "y_set"]
