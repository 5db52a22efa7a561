"""Independent rechecks of classifier witnesses.

Everything here works on Python sets built from the adjacency rows and
re-reads the definitions directly, so it shares no search code with the
detectors it audits.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from ..graph_core import LabeledGraph
from ..partitions import HierarchyConstants, OrderedPartition


def _nb(g: LabeledGraph) -> list[set[int]]:
    return [{u for u in range(g.n) if g.adj[v] >> u & 1} for v in range(g.n)]


def _classes(q: OrderedPartition) -> list[set[int]]:
    return [{v for v in range(64) if c >> v & 1} for c in q.classes]


def _components(vertices: set[int], nbr) -> list[set[int]]:
    left = set(vertices)
    out = []
    while left:
        v = min(left)
        comp, stack = {v}, [v]
        while stack:
            u = stack.pop()
            for w in nbr(u):
                if w in left and w not in comp:
                    comp.add(w)
                    stack.append(w)
        left -= comp
        out.append(comp)
    return out


def _is_linear_forest(vs, nb) -> tuple[bool, int]:
    vs = set(vs)
    degs = {v: len(nb[v] & vs) for v in vs}
    if any(d > 2 for d in degs.values()):
        return False, 0
    comps = _components(vs, lambda u: nb[u])
    edges = sum(degs.values()) // 2
    return edges == len(vs) - len(comps), len(comps)


def _big_ok(d: int, n: int, k: int, beta: Fraction, mode: str) -> bool:
    t = Fraction(13 * 6**k * n)
    if mode == "square":
        return d >= t * beta * beta
    return d * d >= t * t * beta


def _psi_sq(beta: Fraction, mode: str) -> Fraction:
    return beta if mode == "sqrt" else beta**4


def check_configuration(g, q, c: HierarchyConstants, w: dict) -> list[str]:
    nb, cl = _nb(g), _classes(q)
    n, k = g.n, q.k
    x, ys, i, ip, mode = w["x"], tuple(w["y"]), w["i"], w["i_prime"], w["psi"]
    quad = (x,) + ys
    bad = []
    if len(set(quad)) != 4:
        bad.append("configuration vertices not distinct")
    if not _is_linear_forest(quad, nb)[0]:
        bad.append("C1: not a linear forest")
    beta = Fraction(c.beta)
    for j, cj in enumerate(cl):
        if j != i and not _big_ok(len(cj - nb[x] - {x}), n, k, beta, mode):
            bad.append(f"C2 fails at class {j}")
    if ip == i or not 0 <= ip < len(cl):
        bad.append("C3: bad i'")
    for j, cj in enumerate(cl):
        if j not in (i, ip) and not _big_ok(len(cj & nb[x]), n, k, beta, mode):
            bad.append(f"C3 fails at class {j}")
    for y in ys:
        m = min(len(cl[i] & nb[y]), len(cl[i] - nb[y] - {y}))
        if m > _psi_sq(beta, mode) * n:
            bad.append(f"C4 fails at {y}")
    return bad


def light_rule_holds(g, q, x: int, i: int, rule: str, z, alpha) -> bool:
    nb, cl = _nb(g), _classes(q)
    an = Fraction(alpha) * g.n
    ci = cl[i]
    if rule == "A1":
        return len(ci & nb[x]) <= an
    if rule == "A2":
        return len(ci - nb[x] - {x}) <= an
    if rule == "A3":
        if z is None or z == x:
            return False
        rest = ci - {x, z}
        return len((rest & nb[x]) - nb[z]) + len((rest & nb[z]) - nb[x]) <= an
    return False


def in_a_set(g, q, x: int, i: int, beta) -> bool:
    nb, cl = _nb(g), _classes(q)
    bn = Fraction(beta) * g.n
    return x in cl[i] and len(cl[i] - nb[x] - {x}) >= bn and len(cl[i] & nb[x]) >= bn


def _kind_ok(comp: set[int], cnb, k: int) -> bool:
    m = len(comp)
    deg = {v: len(cnb[v] & comp) for v in comp}
    edges = sum(deg.values()) // 2
    single = m == 1
    star = m >= 2 and edges == m - 1 and max(deg.values()) == m - 1
    clique = edges == m * (m - 1) // 2
    triangle = m == 3 and clique
    body = {v for v in comp if deg[v] == m - 1}
    side = comp - body
    sun = bool(body) and all(not (cnb[v] & side) for v in side)
    if k == 4:
        return single or sun
    if k == 5:
        return single or star or clique
    return single or star or triangle


def is_template_on(g, q, k: int) -> bool:
    nb, cl = _nb(g), _classes(q)
    for c in cl[1:]:
        if any(c - {v} - nb[v] for v in c):
            return False
    cnb = [set(range(g.n)) - nb[v] - {v} for v in range(g.n)]
    return all(_kind_ok(comp, cnb, k) for comp in _components(cl[0], lambda u: cnb[u]))


def _class_sets(g, q, i: int):
    """(C, C_high, B_high, C_low, B_low, C_0) straight from the definitions, or None."""
    nb, cl = _nb(g), _classes(q)
    n, k = g.n, q.k
    cnb = [set(range(g.n)) - nb[v] - {v} for v in range(g.n)]
    e = 2 * k * k
    C, CH, CL, C0 = set(), set(), set(), set()
    for comp in _components(cl[i], lambda u: cnb[u]):
        m = len(comp)
        deg = {v: len(cnb[v] & comp) for v in comp}
        if m == 1:
            C0 |= comp
            continue
        edges = sum(deg.values()) // 2
        if m == 3 and edges == 3:
            C.add(min(comp))
            CL.add(min(comp))
            continue
        if edges != m - 1 or max(deg.values()) != m - 1:
            return None
        centre = min(comp) if m == 2 else next(v for v in comp if deg[v] == m - 1)
        C.add(centre)
        if (200 * k * k * m) ** e >= n ** (e - 1):
            CH.add(centre)
        else:
            CL.add(centre)
    BH = {v for v in cl[i] if cnb[v] & CH}
    BL = {v for v in cl[i] if cnb[v] & CL}
    return C, CH, BH, CL, BL, C0


def check_a_witness(g, q, a_class: str, w: dict) -> list[str]:
    nb = _nb(g)
    cl = _classes(q)
    n, k = g.n, q.k
    if a_class == "A4":
        return []
    i, j = w["i"], w["j"]
    if i == j:
        return ["A witness uses equal class indices"]
    if a_class == "A3":
        vs = w["vertices"]
        ok, comps = _is_linear_forest(vs, nb)
        if len(set(vs)) != 6 or not set(vs) <= cl[i] | cl[j] or not ok or comps > 3:
            return ["A3 forest fails"]
        return []
    si, sj = _class_sets(g, q, i), _class_sets(g, q, j)
    if si is None or sj is None:
        return ["class sets undefined"]
    ys = w["y"]
    if len(set(ys)) != 3 or not set(ys) <= cl[j]:
        return ["y vertices not distinct members of Q_j"]
    bl = si[4]
    if 2 * k * k * len(bl) < n:
        return ["|B_low| too small"]
    everyone = set(range(n))
    cn3 = everyone - set(ys) - nb[ys[0]] - nb[ys[1]] - nb[ys[2]]
    if a_class == "A1":
        return [] if 200 * k * k * len(cn3 & bl) <= n else ["A1 intersection too large"]
    y1, y2 = ys[0], ys[1]
    if y1 in sj[0] or y2 in sj[0]:
        return ["A2: y1 or y2 is a centre"]
    cn2 = everyone - {y1, y2} - nb[y1] - nb[y2]
    b = cn3 & bl
    cb = {c for c in si[3] if (everyone - nb[c] - {c}) & b}
    return [] if not cb & cn2 else ["A2 avoidance fails"]


def recheck_verdict(g: LabeledGraph, q: OrderedPartition, c: HierarchyConstants, v) -> list[str]:
    w = v.witness
    if v.f_class == "T_Q":
        return [] if is_template_on(g, q, q.k) else ["not a template on Q"]
    if v.f_class == "F1" and v.f1_kind == "i":
        return check_configuration(g, q, c, w)
    if v.f_class == "F1" and v.f1_kind == "ii":
        if w["i"] == w["j"]:
            return ["doubly light needs two classes"]
        ok = light_rule_holds(g, q, w["x"], w["i"], w["rule_i"], w["z_i"], c.alpha) and \
            light_rule_holds(g, q, w["x"], w["j"], w["rule_j"], w["z_j"], c.alpha)
        return [] if ok else ["light rule fails"]
    if v.f_class == "F2":
        return [] if in_a_set(g, q, w["x"], w["i"], c.beta) else ["F2 vertex not in A^i"]
    if v.f_class == "F3":
        if v.a_class is None:
            return []
        return check_a_witness(g, q, v.a_class, v.a_witness)
    return [f"unknown f_class {v.f_class}"]


def stars_and_triangles(g: LabeledGraph, vertices: set[int]) -> bool:
    nb = _nb(g)
    cnb = [set(range(g.n)) - nb[v] - {v} for v in range(g.n)]
    for comp in _components(vertices, lambda u: cnb[u]):
        m = len(comp)
        deg = [len(cnb[v] & comp) for v in comp]
        edges = sum(deg) // 2
        if m == 1 or (m == 3 and edges == 3) or (edges == m - 1 and max(deg) == m - 1):
            continue
        return False
    return True


def dichotomy_holds(g: LabeledGraph, q: OrderedPartition, c: HierarchyConstants) -> tuple[bool, list[int]]:
    """For each class whose complement minus A^i is not stars and triangles, demand
    a (k,x,i,β^{1/2})-configuration or a doubly-light vertex. Returns (ok, failing classes)."""
    from .light import Psi, find_configuration, find_doubly_light

    cl = _classes(q)
    broken = []
    for i, ci in enumerate(cl):
        rest = {x for x in ci if not in_a_set(g, q, x, i, c.beta)}
        if not stars_and_triangles(g, rest):
            broken.append(i)
    if not broken:
        return True, []
    if find_doubly_light(g, q, c.alpha) is not None:
        return True, broken
    psi = Psi(c.beta, "sqrt")
    ok = all(find_configuration(g, q, i, psi, override_guards=True) is not None for i in broken)
    return ok, broken


__all__ = ["check_a_witness", "check_configuration", "dichotomy_holds", "in_a_set",
           "is_template_on", "light_rule_holds", "recheck_verdict", "stars_and_triangles"]
