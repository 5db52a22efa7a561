"""Light vertices, configurations, A^i sets and pair classes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import GuardError
from ..graph_core import LabeledGraph, bits, linear_forest_info
from ..partitions import OrderedPartition, deg_in, nondeg_in

CONFIG_GUARD = 5 * 10**6


def _frac(x) -> Fraction:
    return Fraction(x)


def at_most(count: int, coeff, n: int) -> bool:
    """count <= coeff * n, exactly."""
    return count <= _frac(coeff) * n


@dataclass(frozen=True)
class Psi:
    """ψ = β^{1/2} ('sqrt') or β² ('square'), compared exactly."""

    beta: Fraction
    mode: str

    def __post_init__(self):
        if self.mode not in ("sqrt", "square"):
            raise ValueError("psi mode must be 'sqrt' or 'square'")
        object.__setattr__(self, "beta", Fraction(self.beta))

    @property
    def squared(self) -> Fraction:
        return self.beta if self.mode == "sqrt" else self.beta**4

    def big_threshold_met(self, d: int, n: int, k: int) -> bool:
        """d >= 13 * 6^k * ψ * n."""
        c = 13 * 6**k * n
        if self.mode == "square":
            return d >= c * self.beta**2
        return d >= 0 and d * d >= c * c * self.beta

    def big_threshold_exceeds_n(self, n: int, k: int) -> bool:
        return not self.big_threshold_met(n, n, k)

    def label(self) -> str:
        return "beta^(1/2)" if self.mode == "sqrt" else "beta^2"


# --------------------------------------------------------------- i-light


@dataclass(frozen=True)
class LightWitness:
    rule: str  # "A1", "A2" or "A3"
    z: int | None = None


def star_sizes(g: LabeledGraph, cls: int, x: int, z: int) -> tuple[int, int]:
    """(|N*_i(x,z)|, |N*_i(z,x)|)."""
    excl = ~((1 << x) | (1 << z))
    a = g.adj[x] & ~g.adj[z] & cls & excl
    b = g.adj[z] & ~g.adj[x] & cls & excl
    return a.bit_count(), b.bit_count()


def is_i_light(g: LabeledGraph, q: OrderedPartition, x: int, i: int, alpha) -> LightWitness | None:
    n = g.n
    cls = q.classes[i]
    if at_most(deg_in(g, x, cls), alpha, n):
        return LightWitness("A1")
    if at_most(nondeg_in(g, x, cls), alpha, n):
        return LightWitness("A2")
    for z in range(n):
        if z == x:
            continue
        a, b = star_sizes(g, cls, x, z)
        if at_most(a + b, alpha, n):
            return LightWitness("A3", z)
    return None


def light_classes(g: LabeledGraph, q: OrderedPartition, x: int, alpha) -> list[tuple[int, LightWitness]]:
    out = []
    for i in range(len(q.classes)):
        w = is_i_light(g, q, x, i, alpha)
        if w is not None:
            out.append((i, w))
    return out


@dataclass(frozen=True)
class DoublyLight:
    x: int
    i: int
    j: int
    wi: LightWitness
    wj: LightWitness


def find_doubly_light(g: LabeledGraph, q: OrderedPartition, alpha) -> DoublyLight | None:
    for x in range(g.n):
        lc = light_classes(g, q, x, alpha)
        if len(lc) >= 2:
            (i, wi), (j, wj) = lc[0], lc[1]
            return DoublyLight(x, i, j, wi, wj)
    return None


# ---------------------------------------------------------- configurations


def _lf_table() -> list[bool]:
    pairs = list(itertools.combinations(range(4), 2))
    out = []
    for code in range(64):
        g = LabeledGraph.from_edges(4, [pairs[t] for t in range(6) if code >> t & 1])
        out.append(linear_forest_info(g).is_linear_forest)
    return out


_LF4 = _lf_table()
_PAIRS4 = list(itertools.combinations(range(4), 2))


def is_linear_forest_4(g: LabeledGraph, vs) -> bool:
    code = 0
    for t, (a, b) in enumerate(_PAIRS4):
        if g.has_edge(vs[a], vs[b]):
            code |= 1 << t
    return _LF4[code]


@dataclass(frozen=True)
class Configuration:
    x: int
    ys: tuple[int, int, int]
    i: int
    i_prime: int
    psi: str

    def to_json(self) -> dict:
        return {"x": self.x, "y": list(self.ys), "i": self.i, "i_prime": self.i_prime, "psi": self.psi}


def x_conditions(g: LabeledGraph, q: OrderedPartition, x: int, i: int, psi: Psi) -> int | None:
    """The smallest i' certifying (C3) when (C2) also holds, else None."""
    n, k = g.n, q.k
    r = len(q.classes)
    for j in range(r):
        if j != i and not psi.big_threshold_met(nondeg_in(g, x, q.classes[j]), n, k):
            return None
    for ip in range(r):
        if ip == i:
            continue
        if all(psi.big_threshold_met(deg_in(g, x, q.classes[j]), n, k)
               for j in range(r) if j not in (i, ip)):
            return ip
    return None


def y_condition(g: LabeledGraph, q: OrderedPartition, y: int, i: int, psi: Psi) -> bool:
    cls = q.classes[i]
    m = min(deg_in(g, y, cls), nondeg_in(g, y, cls))
    return m <= psi.squared * g.n


def find_configuration(g: LabeledGraph, q: OrderedPartition, i: int, psi: Psi,
                       override_guards: bool = False) -> Configuration | None:
    """First (k,x,i,ψ)-configuration with x ascending and y-triples lexicographic."""
    ys_ok = [y for y in range(g.n) if y_condition(g, q, y, i, psi)]
    xs = []
    for x in range(g.n):
        ip = x_conditions(g, q, x, i, psi)
        if ip is not None:
            xs.append((x, ip))
    m = len(ys_ok)
    work = len(xs) * m * (m - 1) * (m - 2) // 6
    if work > CONFIG_GUARD and not override_guards:
        raise GuardError("find_configuration", f"{work} candidate quadruples exceed {CONFIG_GUARD}")
    for x, ip in xs:
        cand = [y for y in ys_ok if y != x]
        for ys in itertools.combinations(cand, 3):
            if is_linear_forest_4(g, (x,) + ys):
                return Configuration(x, ys, i, ip, psi.mode)
    return None


def find_any_configuration(g: LabeledGraph, q: OrderedPartition, beta, psi_modes=("sqrt", "square"),
                           override_guards: bool = False) -> Configuration | None:
    """Search order: ψ = β^{1/2} before β², then x ascending, then i ascending."""
    for mode in psi_modes:
        psi = Psi(beta, mode)
        best = None
        for i in range(len(q.classes)):
            c = find_configuration(g, q, i, psi, override_guards)
            if c is not None and (best is None or c.x < best.x):
                best = c
        if best is not None:
            return best
    return None


# ------------------------------------------------------------ A^i and pairs


def a_set(g: LabeledGraph, q: OrderedPartition, i: int, beta) -> int:
    cls = q.classes[i]
    bn = Fraction(beta) * g.n
    out = 0
    for x in bits(cls):
        if nondeg_in(g, x, cls) >= bn and deg_in(g, x, cls) >= bn:
            out |= 1 << x
    return out


IRREGULAR = "Irregular"
ASYMMETRIC = "Asymmetric"
IDENTICAL = "Identical"


def pair_class(g: LabeledGraph, q: OrderedPartition, x: int, y: int, j: int, gamma) -> str | None:
    n = g.n
    cls = q.classes[j]
    gn = Fraction(gamma) * n
    common_non = cls & ~g.adj[x] & ~g.adj[y] & ~((1 << x) | (1 << y))
    if common_non.bit_count() <= gn:
        return IRREGULAR
    a, b = star_sizes(g, cls, x, y)
    if a + b > 3 * gn and (a <= gn or b <= gn):
        return ASYMMETRIC
    if a + b <= 3 * gn:
        return IDENTICAL
    return None
