"""Complete 2-coloured multigraphs, E-patterns and covering permutations.

A copy of H in a multigraph G sends edges of H to red pairs and non-edges
to blue pairs. Purple pairs carry both colours and so accept either.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .graph_core import LabeledGraph, bits

Pair = tuple[int, int]


def _norm(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def _rows(n: int, pairs) -> tuple[int, ...]:
    rows = [0] * n
    for u, v in pairs:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"bad pair {u},{v}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return tuple(rows)


@dataclass(frozen=True)
class TwoColouredMultigraph:
    n: int
    red: tuple[int, ...]
    blue: tuple[int, ...]

    @classmethod
    def from_pairs(cls, n: int, red, blue) -> "TwoColouredMultigraph":
        return cls(n, _rows(n, red), _rows(n, blue))

    @classmethod
    def purple(cls, n: int) -> "TwoColouredMultigraph":
        full = LabeledGraph.complete(n).adj
        return cls(n, full, full)

    @classmethod
    def from_graph(cls, g: LabeledGraph) -> "TwoColouredMultigraph":
        return cls(g.n, g.adj, g.complement().adj)

    def red_pairs(self) -> list[Pair]:
        return LabeledGraph._trusted(self.n, self.red).edges()

    def blue_pairs(self) -> list[Pair]:
        return LabeledGraph._trusted(self.n, self.blue).edges()

    def is_red(self, u: int, v: int) -> bool:
        return bool(self.red[u] >> v & 1)

    def is_blue(self, u: int, v: int) -> bool:
        return bool(self.blue[u] >> v & 1)

    def colour(self, u: int, v: int) -> str:
        r, b = self.is_red(u, v), self.is_blue(u, v)
        return "purple" if r and b else "red" if r else "blue" if b else "none"

    @property
    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all((self.red[v] | self.blue[v]) == full & ~(1 << v) for v in range(self.n))

    def sym_diff(self) -> LabeledGraph:
        """G_R △ G_B as a graph: the pairs that are not purple."""
        return LabeledGraph._trusted(self.n, [r ^ b for r, b in zip(self.red, self.blue)])

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "red": [list(p) for p in self.red_pairs()], "blue": [list(p) for p in self.blue_pairs()]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "TwoColouredMultigraph":
        obj = json.loads(text)
        return cls.from_pairs(obj["n"], [tuple(p) for p in obj["red"]], [tuple(p) for p in obj["blue"]])


def from_graph(g: LabeledGraph) -> TwoColouredMultigraph:
    return TwoColouredMultigraph.from_graph(g)


def contains_copy(h: LabeledGraph, g: TwoColouredMultigraph) -> tuple[int, ...] | None:
    """Injection V(H) -> V(G) with edges red and non-edges blue, or None."""
    if not g.is_complete:
        raise ValueError("contains_copy requires a complete multigraph")
    m = h.n
    if m > g.n:
        return None
    red_deg = [r.bit_count() for r in g.red]
    blue_deg = [b.bit_count() for b in g.blue]
    need = [(h.degree(i), m - 1 - h.degree(i)) for i in range(m)]
    allowed = [
        sum(1 << v for v in range(g.n) if red_deg[v] >= dr and blue_deg[v] >= db)
        for dr, db in need
    ]
    image: list[int] = []

    def rec(i: int, used: int) -> bool:
        if i == m:
            return True
        cand = allowed[i] & ~used
        for j, w in enumerate(image):
            cand &= g.red[w] if h.adj[i] >> j & 1 else g.blue[w]
        for v in bits(cand):
            image.append(v)
            if rec(i + 1, used | (1 << v)):
                return True
            image.pop()
        return False

    return tuple(image) if rec(0, 0) else None


def _check_simple_on(g: TwoColouredMultigraph, vs) -> None:
    for u, v in itertools.combinations(vs, 2):
        r, b = g.is_red(u, v), g.is_blue(u, v)
        if r == b:
            raise ValueError(f"pair {u},{v} must carry exactly one colour")


def is_mostly_blue_triangle(g: TwoColouredMultigraph, triple) -> bool:
    vs = tuple(triple)
    if len(set(vs)) != 3:
        raise ValueError("need three distinct vertices")
    _check_simple_on(g, vs)
    return sum(g.is_red(u, v) for u, v in itertools.combinations(vs, 2)) <= 1


_P4_ORDERS = [p for p in itertools.permutations(range(4)) if p[0] < p[3]]


def _blue_has_p4(blue_pairs: set[Pair]) -> bool:
    return any(
        all(_norm(p[i], p[i + 1]) in blue_pairs for i in range(3)) for p in _P4_ORDERS
    )


def is_k_good_tetrahedron(g: TwoColouredMultigraph, quad, k: int) -> bool:
    if k not in (4, 5, 6):
        raise ValueError("k must be 4, 5 or 6")
    vs = tuple(quad)
    if len(set(vs)) != 4:
        raise ValueError("need four distinct vertices")
    _check_simple_on(g, vs)
    red = sum(g.is_red(u, v) for u, v in itertools.combinations(vs, 2))
    blue = {_norm(i, j) for i, j in itertools.combinations(range(4), 2) if g.is_blue(vs[i], vs[j])}
    return red >= 6 - k and _blue_has_p4(blue)


# pattern index of a tetrahedron: bit t of the 6-bit code is pair _TET_PAIRS[t] blue
_TET_PAIRS = list(itertools.combinations(range(4), 2))


def tetrahedron_table(k: int) -> list[bool]:
    """good[code] for every blue-pattern code of a disjointly coloured K4."""
    out = []
    for code in range(64):
        blue = {_TET_PAIRS[t] for t in range(6) if code >> t & 1}
        out.append(6 - len(blue) >= 6 - k and _blue_has_p4(blue))
    return out


def find_k_good_tetrahedron(g: TwoColouredMultigraph, k: int) -> tuple[int, ...] | None:
    for quad in itertools.combinations(range(g.n), 4):
        if is_k_good_tetrahedron(g, quad, k):
            return quad
    return None


# ---------------------------------------------------------------- E-patterns

E_TAGS = ("E1", "E2", "E3", "E4", "E5", "E6")

# tetrahedron red configurations on roles v1..v4 (0-based role indices)
TET_CONFIGS = {
    "path3": ((0, 1), (1, 2), (2, 3)),
    "path2": ((0, 1), (1, 2)),
    "matching": ((0, 1), (2, 3)),
    "single": ((0, 1),),
    "none": (),
}


@dataclass(frozen=True)
class EPattern:
    """An (E1)-(E6) shape with roles[i] = the vertex playing v_{i+1}."""

    tag: str
    k: int
    b: int = 0
    r: int = 0
    triangle_red: tuple[bool, bool] = (False, False)
    config: str = ""
    roles: tuple[int, ...] = field(default=())

    def __post_init__(self):
        k = self.k
        if self.tag not in E_TAGS:
            raise ValueError(f"unknown pattern {self.tag}")
        if k < 2:
            raise ValueError("k must be at least 2")
        if self.tag == "E1" and not (self.b >= 0 and self.r >= 0 and self.b + self.r <= k):
            raise ValueError("E1 needs b, r >= 0 with b + r <= k")
        if self.tag == "E3":
            if k < 4:
                raise ValueError("E3 needs k >= 4")
            if self.triangle_red == (False, True):
                raise ValueError("E3 lists the red-bearing triangle first")
        if self.tag in ("E4", "E5", "E6"):
            if k < 4:
                raise ValueError(f"{self.tag} needs k >= 4")
            allowed = {"E4": ("path3", "path2", "matching"), "E5": ("path3", "path2", "matching", "single"),
                       "E6": ("path3", "path2", "matching", "single", "none")}[self.tag]
            if self.config not in allowed:
                raise ValueError(f"{self.tag} does not allow red configuration {self.config!r}")
            if self.config == "single" and k < 5:
                raise ValueError("a single red edge in the tetrahedron needs k >= 5")
            if self.config == "none" and k < 6:
                raise ValueError("an all-blue tetrahedron needs k >= 6")
        if self.roles and sorted(self.roles) != sorted(set(self.roles)):
            raise ValueError("roles must be distinct vertices")
        if self.roles and len(self.roles) != 2 * k:
            raise ValueError("roles must name 2k vertices")

    def non_purple(self) -> dict[Pair, str]:
        """Role-index pairs that are single-coloured in this pattern, with their colour."""
        k = self.k
        out: dict[Pair, str] = {}
        if self.tag == "E1":
            for i in range(self.b):
                out[(2 * i, 2 * i + 1)] = "blue"
            for i in range(self.b, self.b + self.r):
                out[(2 * i, 2 * i + 1)] = "red"
        elif self.tag == "E2":
            for half in (range(k), range(k, 2 * k)):
                for u, v in itertools.combinations(half, 2):
                    out[(u, v)] = "blue"
        elif self.tag == "E3":
            for tri in ((0, 1, 2), (3, 4, 5)):
                for u, v in itertools.combinations(tri, 2):
                    out[(u, v)] = "blue"
            if self.triangle_red[0]:
                out[(0, 1)] = "red"
            if self.triangle_red[1]:
                out[(4, 5)] = "red"
            for i in range(1, k - 2):
                out[(2 * i + 4, 2 * i + 5)] = "red"
        else:
            for u, v in itertools.combinations(range(4), 2):
                out[(u, v)] = "blue"
            for p in TET_CONFIGS[self.config]:
                out[p] = "red"
            for i in range(1, k - 1):
                out[(2 * i + 2, 2 * i + 3)] = "red"
        return out

    def to_json(self) -> dict:
        d = {"tag": self.tag, "k": self.k}
        if self.tag == "E1":
            d.update(b=self.b, r=self.r)
        if self.tag == "E3":
            d["triangle_red"] = list(self.triangle_red)
        if self.config:
            d["config"] = self.config
        if self.roles:
            d["roles"] = list(self.roles)
        return d


def canonical_instance(pattern: EPattern) -> TwoColouredMultigraph:
    """Roles at labels 0..2k-1 in proof order; every other pair purple."""
    n = 2 * pattern.k
    spec = pattern.non_purple()
    red, blue = [], []
    for u, v in itertools.combinations(range(n), 2):
        c = spec.get((u, v), "purple")
        if c in ("red", "purple"):
            red.append((u, v))
        if c in ("blue", "purple"):
            blue.append((u, v))
    return TwoColouredMultigraph.from_pairs(n, red, blue)


def all_patterns(k: int) -> list[EPattern]:
    """Every parameterisation of (E1)-(E6) that is valid at this k."""
    out = [EPattern("E1", k, b=b, r=r) for b in range(k + 1) for r in range(k + 1 - b)]
    out.append(EPattern("E2", k))
    if k >= 4:
        for flags in ((False, False), (True, False), (True, True)):
            out.append(EPattern("E3", k, triangle_red=flags))
        for cfg in ("path3", "path2", "matching"):
            out.append(EPattern("E4", k, config=cfg))
    if k >= 5:
        out.append(EPattern("E5", k, config="single"))
    if k >= 6:
        out.append(EPattern("E6", k, config="none"))
    return out


def covering_permutation(pattern: EPattern, k: int | None = None) -> tuple[int, ...]:
    """1-indexed sigma of [2k]: cycle position i is played by role v_{sigma(i)}."""
    k = pattern.k if k is None else k
    if k != pattern.k:
        raise ValueError("pattern was built for a different k")
    head: tuple[int, ...]
    if pattern.tag == "E1":
        b = pattern.b
        if b == 0:
            head = ()
        elif b == 1:
            head = (1, 3, 4, 2)
        else:
            head = tuple(range(1, 2 * b, 2)) + tuple(range(2, 2 * b + 1, 2))
    elif pattern.tag == "E2":
        return tuple(x for i in range(1, k + 1) for x in (i, k + i))
    elif pattern.tag == "E3":
        head = {
            (False, False): (1, 4, 2, 5, 3, 6),
            (True, False): (4, 1, 2, 5, 3, 6),
            (True, True): (1, 2, 4, 3, 5, 6),
        }[pattern.triangle_red]
    else:
        head = {
            "path3": (),
            "path2": (1, 2, 3, 5, 6, 4),
            "matching": (1, 2, 5, 6, 3, 4),
            "single": (1, 2, 5, 6, 3, 7, 8, 4),
            "none": (1, 5, 6, 2, 7, 8, 3, 9, 10, 4),
        }[pattern.config]
    return head + tuple(range(len(head) + 1, 2 * k + 1))


def verify_covering_permutation(
    g: TwoColouredMultigraph, sigma, k: int, roles=None
) -> bool:
    """Check that c_i -> roles[sigma(i)-1] is a copy of C_2k in G."""
    m = 2 * k
    if sorted(sigma) != list(range(1, m + 1)):
        raise ValueError("sigma must be a permutation of 1..2k")
    roles = tuple(range(m)) if roles is None else tuple(roles)
    img = [roles[s - 1] for s in sigma]
    for i, j in itertools.combinations(range(m), 2):
        u, v = img[i], img[j]
        if (j - i) % m in (1, m - 1):
            if not g.is_red(u, v):
                return False
        elif not g.is_blue(u, v):
            return False
    return True


def _single_coloured(g: TwoColouredMultigraph, u: int, v: int) -> str | None:
    r, b = g.is_red(u, v), g.is_blue(u, v)
    if r and b:
        return None
    return "red" if r else "blue"


def matches_e_property(g: TwoColouredMultigraph, which: str) -> EPattern | None:
    """Role assignment showing G_R △ G_B has the shape of `which`, or None."""
    if not g.is_complete:
        raise ValueError("matches_e_property requires a complete multigraph")
    if g.n % 2:
        return None
    k = g.n // 2
    d = g.sym_diff()
    comps = d.components()
    nontrivial = [c for c in comps if c.bit_count() > 1]
    isolated = [c.bit_length() - 1 for c in comps if c.bit_count() == 1]

    def colour(u, v):
        return _single_coloured(g, u, v)

    def is_edge_comp(c):
        return c.bit_count() == 2

    def is_full(c):
        vs = list(bits(c))
        return all(d.has_edge(u, v) for u, v in itertools.combinations(vs, 2))

    if which == "E1":
        if not all(is_edge_comp(c) for c in nontrivial):
            return None
        blue_e, red_e = [], []
        for c in nontrivial:
            u, v = bits(c)
            (blue_e if colour(u, v) == "blue" else red_e).append((u, v))
        if len(blue_e) + len(red_e) > k:
            return None
        roles = tuple(x for e in blue_e + red_e for x in e) + tuple(isolated)
        return EPattern("E1", k, b=len(blue_e), r=len(red_e), roles=roles)

    if which == "E2":
        if len(comps) != 2 or any(c.bit_count() != k for c in comps) or not all(is_full(c) for c in comps):
            return None
        if any(colour(u, v) != "blue" for c in comps for u, v in itertools.combinations(bits(c), 2)):
            return None
        return EPattern("E2", k, roles=tuple(bits(comps[0])) + tuple(bits(comps[1])))

    if which == "E3":
        if k < 4 or isolated:
            return None
        tris = [c for c in nontrivial if c.bit_count() == 3 and is_full(c)]
        edges = [c for c in nontrivial if is_edge_comp(c)]
        if len(tris) != 2 or len(edges) != k - 3 or len(tris) + len(edges) != len(nontrivial):
            return None
        if any(colour(*bits(c)) != "red" for c in edges):
            return None
        arranged = []
        for t in tris:
            vs = list(bits(t))
            reds = [(u, v) for u, v in itertools.combinations(vs, 2) if colour(u, v) == "red"]
            if len(reds) > 1:
                return None
            arranged.append((vs, reds[0] if reds else None))
        arranged.sort(key=lambda a: a[1] is None)
        flags = (arranged[0][1] is not None, arranged[1][1] is not None)
        roles: list[int] = []
        for slot, (vs, red) in enumerate(arranged):
            if red is None:
                roles += vs
            else:
                other = [v for v in vs if v not in red][0]
                # the first triangle's red edge is v1v2, the second's v5v6
                roles += list(red) + [other] if slot == 0 else [other] + list(red)
        for c in edges:
            roles += list(bits(c))
        return EPattern("E3", k, triangle_red=flags, roles=tuple(roles))

    if which in ("E4", "E5", "E6"):
        if k < 4 or isolated:
            return None
        need = {"E4": 4, "E5": 5, "E6": 6}[which]
        if which != "E4" and k < need:
            return None
        tets = [c for c in nontrivial if c.bit_count() == 4 and is_full(c)]
        edges = [c for c in nontrivial if is_edge_comp(c)]
        if len(tets) != 1 or len(edges) != k - 2 or len(edges) + 1 != len(nontrivial):
            return None
        if any(colour(*bits(c)) != "red" for c in edges):
            return None
        quad = list(bits(tets[0]))
        if not is_k_good_tetrahedron(g, quad, need):
            return None
        reds = [(u, v) for u, v in itertools.combinations(quad, 2) if colour(u, v) == "red"]
        cfg, order = _tet_roles(quad, reds)
        roles = tuple(order) + tuple(x for c in edges for x in bits(c))
        return EPattern(which, k, config=cfg, roles=roles)

    raise ValueError(f"unknown pattern {which}")


def _tet_roles(quad: list[int], reds: list[Pair]) -> tuple[str, list[int]]:
    """Order the tetrahedron so its red edges sit where the proof puts them."""
    for cfg in ("path3", "path2", "matching", "single", "none"):
        want = TET_CONFIGS[cfg]
        if len(want) != len(reds):
            continue
        for perm in itertools.permutations(quad):
            if {_norm(perm[a], perm[b]) for a, b in want} == {_norm(*e) for e in reds}:
                return cfg, list(perm)
    raise ValueError("tetrahedron red edges match no listed configuration")


def certificate(g: TwoColouredMultigraph, pattern: EPattern) -> dict:
    sigma = covering_permutation(pattern)
    return {
        "pattern": pattern.to_json(),
        "sigma": list(sigma),
        "verified": verify_covering_permutation(g, sigma, pattern.k, pattern.roles or None),
    }
