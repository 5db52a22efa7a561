"""Uniform sampling of k-templates on a fixed partition."""

from __future__ import annotations

import itertools
import math
import random

from ..errors import GuardError
from ..graph_core import LabeledGraph, bits
from ..partitions import OrderedPartition
from .counting import f_exact, s_k

SAMPLER_GUARD = 2000


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _pick(rng: random.Random, weights: list[int]) -> int:
    x = rng.randrange(sum(weights))
    for i, w in enumerate(weights):
        if x < w:
            return i
        x -= w
    raise AssertionError("unreachable")


def sample_ksun(vertices: list[int], k: int, rng: random.Random) -> list[tuple[int, int]]:
    """Edges of a uniformly random labelled connected k-sun on `vertices`."""
    m = len(vertices)
    if m == 1:
        return []
    if m == 2:
        return [(vertices[0], vertices[1])]
    every = list(itertools.combinations(vertices, 2))
    if k >= 5 or m == 3:
        # m stars (one per centre), plus the triangle (m = 3) or K_m (k = 5)
        options = m + (1 if (m == 3 or k == 5) else 0)
        pick = rng.randrange(options)
        if pick == m:
            return every
        c = vertices[pick]
        return [(min(c, v), max(c, v)) for v in vertices if v != c]
    # k = 4: K_m, or a side set B with 2 <= |B| <= m - 1
    weights = [1] + [math.comb(m, b) for b in range(2, m)]
    idx = _pick(rng, weights)
    if idx == 0:
        return every
    side = set(rng.sample(vertices, idx + 1))
    return [(u, v) for u, v in every if (u in side) + (v in side) <= 1]


def sample_sun_forest(vertices: list[int], k: int, rng: random.Random) -> list[tuple[int, int]]:
    """Edges of a uniform member of the k-sun forests on `vertices`.

    The component of the smallest remaining vertex gets size m with
    probability C(N-1, m-1) s_k(m) f_k(N-m) / f_k(N); recurse on the rest.
    """
    rest = sorted(vertices)
    edges: list[tuple[int, int]] = []
    while rest:
        nn = len(rest)
        weights = [math.comb(nn - 1, m - 1) * s_k(m, k) * f_exact(nn - m, k) for m in range(1, nn + 1)]
        m = _pick(rng, weights) + 1
        others = rng.sample(rest[1:], m - 1)
        comp = sorted([rest[0]] + others)
        edges += sample_ksun(comp, k, rng)
        taken = set(comp)
        rest = [v for v in rest if v not in taken]
    return edges


def random_template(q: OrderedPartition, k: int | None = None, seed=0) -> LabeledGraph:
    """Uniform over T_Q(n, k)."""
    k = q.k if k is None else k
    if k < 4:
        raise ValueError("k must be at least 4")
    q0 = q.classes[0]
    if q0.bit_count() > SAMPLER_GUARD:
        raise GuardError("random_template.q0", f"|Q_0|={q0.bit_count()} exceeds {SAMPLER_GUARD}")
    rng = _rng(seed)
    n = q.n
    labels = q.labels(n)
    comp_edges = set(sample_sun_forest(list(bits(q0)), k, rng))
    edges = []
    for v in range(1, n):
        for u in range(v):
            cu, cv = labels[u], labels[v]
            if cu != cv:
                if rng.getrandbits(1):
                    edges.append((u, v))
            elif cu != 0 or (u, v) not in comp_edges:
                edges.append((u, v))
    return LabeledGraph.from_edges(n, edges)
