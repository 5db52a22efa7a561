"""Q-compatibility: conditions (α) and (β) on a template."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..graph_core import LabeledGraph, bits, classify_components
from ..partitions import OrderedPartition

EXHAUSTIVE_N = 14


@dataclass(frozen=True)
class QCompatibility:
    alpha_ok: bool
    beta_ok: bool
    alpha_certified: bool
    alpha_witness: tuple[int, tuple[int, ...]] | None = None  # (class i, vertices)


def alpha_threshold_met(size: int, ell: int, n: int, k: int) -> bool:
    """|N̄_{Q_i}(v_1..v_l)| >= n / (2^{l+1} (k-1)), exactly."""
    return size * (2 ** (ell + 1)) * (k - 1) >= n


def check_alpha_witness(g: LabeledGraph, q: OrderedPartition, i: int, vs) -> bool:
    """Definition-level recheck of a failure witness for (α)."""
    vs = list(vs)
    k = q.k
    if not 1 <= len(vs) <= 2 * k or len(set(vs)) != len(vs):
        return False
    if any(q.classes[i] >> v & 1 for v in vs):
        return False
    common = [w for w in bits(q.classes[i]) if all(not g.has_edge(v, w) for v in vs)]
    return not alpha_threshold_met(len(common), len(vs), g.n, k)


def beta_condition(g: LabeledGraph, q: OrderedPartition) -> bool:
    comps = classify_components(g.complement(), q.classes[0])
    return sum(1 for c, _ in comps if c.bit_count() > 1) >= 2


def _alpha_exhaustive(g: LabeledGraph, q: OrderedPartition):
    n, k = g.n, q.k
    for i, qi in enumerate(q.classes):
        outside = list(bits(g.full_mask & ~qi))
        found = None

        def rec(start: int, chosen: list[int], common: int):
            nonlocal found
            for idx in range(start, len(outside)):
                v = outside[idx]
                c = common & ~g.adj[v]
                chosen.append(v)
                if not alpha_threshold_met(c.bit_count(), len(chosen), n, k):
                    found = (i, tuple(chosen))
                    return True
                if len(chosen) < 2 * k and rec(idx + 1, chosen, c):
                    return True
                chosen.pop()
            return False

        if rec(0, [], qi):
            return found
    return None


def _alpha_sampled(g: LabeledGraph, q: OrderedPartition, trials: int, seed):
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    n, k = g.n, q.k
    for _ in range(trials):
        i = rng.randrange(len(q.classes))
        outside = list(bits(g.full_mask & ~q.classes[i]))
        if not outside:
            continue
        ell = rng.randint(1, min(2 * k, len(outside)))
        vs = sorted(rng.sample(outside, ell))
        common = q.classes[i]
        for v in vs:
            common &= ~g.adj[v]
        if not alpha_threshold_met(common.bit_count(), ell, n, k):
            return (i, tuple(vs))
    return None


def q_compatibility(g: LabeledGraph, q: OrderedPartition, k: int | None = None,
                    trials: int = 2000, seed=0) -> QCompatibility:
    """(α) exhaustively for n <= 14, otherwise by sampling (only failures are certified)."""
    if k is not None and k != q.k:
        raise ValueError("partition has the wrong number of classes for k")
    q.check_covers(g)
    beta_ok = beta_condition(g, q)
    if g.n <= EXHAUSTIVE_N:
        w = _alpha_exhaustive(g, q)
        return QCompatibility(w is None, beta_ok, True, w)
    w = _alpha_sampled(g, q, trials, seed)
    return QCompatibility(w is None, beta_ok, w is not None, w)


__all__ = ["QCompatibility", "alpha_threshold_met", "beta_condition", "check_alpha_witness",
           "q_compatibility"]
