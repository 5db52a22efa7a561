"""Seeded campaigns and exhaustive verification suites behind the CLI.

Every campaign returns a JSON-ready payload that depends only on its
parameters and root seed. Per-item seeds come from numpy's SeedSequence
spawning, so an item's result does not depend on how work is split across
processes.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import os
import random
from fractions import Fraction
from multiprocessing import Pool

import numpy as np

from .classifier import classify_graph, dichotomy_holds, find_doubly_light
from .errors import GuardError
from .graph_core import (
    LabeledGraph,
    complement,
    emit_graph6,
    has_induced_cycle,
    is_disjoint_union_of_ksuns,
    pair_index,
)
from .multigraph import (
    all_patterns,
    canonical_instance,
    contains_copy,
    covering_permutation,
    tetrahedron_table,
    verify_covering_permutation,
)
from .partitions import (
    OrderedPartition,
    desk_constants,
    entropy_report,
    local_improve,
    regime_grid,
)
from .templates import (
    check_f_estimate_1,
    check_number_of_templates,
    check_size_of_template_bound,
    count_templates,
    count_templates_on_partition,
    f_bruteforce_all,
    f_exact,
    omitted_proposition_sweep,
    ordered_partitions,
    random_template,
    templates_on_partition,
    turan_count,
    turan_graph,
)

# ------------------------------------------------------------------ plumbing


def spawn_seeds(root: int, count: int) -> list[int]:
    """One 64-bit seed per work item, split from the root via SeedSequence.spawn."""
    children = np.random.SeedSequence(root).spawn(count)
    return [int(c.generate_state(1, dtype=np.uint64)[0]) for c in children]


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("ISLAB_JOBS", "1")))
    except ValueError:
        return 1


def pmap(fn, items: list, jobs: int = 1) -> list:
    """Ordered map; results come back in input order regardless of jobs."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs)))


def payload_bytes(payload) -> bytes:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()


def digest(payload) -> str:
    return hashlib.sha256(payload_bytes(payload)).hexdigest()


# ---------------------------------------------------------- template sampling


def _sample_item(args) -> dict:
    n, k, seed = args
    q = OrderedPartition.balanced(n, k)
    g = random_template(q, seed=seed)
    cyc = has_induced_cycle(g, 2 * k) if 2 * k <= n else None
    return {"seed": seed, "graph6": emit_graph6(g), "induced_cycle": list(cyc) if cyc else None}


def sample_templates(n: int, k: int, count: int, seed: int, jobs: int = 1) -> dict:
    items = pmap(_sample_item, [(n, k, s) for s in spawn_seeds(seed, count)], jobs)
    bad = sum(1 for it in items if it["induced_cycle"] is not None)
    return {"command": "sample", "n": n, "k": k, "count": count, "seed": seed,
            "with_induced_cycle": bad, "items": items}


# ------------------------------------------------------------------ counting


COUNT_HEADER = ["n", "k", "f_k", "t_k-1", "t_k-1_check", "estimate_1_ok"]


def count_rows(ns, k: int) -> list[list]:
    rows = []
    for n in ns:
        t = turan_count(n, k - 1)
        t2 = turan_graph(n, k - 1).num_edges
        # the log log n term needs n >= 4
        est = int(check_f_estimate_1(n, k)) if n >= 4 else ""
        rows.append([n, k, f_exact(n, k), t, t2, est])
    return rows


# --------------------------------------------------------------- enumeration


def enumerate_report(n: int, k: int, override_guards: bool = False) -> dict:
    """|T(n,k)| plus |T_Q| for one partition per size shape, counted two ways."""
    total = count_templates(n, k, override_guards=override_guards)
    shapes = {}
    for q in ordered_partitions(n, k):
        key = (q.classes[0].bit_count(),) + tuple(sorted((c.bit_count() for c in q.classes[1:]), reverse=True))
        if key in shapes:
            continue
        formula = count_templates_on_partition(q)
        listed = len(templates_on_partition(q, n))
        shapes[key] = {"shape": list(key), "formula": formula, "enumerated": listed}
    return {"command": "enumerate", "n": n, "k": k, "templates": total,
            "per_shape": [shapes[s] for s in sorted(shapes)]}


# ------------------------------------------------------------------- suites


def suite_coverperm(ks=(4, 5, 6)) -> dict:
    failures, checked = [], 0
    for k in ks:
        cycle = LabeledGraph.cycle(2 * k)
        for pat in all_patterns(k):
            g = canonical_instance(pat)
            sigma = covering_permutation(pat)
            ok = verify_covering_permutation(g, sigma, k) and contains_copy(cycle, g) is not None
            checked += 1
            if not ok:
                failures.append(pat.to_json())
    return {"checked": checked, "failures": failures}


def _tet_masks(n: int) -> list[tuple[int, ...]]:
    out = []
    for quad in itertools.combinations(range(n), 4):
        out.append(tuple(pair_index(quad[a], quad[b]) for a, b in itertools.combinations(range(4), 2)))
    return out


def suite_tetrahedron(n_max: int = 7, chunk: int = 1 << 16) -> dict:
    """For every graph B on <= n_max vertices (blue = E(B), red = the rest):
    no k-good tetrahedron implies B is a disjoint union of k-suns (k = 6, 5, 4)."""
    tables = {k: np.array(tetrahedron_table(k), dtype=bool) for k in (4, 5, 6)}
    failures = []
    stats = {k: 0 for k in (4, 5, 6)}
    for n in range(1, n_max + 1):
        pairs = n * (n - 1) // 2
        quads = _tet_masks(n)
        for start in range(0, 1 << pairs, chunk):
            masks = np.arange(start, min(start + chunk, 1 << pairs), dtype=np.int64)
            good = {k: np.zeros(len(masks), dtype=bool) for k in (4, 5, 6)}
            for idx in quads:
                code = np.zeros(len(masks), dtype=np.int64)
                for t, p in enumerate(idx):
                    code |= ((masks >> p) & 1) << t
                for k in (4, 5, 6):
                    good[k] |= tables[k][code]
            for k in (4, 5, 6):
                for m in masks[~good[k]]:
                    stats[k] += 1
                    b = LabeledGraph.from_edge_mask(n, int(m))
                    if is_disjoint_union_of_ksuns(b, k) is None:
                        failures.append({"n": n, "k": k, "graph6": emit_graph6(b)})
    return {"n_max": n_max, "tetrahedron_free": {str(k): v for k, v in stats.items()},
            "failures": failures}


def suite_f_oracle(n_max: int = 7) -> dict:
    rows, failures = [], []
    for n in range(1, n_max + 1):
        brute = f_bruteforce_all(n)
        for k in (4, 5, 6):
            ex = f_exact(n, k)
            rows.append([n, k, ex, brute[k]])
            if ex != brute[k]:
                failures.append([n, k, ex, brute[k]])
    return {"rows": rows, "failures": failures}


def suite_template_count(n: int = 6, k: int = 4) -> dict:
    """Every labelled graph on [n] tested against T_Q for the balanced Q."""
    from .templates import is_k_template_on

    q = OrderedPartition.balanced(n, k)
    hits = 0
    for mask in range(1 << (n * (n - 1) // 2)):
        if is_k_template_on(LabeledGraph.from_edge_mask(n, mask), q) is not None:
            hits += 1
    formula = count_templates_on_partition(q)
    return {"n": n, "k": k, "enumerated": hits, "formula": formula,
            "failures": [] if hits == formula else [[hits, formula]]}


def suite_counting() -> dict:
    failures = []
    t64 = count_templates(6, 4)
    if not check_number_of_templates(6, 4, t64):
        failures.append("number of templates")
    for q in ordered_partitions(6, 4):
        if not check_size_of_template_bound(6, 4, q):
            failures.append(f"size bound {q.to_json()}")
    for n, k, s, part in omitted_proposition_sweep(range(2, 9), 200):
        failures.append(f"omitted ({part}) n={n} k={k} s={s}")
    for n, p in regime_grid(20):
        if not entropy_report(n, p).ok:
            failures.append(f"entropy n={n} p={p}")
    return {"templates_6_4": t64, "failures": failures}


SUITES = {
    "coverperm": suite_coverperm,
    "tetrahedron": suite_tetrahedron,
    "f-oracle": suite_f_oracle,
    "template-count": suite_template_count,
    "counting": suite_counting,
}


def run_suites(selection) -> dict:
    unknown = [s for s in selection if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    return {s: SUITES[s]() for s in selection}


# ---------------------------------------------------------------- classifier


def constants_for(name: str, k: int):
    """'dichotomy': alpha > 13*6^k*sqrt(beta), the regime the stars-and-triangles
    argument needs. 'coarse': beta*n > 2 for n above 50, so A^i is selective."""
    if name == "dichotomy":
        return desk_constants(k, Fraction(1, 20), Fraction(1, 10**14), Fraction(1, 10**15))
    if name == "coarse":
        return desk_constants(k, Fraction(1, 20), Fraction(1, 25), Fraction(1, 200))
    raise ValueError(f"unknown constant set {name!r}")


KINDS = ("template", "flips", "half_degree", "near_clique", "isolated_class", "random",
         "independent_block")


def _flip(edges: set, u: int, v: int) -> None:
    e = (min(u, v), max(u, v))
    edges.symmetric_difference_update({e})


def _perturb(kind: str, g: LabeledGraph, q: OrderedPartition, rng: random.Random) -> LabeledGraph:
    n, k = g.n, q.k
    edges = set(g.edges())
    labels = q.labels(n)
    if kind == "flips":
        for _ in range(rng.randint(1, 4)):
            u, v = rng.sample(range(n), 2)
            _flip(edges, u, v)
    elif kind == "half_degree":
        i = rng.randrange(1, k - 1)
        cls = [v for v in range(n) if labels[v] == i]
        x = rng.choice(cls)
        for y in rng.sample([v for v in cls if v != x], (len(cls) - 1) // 2):
            _flip(edges, x, y)
    elif kind == "near_clique":
        # all classes cliques, then a few disjoint complement triangles or edges
        for v in range(n):
            for u in range(v):
                if labels[u] == labels[v]:
                    edges.add((u, v))
        free = set(range(n))
        for _ in range(rng.randint(1, 4)):
            i = rng.randrange(k - 1)
            pick = sorted(v for v in free if labels[v] == i)
            size = rng.choice((2, 3))
            if len(pick) < size:
                continue
            vs = rng.sample(pick, size)
            free -= set(vs)
            for u, v in itertools.combinations(vs, 2):
                edges.discard((min(u, v), max(u, v)))
    elif kind == "isolated_class":
        # every non-Q_0 class becomes an independent set, sparsely joined to the rest
        for v in range(n):
            if labels[v] >= 1:
                for u in range(n):
                    if u != v:
                        edges.discard((min(u, v), max(u, v)))
        for v in range(n):
            if labels[v] >= 1:
                for u in range(n):
                    if labels[u] != labels[v] and rng.random() < 0.15:
                        edges.add((min(u, v), max(u, v)))
    elif kind == "random":
        edges = {(u, v) for v in range(n) for u in range(v) if rng.getrandbits(1)}
    return LabeledGraph.from_edges(n, edges)


COARSE_RETRIES = 40
BLOCK_RETRIES = 400

# Each bit of the 6-vertex block is split from every other by at least one
# triple, in both halves; with complements added every bit lands in exactly
# five patterns per half.
_BLOCK_TRIPLES = (((0, 1, 2), (0, 1, 3), (0, 1, 4), (0, 2, 3), (0, 2, 5)),
                  ((0, 1, 5), (0, 2, 4), (0, 3, 4), (0, 3, 5), (0, 4, 5)))


def _block_graph(rng: random.Random) -> tuple[LabeledGraph, OrderedPartition]:
    """k = 4, classes of 10, 6 and 10 vertices in random order and labels.

    The 6-block is an independent set, so its complement is K_6. Each outside
    vertex sees a distinct triple of the block, which keeps it from being
    light in the block's class; the two clique classes are joined at random.
    """
    perm = list(range(26))
    rng.shuffle(perm)
    order = [0, 1, 2]
    rng.shuffle(order)
    a = [perm[v] for v in range(10)]
    block = [perm[v] for v in range(10, 16)]
    b = [perm[v] for v in range(16, 26)]
    edges = set()
    for cls in (a, b):
        edges |= {(min(u, v), max(u, v)) for u, v in itertools.combinations(cls, 2)}
    for cls, triples in zip((a, b), _BLOCK_TRIPLES):
        pats = [p for t in triples for p in (t, tuple(x for x in range(6) if x not in t))]
        for x, pat in zip(cls, pats):
            edges |= {(min(x, block[t]), max(x, block[t])) for t in pat}
    edges |= {(min(u, v), max(u, v)) for u in a for v in b if rng.getrandbits(1)}
    parts = [a, block, b]
    q = OrderedPartition.from_lists(4, [parts[order.index(c)] for c in range(3)])
    return LabeledGraph.from_edges(26, edges), q


def classifier_instance(index: int, seed: int):
    """(kind, constants name, G, Q) for one seeded campaign item.

    The coarse kinds aim at F2/F3, so their crossing edges are resampled (up
    to COARSE_RETRIES times) until no vertex is light in two classes; at
    n near 60 random crossings produce near-twins quite often. The
    independent_block kind exercises the stars-and-triangles dichotomy with
    a class whose complement is K_6.
    """
    rng = random.Random(seed)
    kind = KINDS[index % len(KINDS)]
    if kind == "independent_block":
        # retried until no vertex is doubly light, so the class holding the
        # block must be settled by a configuration
        alpha = constants_for("dichotomy", 4).alpha
        for _ in range(BLOCK_RETRIES):
            g, q = _block_graph(rng)
            if find_doubly_light(g, q, alpha) is None:
                break
        return kind, "dichotomy", g, q
    coarse = kind in ("half_degree", "near_clique")
    k = 4 if coarse or index % 4 else 5
    if kind == "half_degree":
        n, cname = rng.randint(50, 64), "coarse"
    elif kind == "near_clique":
        n, cname = rng.randint(52, 64), "coarse"
    else:
        n, cname = rng.randint(12, 40), "dichotomy"
    if kind == "isolated_class":
        sizes = [max(n - 4 * (k - 2), 2)] + [4] * (k - 2)
        n = sum(sizes)
        q0 = OrderedPartition.from_labels(k, [c for c, s in enumerate(sizes) for _ in range(s)])
    else:
        q0 = OrderedPartition.balanced(n, k)
    alpha = constants_for(cname, k).alpha
    for _ in range(COARSE_RETRIES if coarse else 1):
        g = _perturb(kind, random_template(q0, seed=rng.getrandbits(64)), q0, rng)
        q = local_improve(g, q0)
        if not coarse or find_doubly_light(g, q, alpha) is None:
            break
    return kind, cname, g, q


def _classify_item(args) -> dict:
    index, seed = args
    kind, cname, g, q = classifier_instance(index, seed)
    c = constants_for(cname, q.k)
    v = classify_graph(g, q, c)
    out = {"index": index, "seed": seed, "kind": kind, "constants": cname, "k": q.k,
           "partition": json.loads(q.to_json()), "verdict": json.loads(v.to_json(g))}
    if cname == "dichotomy":
        ok, broken = dichotomy_holds(g, q, c)
        out["dichotomy"] = {"ok": ok, "undecomposed_classes": broken}
    return out


def classifier_campaign(count: int, seed: int, jobs: int = 1) -> dict:
    items = pmap(_classify_item, list(enumerate(spawn_seeds(seed, count))), jobs)
    tally: dict[str, int] = {}
    for it in items:
        v = it["verdict"]
        key = v["f_class"] + (f"({v['f1_kind']})" if v["f1_kind"] else "") + (
            f"/{v['a_class']}" if v["a_class"] else "")
        tally[key] = tally.get(key, 0) + 1
    return {"command": "classify", "count": count, "seed": seed,
            "tally": dict(sorted(tally.items())), "items": items}


__all__ = [
    "COUNT_HEADER", "KINDS", "SUITES", "classifier_campaign", "classifier_instance", "constants_for",
    "count_rows", "default_jobs", "digest", "enumerate_report", "payload_bytes", "pmap",
    "run_suites", "sample_templates", "spawn_seeds", "suite_coverperm", "suite_counting",
    "suite_f_oracle", "suite_template_count", "suite_tetrahedron",
]
