import itertools
import json
import random
from fractions import Fraction

import networkx as nx
import pytest

from islab.classifier import (
    ASYMMETRIC, F1, F2, F3, IDENTICAL, IRREGULAR, T_Q, ClassVerdict, Psi, a_set, assign_a_class,
    c_of, class_sets, classify_graph, dichotomy_holds, find_any_configuration, find_configuration,
    find_doubly_light, has_63_forest, is_i_light, is_linear_forest_4, light_classes,
    order_is_high, pair_class, prop_beta_check, recheck_verdict, regime_report, tstar_area,
    tstar_member, y_set,
)
from islab.classifier.verify import check_configuration
from islab.errors import DecompositionError, PreconditionError
from islab.experiments import KINDS, classifier_instance, constants_for, spawn_seeds
from islab.graph_core import LabeledGraph, random_graph
from islab.partitions import OrderedPartition, desk_constants, is_locally_optimal
from islab.templates import random_template
from oracles import to_nx

DICHO = constants_for("dichotomy", 4)
COARSE = constants_for("coarse", 4)


def graph_with_nonedges(n, missing):
    missing = {(min(u, v), max(u, v)) for u, v in missing}
    return LabeledGraph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if e not in missing])


def members(mask):
    return {v for v in range(64) if mask >> v & 1}


@pytest.fixture(scope="module")
def campaign_items():
    seeds = spawn_seeds(4242, 3 * len(KINDS))
    return [classifier_instance(i, s) for i, s in enumerate(seeds)]


# ------------------------------------------------------------------ lightness


def test_light_in_full_clique_class():
    g = LabeledGraph.complete(12)
    q = OrderedPartition.balanced(12, 4)
    w = is_i_light(g, q, 0, 0, Fraction(1, 100))
    assert w.rule == "A2"


def test_light_isolated_vertex():
    g = graph_with_nonedges(12, [(0, v) for v in range(1, 12)])
    q = OrderedPartition.balanced(12, 4)
    for i in range(3):
        assert is_i_light(g, q, 0, i, Fraction(1, 100)).rule == "A1"
    assert [i for i, _ in light_classes(g, q, 0, Fraction(1, 100))] == [0, 1, 2]
    assert find_doubly_light(g, q, Fraction(1, 100)).x == 0


def test_light_twin_pair():
    # x = 0 and z = 1 see the same half of Q_1 and miss the other half
    n = 12
    q = OrderedPartition.from_lists(4, [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11]])
    missing = [(x, v) for x in (0, 1) for v in (6, 7)]
    g = graph_with_nonedges(n, missing)
    w = is_i_light(g, q, 0, 1, Fraction(1, 100))
    assert w.rule == "A3" and w.z == 1


def test_not_light():
    n = 12
    q = OrderedPartition.from_lists(4, [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11]])
    # x = 0 sees 4,5 and misses 6,7; every other vertex sees all of Q_1
    g = graph_with_nonedges(n, [(0, 6), (0, 7)])
    assert is_i_light(g, q, 0, 1, Fraction(1, 100)) is None


# --------------------------------------------------------------------- psi


def test_psi_thresholds_exact():
    psi = Psi(Fraction(1, 10**8), "sqrt")
    # 13 * 6^4 * 1e-4 * n: at n = 1000, 1684.8
    assert psi.big_threshold_met(1685, 1000, 4)
    assert not psi.big_threshold_met(1684, 1000, 4)
    assert psi.squared == Fraction(1, 10**8)
    sq = Psi(Fraction(1, 100), "square")
    assert sq.squared == Fraction(1, 10**8)
    assert sq.big_threshold_met(1685, 1000, 4) and not sq.big_threshold_met(1684, 1000, 4)
    assert psi.label() == "beta^(1/2)" and sq.label() == "beta^2"
    assert Psi(Fraction(1, 4), "sqrt").big_threshold_exceeds_n(10, 4)
    with pytest.raises(ValueError):
        Psi(Fraction(1, 4), "cube")


# ----------------------------------------------------------- configurations


def test_linear_forest_4_table():
    pairs = list(itertools.combinations(range(4), 2))
    for code in range(64):
        es = [pairs[t] for t in range(6) if code >> t & 1]
        g = LabeledGraph.from_edges(4, es)
        h = to_nx(g)
        expect = nx.is_forest(h) and max(d for _, d in h.degree()) <= 2
        assert is_linear_forest_4(g, (0, 1, 2, 3)) == expect


def test_configuration_absent_on_complete_and_empty():
    for g in (LabeledGraph.complete(20), LabeledGraph(20, [0] * 20)):
        q = OrderedPartition.balanced(20, 4)
        for i in range(3):
            for mode in ("sqrt", "square"):
                assert find_configuration(g, q, i, Psi(DICHO.beta, mode)) is None


def _proof_style_instance():
    """x has non-neighbours in every other class and neighbours in Q_2; y, y', y''
    in Q_1 have no neighbours in Q_0 (i = 0), with y y' missing and y y'', y' y'' present."""
    q = OrderedPartition.from_lists(4, [list(range(0, 6)), list(range(6, 12)), list(range(12, 18))])
    labels = q.labels(18)
    x, y, y1, y2 = 6, 7, 8, 9
    edges = set()
    for u, v in itertools.combinations(range(18), 2):
        if labels[u] == labels[v] and labels[u] != 1:
            edges.add((u, v))
    # Q_1: only the two edges y y'' and y' y''
    edges |= {(y, y2), (y1, y2)}
    # x: neighbours 12..14 of Q_2, nothing else
    edges |= {(x, v) for v in (12, 13, 14)}
    # Q_2 and the rest of Q_1 get some crossing edges, but never into Q_0 from y's
    edges |= {(u, v) for u in range(10, 12) for v in range(0, 6)}
    return LabeledGraph.from_edges(18, edges), q, (x, y, y1, y2)


def test_configuration_proof_style():
    g, q, (x, y, y1, y2) = _proof_style_instance()
    psi = Psi(DICHO.beta, "sqrt")
    conf = find_configuration(g, q, 0, psi)
    assert conf is not None
    assert check_configuration(g, q, DICHO, conf.to_json()) == []
    # the proof's quadruple itself passes the independent recheck
    assert check_configuration(g, q, DICHO, {"x": x, "y": [y, y1, y2], "i": 0, "i_prime": 1,
                                             "psi": "sqrt"}) == []
    best = find_any_configuration(g, q, DICHO.beta)
    assert best.psi == "sqrt"


def test_configuration_recheck_catches_tampering():
    g, q, (x, y, y1, y2) = _proof_style_instance()
    bad = {"x": x, "y": [y, y1, 0], "i": 0, "i_prime": 0, "psi": "sqrt"}
    assert check_configuration(g, q, DICHO, bad)


# ------------------------------------------------------------- A^i and pairs


def oracle_a_set(g, q, i, beta):
    cls = members(q.classes[i])
    bn = Fraction(beta) * g.n
    return {x for x in cls
            if sum(1 for y in cls if y != x and not g.has_edge(x, y)) >= bn
            and sum(1 for y in cls if g.has_edge(x, y)) >= bn}


def test_a_set_examples():
    g = LabeledGraph.complete(30)
    q = OrderedPartition.balanced(30, 4)
    assert all(a_set(g, q, i, Fraction(1, 100)) == 0 for i in range(3))
    h = random_graph(30, 0.5, 3)
    # βn > |Q_i|
    assert all(a_set(h, q, i, Fraction(1, 2)) == 0 for i in range(3))


def test_a_set_brute_filter():
    rng = random.Random(8)
    for _ in range(30):
        n = rng.randint(10, 40)
        g = random_graph(n, rng.random(), rng)
        q = OrderedPartition.balanced(n, rng.choice([4, 5]))
        beta = Fraction(rng.randint(1, 20), 100)
        for i in range(len(q.classes)):
            assert members(a_set(g, q, i, beta)) == oracle_a_set(g, q, i, beta)


def oracle_pair_class(g, q, x, y, j, gamma):
    cls = members(q.classes[j]) - {x, y}
    gn = Fraction(gamma) * g.n
    common_non = {w for w in cls if not g.has_edge(x, w) and not g.has_edge(y, w)}
    a = {w for w in cls if g.has_edge(x, w) and not g.has_edge(y, w)}
    b = {w for w in cls if g.has_edge(y, w) and not g.has_edge(x, w)}
    if len(common_non) <= gn:
        return IRREGULAR
    if len(a) + len(b) > 3 * gn and min(len(a), len(b)) <= gn:
        return ASYMMETRIC
    if len(a) + len(b) <= 3 * gn:
        return IDENTICAL
    return None


def test_pair_class_examples():
    n = 20
    q = OrderedPartition.from_lists(4, [list(range(0, 4)), list(range(4, 14)), list(range(14, 20))])
    gamma = Fraction(1, 20)  # γn = 1
    # identical neighbourhoods on Q_1, with 5 common non-neighbours
    g = graph_with_nonedges(n, [(x, v) for x in (0, 1) for v in range(9, 14)])
    assert pair_class(g, q, 0, 1, 1, gamma) == IDENTICAL
    # jointly adjacent to all of Q_1
    assert pair_class(LabeledGraph.complete(n), q, 0, 1, 1, gamma) == IRREGULAR
    # N*(x,y) empty, N*(y,x) of size 4 = 4γn
    g = graph_with_nonedges(n, [(0, v) for v in range(4, 14)] + [(1, v) for v in range(8, 14)])
    assert pair_class(g, q, 0, 1, 1, gamma) == ASYMMETRIC


def test_pair_class_matches_oracle():
    rng = random.Random(21)
    for _ in range(300):
        n = rng.randint(8, 30)
        g = random_graph(n, rng.random(), rng)
        q = OrderedPartition.balanced(n, 4)
        x, y = rng.sample(range(n), 2)
        j = rng.randrange(3)
        gamma = Fraction(rng.randint(1, 10), 100)
        assert pair_class(g, q, x, y, j, gamma) == oracle_pair_class(g, q, x, y, j, gamma)


def test_identical_implies_both_light():
    # Identical at j gives |N*_j(x,y)| + |N*_j(y,x)| <= 3γn, so A3 with z = y when α >= 3γ
    rng = random.Random(4)
    seen = 0
    for _ in range(400):
        n = rng.randint(10, 30)
        g = random_graph(n, rng.choice([0.1, 0.5, 0.9]), rng)
        q = OrderedPartition.balanced(n, 4)
        gamma = Fraction(1, 10)
        alpha = 3 * gamma
        x, y = rng.sample(range(n), 2)
        for j in range(3):
            if pair_class(g, q, x, y, j, gamma) == IDENTICAL:
                seen += 1
                assert is_i_light(g, q, x, j, alpha) is not None
                assert is_i_light(g, q, y, j, alpha) is not None
    assert seen > 10


# ---------------------------------------------------------------- class sets


def oracle_class_sets(g, q, i):
    """networkx recount of (C, C_high, B_high, C_low, B_low, C_0)."""
    cls = members(q.classes[i])
    comp = nx.complement(to_nx(g)).subgraph(cls)
    n, k = g.n, q.k
    C, CH, CL, C0 = set(), set(), set(), set()
    for part in nx.connected_components(comp):
        h = comp.subgraph(part)
        m = len(part)
        if m == 1:
            C0 |= part
            continue
        if m == 3 and h.number_of_edges() == 3:
            C.add(min(part))
            CL.add(min(part))
            continue
        hub = [v for v in part if h.degree(v) == m - 1]
        assert h.number_of_edges() == m - 1 and hub
        centre = min(hub)
        C.add(centre)
        threshold = Fraction(n) ** Fraction(2 * k * k - 1, 2 * k * k) / (200 * k * k)
        # float power is enough here away from the boundary
        (CH if m >= threshold else CL).add(centre)
    BH = {v for v in cls if any(not g.has_edge(v, c) for c in CH if c != v)}
    BL = {v for v in cls if any(not g.has_edge(v, c) for c in CL if c != v)}
    return C, CH, BH, CL, BL, C0


def test_class_sets_all_isolated():
    g = LabeledGraph.complete(12)
    q = OrderedPartition.balanced(12, 4)
    s = class_sets(g, q, 1)
    assert s.c_0 == q.classes[1]
    assert s.c == s.c_high == s.b_high == s.c_low == s.b_low == 0


def test_class_sets_giant_star():
    # Q_1 = 0..29, complement a star centred at 3; at n = 40 every star of order >= 2 is high
    n = 40
    q = OrderedPartition.from_lists(4, [list(range(30, 35)), list(range(30)), list(range(35, 40))])
    g = graph_with_nonedges(n, [(3, v) for v in range(30) if v != 3])
    assert order_is_high(30, n, 4)
    s = class_sets(g, q, 1)
    assert s.c_high == 1 << 3
    assert s.b_high == q.classes[1] & ~(1 << 3)
    assert s.c_low == s.b_low == s.c_0 == 0


def test_order_threshold_exact():
    # (200 k^2 m)^{2k^2} >= n^{2k^2 - 1}
    for k in (4, 5):
        e = 2 * k * k
        for n in (10, 100, 10**6, 10**40):
            for m in (1, 2, 5):
                assert order_is_high(m, n, k) == ((200 * k * k * m) ** e >= n ** (e - 1))
    assert not order_is_high(2, 10**60, 4)


def test_class_sets_mixed_matches_oracle():
    n = 24
    q = OrderedPartition.from_lists(4, [list(range(0, 16)), list(range(16, 20)), list(range(20, 24))])
    # complement on Q_0: star 0-{1,2,3}, triangle 4,5,6, edge 7-8, isolated 9..15
    missing = [(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (5, 6), (7, 8)]
    g = graph_with_nonedges(n, missing)
    s = class_sets(g, q, 0)
    got = tuple(members(m) for m in (s.c, s.c_high, s.b_high, s.c_low, s.b_low, s.c_0))
    assert got == oracle_class_sets(g, q, 0)
    union = 0
    for part in s.parts():
        assert part & union == 0
        union |= part
    # C_high, B_high, C_low, B_low, C_0 cover Q_i exactly
    assert union == q.classes[0]
    assert s.to_json()["C_0"] == list(range(9, 16))


def test_class_sets_random_stars_and_triangles():
    rng = random.Random(12)
    for _ in range(25):
        q = OrderedPartition.balanced(rng.randint(12, 40), 6)
        g = random_template(q, seed=rng.getrandbits(32))
        s = class_sets(g, q, 0)
        got = tuple(members(m) for m in (s.c, s.c_high, s.b_high, s.c_low, s.b_low, s.c_0))
        assert got == oracle_class_sets(g, q, 0)


def test_class_sets_reject_k4_complement():
    n = 12
    q = OrderedPartition.balanced(n, 4)
    g = graph_with_nonedges(n, list(itertools.combinations(range(4), 2)))
    with pytest.raises(DecompositionError) as exc:
        class_sets(g, q, 0)
    assert exc.value.component == [0, 1, 2, 3]
    a, w, reason = assign_a_class(g, q)
    assert a is None and w is None and "class sets undefined" in reason


def test_y_set_cases():
    n = 30
    q = OrderedPartition.from_lists(4, [list(range(0, 20)), list(range(20, 25)), list(range(25, 30))])
    beta = Fraction(1, 2)  # βn = 15: nothing is in A^i
    g = LabeledGraph.complete(n)
    assert y_set(g, q, 0, beta) == q.classes[0]
    # two stars of three vertices, centres 5 and 2, plus a single edge: tie goes to centre 2
    g = graph_with_nonedges(n, [(5, 6), (5, 7), (2, 3), (2, 4), (10, 11)])
    y = members(y_set(g, q, 0, beta))
    assert y == (set(range(20)) - {2, 3, 4, 5, 6, 7, 10, 11}) | {3, 4}
    # a unique largest star wins regardless of labels
    g = graph_with_nonedges(n, [(5, 6), (5, 7), (5, 8), (2, 3), (2, 4)])
    y = members(y_set(g, q, 0, beta))
    assert {6, 7, 8} <= y and not y & {2, 3, 4, 5}


def test_c_of():
    n = 24
    q = OrderedPartition.from_lists(4, [list(range(0, 16)), list(range(16, 20)), list(range(20, 24))])
    g = graph_with_nonedges(n, [(0, 1), (0, 2), (4, 5), (4, 6), (5, 6)])
    s = class_sets(g, q, 0)
    # stars of order 3 are high at n = 24, the triangle is low
    assert members(s.c_low) == {4}
    assert members(s.b_low) == {5, 6}
    assert members(c_of(g, s, 1 << 5)) == {4}
    assert c_of(g, s, 0) == 0
    with pytest.raises(ValueError):
        c_of(g, s, 1 << 1)


# -------------------------------------------------------------- (6,3)-forest


def brute_63(g, q):
    for i, j in itertools.combinations(range(len(q.classes)), 2):
        pool = sorted(members(q.classes[i] | q.classes[j]))
        for six in itertools.combinations(pool, 6):
            h = to_nx(g).subgraph(six)
            if nx.is_forest(h) and max(d for _, d in h.degree()) <= 2 \
                    and nx.number_connected_components(h) <= 3:
                return True
    return False


def test_63_forest_examples():
    n = 12
    q = OrderedPartition.from_lists(4, [list(range(0, 3)), list(range(3, 6)), list(range(6, 12))])
    # three disjoint edges across Q_1 and Q_2 with nothing else among the six
    g = LabeledGraph.from_edges(n, [(3, 6), (4, 7), (5, 8)])
    i, j, six = has_63_forest(g, q)
    assert len(six) == 6
    assert has_63_forest(LabeledGraph.complete(n), q) is None


def test_63_forest_matches_brute():
    rng = random.Random(63)
    hits = 0
    for _ in range(60):
        n = rng.randint(6, 14)
        g = random_graph(n, rng.choice([0.5, 0.8, 0.9]), rng)
        q = OrderedPartition.balanced(n, rng.choice([4, 5]))
        got = has_63_forest(g, q)
        assert (got is not None) == brute_63(g, q)
        if got:
            hits += 1
            i, j, six = got
            h = to_nx(g).subgraph(six)
            assert set(six) <= members(q.classes[i] | q.classes[j])
            assert nx.is_forest(h) and nx.number_connected_components(h) <= 3
    assert 0 < hits < 60


# ------------------------------------------------------------- T* and beta


def test_tstar_area():
    import math
    for n in range(2, 200):
        a = tstar_area(n)
        assert 2**a >= n ** (40 * n) > 2 ** (a - 1)
        assert a == math.ceil(40 * n * math.log2(n)) or abs(40 * n * math.log2(n) - round(40 * n * math.log2(n))) < 1e-9
    assert tstar_area(1) == 0
    assert tstar_area(2) == 80


def test_tstar_vacuous_at_desk_scale():
    g = LabeledGraph(40, [0] * 40)  # every crossing pair is empty
    q = OrderedPartition.balanced(40, 6)
    assert tstar_member(g, q)
    assert any("T* membership is automatic" in r for r in regime_report(40, q, DICHO))


def test_prop_beta():
    n = 20
    q = OrderedPartition.balanced(n, 4)
    assert tuple(prop_beta_check(LabeledGraph.complete(n), q, Fraction(1, 10))) == (True, True, True)
    g = graph_with_nonedges(n, list(itertools.combinations(range(4), 2)))
    assert prop_beta_check(g, q, Fraction(1, 10)).i_ok is False
    rng = random.Random(2)
    for _ in range(10):
        q6 = OrderedPartition.balanced(40, 6)
        t = random_template(q6, seed=rng.getrandbits(32))
        assert tuple(prop_beta_check(t, q6, Fraction(1, 2))) == (True, True, True)


# ----------------------------------------------------------------- classify


def test_classify_pure_template():
    q = OrderedPartition.balanced(30, 5)
    g = random_template(q, seed=5)
    from islab.partitions import local_improve
    q = local_improve(g, q)
    v = classify_graph(g, q, constants_for("dichotomy", 5))
    assert v.f_class in (T_Q, F1)
    c = LabeledGraph.complete(12)
    v = classify_graph(c, OrderedPartition.balanced(12, 4), DICHO)
    assert v.f_class == T_Q and v.a_class is None


def test_classify_preconditions():
    g = LabeledGraph.complete(8)
    q = OrderedPartition.balanced(8, 4)
    with pytest.raises(ValueError):
        classify_graph(g, q, constants_for("dichotomy", 5))
    h = graph_with_nonedges(8, [(0, 1), (0, 2)])  # vertex 0 would rather sit elsewhere
    q = OrderedPartition.from_lists(4, [[0, 1, 2], [3, 4, 5], [6, 7]])
    assert not is_locally_optimal(h, q)
    with pytest.raises(PreconditionError) as exc:
        classify_graph(h, q, DICHO)
    assert exc.value.clause == "locally optimal"


def test_classify_block_instance_is_configuration():
    for idx in range(6, 6 + 7 * 6, 7):
        kind, cname, g, q = classifier_instance(idx, 1000 + idx)
        assert kind == "independent_block"
        c = constants_for(cname, 4)
        ok, broken = dichotomy_holds(g, q, c)
        assert ok and len(broken) == 1
        v = classify_graph(g, q, c)
        if broken != [0]:
            assert v.f_class == F1 and v.f1_kind == "i"
            assert v.witness["i"] == broken[0]


def test_classify_half_degree_reaches_f2():
    found = []
    for t in range(12):
        idx = 2 + 7 * t
        kind, cname, g, q = classifier_instance(idx, 500 + t)
        assert kind == "half_degree"
        v = classify_graph(g, q, COARSE)
        if v.f_class == F2:
            x, i = v.witness["x"], v.witness["i"]
            assert a_set(g, q, i, COARSE.beta) >> x & 1
            assert find_doubly_light(g, q, COARSE.alpha) is None
            found.append(idx)
    assert found


def test_campaign_items_partition_property(campaign_items):
    kinds = set()
    for kind, cname, g, q in campaign_items:
        c = constants_for(cname, q.k)
        v = classify_graph(g, q, c)
        kinds.add(v.f_class)
        assert v.f_class in (T_Q, F1, F2, F3)
        assert (v.f1_kind is not None) == (v.f_class == F1)
        if v.a_class is not None:
            assert v.f_class == F3 and v.tstar_member
            assert v.a_class in ("A1", "A2", "A3", "A4")
        assert recheck_verdict(g, q, c, v) == []
        again = classify_graph(g, q, c)
        assert again == v
        obj = json.loads(v.to_json(g))
        assert set(obj) == {"graph", "f_class", "f1_kind", "a_class", "a_reason", "tstar_member",
                            "witnesses", "vacuous_thresholds"}
        if cname == "dichotomy":
            assert dichotomy_holds(g, q, c)[0]
    assert len(kinds) >= 3


def test_recheck_rejects_bad_witnesses():
    g = LabeledGraph.complete(12)
    q = OrderedPartition.balanced(12, 4)
    assert recheck_verdict(g, q, DICHO, ClassVerdict(F2, witness={"x": 0, "i": 0}))
    assert recheck_verdict(g, q, DICHO, ClassVerdict(
        F1, "ii", {"x": 0, "i": 0, "j": 0, "rule_i": "A2", "z_i": None, "rule_j": "A2", "z_j": None}))
    assert recheck_verdict(g, q, DICHO, ClassVerdict(
        F3, tstar_member=True, a_class="A3", a_witness={"i": 0, "j": 1, "vertices": [0, 1, 2, 3, 4, 5]}))
    # complement of Q_0 is a path on four vertices, which is no sun
    h = graph_with_nonedges(12, [(0, 1), (1, 2), (2, 3)])
    assert recheck_verdict(h, q, DICHO, ClassVerdict(T_Q))


def test_regime_report_flags():
    q = OrderedPartition.balanced(40, 4)
    rep = regime_report(40, q, DICHO)
    assert any(r.startswith("beta*n < 1") for r in rep)
    assert any("n/200k^2 < 1" in r for r in rep)
    strict = desk_constants(4, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))
    rep = regime_report(40, q, strict)
    assert not any(r.startswith("alpha*n < 1") for r in rep)
    assert not any(r.startswith("beta*n < 1") for r in rep)
