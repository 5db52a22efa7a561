"""First-match F-class and A-class assignment with a regime report."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import DecompositionError, GuardError, PreconditionError
from ..graph_core import LabeledGraph, bits, emit_graph6
from ..partitions import HierarchyConstants, OrderedPartition, f1_property, is_locally_optimal
from ..templates import is_k_template_on
from .light import Psi, a_set, find_any_configuration, find_doubly_light
from .sets import ClassSets, c_of, class_sets, has_63_forest, order_is_high

TRIPLE_GUARD = 10**7

T_Q = "T_Q"
F1 = "F1"
F2 = "F2"
F3 = "F3"


@dataclass(frozen=True)
class ClassVerdict:
    f_class: str
    f1_kind: str | None = None  # "i" (configuration) or "ii" (doubly light)
    witness: dict = field(default_factory=dict)
    tstar_member: bool | None = None
    a_class: str | None = None
    a_witness: dict | None = None
    a_reason: str | None = None
    vacuous_thresholds: tuple[str, ...] = ()

    def to_json(self, g: LabeledGraph | None = None) -> str:
        obj = {}
        if g is not None:
            obj["graph"] = emit_graph6(g)
        obj.update({
            "f_class": self.f_class,
            "f1_kind": self.f1_kind,
            "a_class": self.a_class,
            "a_reason": self.a_reason,
            "tstar_member": self.tstar_member,
            "witnesses": {"f": self.witness, "a": self.a_witness},
            "vacuous_thresholds": list(self.vacuous_thresholds),
        })
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def tstar_area(n: int) -> int:
    """Smallest integer A with A >= 40 n log2 n, i.e. 2^A >= n^(40n)."""
    if n <= 1:
        return 0
    p = n ** (40 * n)
    a = p.bit_length()
    return a - 1 if p == 1 << (a - 1) else a


def tstar_member(g: LabeledGraph, q: OrderedPartition) -> bool:
    """(F1) at ν = (40 n log n)^{1/2} / n."""
    return f1_property(g, q, min_area=tstar_area(g.n))


def regime_report(n: int, q: OrderedPartition, c: HierarchyConstants) -> tuple[str, ...]:
    """Thresholds that are vacuous or degenerate at this n."""
    k = q.k
    out = []
    if c.alpha * n < 1:
        out.append("alpha*n < 1: i-lightness needs a zero degree or an exact twin")
    for mode in c.psi_options:
        psi = Psi(c.beta, mode)
        if not psi.big_threshold_met(max(n - 1, 0), n, k):
            out.append(f"13*6^k*psi*n > n-1 at psi={psi.label()}: (C2)/(C3) unsatisfiable")
        if psi.squared * n < 1:
            out.append(f"psi^2*n < 1 at psi={psi.label()}: (C4) needs a zero degree")
    if c.beta * n < 1:
        out.append("beta*n < 1: A^i is every vertex with both in-class degrees positive")
    if c.gamma * n < 1:
        out.append("gamma*n < 1: pair classes compare against empty sets")
    if order_is_high(2, n, k):
        out.append("n^(1-1/2k^2)/200k^2 <= 2: every non-trivial star is high")
    elif not order_is_high(n, n, k):
        out.append("n^(1-1/2k^2)/200k^2 > n: no star is high")
    if 200 * k * k > n:
        out.append("n/200k^2 < 1: the A1 intersection must be empty")
    sizes = [cl.bit_count() for cl in q.classes]
    best = max((a * b for a, b in itertools.combinations(sizes, 2)), default=0)
    if best < max(tstar_area(n), 1):
        out.append("40n log n exceeds every class-pair area: T* membership is automatic")
    return tuple(out)


def _common_non(g: LabeledGraph, ys) -> int:
    m = g.full_mask
    for y in ys:
        m &= ~g.adj[y]
    for y in ys:
        m &= ~(1 << y)
    return m


def _triples(q: OrderedPartition, j: int):
    m = q.classes[j].bit_count()
    if m * (m - 1) * (m - 2) > TRIPLE_GUARD:
        raise GuardError("a_class.triples", f"{m} vertices in class {j}")
    return itertools.combinations(list(bits(q.classes[j])), 3)


def _a1(g: LabeledGraph, q: OrderedPartition, sets: list[ClassSets]) -> dict | None:
    n, k = g.n, q.k
    for i, j in itertools.permutations(range(len(q.classes)), 2):
        bl = sets[i].b_low
        if 2 * k * k * bl.bit_count() < n:
            continue
        for ys in _triples(q, j):
            if 200 * k * k * (_common_non(g, ys) & bl).bit_count() <= n:
                return {"i": i, "j": j, "y": list(ys)}
    return None


def _a2(g: LabeledGraph, q: OrderedPartition, sets: list[ClassSets]) -> dict | None:
    n, k = g.n, q.k
    for i, j in itertools.permutations(range(len(q.classes)), 2):
        bl = sets[i].b_low
        if 2 * k * k * bl.bit_count() < n:
            continue
        outside = q.classes[j] & ~sets[j].c
        for y1, y2 in itertools.combinations(list(bits(outside)), 2):
            pair_non = _common_non(g, (y1, y2))
            for y3 in bits(q.classes[j] & ~((1 << y1) | (1 << y2))):
                b = _common_non(g, (y1, y2, y3)) & bl
                if not c_of(g, sets[i], b) & pair_non:
                    return {"i": i, "j": j, "y": [y1, y2, y3]}
    return None


def assign_a_class(g: LabeledGraph, q: OrderedPartition, override_guards: bool = False):
    """(a_class, witness, reason); a_class is None when some class does not decompose."""
    try:
        sets = [class_sets(g, q, i) for i in range(len(q.classes))]
    except DecompositionError as exc:
        return None, None, f"class sets undefined: {exc}"
    w = _a1(g, q, sets)
    if w is not None:
        return "A1", w, None
    w = _a2(g, q, sets)
    if w is not None:
        return "A2", w, None
    f = has_63_forest(g, q, override_guards)
    if f is not None:
        return "A3", {"i": f[0], "j": f[1], "vertices": list(f[2])}, None
    return "A4", {}, None


def classify_graph(g: LabeledGraph, q: OrderedPartition, constants: HierarchyConstants,
                   override_guards: bool = False, recheck: bool = True) -> ClassVerdict:
    q.check_covers(g)
    if q.k != constants.k:
        raise ValueError(f"partition is for k={q.k}, constants for k={constants.k}")
    if not is_locally_optimal(g, q):
        raise PreconditionError("locally optimal", "Q admits an improving single-vertex move")
    regime = regime_report(g.n, q, constants)
    verdict = _classify(g, q, constants, regime, override_guards)
    if recheck:
        from .verify import recheck_verdict

        problems = recheck_verdict(g, q, constants, verdict)
        if problems:
            raise AssertionError(f"witness failed independent recheck: {problems}")
    return verdict


def _classify(g, q, c, regime, override_guards) -> ClassVerdict:
    tw = is_k_template_on(g, q)
    if tw is not None:
        return ClassVerdict(T_Q, witness=tw.to_json(), vacuous_thresholds=regime)
    conf = find_any_configuration(g, q, c.beta, c.psi_options, override_guards)
    if conf is not None:
        return ClassVerdict(F1, "i", conf.to_json(), vacuous_thresholds=regime)
    dl = find_doubly_light(g, q, c.alpha)
    if dl is not None:
        wit = {"x": dl.x, "i": dl.i, "j": dl.j,
               "rule_i": dl.wi.rule, "z_i": dl.wi.z, "rule_j": dl.wj.rule, "z_j": dl.wj.z}
        return ClassVerdict(F1, "ii", wit, vacuous_thresholds=regime)
    for x in range(g.n):
        i = q.class_of(x)
        if a_set(g, q, i, c.beta) >> x & 1:
            return ClassVerdict(F2, witness={"x": x, "i": i}, vacuous_thresholds=regime)
    member = tstar_member(g, q)
    if not member:
        return ClassVerdict(F3, tstar_member=False, vacuous_thresholds=regime,
                            a_reason="not in T*")
    a, w, reason = assign_a_class(g, q, override_guards)
    return ClassVerdict(F3, tstar_member=True, a_class=a, a_witness=w, a_reason=reason,
                        vacuous_thresholds=regime)


__all__ = ["ClassVerdict", "F1", "F2", "F3", "T_Q", "assign_a_class", "classify_graph",
           "regime_report", "tstar_area", "tstar_member"]
