"""Theorem suite: replays the regularity bounds and identities on a corpus.

Every check is an exact comparison between two computed values. One
:class:`CheckRecord` is produced per scheduled (check, graph, k) triple;
triples whose hypothesis fails or which exceed a cap are kept as skipped
records with a reason, so nothing disappears silently.

Check tags:

====  =====================================================================
T1    reg J <= n - alpha_2
T2    reg J^(k) <= (k-1) gamma + n - alpha_2
T3    reg J^(k) <= (k-1) deg J + n - alpha_2  (bipartite / well-covered / claw-free)
T4    reg J^(k) = k deg J  (claw-free, only 3- and 5-cycles)
T5    reg J(G^pi)^(k) = k |V(base)|  (fully clique-whiskered)
T6    reg J^(k) <= 2 gamma_0 + reg J^(k-2)  (k >= 2, reg J^(0) = 0)
T7    odd k: reg J^(k) <= (k-1) gamma_0 + reg J;
      even k: reg J^(k) <= (k-2) gamma_0 + reg J^(2)
T8    reg J^(k) <= k gamma_0  (k even)
T9    1-well-covered: a) gamma_0 = deg J  b) gamma = deg J  c) reg J^(k) = k deg J, k even
T10   doubly Cohen-Macaulay: reg J^(k) = k deg J
T11   Cameron-Walker: reg J^(k) = k deg J
T12   reg J^(k) >= k deg J
T13   n + |N(A)| - |A| <= 2 gamma_0 over all independent A
T14   J^(k) + (A) = u^k J(G - N[A])^(k) + (A) over all independent A
T15   reg J(G - N[A])^(k) + k |N(A)| <= reg J^(k) over all independent A
      (J of an edgeless remainder is the unit ideal, reg 0)
T16   claw-free: deg J(H) <= deg J(G) over spanning subgraphs H
T17   Cameron-Walker: a) G - N[v] Cameron-Walker  b) deg J >= n/2  c) gamma = deg J
T18   reg J^(k) <= (k-1) gamma + max_H reg J(H) over spanning subgraphs H
T19   splitting bound over W = V(G) is at least reg J^(k)
T20   golden values on C4 and on the six-vertex claw example
====  =====================================================================
"""

from __future__ import annotations

import csv
import io
import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .corpus import CorpusEntry
from .errors import ResourceLimitError
from .graph import (
    Graph,
    HalfInt,
    bits,
    cycle_graph,
    cycle_lengths,
    independent_sets,
    is_claw_free,
    popcount,
    star_packing_number,
)
from .ideals import (
    MonomialIdeal,
    add_vars,
    cover_ideal,
    has_linear_quotients,
    polarize,
    symbolic_power_cover,
)
from .invariants import (
    cover_degree,
    gamma0_with_witness,
    gamma_with_witness,
    is_1_well_covered,
    is_cameron_walker,
    is_doubly_cm,
    is_well_covered,
    whisker_structure,
)
from .limits import Caps, get_caps, set_caps
from .linalg import normalize_field
from .resolution import reg_from_betti, reg_symbolic_cover, reg_upper_bound_split

CSV_COLUMNS = [
    "check_id", "graph6", "n", "k", "field", "lhs", "rhs",
    "relation", "pass", "tight", "skip_reason", "witness",
]

DEGREE_JUMP_EDGES = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]


def fmt(value) -> str:
    """Exact rendering: integers plainly, halves as ``p/2``."""
    if value is None:
        return ""
    if isinstance(value, HalfInt):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


@dataclass
class CheckRecord:
    check_id: str
    graph_id: str
    n: int
    k: int
    lhs: object = None
    rhs: object = None
    relation: str = "<="
    passed: bool | None = None
    tight: bool | None = None
    skip_reason: str = ""
    witness: dict = field(default_factory=dict)
    field: str = "Q"

    @property
    def skipped(self) -> bool:
        return bool(self.skip_reason)

    @property
    def failed(self) -> bool:
        return self.passed is False

    def sort_key(self):
        m = re.fullmatch(r"T(\d+)(\w*)", self.check_id)
        head = (int(m.group(1)), m.group(2)) if m else (10**6, self.check_id)
        return head + (self.graph_id, self.k)

    def row(self) -> dict:
        return {
            "check_id": self.check_id,
            "graph6": self.graph_id,
            "n": self.n,
            "k": self.k,
            "field": self.field,
            "lhs": fmt(self.lhs),
            "rhs": fmt(self.rhs),
            "relation": self.relation,
            "pass": "" if self.passed is None else str(self.passed).lower(),
            "tight": "" if self.tight is None else str(self.tight).lower(),
            "skip_reason": self.skip_reason,
            "witness": json.dumps(self.witness, sort_keys=True, separators=(",", ":")) if self.witness else "",
        }

    def to_json(self) -> dict:
        out = self.row()
        out["pass"] = self.passed
        out["tight"] = self.tight
        out["witness"] = self.witness
        return out


def _as_fraction(v) -> Fraction:
    return v.to_fraction() if isinstance(v, HalfInt) else Fraction(v)


def compare(lhs, rhs, relation: str) -> tuple[bool, bool]:
    a, b = _as_fraction(lhs), _as_fraction(rhs)
    ok = a <= b if relation == "<=" else a == b
    return ok, a == b


def _half(v: Fraction):
    """Render-friendly exact value: int when integral, else HalfInt."""
    return int(v) if v.denominator == 1 else HalfInt.from_fraction(v)


def _mask_labels(g: Graph, mask: int) -> list[str]:
    return [g.labels[v] for v in bits(mask)]


# ---------------------------------------------------------------------------
# per-graph cached quantities


class GraphContext:
    def __init__(self, g: Graph, field: str = "Q"):
        self.g = g
        self.field = normalize_field(field)
        self.graph_id = g.to_graph6()
        self._reg: dict[int, int] = {}

    @property
    def n(self) -> int:
        return self.g.n

    @cached_property
    def has_edges(self) -> bool:
        return self.g.num_edges > 0

    @cached_property
    def deg(self) -> int:
        return cover_degree(self.g)

    @cached_property
    def alpha2(self) -> int:
        return star_packing_number(self.g)

    @cached_property
    def gamma_pair(self):
        return gamma_with_witness(self.g)

    @cached_property
    def gamma0_pair(self):
        return gamma0_with_witness(self.g)

    @property
    def gamma(self) -> Fraction:
        return self.gamma_pair[0].to_fraction()

    @property
    def gamma0(self) -> Fraction:
        return self.gamma0_pair[0].to_fraction()

    def reg(self, k: int) -> int:
        """reg J(G)^(k) with reg J^(0) = 0."""
        if k == 0:
            return 0
        if k not in self._reg:
            self._reg[k] = reg_symbolic_cover(self.g, k, self.field)
        return self._reg[k]

    @cached_property
    def independent(self) -> list[int]:
        return independent_sets(self.g)

    @cached_property
    def claw_free(self) -> bool:
        return is_claw_free(self.g)

    @cached_property
    def cycles(self) -> set[int]:
        return cycle_lengths(self.g)

    @cached_property
    def cameron_walker(self) -> bool:
        return is_cameron_walker(self.g)

    @cached_property
    def one_well_covered(self) -> bool:
        return is_1_well_covered(self.g)

    @cached_property
    def doubly_cm(self) -> bool:
        if not self.has_edges or self.g.isolated_vertices():
            return False
        return is_doubly_cm(self.g, self.field)

    @cached_property
    def whiskers(self):
        return whisker_structure(self.g)

    @cached_property
    def spanning_subgraph_edges(self) -> list[list[tuple[int, int]]]:
        edges = self.g.edges()
        return [[e for t, e in enumerate(edges) if sub >> t & 1] for sub in range(1 << len(edges))]


def _reg_graph(g: Graph, k: int, field: str) -> int:
    return 0 if g.num_edges == 0 else reg_symbolic_cover(g, k, field)


def _embed(ideal: MonomialIdeal, keep: list[int], n: int, labels) -> MonomialIdeal:
    gens = []
    for gen in ideal.gens:
        m = [0] * n
        for t, v in enumerate(keep):
            m[v] = gen[t]
        gens.append(tuple(m))
    return MonomialIdeal(labels, gens)


# ---------------------------------------------------------------------------
# the checks; each returns a completed record


def _record(ctx: GraphContext, check_id: str, k: int, lhs, rhs, relation: str, **witness) -> CheckRecord:
    ok, tight = compare(lhs, rhs, relation)
    return CheckRecord(check_id, ctx.graph_id, ctx.n, k, lhs, rhs, relation, ok, tight, "", witness, ctx.field)


def _skip(ctx: GraphContext, check_id: str, k: int, reason: str) -> CheckRecord:
    return CheckRecord(check_id, ctx.graph_id, ctx.n, k, skip_reason=reason, field=ctx.field, relation="")


def t1(ctx, k):
    return _record(ctx, "T1", k, ctx.reg(1), ctx.n - ctx.alpha2, "<=", alpha2=ctx.alpha2)


def t2(ctx, k):
    rhs = (k - 1) * ctx.gamma + ctx.n - ctx.alpha2
    return _record(ctx, "T2", k, ctx.reg(k), _half(rhs), "<=", gamma=fmt(ctx.gamma), alpha2=ctx.alpha2)


def t3(ctx, k):
    classes = [name for name, flag in (
        ("bipartite", ctx.g.is_bipartite()),
        ("well_covered", is_well_covered(ctx.g)),
        ("claw_free", ctx.claw_free),
    ) if flag]
    if not classes:
        return _skip(ctx, "T3", k, "hypothesis false: not bipartite, well-covered or claw-free")
    rhs = (k - 1) * ctx.deg + ctx.n - ctx.alpha2
    return _record(ctx, "T3", k, ctx.reg(k), rhs, "<=", classes=classes)


def t4(ctx, k):
    if not ctx.claw_free:
        return _skip(ctx, "T4", k, "hypothesis false: not claw-free")
    if not ctx.cycles <= {3, 5}:
        return _skip(ctx, "T4", k, "hypothesis false: has a cycle of length other than 3 or 5")
    return _record(ctx, "T4", k, ctx.reg(k), k * ctx.deg, "=", cycles=sorted(ctx.cycles))


def t5(ctx, k):
    found = ctx.whiskers
    if found is None:
        return _skip(ctx, "T5", k, "hypothesis false: not fully clique-whiskered")
    y, parts = found
    base = ctx.n - popcount(y)
    return _record(ctx, "T5", k, ctx.reg(k), k * base, "=",
                   whiskers=_mask_labels(ctx.g, y), parts=[_mask_labels(ctx.g, p) for p in parts])


def t6(ctx, k):
    rhs = 2 * ctx.gamma0 + ctx.reg(k - 2)
    w = {"gamma0": fmt(ctx.gamma0), "reg_k_minus_2": ctx.reg(k - 2)}
    if k == 2:
        w["convention"] = "reg J^(0) = 0"
    return _record(ctx, "T6", k, ctx.reg(k), _half(rhs), "<=", **w)


def t7(ctx, k):
    if k % 2:
        rhs = (k - 1) * ctx.gamma0 + ctx.reg(1)
        part = "i"
    else:
        rhs = (k - 2) * ctx.gamma0 + ctx.reg(2)
        part = "ii"
    return _record(ctx, "T7", k, ctx.reg(k), _half(rhs), "<=", part=part, gamma0=fmt(ctx.gamma0))


def t8(ctx, k):
    return _record(ctx, "T8", k, ctx.reg(k), _half(k * ctx.gamma0), "<=", gamma0=fmt(ctx.gamma0))


def t9a(ctx, k):
    if not ctx.one_well_covered:
        return _skip(ctx, "T9a", k, "hypothesis false: not 1-well-covered")
    return _record(ctx, "T9a", k, _half(ctx.gamma0), ctx.deg, "=")


def t9b(ctx, k):
    if not ctx.one_well_covered:
        return _skip(ctx, "T9b", k, "hypothesis false: not 1-well-covered")
    return _record(ctx, "T9b", k, _half(ctx.gamma), ctx.deg, "=")


def t9c(ctx, k):
    if not ctx.one_well_covered:
        return _skip(ctx, "T9c", k, "hypothesis false: not 1-well-covered")
    return _record(ctx, "T9c", k, ctx.reg(k), k * ctx.deg, "=")


def t10(ctx, k):
    if not ctx.doubly_cm:
        return _skip(ctx, "T10", k, "hypothesis false: not doubly Cohen-Macaulay")
    return _record(ctx, "T10", k, ctx.reg(k), k * ctx.deg, "=")


def t11(ctx, k):
    if not ctx.cameron_walker:
        return _skip(ctx, "T11", k, "hypothesis false: not Cameron-Walker")
    ideal = symbolic_power_cover(ctx.g, k)
    verdict, _ = has_linear_quotients(ideal)
    return _record(ctx, "T11", k, ctx.reg(k), k * ctx.deg, "=", linear_quotients=verdict)


def t12(ctx, k):
    return _record(ctx, "T12", k, k * ctx.deg, ctx.reg(k), "<=")


def t13(ctx, k):
    g = ctx.g
    worst, arg = None, 0
    for a in ctx.independent:
        v = g.n + popcount(g.neighbors(a)) - popcount(a)
        if worst is None or v > worst:
            worst, arg = v, a
    return _record(ctx, "T13", k, worst, _half(2 * ctx.gamma0), "<=",
                   independent_sets=len(ctx.independent), argmax=_mask_labels(g, arg))


def delet_identity_holds(g: Graph, a: int, k: int) -> bool:
    """J(G)^(k) + (A) == u^k J(G - N[A])^(k) + (A), with J(edgeless) = (1)."""
    lhs = add_vars(symbolic_power_cover(g, k), a)
    nbrs = g.neighbors(a)
    keep = [v for v in range(g.n) if not g.closed_neighbors(a) >> v & 1]
    rest = g.induced(sum(1 << v for v in keep))
    if rest.num_edges:
        inner = _embed(symbolic_power_cover(rest, k), keep, g.n, g.labels)
    else:
        inner = MonomialIdeal.unit(g.labels)
    u_k = tuple(k * (nbrs >> v & 1) for v in range(g.n))
    rhs = add_vars(inner * u_k, a)
    return lhs.gens == rhs.gens


def t14(ctx, k):
    agree = [a for a in ctx.independent if delet_identity_holds(ctx.g, a, k)]
    bad = [a for a in ctx.independent if a not in set(agree)]
    w = {"counterexamples": [_mask_labels(ctx.g, a) for a in bad[:5]]} if bad else {}
    return _record(ctx, "T14", k, len(agree), len(ctx.independent), "=", **w)


def t15(ctx, k):
    g = ctx.g
    best, arg, units = None, 0, 0
    for a in ctx.independent:
        rest = g.delete(g.closed_neighbors(a))
        # an edgeless remainder has the unit ideal as cover ideal, reg 0
        units += rest.num_edges == 0
        v = _reg_graph(rest, k, ctx.field) + k * popcount(g.neighbors(a))
        if best is None or v > best:
            best, arg = v, a
    return _record(ctx, "T15", k, best, ctx.reg(k), "<=", argmax=_mask_labels(g, arg),
                   independent_sets=len(ctx.independent), unit_remainders=units)


def t16(ctx, k):
    if not ctx.claw_free:
        return _skip(ctx, "T16", k, "hypothesis false: not claw-free")
    if ctx.g.num_edges > get_caps().subgraph_edges:
        return _skip(ctx, "T16", k, f"cap: more than {get_caps().subgraph_edges} edges")
    best = max(cover_degree(ctx.g.with_edges(e)) for e in ctx.spanning_subgraph_edges)
    return _record(ctx, "T16", k, best, ctx.deg, "<=", subgraphs=len(ctx.spanning_subgraph_edges))


def t17a(ctx, k):
    if not ctx.cameron_walker:
        return _skip(ctx, "T17a", k, "hypothesis false: not Cameron-Walker")
    g = ctx.g
    good = sum(is_cameron_walker(g.delete(g.closed_neighbors(1 << v))) for v in range(g.n))
    return _record(ctx, "T17a", k, good, g.n, "=")


def t17b(ctx, k):
    if not ctx.cameron_walker:
        return _skip(ctx, "T17b", k, "hypothesis false: not Cameron-Walker")
    if ctx.g.isolated_vertices():
        return _skip(ctx, "T17b", k, "hypothesis false: has isolated vertices")
    return _record(ctx, "T17b", k, HalfInt(ctx.n), ctx.deg, "<=")


def t17c(ctx, k):
    if not ctx.cameron_walker:
        return _skip(ctx, "T17c", k, "hypothesis false: not Cameron-Walker")
    return _record(ctx, "T17c", k, _half(ctx.gamma), ctx.deg, "=")


def t18(ctx, k):
    if ctx.g.num_edges > get_caps().subgraph_edges:
        return _skip(ctx, "T18", k, f"cap: more than {get_caps().subgraph_edges} edges")
    best = max(_reg_graph(ctx.g.with_edges(e), 1, ctx.field) for e in ctx.spanning_subgraph_edges)
    rhs = (k - 1) * ctx.gamma + best
    return _record(ctx, "T18", k, ctx.reg(k), _half(rhs), "<=", max_subgraph_reg=best,
                   subgraph_reading="spanning edge-subgraphs")


def t19(ctx, k):
    ideal = symbolic_power_cover(ctx.g, k)
    bound = reg_upper_bound_split(ideal, ctx.g.vertex_mask, ctx.field)
    return _record(ctx, "T19", k, ctx.reg(k), bound, "<=", split_set="V(G)")


CHECKS = {
    "T1": t1, "T2": t2, "T3": t3, "T4": t4, "T5": t5, "T6": t6, "T7": t7, "T8": t8,
    "T9a": t9a, "T9b": t9b, "T9c": t9c, "T10": t10, "T11": t11, "T12": t12,
    "T13": t13, "T14": t14, "T15": t15, "T16": t16, "T17a": t17a, "T17b": t17b,
    "T17c": t17c, "T18": t18, "T19": t19,
}

# checks that only make sense when the cover ideal exists
NEEDS_EDGES = {
    "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9a", "T9b", "T9c",
    "T10", "T11", "T12", "T14", "T15", "T16", "T18", "T19",
}


def schedule(k_max: int, only: Iterable[str] | None = None) -> list[tuple[str, int]]:
    """(check, k) pairs scheduled per graph; k = 0 marks k-independent checks."""
    ks = range(1, k_max + 1)
    plan = [("T1", 1)]
    plan += [(c, k) for c in ("T2", "T3", "T4", "T5") for k in ks]
    plan += [("T6", k) for k in ks if k >= 2]
    plan += [("T7", k) for k in ks]
    plan += [("T8", k) for k in ks if k % 2 == 0]
    plan += [("T9a", 0), ("T9b", 0)] + [("T9c", k) for k in ks if k % 2 == 0]
    plan += [(c, k) for c in ("T10", "T11", "T12") for k in ks]
    plan += [("T13", 0)]
    plan += [("T14", k) for k in ks if k <= 3]
    plan += [("T15", k) for k in ks if k <= 2]
    plan += [("T16", 0), ("T17a", 0), ("T17b", 0), ("T17c", 0)]
    plan += [(c, k) for c in ("T18", "T19") for k in ks]
    if only is not None:
        wanted = set(only)
        plan = [(c, k) for c, k in plan if c in wanted or re.sub(r"[a-z]$", "", c) in wanted]
    return plan


def check_graph(g: Graph, k_max: int, field: str = "Q", only=None) -> list[CheckRecord]:
    ctx = GraphContext(g, field)
    records = []
    for check_id, k in schedule(k_max, only):
        if check_id in NEEDS_EDGES and not ctx.has_edges:
            records.append(_skip(ctx, check_id, k, "edgeless graph: cover ideal undefined"))
            continue
        try:
            records.append(CHECKS[check_id](ctx, k))
        except ResourceLimitError as exc:
            records.append(_skip(ctx, check_id, k, f"cap: {exc}"))
    return records


def golden_records(field: str = "Q") -> list[CheckRecord]:
    """T20: C4 values and the claw example where deleting an edge raises deg J."""
    c4 = GraphContext(cycle_graph(4), field)
    claw = Graph.from_edges(6, DEGREE_JUMP_EDGES)
    h = claw.with_edges(DEGREE_JUMP_EDGES[1:])
    claw_ctx = GraphContext(claw, field)
    h_ctx = GraphContext(h, field)
    return [
        _record(c4, "T20a", 1, c4.reg(1), 3, "=", quantity="reg J(C4)"),
        _record(c4, "T20b", 2, c4.reg(2), 5, "=", quantity="reg J(C4)^(2)"),
        _record(c4, "T20c", 0, _half(c4.gamma), 2, "=", quantity="gamma(C4)"),
        _record(c4, "T20d", 0, _half(c4.gamma0), HalfInt(5), "=", quantity="gamma_0(C4)"),
        _record(claw_ctx, "T20e", 0, claw_ctx.deg, 3, "=", quantity="deg J(G)"),
        _record(h_ctx, "T20f", 0, h_ctx.deg, 4, "=", quantity="deg J(G - x1x2)"),
    ]


def _worker_init(caps: Caps) -> None:
    set_caps(caps)


def _worker(args):
    g, k_max, field, only = args
    return check_graph(g, k_max, field, only)


def run_suite(corpus, k_max: int = 2, field: str = "Q", caps: Caps | None = None,
              threads: int = 1, only=None, golden: bool = True) -> list[CheckRecord]:
    """Run every scheduled check over the corpus; records sorted by (check, graph, k)."""
    field = normalize_field(field)
    graphs = [e.graph if isinstance(e, CorpusEntry) else e for e in corpus]
    saved = get_caps()
    if caps is not None:
        set_caps(caps)
    try:
        jobs = [(g, k_max, field, only) for g in graphs]
        if threads > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(threads, initializer=_worker_init, initargs=(get_caps(),)) as pool:
                batches = list(pool.map(_worker, jobs))
        else:
            batches = [_worker(j) for j in jobs]
        records = [r for batch in batches for r in batch]
        if golden and (only is None or "T20" in set(only)):
            records += golden_records(field)
    finally:
        set_caps(saved)
    records.sort(key=CheckRecord.sort_key)
    return records


# ---------------------------------------------------------------------------
# oracle cross-checks


def oracle_triangulation(corpus, k_max: int = 2, field: str = "Q", max_covers: int = 15) -> list[CheckRecord]:
    """Hochster/Terai on G_k against Taylor on J^(k) and on its polarization.

    ORACLEa compares Hochster with Taylor on J(G)^(k); ORACLEb compares
    Hochster with Taylor on the polarized ideal.
    """
    field = normalize_field(field)
    records = []
    for entry in corpus:
        g = entry.graph if isinstance(entry, CorpusEntry) else entry
        ctx = GraphContext(g, field)
        for k in range(1, k_max + 1):
            if not ctx.has_edges:
                records += [_skip(ctx, c, k, "edgeless graph: cover ideal undefined") for c in ("ORACLEa", "ORACLEb")]
                continue
            covers = len(cover_ideal(g).gens)
            if covers > max_covers:
                records += [_skip(ctx, c, k, f"more than {max_covers} minimal vertex covers") for c in ("ORACLEa", "ORACLEb")]
                continue
            ideal = symbolic_power_cover(g, k)
            for check_id, target in (("ORACLEa", ideal), ("ORACLEb", polarize(ideal))):
                try:
                    taylor = reg_from_betti(target, field)
                except ResourceLimitError as exc:
                    records.append(_skip(ctx, check_id, k, f"cap: {exc}"))
                    continue
                records.append(_record(ctx, check_id, k, ctx.reg(k), taylor, "=", generators=len(target.gens)))
    records.sort(key=CheckRecord.sort_key)
    return records


def field_coherence(corpus, k_max: int = 2) -> list[dict]:
    """Graphs where reg J^(k) differs between Q and GF(2); reported, not asserted."""
    findings = []
    for entry in corpus:
        g = entry.graph if isinstance(entry, CorpusEntry) else entry
        if not g.num_edges:
            continue
        for k in range(1, k_max + 1):
            q = reg_symbolic_cover(g, k, "Q")
            f2 = reg_symbolic_cover(g, k, "F2")
            if q != f2:
                findings.append({"graph6": g.to_graph6(), "k": k, "Q": q, "F2": f2})
    return findings


# ---------------------------------------------------------------------------
# reports


def summarize(records: list[CheckRecord]) -> dict:
    out = {"scheduled": len(records), "evaluated": 0, "skipped": 0, "failed": 0, "tight": 0}
    for r in records:
        if r.skipped:
            out["skipped"] += 1
        else:
            out["evaluated"] += 1
            out["failed"] += r.failed
            out["tight"] += bool(r.tight)
    return out


def write_csv(records: list[CheckRecord], stream) -> None:
    writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(r.row())


def to_csv(records: list[CheckRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()


def to_json(records: list[CheckRecord]) -> str:
    payload = {"summary": summarize(records), "records": [r.to_json() for r in records]}
    return json.dumps(payload, sort_keys=True, indent=1)
