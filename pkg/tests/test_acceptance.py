"""Acceptance criteria 1-10. Each test prints one PASS/FAIL line with its timing."""

import time
from contextlib import contextmanager

import pytest

from coverreg.corpus import build_corpus, catalog_path
from coverreg.graph import (
    Graph,
    HalfInt,
    all_graphs,
    complete_graph,
    cycle_graph,
    encode_graph6,
    independent_sets,
    parse_graph6,
    star_triangle,
)
from coverreg.invariants import clique_partitions, cover_degree, gamma, gamma0, whisker
from coverreg.resolution import _pd_edge_ideal_cached, reg_cover, reg_symbolic_cover
from coverreg.verifier import check_graph, oracle_triangulation, run_suite, summarize

from conftest import ACCEPTANCE_LINES

EXPLAINED = ("hypothesis false:", "edgeless graph:", "cap: more than 10 edges")


@contextmanager
def criterion(number, title, budget=None):
    _pd_edge_ideal_cached.cache_clear()
    state = {"detail": ""}
    start = time.perf_counter()
    ok = False
    try:
        yield state
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        if budget is not None and elapsed >= budget:
            ok = False
            state["detail"] += f" over budget {budget}s"
        line = f"criterion {number} {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {title}: {state['detail'].strip()}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    if not ok:
        pytest.fail(line)


def evaluated_failures(records):
    return [r for r in records if r.failed]


def unexplained_skips(records):
    return [r for r in records if r.skipped and not r.skip_reason.startswith(EXPLAINED)]


@pytest.fixture(scope="module")
def catalog6():
    return build_corpus("catalog:connected_upto6")


def test_criterion_01_c4_golden():
    with criterion(1, "C4 golden set, both fields", budget=1.0) as st:
        c4 = cycle_graph(4)
        for field in ("Q", "F2"):
            assert reg_cover(c4, field) == 3
            assert reg_symbolic_cover(c4, 2, field) == 5
        assert gamma(c4) == HalfInt(4)
        assert gamma0(c4) == HalfInt(5)
        st["detail"] = "reg=3, reg^(2)=5, gamma=2, gamma0=5/2"


def test_criterion_02_degree_jump():
    with criterion(2, "six-vertex degree jump", budget=1.0) as st:
        edges = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]
        g = Graph.from_edges(6, edges)
        assert cover_degree(g) == 3
        assert cover_degree(g.with_edges(edges[1:])) == 4
        st["detail"] = "deg J(G)=3, deg J(G - x1x2)=4"


def test_criterion_03_full_suite(catalog6):
    with criterion(3, "T1-T20 on connected graphs with at most 6 vertices, kmax=2, Q", budget=600) as st:
        assert len(parse_lines(catalog_path("connected6"))) == 112
        records = run_suite(catalog6, 2, "Q")
        s = summarize(records)
        st["detail"] = f"graphs={len(catalog6)} " + " ".join(f"{k}={v}" for k, v in s.items())
        assert s["scheduled"] == s["evaluated"] + s["skipped"]
        assert evaluated_failures(records) == []
        assert unexplained_skips(records) == []
        ids = {r.check_id.rstrip("abcdef") for r in records if not r.skipped}
        assert ids == {f"T{i}" for i in range(1, 21)}


def test_criterion_04_k3_spot_suite():
    with criterion(4, "k=3 spot suite on connected graphs with at most 5 vertices", budget=900) as st:
        corpus = build_corpus("connected:1..5")
        checks = ["T2", "T4", "T6", "T8", "T11", "T12", "T14"]
        records = run_suite(corpus, 3, "Q", only=checks)
        s = summarize(records)
        st["detail"] = f"graphs={len(corpus)} " + " ".join(f"{k}={v}" for k, v in s.items())
        assert evaluated_failures(records) == []
        assert unexplained_skips(records) == []
        assert any(r.k == 3 and not r.skipped for r in records)


def test_criterion_05_claw_free_family():
    with criterion(5, "C3, C5 and star triangles with 2-3 triangles") as st:
        family = [cycle_graph(3), cycle_graph(5), star_triangle(2), star_triangle(3)]
        for g in family:
            d = cover_degree(g)
            for k in (1, 2, 3):
                assert reg_symbolic_cover(g, k) == k * d
            records = check_graph(g, 3, only=["T4", "T11"])
            t4 = [r for r in records if r.check_id == "T4"]
            t11 = [r for r in records if r.check_id == "T11"]
            if g == star_triangle(3):
                # three triangles on one apex contain a claw, so only the
                # Cameron-Walker equality applies to this member
                assert all(r.skip_reason == "hypothesis false: not claw-free" for r in t4)
                assert len(t11) == 3 and all(r.passed and r.tight for r in t11)
            else:
                assert len(t4) == 3 and all(r.passed and r.tight for r in t4)
        st["detail"] = f"{len(family)} graphs, k=1..3, reg = k deg (3-triangle member via T11)"


def test_criterion_06_whiskered_family():
    with criterion(6, "fully clique-whiskered graphs over K1, K2, P3, K3") as st:
        bases = {"K1": complete_graph(1), "K2": complete_graph(2), "P3": Graph.from_edges(3, [(0, 1), (1, 2)]), "K3": complete_graph(3)}
        count = 0
        for base in bases.values():
            for partition in clique_partitions(base):
                g = whisker(base, partition)
                for k in (1, 2):
                    assert reg_symbolic_cover(g, k) == k * base.n
                t2 = check_graph(g, 2, only=["T2"])
                assert all(r.passed and r.tight for r in t2)
                count += 1
        st["detail"] = f"{count} whiskered graphs, reg = k|V|, T2 tight"


def test_criterion_07_doubly_cm_family():
    with criterion(7, "doubly Cohen-Macaulay family") as st:
        family = [complete_graph(2), cycle_graph(5)] + [complete_graph(n) for n in range(3, 6)]
        for g in family:
            d = cover_degree(g)
            for k in (1, 2, 3):
                assert reg_symbolic_cover(g, k) == k * d
            t10 = check_graph(g, 3, only=["T10"])
            assert all(r.passed and r.tight for r in t10)
        st["detail"] = "K2, C5, K3..K5, k=1..3, reg = k deg"


def test_criterion_08_oracle_triangulation(catalog6):
    with criterion(8, "Hochster vs Taylor on J^(k) and on its polarization, k<=2") as st:
        records = oracle_triangulation(catalog6, 2, "Q")
        s = summarize(records)
        st["detail"] = " ".join(f"{k}={v}" for k, v in s.items())
        assert evaluated_failures(records) == []
        assert all(r.skip_reason.startswith("edgeless graph:") for r in records if r.skipped)
        assert s["evaluated"] > 0


def test_criterion_09_lemma_properties(catalog6):
    with criterion(9, "T13 and T14 over every independent set") as st:
        corpus = catalog6 + build_corpus("startriangles:2..3; whiskers:K1,K2,P3,K3")
        records = run_suite(corpus, 3, "Q", only=["T13", "T14"], golden=False)
        assert evaluated_failures(records) == []
        assert unexplained_skips(records) == []
        sets = sum(len(independent_sets(e.graph)) for e in corpus)
        st["detail"] = f"graphs={len(corpus)} independent sets={sets} records={len(records)} counterexamples=0"


def parse_lines(path):
    return [line for line in path.read_bytes().split(b"\n") if line]


def test_criterion_10_graph6_roundtrip():
    with criterion(10, "graph6 round trip on the 6-vertex catalogs") as st:
        lines = parse_lines(catalog_path("connected6"))
        for line in lines:
            g = parse_graph6(line)
            assert encode_graph6(g).encode() == line
            assert parse_graph6(encode_graph6(g)) == g
        every = all_graphs(6)
        for g in every:
            s = encode_graph6(g)
            assert encode_graph6(parse_graph6(s)) == s
        st["detail"] = f"{len(lines)} connected and {len(every)} total graphs"
