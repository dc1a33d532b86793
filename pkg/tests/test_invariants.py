from fractions import Fraction

import pytest
from hypothesis import given, settings

from coverreg.errors import InvalidPartitionError, UndefinedInputError
from coverreg.graph import (
    Graph,
    HalfInt,
    complete_bipartite_graph,
    complete_graph,
    connected_graphs,
    cycle_graph,
    path_graph,
    popcount,
    star_graph,
    star_triangle,
)
from coverreg.invariants import (
    clique_partitions,
    cover_degree,
    gamma,
    gamma0,
    is_1_well_covered,
    is_cameron_walker,
    is_cameron_walker_structural,
    is_cohen_macaulay,
    is_doubly_cm,
    is_well_covered,
    whisker,
    whisker_structure,
)

from conftest import graphs


def brute_gamma(g, allow_isolated):
    best = None
    for a in range(1 << g.n):
        if not g.is_independent(a):
            continue
        rest = g.vertex_mask & ~g.closed_neighbors(a)
        h = g.induced(rest)
        ok = True
        for comp in h.components():
            if h.is_bipartite(comp) and not (allow_isolated and popcount(comp) == 1):
                ok = False
        if ok:
            v = Fraction(g.n + popcount(g.neighbors(a)) - popcount(a), 2)
            best = v if best is None else max(best, v)
    return best


def test_golden_gammas():
    assert gamma(cycle_graph(4)).to_fraction() == 2
    assert gamma0(cycle_graph(4)) == HalfInt(5)
    assert str(gamma0(cycle_graph(4))) == "5/2"
    assert gamma(cycle_graph(5)).to_fraction() == 3 == gamma0(cycle_graph(5)).to_fraction()
    assert gamma(complete_graph(2)).to_fraction() == 1 == gamma0(complete_graph(2)).to_fraction()


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_gamma_against_brute_force(g):
    assert gamma(g).to_fraction() == brute_gamma(g, False)
    assert gamma0(g).to_fraction() == brute_gamma(g, True)
    assert gamma(g) <= gamma0(g)


def test_degree_jump_after_edge_deletion():
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]
    g = Graph.from_edges(6, edges)
    assert cover_degree(g) == 3
    assert cover_degree(g.with_edges(edges[1:])) == 4


def test_well_covered_families():
    assert is_well_covered(cycle_graph(5)) and is_1_well_covered(cycle_graph(5))
    assert is_well_covered(cycle_graph(4)) and not is_1_well_covered(cycle_graph(4))
    assert not is_well_covered(path_graph(3))
    assert is_1_well_covered(complete_graph(3))


def test_cameron_walker_structural_agrees_on_catalog():
    for n in range(2, 7):
        for g in connected_graphs(n):
            assert is_cameron_walker(g) == is_cameron_walker_structural(g)


def test_cameron_walker_examples():
    assert is_cameron_walker(star_graph(3))
    assert is_cameron_walker(star_triangle(3))
    assert not is_cameron_walker(cycle_graph(4))
    with pytest.raises(UndefinedInputError):
        is_cameron_walker_structural(Graph.from_edges(3, [(0, 1)]))


def test_cohen_macaulay():
    assert is_cohen_macaulay(cycle_graph(5))
    assert not is_cohen_macaulay(cycle_graph(4))
    assert is_cohen_macaulay(path_graph(2))
    assert is_doubly_cm(cycle_graph(5))
    assert is_doubly_cm(complete_graph(2))
    assert not is_doubly_cm(cycle_graph(4))
    for n in range(2, 6):
        assert is_doubly_cm(complete_graph(n))
    assert not is_doubly_cm(complete_bipartite_graph(2, 2))
    with pytest.raises(UndefinedInputError):
        is_cohen_macaulay(Graph.from_edges(2, []))


def test_whisker_construction():
    tri = whisker(complete_graph(2), [0b11])
    assert tri.edges() == [(0, 1), (0, 2), (1, 2)]
    assert tri.labels[2] == "y1"
    with pytest.raises(InvalidPartitionError):
        whisker(path_graph(3), [0b101, 0b010])  # not a clique
    with pytest.raises(InvalidPartitionError):
        whisker(path_graph(3), [0b011])  # misses a vertex
    with pytest.raises(InvalidPartitionError):
        whisker(path_graph(3), [0b011, 0b110])


def test_clique_partitions_counts():
    assert len(clique_partitions(complete_graph(3))) == 5
    assert len(clique_partitions(path_graph(3))) == 3
    assert len(clique_partitions(complete_graph(4))) == 15


@pytest.mark.parametrize("base", [complete_graph(1), complete_graph(2), path_graph(3), complete_graph(3), cycle_graph(4)])
def test_whisker_structure_recognizes_all_partitions(base):
    for partition in clique_partitions(base):
        found = whisker_structure(whisker(base, partition))
        assert found is not None
        y, parts = found
        assert popcount(y) == len(parts)


def test_whisker_structure_rejects():
    assert whisker_structure(cycle_graph(4)) is None
    assert whisker_structure(cycle_graph(5)) is None
