import itertools

import pytest
from hypothesis import given, settings

from coverreg.errors import DomainError, UndefinedInputError
from coverreg.graph import Graph, complete_graph, cycle_graph, minimal_vertex_covers, path_graph, star_triangle
from coverreg.ideals import (
    MonomialIdeal,
    add_vars,
    alexander_dual,
    colon_by,
    cover_ideal,
    has_linear_quotients,
    intersect,
    polarization_graph,
    polarize,
    stanley_reisner_facets,
    symbolic_power_by_intersection,
    symbolic_power_cover,
    symbolic_power_or_unit,
)

from conftest import graphs


def test_cover_ideal_of_c4():
    j = cover_ideal(cycle_graph(4))
    assert str(j) == "(x1*x3, x2*x4)"
    assert j.degree == 2


def test_symbolic_square_of_c4():
    j2 = symbolic_power_cover(cycle_graph(4), 2)
    assert j2.gens == ((2, 0, 2, 0), (1, 1, 1, 1), (0, 2, 0, 2))


def test_edgeless_conventions():
    g = Graph.from_edges(3, [])
    with pytest.raises(UndefinedInputError):
        cover_ideal(g)
    assert symbolic_power_or_unit(g, 2).is_unit


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=5, min_edges=1))
def test_symbolic_power_box_matches_intersection(g):
    for k in (1, 2, 3):
        assert symbolic_power_cover(g, k).gens == symbolic_power_by_intersection(g, k).gens


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6, min_edges=1))
def test_cover_ideal_is_minimal_covers(g):
    gens = {sum(e << v for v, e in enumerate(m)) for m in cover_ideal(g).gens}
    assert gens == set(minimal_vertex_covers(g))


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=4, min_edges=1))
def test_polarization_is_cover_ideal_of_gk(g):
    for k in (1, 2, 3):
        pol = polarize(symbolic_power_cover(g, k), widths=[k] * g.n)
        gk = polarization_graph(g, k)
        assert pol.vars == gk.labels
        assert pol.gens == cover_ideal(gk).gens


def test_polarization_graph_labels_and_edges():
    gk = polarization_graph(complete_graph(2), 2)
    assert gk.labels == ("x1_1", "x1_2", "x2_1", "x2_2")
    assert gk.edges() == [(0, 2), (0, 3), (1, 2)]


def test_arithmetic():
    v = ["a", "b", "c"]
    i = MonomialIdeal(v, [(1, 1, 0), (0, 1, 1), (1, 1, 1)])
    assert i.gens == ((1, 1, 0), (0, 1, 1))
    assert intersect(i, MonomialIdeal(v, [(0, 0, 1)])).gens == ((0, 1, 1),)
    assert intersect(i, MonomialIdeal(v, [(1, 0, 0)])).gens == ((1, 1, 0),)
    assert colon_by(i, (0, 1, 0)).gens == ((1, 0, 0), (0, 0, 1))
    assert add_vars(i, 0b100).gens == ((0, 0, 1), (1, 1, 0))
    assert (i * (1, 0, 0)).gens == ((2, 1, 0), (1, 1, 1))
    assert MonomialIdeal.from_json(i.to_json()) == i


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6, min_edges=1))
def test_alexander_dual_of_cover_ideal_is_edge_ideal(g):
    dual = alexander_dual(cover_ideal(g))
    edges = sorted(tuple(v for v in range(g.n) if m[v]) for m in dual.gens)
    assert edges == sorted(g.edges())
    assert alexander_dual(dual) == cover_ideal(g)


def test_stanley_reisner_facets_of_edge_ideal():
    edge_ideal = alexander_dual(cover_ideal(path_graph(3)))
    assert sorted(stanley_reisner_facets(edge_ideal)) == [0b010, 0b101]
    with pytest.raises(DomainError):
        alexander_dual(MonomialIdeal(["a"], [(2,)]))


def brute_linear_quotients(i):
    for order in itertools.permutations(i.gens):
        ok = True
        for t in range(1, len(order)):
            q = MonomialIdeal(i.vars, [tuple(max(a - b, 0) for a, b in zip(p, order[t])) for p in order[:t]])
            if any(sum(m) != 1 for m in q.gens):
                ok = False
                break
        if ok:
            return True
    return False


@pytest.mark.parametrize("g", [cycle_graph(4), cycle_graph(5), star_triangle(2), path_graph(4), complete_graph(4)])
@pytest.mark.parametrize("k", [1, 2])
def test_linear_quotients_against_permutations(g, k):
    i = symbolic_power_cover(g, k)
    verdict, order = has_linear_quotients(i)
    if len(i.gens) <= 7:
        assert (verdict == "yes") == brute_linear_quotients(i)
    if verdict == "yes":
        assert sorted(order) == list(range(len(i.gens)))


def test_linear_quotients_known_cases():
    assert has_linear_quotients(symbolic_power_cover(star_triangle(2), 2))[0] == "yes"
    assert has_linear_quotients(symbolic_power_cover(cycle_graph(4), 2))[0] == "no"
    assert has_linear_quotients(symbolic_power_cover(cycle_graph(4), 2), max_generators=2)[0] == "undecided"
