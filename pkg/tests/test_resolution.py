import pytest
from hypothesis import given, settings, strategies as st

from coverreg.errors import ResourceLimitError, UndefinedInputError
from coverreg.graph import Graph, complete_graph, cycle_graph, path_graph, star_triangle
from coverreg.ideals import MonomialIdeal, alexander_dual, cover_ideal, polarize, symbolic_power_cover
from coverreg.limits import caps_override
from coverreg.resolution import (
    hochster_betti,
    homology_of_faces,
    pd_edge_ideal,
    reduced_betti_numbers,
    reg_cover,
    reg_from_betti,
    reg_ideal,
    reg_symbolic_cover,
    reg_upper_bound_split,
    symbolic_cover_betti,
    taylor_betti,
)

from conftest import graphs

RP2 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2), (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]


def closure(facets):
    faces = {0}
    for f in facets:
        m = sum(1 << (v - 1) for v in f)
        sub = m
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & m
    return sorted(faces)


def test_homology_of_small_complexes():
    assert homology_of_faces([0]) == {-1: 1}
    assert homology_of_faces([0, 1]) == {}
    assert homology_of_faces([0, 1, 2]) == {0: 1}
    sphere = closure([(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    assert homology_of_faces(sphere) == {2: 1}


def test_projective_plane_depends_on_field():
    faces = closure(RP2)
    assert homology_of_faces(faces, "Q") == {}
    assert homology_of_faces(faces, "F2") == {1: 1, 2: 1}


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7), st.data())
def test_direct_and_reduced_homology_agree(g, data):
    w = data.draw(st.integers(1, max(1, g.vertex_mask)))
    w &= g.vertex_mask
    if w == 0:
        return
    for field in ("Q", "F2"):
        assert reduced_betti_numbers(g, w, field) == reduced_betti_numbers(g, w, field, optimized=True)


def test_independence_complex_of_c5_is_a_circle():
    assert reduced_betti_numbers(cycle_graph(5)) == [0, 0, 1, 0, 0, 0]


@pytest.mark.parametrize("field", ["Q", "F2"])
def test_golden_regularities(field):
    assert reg_cover(cycle_graph(4), field) == 3
    assert reg_symbolic_cover(cycle_graph(4), 2, field) == 5
    assert reg_symbolic_cover(cycle_graph(5), 2, field) == 6
    assert reg_symbolic_cover(complete_graph(2), 3, field) == 3


def test_edge_ideal_betti_hochster_vs_taylor():
    for g in (cycle_graph(4), cycle_graph(5), path_graph(5), star_triangle(2)):
        edge_ideal = alexander_dual(cover_ideal(g))
        h = hochster_betti(g)
        t = taylor_betti(edge_ideal).to_quotient()
        assert h.entries == t.entries
        assert h.pd() == pd_edge_ideal(g)


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=5, min_edges=1))
def test_symbolic_betti_tables_agree(g):
    for k in (1, 2):
        i = symbolic_power_cover(g, k)
        if len(i.gens) > 12:
            continue
        h = symbolic_cover_betti(g, k)
        assert h.entries == taylor_betti(i).entries
        assert h.reg() == reg_symbolic_cover(g, k)
        assert reg_from_betti(polarize(i)) == h.reg()


monomial_ideals = st.integers(1, 4).flatmap(lambda n: st.lists(
    st.tuples(*[st.integers(0, 2)] * n), min_size=1, max_size=6,
).map(lambda gens: MonomialIdeal([f"z{v}" for v in range(n)], gens)))


@settings(max_examples=60, deadline=None)
@given(monomial_ideals)
def test_generic_reg_matches_taylor(i):
    for field in ("Q", "F2"):
        assert reg_ideal(i, field) == reg_from_betti(i, field)


@settings(max_examples=15, deadline=None)
@given(graphs(max_n=4, min_edges=1))
def test_split_bound_dominates_and_routes_agree(g):
    i = symbolic_power_cover(g, 2)
    a = reg_upper_bound_split(i, g.vertex_mask)
    assert a >= reg_symbolic_cover(g, 2)
    if len(i.gens) <= 10:
        assert a == reg_upper_bound_split(i, g.vertex_mask, route="taylor")


def test_unit_and_undefined():
    v = ["a", "b"]
    assert reg_ideal(MonomialIdeal.unit(v)) == 0
    with pytest.raises(UndefinedInputError):
        reg_ideal(MonomialIdeal(v, []))
    with pytest.raises(UndefinedInputError):
        reg_symbolic_cover(Graph.from_edges(3, []), 1)


def test_caps_raise():
    with caps_override(max_subsets=2 ** 4):
        with pytest.raises(ResourceLimitError):
            reg_symbolic_cover(Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)]), 1, "F2")
    with caps_override(taylor_generators=2):
        with pytest.raises(ResourceLimitError):
            taylor_betti(symbolic_power_cover(cycle_graph(4), 2))
