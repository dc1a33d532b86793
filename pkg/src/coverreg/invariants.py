"""Graph invariants and class recognizers: gamma, gamma_0, covering and CM classes."""

from __future__ import annotations

from typing import Sequence

from .errors import InvalidPartitionError, UndefinedInputError
from .graph import (
    Graph,
    HalfInt,
    bits,
    independence_number,
    independent_sets,
    induced_matching_number,
    matching_number,
    maximal_independent_sets,
    popcount,
)
from .linalg import normalize_field
from .resolution import pd_edge_ideal


def _gamma_search(g: Graph, admissible) -> tuple[HalfInt, int]:
    if g.n == 0:
        raise UndefinedInputError("gamma is undefined for the empty graph")
    best = None
    arg = 0
    for a in independent_sets(g):
        rest = g.vertex_mask & ~g.closed_neighbors(a)
        if not admissible(g, rest):
            continue
        value = g.n + popcount(g.neighbors(a)) - popcount(a)
        if best is None or value > best:
            best, arg = value, a
    return HalfInt(best), arg


def _no_bipartite_component(g: Graph, rest: int) -> bool:
    return all(not g.is_bipartite(c) for c in g.components(rest))


def _bipartite_components_trivial(g: Graph, rest: int) -> bool:
    return all(popcount(c) == 1 or not g.is_bipartite(c) for c in g.components(rest))


def gamma_with_witness(g: Graph) -> tuple[HalfInt, int]:
    """gamma(G) together with the first maximizing independent set (as a mask)."""
    return _gamma_search(g, _no_bipartite_component)


def gamma0_with_witness(g: Graph) -> tuple[HalfInt, int]:
    return _gamma_search(g, _bipartite_components_trivial)


def gamma(g: Graph) -> HalfInt:
    """Max of (n + |N(A)| - |A|)/2 over independent A leaving no bipartite component."""
    return gamma_with_witness(g)[0]


def gamma0(g: Graph) -> HalfInt:
    """As :func:`gamma`, but bipartite components that are single vertices are allowed."""
    return gamma0_with_witness(g)[0]


def cover_degree(g: Graph) -> int:
    """deg J(G): size of the largest minimal vertex cover (0 for edgeless graphs)."""
    if g.n == 0:
        return 0
    return g.n - min(popcount(a) for a in maximal_independent_sets(g))


def min_cover_size(g: Graph) -> int:
    return g.n - independence_number(g) if g.n else 0


def is_well_covered(g: Graph) -> bool:
    return len({popcount(a) for a in maximal_independent_sets(g)}) <= 1


def is_1_well_covered(g: Graph) -> bool:
    if not is_well_covered(g):
        return False
    i = independence_number(g)
    for v in range(g.n):
        h = g.delete(1 << v)
        if not is_well_covered(h) or independence_number(h) != i:
            return False
    return True


def is_cameron_walker(g: Graph) -> bool:
    """match(G) == ind-match(G)."""
    return matching_number(g) == induced_matching_number(g)


def cameron_walker_type(g: Graph) -> str | None:
    """Structural class of a connected graph per the Cameron-Walker characterization.

    Returns ``"star"``, ``"star_triangle"``, ``"bipartite_pendant"`` or ``None``.
    """
    if g.n == 0 or not g.is_connected():
        raise UndefinedInputError("structural recognition needs a nonempty connected graph")
    if g.isolated_vertices():
        raise UndefinedInputError("structural recognition rejects isolated vertices")
    deg = [g.degree(v) for v in range(g.n)]
    full = g.vertex_mask
    for c in range(g.n):
        if g.adj[c] != full & ~(1 << c):
            continue
        others = [v for v in range(g.n) if v != c]
        if all(deg[v] == 1 for v in others):
            return "star"
        if len(others) >= 2 and all(deg[v] == 2 for v in others):
            return "star_triangle"

    leaves = [v for v in range(g.n) if deg[v] == 1]
    x_side = 0
    for v in leaves:
        x_side |= g.adj[v]
    pairs = 0
    apexes = 0
    for z in range(g.n):
        if deg[z] != 2:
            continue
        for z2 in bits(g.adj[z]):
            if deg[z2] == 2 and z2 != z:
                common = g.adj[z] & g.adj[z2]
                if common:
                    pairs |= 1 << z | 1 << z2
                    apexes |= common
    leaf_mask = sum(1 << v for v in leaves)
    core = full & ~leaf_mask & ~pairs
    if not core or x_side & apexes or x_side & (leaf_mask | pairs):
        return None
    y_side = core & ~x_side
    if apexes & ~y_side:
        return None
    if not (g.is_independent(x_side) and g.is_independent(y_side)):
        return None
    if len(g.components(core)) != 1:
        return None
    return "bipartite_pendant"


def is_cameron_walker_structural(g: Graph) -> bool:
    """Componentwise structural recognizer; a cross-check for :func:`is_cameron_walker`."""
    if g.isolated_vertices():
        raise UndefinedInputError("structural recognition rejects isolated vertices")
    return all(cameron_walker_type(g.induced(c)) is not None for c in g.components())


# ---------------------------------------------------------------------------
# whiskers


def _check_partition(g: Graph, partition: Sequence[int]) -> None:
    seen = 0
    for part in partition:
        if part == 0:
            raise InvalidPartitionError("empty part")
        if part & seen:
            raise InvalidPartitionError("parts overlap")
        if part & ~g.vertex_mask:
            raise InvalidPartitionError("part contains a vertex outside the graph")
        for v in bits(part):
            if (part & ~(1 << v)) & ~g.adj[v]:
                raise InvalidPartitionError("part is not a clique")
        seen |= part
    if seen != g.vertex_mask:
        raise InvalidPartitionError("parts do not cover every vertex")


def whisker(g: Graph, partition: Sequence[int]) -> Graph:
    """Fully clique-whiskered graph: one new vertex y_i joined to every vertex of part W_i."""
    partition = list(partition)
    _check_partition(g, partition)
    t = len(partition)
    edges = list(g.edges())
    for r, part in enumerate(partition):
        edges += [(v, g.n + r) for v in bits(part)]
    labels = list(g.labels) + [f"y{r + 1}" for r in range(t)]
    return Graph.from_edges(g.n + t, edges, labels)


def clique_partitions(g: Graph) -> list[list[int]]:
    """Every clique vertex-partition, parts ordered by lowest vertex."""
    out: list[list[int]] = []

    def rec(rest: int, parts: list[int]) -> None:
        if not rest:
            out.append(list(parts))
            return
        v = (rest & -rest).bit_length() - 1
        pool = rest & g.adj[v]
        # enumerate cliques containing v inside pool
        def grow(clique: int, cand: int) -> None:
            rec(rest & ~clique, parts + [clique])
            for u in bits(cand):
                grow(clique | 1 << u, cand & g.adj[u] & ~((1 << (u + 1)) - 1))

        grow(1 << v, pool)

    rec(g.vertex_mask, [])
    return out


def whisker_structure(g: Graph) -> tuple[int, list[int]] | None:
    """Recognize G as some base^pi: returns (whisker vertex mask, partition of the rest).

    Searches independent sets Y whose neighborhoods are nonempty, pairwise
    disjoint cliques covering V - Y.
    """
    if g.n == 0:
        return None
    for y in independent_sets(g):
        rest = g.vertex_mask & ~y
        seen = 0
        parts = []
        ok = True
        for v in bits(y):
            part = g.adj[v]
            if not part or part & seen or part & y:
                ok = False
                break
            if any((part & ~(1 << u)) & ~g.adj[u] for u in bits(part)):
                ok = False
                break
            seen |= part
            parts.append(part)
        if ok and seen == rest:
            return y, parts
    return None


# ---------------------------------------------------------------------------
# Cohen-Macaulay tests


def _cm_allowing_isolated(g: Graph, field: str) -> bool:
    """CM test where isolated vertices (free variables) and edgeless graphs are fine."""
    core = g.delete(g.isolated_vertices())
    if core.num_edges == 0:
        return True
    return pd_edge_ideal(core, field) == core.n - independence_number(core)


def is_cohen_macaulay(g: Graph, field: str = "Q") -> bool:
    """S/I(G) is CM iff pd(S/I(G)) = n - i(G) (depth equals dimension)."""
    normalize_field(field)
    if g.num_edges == 0:
        raise UndefinedInputError("CM test needs at least one edge")
    if g.isolated_vertices():
        raise UndefinedInputError("CM test rejects graphs with isolated vertices")
    return _cm_allowing_isolated(g, field)


def is_doubly_cm(g: Graph, field: str = "Q") -> bool:
    if not is_cohen_macaulay(g, field):
        return False
    i = independence_number(g)
    for v in range(g.n):
        h = g.delete(1 << v)
        if independence_number(h) != i or not _cm_allowing_isolated(h, field):
            return False
    return True
