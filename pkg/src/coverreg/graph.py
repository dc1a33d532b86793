"""Small simple graphs on at most 32 vertices with bitmask adjacency.

Vertex sets are plain ``int`` bitmasks (bit ``i`` set means vertex ``i``
belongs to the set); every function here treats its inputs as immutable.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, Graph6Error, ResourceLimitError
from .limits import get_caps

MAX_VERTICES = 32
GRAPH6_HEADER = b">>graph6<<"

VertexSet = int


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, order=True)
class HalfInt:
    """An exact half-integer, stored doubled."""

    twice_value: int

    @classmethod
    def from_fraction(cls, value) -> "HalfInt":
        f = Fraction(value) * 2
        if f.denominator != 1:
            raise ValueError(f"{value} is not a half-integer")
        return cls(int(f))

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def __str__(self) -> str:
        if self.twice_value % 2 == 0:
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graphs are limited to {MAX_VERTICES} vertices, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"neighbor mask of vertex {i} exceeds {self.n} bits")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"x{i + 1}" for i in range(self.n)))
        elif len(self.labels) != self.n:
            raise ValueError("label count does not match vertex count")

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] = ()) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        adj = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, tuple(adj), tuple(labels))

    @classmethod
    def from_json(cls, data) -> "Graph":
        """Build from ``{"n": int, "edges": [[i, j], ...], "labels": [...]}``."""
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        return cls.from_edges(int(data["n"]), data.get("edges", []), tuple(data.get("labels") or ()))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()], "labels": list(self.labels)}

    # basic queries ------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i]) if i < j]

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def neighbors(self, mask: int) -> int:
        """Open neighborhood N(A) of a vertex set."""
        out = 0
        for v in bits(mask):
            out |= self.adj[v]
        return out

    def closed_neighbors(self, mask: int) -> int:
        return self.neighbors(mask) | mask

    def is_independent(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def isolated_vertices(self) -> int:
        return mask_of(v for v in range(self.n) if not self.adj[v])

    # derived graphs -----------------------------------------------------

    def induced(self, mask: int) -> "Graph":
        """G[mask], vertices renumbered in increasing order, labels kept."""
        keep = list(bits(mask & self.vertex_mask))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            adj.append(mask_of(index[u] for u in bits(self.adj[v] & mask)))
        return Graph(len(keep), tuple(adj), tuple(self.labels[v] for v in keep))

    def delete(self, mask: int) -> "Graph":
        """G minus a vertex set."""
        return self.induced(self.vertex_mask & ~mask)

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Spanning subgraph on the same vertices with the given edges."""
        return Graph.from_edges(self.n, edges, self.labels)

    def components(self, mask: int | None = None) -> list[int]:
        """Connected components of G[mask] as vertex masks, ordered by lowest vertex."""
        rest = self.vertex_mask if mask is None else mask
        out = []
        while rest:
            comp = frontier = rest & -rest
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & rest & ~comp
                comp |= frontier
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def bipartition(self, mask: int | None = None) -> tuple[int, int] | None:
        """2-coloring of G[mask] as (side0, side1), or None if an odd cycle exists."""
        mask = self.vertex_mask if mask is None else mask
        side = [0, 0]
        for comp in self.components(mask):
            start = comp & -comp
            color = {start.bit_length() - 1: 0}
            stack = [start.bit_length() - 1]
            while stack:
                v = stack.pop()
                for u in bits(self.adj[v] & comp):
                    if u not in color:
                        color[u] = 1 - color[v]
                        stack.append(u)
                    elif color[u] == color[v]:
                        return None
            for v, c in color.items():
                side[c] |= 1 << v
        return side[0], side[1]

    def is_bipartite(self, mask: int | None = None) -> bool:
        return self.bipartition(mask) is not None

    # graph6 -------------------------------------------------------------

    def to_graph6(self) -> str:
        return encode_graph6(self)

    def __str__(self) -> str:
        return self.to_graph6()


# ---------------------------------------------------------------------------
# graph6


def parse_graph6(text: bytes | str) -> Graph:
    """Parse a single graph6 record (optionally with the ``>>graph6<<`` header)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise Graph6Error("empty graph6 record")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the graph6 range [63, 126]")
    if data[0] == 126:
        # 126 introduces the multi-byte size form, only used for n >= 63
        raise CapacityError(f"graph6 record declares more than {MAX_VERTICES} vertices")
    n = data[0] - 63
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 record declares {n} vertices, limit is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[1:]
    if len(payload) != nbytes:
        raise Graph6Error(f"expected {nbytes} payload bytes for n={n}, got {len(payload)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and (payload[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits in graph6 record")
    return Graph(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    out = [chr(g.n + 63)]
    acc = nacc = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def read_graph6_file(path) -> list[Graph]:
    """Read one graph6 record per line; errors carry file/line context."""
    graphs = []
    with open(path, "rb") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                graphs.append(parse_graph6(line))
            except (Graph6Error, CapacityError) as exc:
                raise type(exc)(f"{path}:{lineno}: {exc}") from exc
    return graphs


# ---------------------------------------------------------------------------
# standard families


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(m: int) -> Graph:
    """K_{1,m} with center 0."""
    return complete_bipartite_graph(1, m)


def star_triangle(t: int) -> Graph:
    """``t`` triangles sharing the apex 0."""
    edges = []
    for r in range(t):
        a, b = 2 * r + 1, 2 * r + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * t + 1, edges)


# ---------------------------------------------------------------------------
# isomorphism-free catalog of small graphs


@lru_cache(maxsize=None)
def _permutations(n: int) -> tuple:
    return tuple(itertools.permutations(range(n)))


def canonical_code(g: Graph) -> int:
    """Smallest edge code over all relabelings; exhaustive, meant for n <= 7."""
    edges = g.edges()
    best = None
    for perm in _permutations(g.n):
        code = 0
        for i, j in edges:
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            code |= 1 << (b * (b - 1) // 2 + a)
        if best is None or code < best:
            best = code
    return best or 0


def _graph_from_code(n: int, code: int) -> Graph:
    edges = []
    for j in range(1, n):
        for i in range(j):
            if code >> (j * (j - 1) // 2 + i) & 1:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def _all_graph_codes(n: int) -> tuple[int, ...]:
    if n == 0:
        return (0,)
    seen = set()
    for code in _all_graph_codes(n - 1):
        base = _graph_from_code(n - 1, code)
        for nbrs in range(1 << (n - 1)):
            g = Graph.from_edges(n, base.edges() + [(v, n - 1) for v in bits(nbrs)])
            seen.add(canonical_code(g))
    return tuple(sorted(seen))


def all_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices."""
    if n > 7:
        raise ResourceLimitError("exhaustive catalog generation is limited to 7 vertices")
    return [_graph_from_code(n, c) for c in _all_graph_codes(n)]


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if g.is_connected()]


# ---------------------------------------------------------------------------
# cycles and claws


def cycle_lengths(g: Graph) -> set[int]:
    """Lengths of all simple cycles (not necessarily induced)."""
    cap = get_caps().max_cycles
    found: set[int] = set()
    count = 0
    for s in range(g.n):
        allowed = g.vertex_mask & ~((1 << (s + 1)) - 1)
        stack = [(s, 1 << s, 1)]
        while stack:
            v, visited, length = stack.pop()
            if length >= 3 and g.adj[v] >> s & 1:
                found.add(length)
                count += 1
                if count > 2 * cap:  # each cycle is walked in both directions
                    raise ResourceLimitError(f"more than {cap} cycles enumerated")
            for u in bits(g.adj[v] & allowed & ~visited):
                stack.append((u, visited | 1 << u, length + 1))
    return found


def is_claw_free(g: Graph) -> bool:
    for v in range(g.n):
        nbrs = list(bits(g.adj[v]))
        for a, b, c in itertools.combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False
    return True


# ---------------------------------------------------------------------------
# independent sets and covers


def independent_sets(g: Graph, within: int | None = None) -> list[int]:
    """All independent sets of G[within] (including the empty set), sorted by mask."""
    within = g.vertex_mask if within is None else within
    if popcount(within) > get_caps().independent_set_vertices:
        raise ResourceLimitError(
            f"independent-set enumeration is capped at {get_caps().independent_set_vertices} vertices"
        )
    out = [0]
    for v in bits(within):
        out += [s | 1 << v for s in out if not (g.adj[v] & s)]
    out.sort()
    return out


def maximal_independent_sets(g: Graph) -> list[int]:
    """Maximal independent sets in increasing bitmask order (Bron-Kerbosch on the complement)."""
    full = g.vertex_mask
    non_adj = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: popcount(non_adj[u] & p))
        for v in bits(p & ~non_adj[pivot]):
            expand(r | 1 << v, p & non_adj[v], x & non_adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    out.sort()
    return out


def minimal_vertex_covers(g: Graph) -> list[int]:
    return sorted(g.vertex_mask & ~a for a in maximal_independent_sets(g))


def independence_number(g: Graph) -> int:
    return max(popcount(a) for a in maximal_independent_sets(g))


# ---------------------------------------------------------------------------
# matchings and star packings


def matching_number(g: Graph) -> int:
    @lru_cache(maxsize=None)
    def best(avail: int) -> int:
        # drop vertices with no available neighbor
        for v in bits(avail):
            if g.adj[v] & avail:
                break
        else:
            return 0
        result = best(avail & ~(1 << v))
        for u in bits(g.adj[v] & avail):
            result = max(result, 1 + best(avail & ~(1 << v) & ~(1 << u)))
        return result

    return best(g.vertex_mask)


def induced_matching_number(g: Graph) -> int:
    @lru_cache(maxsize=None)
    def best(avail: int) -> int:
        for v in bits(avail):
            if g.adj[v] & avail:
                break
        else:
            return 0
        result = best(avail & ~(1 << v))
        for u in bits(g.adj[v] & avail):
            blocked = g.adj[v] | g.adj[u] | 1 << v | 1 << u
            result = max(result, 1 + best(avail & ~blocked))
        return result

    return best(g.vertex_mask)


def star_packing_number(g: Graph) -> int:
    """Largest set of centers whose closed neighborhoods are pairwise disjoint."""
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    conflict = [g.neighbors(closed[v]) | closed[v] for v in range(g.n)]

    @lru_cache(maxsize=None)
    def best(avail: int) -> int:
        if not avail:
            return 0
        v = (avail & -avail).bit_length() - 1
        return max(best(avail & ~(1 << v)), 1 + best(avail & ~conflict[v]))

    return best(g.vertex_mask)
