"""Graded Betti numbers, projective dimension and regularity.

Two independent routes are provided:

* Hochster's formula on Stanley-Reisner complexes (independence complexes
  for edge ideals), combined with Terai duality ``reg(J(G)) = pd(S/I(G))``
  and polarization ``reg(J(G)^(k)) = reg(J(G_k))``.
* The Taylor complex of an arbitrary monomial ideal, whose field-tensored
  multidegree strands compute the minimal Betti numbers directly.

The Hochster route is the workhorse; Taylor is the oracle.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .errors import DomainError, ResourceLimitError, UndefinedInputError
from .graph import Graph, bits, popcount
from .ideals import (
    MonomialIdeal,
    add_vars,
    alexander_dual,
    colon_by,
    common_factor,
    divide_out,
    cover_ideal,
    polarization_graph,
    polarize,
    support,
)
from .limits import get_caps
from .linalg import normalize_field, rank

# ---------------------------------------------------------------------------
# reduced homology of simplicial complexes


def _faces_avoiding(mask: int, nonfaces: list[int]) -> list[int]:
    """All subsets of ``mask`` containing no nonface, including the empty face."""
    cap = get_caps().max_faces
    faces = [0]
    for v in bits(mask):
        bit = 1 << v
        relevant = [nf for nf in nonfaces if nf & bit]
        faces += [f | bit for f in faces if not any(nf & (f | bit) == nf for nf in relevant)]
        if len(faces) > cap:
            raise ResourceLimitError(f"simplicial complex has more than {cap} faces")
    return faces


def homology_of_faces(faces: list[int], field: str = "Q") -> dict[int, int]:
    """Reduced homology ranks ``{dimension: rank}`` (nonzero only) of a face list."""
    by_size: dict[int, list[int]] = defaultdict(list)
    for f in faces:
        by_size[popcount(f)].append(f)
    index = {s: {f: i for i, f in enumerate(fs)} for s, fs in by_size.items()}
    boundary_rank: dict[int, int] = {}
    for s, fs in by_size.items():
        if s == 0 or s - 1 not in index:
            continue
        lower = index[s - 1]
        rows = []
        for f in fs:
            row = {}
            for r, t in enumerate(bits(f)):
                row[lower[f ^ (1 << t)]] = -1 if r % 2 else 1
            rows.append(row)
        boundary_rank[s] = rank(rows, field)
    out = {}
    for s, fs in by_size.items():
        h = len(fs) - boundary_rank.get(s, 0) - boundary_rank.get(s + 1, 0)
        if h:
            out[s - 1] = h
    return out


def join_homology(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    """Reduced homology of a join over a field: H~_{r+1}(X*Y) = sum H~_i(X) (x) H~_j(Y), i+j=r."""
    out: dict[int, int] = defaultdict(int)
    for i, x in a.items():
        for j, y in b.items():
            out[i + j + 1] += x * y
    return dict(out)


EMPTY_COMPLEX = {-1: 1}


class StanleyReisnerHomology:
    """Memoized reduced homology of the restrictions Delta_W of one complex.

    The complex is given by its minimal nonfaces (vertex masks). When every
    nonface is an edge the complex is the independence complex of a graph
    and two extra reductions become available:

    * ``fold``: if N(u) is contained in N(v) for distinct u, v in W, then
      Ind(G[W]) and Ind(G[W - v]) are homotopy equivalent.
    * ``split``: disconnected restrictions are joins of their parts.

    With both switched off every restriction is computed directly from its
    face list, which the tests use as the reference.
    """

    def __init__(self, nvars: int, nonfaces, field: str = "Q", split: bool = True, fold: bool = True):
        self.nvars = nvars
        self.nonfaces = sorted(set(nonfaces))
        self.field = normalize_field(field)
        self.split = split
        self.flag = all(popcount(nf) == 2 for nf in self.nonfaces)
        self.fold = fold and self.flag
        self.adj = [0] * nvars
        self.touch = [0] * nvars  # vertices sharing some nonface with v
        for nf in self.nonfaces:
            for v in bits(nf):
                self.touch[v] |= nf & ~(1 << v)
                if self.flag:
                    self.adj[v] |= nf & ~(1 << v)
        self.memo: dict[int, dict[int, int]] = {}

    def _restricted(self, mask: int) -> list[int]:
        return [nf for nf in self.nonfaces if nf & mask == nf]

    def is_cone(self, mask: int) -> bool:
        """Some vertex of W lies in no nonface inside W."""
        if self.flag:
            return any(not (self.adj[v] & mask) for v in bits(mask))
        covered = 0
        for nf in self._restricted(mask):
            covered |= nf
        return covered != mask

    def _components(self, mask: int) -> list[int]:
        if self.flag:
            link = self.adj
        else:
            link = [0] * self.nvars
            for nf in self._restricted(mask):
                for v in bits(nf):
                    link[v] |= nf
        out = []
        rest = mask
        while rest:
            comp = frontier = rest & -rest
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= link[v]
                frontier = nxt & rest & ~comp
                comp |= frontier
            out.append(comp)
            rest &= ~comp
        return out

    def _fold_target(self, mask: int) -> int | None:
        nb = {v: self.adj[v] & mask for v in bits(mask)}
        for u, nu in nb.items():
            for v, nv in nb.items():
                if u != v and nu & nv == nu:
                    return v
        return None

    def __call__(self, mask: int) -> dict[int, int]:
        if mask == 0:
            return dict(EMPTY_COMPLEX)
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        if self.is_cone(mask):
            result: dict[int, int] = {}
        elif self.split and len(comps := self._components(mask)) > 1:
            result = dict(EMPTY_COMPLEX)
            for c in comps:
                result = join_homology(result, self(c))
                if not result:
                    break
        elif self.fold and (v := self._fold_target(mask)) is not None:
            result = self(mask & ~(1 << v))
        else:
            result = homology_of_faces(_faces_avoiding(mask, self._restricted(mask)), self.field)
        self.memo[mask] = result
        return result

    def projective_dimension(self) -> int:
        """pd(S/I_Delta) = max |W| - j - 1 over W with H~_j(Delta_W) != 0.

        Restrictions are scanned by decreasing size; a nonempty W contributes
        at most |W| - 1, so the scan stops once that cannot beat the best.
        """
        n = self.nvars
        _check_subsets(n)
        best = 0  # W = empty gives beta_0 = 1
        for size in range(n, 0, -1):
            if size - 1 <= best:
                break
            for combo in itertools.combinations(range(n), size):
                mask = 0
                for v in combo:
                    mask |= 1 << v
                if self.is_cone(mask):
                    continue
                h = self(mask)
                if h:
                    best = max(best, size - min(h) - 1)
        return best

    def betti_entries(self):
        """All (i, W, beta_{i,W}(S/I_Delta)) with nonzero rank (Hochster's formula)."""
        n = self.nvars
        _check_subsets(n)
        out = []
        for mask in range(1 << n):
            if mask and self.is_cone(mask):
                continue
            size = popcount(mask)
            for j, r in self(mask).items():
                out.append((size - j - 1, mask, r))
        return out


# ---------------------------------------------------------------------------
# Betti tables


@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers of an ideal I or of S/I."""

    entries: tuple  # (i, multidegree tuple, rank)
    field: str = "Q"
    subject: str = "ideal"
    vars: tuple = dc_field(default=())

    def reg(self) -> int:
        """Regularity of the subject module."""
        if not self.entries:
            raise UndefinedInputError("the zero module has no regularity")
        return max(sum(a) - i for i, a, _ in self.entries)

    def pd(self) -> int:
        return max(i for i, _, _ in self.entries)

    def to_quotient(self) -> "BettiTable":
        if self.subject == "quotient":
            return self
        n = len(self.vars)
        entries = [(0, (0,) * n, 1)] + [(i + 1, a, r) for i, a, r in self.entries]
        return BettiTable(tuple(entries), self.field, "quotient", self.vars)

    def to_ideal(self) -> "BettiTable":
        if self.subject == "ideal":
            return self
        entries = [(i - 1, a, r) for i, a, r in self.entries if i > 0]
        return BettiTable(tuple(entries), self.field, "ideal", self.vars)

    def totals(self) -> dict[tuple[int, int], int]:
        """Coarsened to (i, total degree) -> rank."""
        out: dict[tuple[int, int], int] = defaultdict(int)
        for i, a, r in self.entries:
            out[i, sum(a)] += r
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "field": self.field,
            "entries": [{"i": i, "degree": list(a), "rank": r} for i, a, r in self.entries],
        }


def _sorted_entries(entries):
    return tuple(sorted(entries, key=lambda e: (e[0], sum(e[1]), tuple(-x for x in e[1]))))


# ---------------------------------------------------------------------------
# Hochster / Terai route for graphs


def _edge_masks(g: Graph) -> list[int]:
    return [1 << i | 1 << j for i, j in g.edges()]


def reduced_betti_numbers(g: Graph, w: int | None = None, field: str = "Q", optimized: bool = False) -> list[int]:
    """dim H~_j(Ind(G[W])) for j = -1 .. |W|-1.

    The default computes the complex directly from its faces (with only
    the cone shortcut); ``optimized`` enables component splitting and
    folding, which must agree.
    """
    w = g.vertex_mask if w is None else w
    if w == 0:
        raise DomainError("W must be nonempty")
    engine = StanleyReisnerHomology(g.n, _edge_masks(g), field, split=optimized, fold=optimized)
    h = engine(w)
    return [h.get(j, 0) for j in range(-1, popcount(w))]


def _check_subsets(n: int) -> None:
    if 2 ** n > get_caps().max_subsets:
        raise ResourceLimitError(f"2^{n} restrictions exceed the subset cap")


def _pd_edge_ideal(n: int, adj: tuple, field: str) -> int:
    # the cap is checked before the cache so results never depend on history
    _check_subsets(n)
    return _pd_edge_ideal_cached(n, adj, field)


@lru_cache(maxsize=8192)
def _pd_edge_ideal_cached(n: int, adj: tuple, field: str) -> int:
    edges = [1 << i | 1 << j for i in range(n) for j in bits(adj[i]) if i < j]
    return StanleyReisnerHomology(n, edges, field).projective_dimension()


def pd_edge_ideal(g: Graph, field: str = "Q") -> int:
    """pd(S/I(G)) via Hochster's formula on the independence complex."""
    if g.num_edges == 0:
        raise UndefinedInputError("edge ideal of an edgeless graph is zero")
    return _pd_edge_ideal(g.n, g.adj, normalize_field(field))


def reg_cover(g: Graph, field: str = "Q") -> int:
    """reg(J(G)) = pd(S/I(G)) by Terai duality."""
    return pd_edge_ideal(g, field)


def reg_symbolic_cover(g: Graph, k: int, field: str = "Q") -> int:
    """reg(J(G)^(k)) = reg(J(G_k)) since polarization preserves Betti numbers."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.num_edges == 0:
        raise UndefinedInputError("the cover ideal of an edgeless graph is undefined")
    return reg_cover(polarization_graph(g, k), field)


def reg_symbolic_or_zero(g: Graph, k: int, field: str = "Q") -> int:
    """Same, with reg J^(0) = reg(unit ideal) = 0 and reg J(edgeless)^(k) = 0."""
    if k == 0 or g.num_edges == 0:
        return 0
    return reg_symbolic_cover(g, k, field)


def hochster_betti(g: Graph, field: str = "Q") -> BettiTable:
    """Multigraded Betti table of S/I(G), multidegrees squarefree."""
    engine = StanleyReisnerHomology(g.n, _edge_masks(g), field)
    entries = [(i, tuple(w >> v & 1 for v in range(g.n)), r) for i, w, r in engine.betti_entries()]
    return BettiTable(_sorted_entries(entries), normalize_field(field), "quotient", g.labels)


def symbolic_cover_betti(g: Graph, k: int, field: str = "Q") -> BettiTable:
    """Multigraded Betti table of the ideal J(G)^(k) by Hochster's formula.

    Works on the squarefree ideal J(G_k), whose nonfaces are the minimal
    vertex covers of G_k, then collapses polarized multidegrees back onto
    the variables of G (depolarization keeps multigraded Betti numbers).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.num_edges == 0:
        raise UndefinedInputError("the cover ideal of an edgeless graph is undefined")
    gk = polarization_graph(g, k)
    covers = [support(m) for m in cover_ideal(gk).gens]
    engine = StanleyReisnerHomology(gk.n, covers, field)
    collapsed: dict[tuple, int] = defaultdict(int)
    for i, w, r in engine.betti_entries():
        if i == 0:
            continue
        a = [0] * g.n
        for v in bits(w):
            a[v // k] += 1
        collapsed[i - 1, tuple(a)] += r
    entries = [(i, a, r) for (i, a), r in collapsed.items()]
    return BettiTable(_sorted_entries(entries), normalize_field(field), "ideal", g.labels)


# ---------------------------------------------------------------------------
# generic monomial ideals


def reg_ideal(i: MonomialIdeal, field: str = "Q") -> int:
    """Regularity of an arbitrary nonzero monomial ideal via the Hochster route.

    Reductions: reg(unit) = 0; reg(m*I) = deg m + reg(I); a linear
    generator x splits off as a Koszul factor, reg((x) + I') = reg(I') for
    I' nonzero in the remaining variables. What is left is polarized and
    handled by Terai duality on its Alexander dual.
    """
    field = normalize_field(field)
    if i.is_zero:
        raise UndefinedInputError("the zero ideal has no regularity")
    if i.is_unit:
        return 0
    shift = common_factor(i)
    if any(shift):
        return sum(shift) + reg_ideal(divide_out(i, shift), field)
    linear = [g for g in i.gens if sum(g) == 1]
    if linear:
        rest = [g for g in i.gens if sum(g) > 1]
        if not rest:
            return 1
        return reg_ideal(MonomialIdeal(i.vars, rest), field)
    pol = polarize(i)
    used = 0
    for g in pol.gens:
        used |= support(g)
    keep = list(bits(used))
    dual = alexander_dual(pol)
    nonfaces = []
    pos = {v: t for t, v in enumerate(keep)}
    for g in dual.gens:
        nonfaces.append(sum(1 << pos[v] for v in bits(support(g))))
    if all(popcount(nf) == 2 for nf in nonfaces):
        n = len(keep)
        adj = [0] * n
        for nf in nonfaces:
            a, b = bits(nf)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return _pd_edge_ideal(n, tuple(adj), field)
    return StanleyReisnerHomology(len(keep), nonfaces, field).projective_dimension()


# ---------------------------------------------------------------------------
# Taylor complex oracle


def taylor_betti(i: MonomialIdeal, field: str = "Q") -> BettiTable:
    """Multigraded Betti table of ``i`` from the strands of its Taylor complex.

    The Taylor complex is a (non-minimal) free resolution of S/I; after
    tensoring with the field only the faces with equal lcm survive in the
    differential, so beta_{s,a}(S/I) is the s-th homology of the complex of
    generator subsets with lcm exactly a.
    """
    field = normalize_field(field)
    gens = list(i.gens)
    m = len(gens)
    if m > get_caps().taylor_generators:
        raise ResourceLimitError(f"Taylor complex on {m} generators exceeds the cap")
    if m == 0:
        raise UndefinedInputError("the zero ideal has an empty Taylor complex")
    zero = (0,) * i.nvars
    lcms = [zero] * (1 << m)
    groups: dict[tuple, list[int]] = defaultdict(list)
    groups[zero].append(0)
    for mask in range(1, 1 << m):
        low = mask & -mask
        prev = lcms[mask ^ low]
        g = gens[low.bit_length() - 1]
        a = tuple(x if x >= y else y for x, y in zip(prev, g))
        lcms[mask] = a
        groups[a].append(mask)
    entries = []
    for a, faces in groups.items():
        h = _strand_homology(faces, field)
        for s, r in h.items():
            entries.append((s, a, r))
    table = BettiTable(_sorted_entries(entries), field, "quotient", i.vars)
    return table.to_ideal()


def _strand_homology(faces: list[int], field: str) -> dict[int, int]:
    """Non-reduced homology ranks by subset size of a closed-under-nothing face group."""
    by_size: dict[int, list[int]] = defaultdict(list)
    for f in faces:
        by_size[popcount(f)].append(f)
    index = {s: {f: t for t, f in enumerate(fs)} for s, fs in by_size.items()}
    ranks = {}
    for s, fs in by_size.items():
        lower = index.get(s - 1)
        if not s or not lower:
            continue
        rows = []
        for f in fs:
            row = {}
            for r, t in enumerate(bits(f)):
                c = lower.get(f ^ (1 << t))
                if c is not None:
                    row[c] = -1 if r % 2 else 1
            if row:
                rows.append(row)
        ranks[s] = rank(rows, field) if rows else 0
    out = {}
    for s, fs in by_size.items():
        h = len(fs) - ranks.get(s, 0) - ranks.get(s + 1, 0)
        if h:
            out[s] = h
    return out


def reg_from_betti(i: MonomialIdeal, field: str = "Q") -> int:
    """reg(I) from its Taylor-computed Betti table."""
    if i.is_unit:
        return 0
    return taylor_betti(i, field).reg()


# ---------------------------------------------------------------------------
# splitting bound


def reg_upper_bound_split(i: MonomialIdeal, w: int, field: str = "Q", route: str = "hochster") -> int:
    """max over partitions (A, B) of the variable set W of reg((I + (A)) : x_B) + |B|.

    ``route`` picks the regularity engine for the colon ideals: the Hochster
    route handles any size, the Taylor route is capped by generator count.
    """
    reg = reg_ideal if route == "hochster" else reg_from_betti
    best = None
    sub = w
    while True:
        a = sub
        b = w & ~sub
        xb = tuple(b >> v & 1 for v in range(i.nvars))
        value = reg(colon_by(add_vars(i, a), xb), field) + popcount(b)
        best = value if best is None else max(best, value)
        if sub == 0:
            break
        sub = (sub - 1) & w
    return best
