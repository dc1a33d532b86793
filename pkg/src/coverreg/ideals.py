"""Monomial ideals: cover ideals, symbolic powers, polarization and friends.

A monomial is an exponent tuple over the ambient variable list of its ideal.
:class:`MonomialIdeal` always stores a minimal generating set in canonical
order (total degree, then lexicographic with the first variable largest), so
two ideals are equal exactly when their generator tuples are equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import CapacityError, DimensionError, DomainError, ResourceLimitError, UndefinedInputError
from .graph import Graph, bits, maximal_independent_sets
from .limits import get_caps

Monomial = tuple[int, ...]


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def _sort_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop every generator divisible by another; canonical order."""
    unique = sorted(set(gens), key=_sort_key)
    kept: list[Monomial] = []
    for m in unique:
        # anything dividing m has degree <= deg m and so is already in kept
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    vars: tuple[str, ...]
    gens: tuple[Monomial, ...]

    def __init__(self, vars: Sequence[str], gens: Iterable[Sequence[int]]):
        vars = tuple(vars)
        gens = [tuple(int(e) for e in g) for g in gens]
        for g in gens:
            if len(g) != len(vars):
                raise DimensionError(f"generator {g} does not match {len(vars)} variables")
            if min(g, default=0) < 0:
                raise ValueError(f"negative exponent in {g}")
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "gens", minimalize(gens))

    @classmethod
    def unit(cls, vars: Sequence[str]) -> "MonomialIdeal":
        return cls(vars, [(0,) * len(vars)])

    @classmethod
    def variables(cls, vars: Sequence[str], which: Iterable[int]) -> "MonomialIdeal":
        n = len(vars)
        return cls(vars, [tuple(int(i == j) for i in range(n)) for j in which])

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def degree(self) -> int:
        """Largest total degree of a minimal generator."""
        return max((sum(g) for g in self.gens), default=0)

    @property
    def min_degree(self) -> int:
        return min((sum(g) for g in self.gens), default=0)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    def _check(self, other: "MonomialIdeal") -> None:
        if self.vars != other.vars:
            raise DimensionError("ideals live in different polynomial rings")

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.vars, self.gens + other.gens)

    def __mul__(self, other) -> "MonomialIdeal":
        if isinstance(other, MonomialIdeal):
            self._check(other)
            return MonomialIdeal(self.vars, [tuple(a + b for a, b in zip(g, h)) for g in self.gens for h in other.gens])
        m = tuple(other)
        return MonomialIdeal(self.vars, [tuple(a + b for a, b in zip(g, m)) for g in self.gens])

    def to_json(self) -> dict:
        return {"vars": list(self.vars), "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        return cls(data["vars"], data["gens"])

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.vars, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"

    def __str__(self) -> str:
        return "(" + ", ".join(self.format_monomial(g) for g in self.gens) + ")"


# ---------------------------------------------------------------------------
# ideal arithmetic


def intersect(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    i._check(j)
    return MonomialIdeal(i.vars, [lcm(a, b) for a in i.gens for b in j.gens])


def add_vars(i: MonomialIdeal, a: int) -> MonomialIdeal:
    """I + (x_v : v in the vertex mask ``a``)."""
    return i + MonomialIdeal.variables(i.vars, bits(a))


def colon_by(i: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """I : m for a monomial m."""
    m = tuple(m)
    if len(m) != i.nvars:
        raise DimensionError("monomial does not match the ambient ring")
    return MonomialIdeal(i.vars, [tuple(max(a - b, 0) for a, b in zip(g, m)) for g in i.gens])


def equals(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    i._check(j)
    return i.gens == j.gens


def common_factor(i: MonomialIdeal) -> Monomial:
    """gcd of all minimal generators."""
    if not i.gens:
        return (0,) * i.nvars
    return reduce(gcd, i.gens)


def divide_out(i: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    if not all(divides(m, g) for g in i.gens):
        raise DomainError("monomial does not divide every generator")
    return MonomialIdeal(i.vars, [tuple(a - b for a, b in zip(g, m)) for g in i.gens])


def restrict(i: MonomialIdeal, keep: Sequence[int]) -> MonomialIdeal:
    """Re-express I over the variables ``keep``; I must not involve the others."""
    keep = list(keep)
    dropped = set(range(i.nvars)) - set(keep)
    if any(g[v] for g in i.gens for v in dropped):
        raise DomainError("ideal involves a dropped variable")
    return MonomialIdeal([i.vars[v] for v in keep], [tuple(g[v] for v in keep) for g in i.gens])


def support(m: Monomial) -> int:
    out = 0
    for v, e in enumerate(m):
        if e:
            out |= 1 << v
    return out


# ---------------------------------------------------------------------------
# cover ideals and symbolic powers


def _require_edges(g: Graph) -> None:
    if g.num_edges == 0:
        raise UndefinedInputError("the cover ideal of an edgeless graph is an empty intersection")


def cover_ideal(g: Graph) -> MonomialIdeal:
    """J(G), generated by x_C over the minimal vertex covers C."""
    _require_edges(g)
    full = g.vertex_mask
    gens = []
    for a in maximal_independent_sets(g):
        cover = full & ~a
        gens.append(tuple(cover >> v & 1 for v in range(g.n)))
    return MonomialIdeal(g.labels, gens)


def cover_ideal_or_unit(g: Graph) -> MonomialIdeal:
    """J(G), with the empty-intersection convention J(edgeless) = (1)."""
    if g.num_edges == 0:
        return MonomialIdeal.unit(g.labels)
    return cover_ideal(g)


def symbolic_power_cover(g: Graph, k: int) -> MonomialIdeal:
    """J(G)^(k) as the minimal points of {a in {0..k}^n : a_i + a_j >= k on every edge}.

    Exponents above k never help: lowering one to k keeps every edge
    constraint satisfied, so the box contains all minimal generators. Since
    the feasible set is an up-set, a feasible point is minimal exactly when
    no single coordinate can be decremented.
    """
    if k < 1:
        raise ValueError("symbolic powers are indexed by k >= 1")
    _require_edges(g)
    n = g.n
    if (k + 1) ** n > get_caps().max_box:
        raise ResourceLimitError(f"exponent box ({k + 1})^{n} exceeds the cap")
    nbrs = [list(bits(g.adj[v])) for v in range(n)]
    gens = []
    a = [0] * n

    def assign(v: int) -> None:
        if v == n:
            for i in range(n):
                if a[i] and not any(a[i] + a[j] == k for j in nbrs[i]):
                    return
            gens.append(tuple(a))
            return
        # lower neighbors are fixed; they bound a[v] from below
        low = max((k - a[j] for j in nbrs[v] if j < v), default=0)
        for e in range(max(low, 0), k + 1):
            a[v] = e
            assign(v + 1)
        a[v] = 0

    assign(0)
    return MonomialIdeal(g.labels, gens)


def symbolic_power_by_intersection(g: Graph, k: int) -> MonomialIdeal:
    """J(G)^(k) as the iterated intersection of (x_i, x_j)^k; the slow route."""
    _require_edges(g)
    n = g.n
    result = None
    for i, j in g.edges():
        gens = []
        for p in range(k + 1):
            m = [0] * n
            m[i], m[j] = p, k - p
            gens.append(tuple(m))
        piece = MonomialIdeal(g.labels, gens)
        result = piece if result is None else intersect(result, piece)
    return result


def symbolic_power_or_unit(g: Graph, k: int) -> MonomialIdeal:
    if k == 0 or g.num_edges == 0:
        return MonomialIdeal.unit(g.labels)
    return symbolic_power_cover(g, k)


# ---------------------------------------------------------------------------
# linear quotients


def _colon_is_linear(prefix: list[Monomial], u: Monomial) -> bool:
    quotients = minimalize(tuple(max(a - b, 0) for a, b in zip(p, u)) for p in prefix)
    return all(sum(q) == 1 for q in quotients)


def has_linear_quotients(i: MonomialIdeal, max_generators: int | None = None):
    """Search for a linear-quotient order of the minimal generators.

    Returns ``("yes", order)`` with ``order`` a list of generator indices,
    ``("no", None)`` when no order exists, or ``("undecided", None)`` when
    the ideal has more generators than the configured cap.
    """
    cap = get_caps().lq_generators if max_generators is None else max_generators
    gens = list(i.gens)
    m = len(gens)
    if m > cap:
        return "undecided", None
    if m <= 1:
        return "yes", list(range(m))

    failed: set[int] = set()  # placed-masks known to be dead ends

    def extend(order: list[int], placed: int):
        if len(order) == m:
            return order
        if placed in failed:
            return None
        prefix = [gens[j] for j in order]
        for c in range(m):
            if placed >> c & 1:
                continue
            if _colon_is_linear(prefix, gens[c]):
                found = extend(order + [c], placed | 1 << c)
                if found:
                    return found
        failed.add(placed)
        return None

    found = extend([], 0)
    return ("yes", found) if found else ("no", None)


# ---------------------------------------------------------------------------
# polarization


def polarize(i: MonomialIdeal, widths: Sequence[int] | None = None) -> MonomialIdeal:
    """Squarefree polarization over variables ``x_{i,p}``, ``p = 1..a_i``.

    ``widths`` overrides the per-variable copy counts (each must be at least
    the largest exponent of that variable), which embeds the result in a
    bigger ring; by default ``a_i`` is the largest exponent of ``x_i``.
    """
    top = [max((g[v] for g in i.gens), default=0) for v in range(i.nvars)]
    if widths is None:
        widths = top
    elif any(w < t for w, t in zip(widths, top)) or len(widths) != i.nvars:
        raise DomainError("polarization widths smaller than the exponents")
    names = [f"{i.vars[v]}_{p}" for v in range(i.nvars) for p in range(1, widths[v] + 1)]
    offset = list(itertools.accumulate([0] + list(widths)))
    gens = []
    for g in i.gens:
        m = [0] * len(names)
        for v, e in enumerate(g):
            for p in range(e):
                m[offset[v] + p] = 1
        gens.append(tuple(m))
    return MonomialIdeal(names, gens)


def polarization_graph(g: Graph, k: int) -> Graph:
    """G_k: vertices x_{i,p} (p = 1..k), edges x_{i,p} x_{j,q} for ij in E(G), p + q <= k + 1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = g.n * k
    if n > 32:
        raise CapacityError(f"G_k would have {n} vertices")
    edges = []
    for i, j in g.edges():
        for p in range(1, k + 1):
            for q in range(1, k + 2 - p):
                edges.append((i * k + p - 1, j * k + q - 1))
    labels = [f"{g.labels[i]}_{p}" for i in range(g.n) for p in range(1, k + 1)]
    return Graph.from_edges(n, edges, labels)


# ---------------------------------------------------------------------------
# Stanley-Reisner correspondence


def alexander_dual(i: MonomialIdeal) -> MonomialIdeal:
    """Squarefree Alexander dual: generated by the minimal transversals of the supports."""
    if not i.is_squarefree():
        raise DomainError("Alexander duality needs a squarefree ideal")
    if i.is_unit or i.is_zero:
        raise DomainError("the dual of the unit or zero ideal is not a proper ideal")
    transversals = {0}
    for g in i.gens:
        s = support(g)
        nxt = set()
        for t in transversals:
            if t & s:
                nxt.add(t)
            else:
                for v in bits(s):
                    nxt.add(t | 1 << v)
        transversals = {t for t in nxt if not any(o != t and o & t == o for o in nxt)}
    n = i.nvars
    return MonomialIdeal(i.vars, [tuple(t >> v & 1 for v in range(n)) for t in transversals])


def stanley_reisner_faces(i: MonomialIdeal) -> list[int]:
    """Faces of the complex whose Stanley-Reisner ideal is ``i``, as variable masks."""
    if not i.is_squarefree():
        raise DomainError("Stanley-Reisner complexes need a squarefree ideal")
    if i.is_unit:
        raise DomainError("the unit ideal has no Stanley-Reisner complex")
    nonfaces = [support(g) for g in i.gens]
    faces = [0]
    for v in range(i.nvars):
        faces += [f | 1 << v for f in faces if not any(nf & (f | 1 << v) == nf for nf in nonfaces)]
    return sorted(faces)


def stanley_reisner_facets(i: MonomialIdeal) -> list[int]:
    faces = stanley_reisner_faces(i)
    face_set = set(faces)
    n = i.nvars
    return [f for f in faces if not any(f | 1 << v in face_set for v in range(n) if not f >> v & 1)]


def is_facet(i: MonomialIdeal, face: int) -> bool:
    return face in set(stanley_reisner_facets(i))
