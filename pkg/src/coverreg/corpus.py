"""Corpus construction from a small family language.

A corpus spec is a ``;``-separated list of items, each ``family:args``
(a space may replace the colon)::

    cycles:3..6; paths:2..5; complete:1..5; stars:1..4; startriangles:2..3
    bipartite:1..2x2..3          K_{a,b} for a, b in the ranges
    connected:1..5               every connected graph on that many vertices
    catalog:connected6           a graph6 file shipped with the package
    file:graphs.g6  or  @graphs.g6
    graph6:Cl                    a literal record
    whisker:K2 [[1,2]]           G^pi, parts given as 1-based vertex lists
    whiskers:K1,K2,P3,K3         G^pi for every clique partition of each base

Base graphs for whiskers are ``K<n>``, ``P<n>``, ``C<n>``, ``S<m>`` (star
K_{1,m}), ``T<t>`` (star triangle) or a graph6 literal.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    connected_graphs,
    cycle_graph,
    cycle_lengths,
    is_claw_free,
    mask_of,
    parse_graph6,
    path_graph,
    read_graph6_file,
    star_graph,
    star_triangle,
)
from .invariants import (
    clique_partitions,
    is_1_well_covered,
    is_cameron_walker,
    is_doubly_cm,
    is_well_covered,
    whisker,
)


class CorpusSpecError(ValueError):
    pass


@dataclass
class CorpusEntry:
    graph: Graph
    source: str
    tags: dict = field(default_factory=dict)

    @property
    def graph_id(self) -> str:
        return self.graph.to_graph6()


def catalog_path(name: str) -> Path:
    """Path of a shipped graph6 catalog such as ``connected6``."""
    ref = resources.files("coverreg") / "data" / f"{name}.g6"
    path = Path(str(ref))
    if not path.exists():
        raise CorpusSpecError(f"no shipped catalog named {name!r}")
    return path


def _range(text: str) -> range:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*", text)
    if not m:
        raise CorpusSpecError(f"bad range {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2) or lo)
    return range(lo, hi + 1)


def base_graph(name: str) -> Graph:
    name = name.strip()
    m = re.fullmatch(r"([KPCST])(\d+)", name)
    if m:
        kind, size = m.group(1), int(m.group(2))
        return {
            "K": complete_graph,
            "P": path_graph,
            "C": cycle_graph,
            "S": star_graph,
            "T": star_triangle,
        }[kind](size)
    return parse_graph6(name)


def class_tags(g: Graph) -> dict:
    tags = {
        "bipartite": g.is_bipartite(),
        "claw_free": is_claw_free(g),
        "well_covered": is_well_covered(g),
        "one_well_covered": is_1_well_covered(g),
        "cameron_walker": is_cameron_walker(g),
        "cycles_3_5_only": cycle_lengths(g) <= {3, 5},
    }
    if g.num_edges and not g.isolated_vertices():
        tags["doubly_cm"] = is_doubly_cm(g)
    else:
        tags["doubly_cm"] = False
    return tags


def _expand(item: str) -> list[tuple[Graph, str]]:
    item = item.strip()
    if item.startswith("@"):
        return [(g, item) for g in read_graph6_file(item[1:])]
    m = re.match(r"([A-Za-z0-9_]+)\s*[: ]\s*(.*)$", item, re.S)
    if not m:
        raise CorpusSpecError(f"cannot parse corpus item {item!r}")
    family, args = m.group(1).lower(), m.group(2).strip()
    simple = {
        "paths": path_graph,
        "cycles": cycle_graph,
        "complete": complete_graph,
        "stars": star_graph,
        "startriangles": star_triangle,
        "connected": connected_graphs,
    }
    if family in simple:
        out = []
        for size in _range(args):
            made = simple[family](size)
            for g in made if isinstance(made, list) else [made]:
                out.append((g, f"{family}:{size}"))
        return out
    if family == "bipartite":
        left, _, right = args.partition("x")
        return [(complete_bipartite_graph(a, b), f"K{a},{b}") for a in _range(left) for b in _range(right)]
    if family == "catalog":
        return [(g, item) for g in read_graph6_file(catalog_path(args))]
    if family == "file":
        return [(g, item) for g in read_graph6_file(args)]
    if family == "graph6":
        return [(parse_graph6(args), item)]
    if family == "whisker":
        base_name, _, part_text = args.partition(" ")
        base = base_graph(base_name)
        try:
            parts = json.loads(part_text)
        except json.JSONDecodeError as exc:
            raise CorpusSpecError(f"bad partition in {item!r}") from exc
        partition = [mask_of(v - 1 for v in part) for part in parts]
        return [(whisker(base, partition), item)]
    if family == "whiskers":
        out = []
        for name in args.split(","):
            base = base_graph(name)
            for partition in clique_partitions(base):
                out.append((whisker(base, partition), f"whiskers:{name.strip()}"))
        return out
    raise CorpusSpecError(f"unknown corpus family {family!r}")


def build_corpus(spec: str, tag: bool = True) -> list[CorpusEntry]:
    """Deduplicated (by graph6 string), deterministic-order corpus."""
    entries: list[CorpusEntry] = []
    seen: set[str] = set()
    for item in re.split(r"[;\n]", spec):
        if not item.strip():
            continue
        for g, source in _expand(item):
            key = g.to_graph6()
            if key in seen:
                continue
            seen.add(key)
            entries.append(CorpusEntry(g, source, class_tags(g) if tag else {}))
    return entries
