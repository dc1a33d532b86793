"""Command-line front end.

Standard output carries only the payload (JSON, CSV, graph6 or an
integer); diagnostics go to standard error. Exit codes: 0 success,
1 verification failure, 2 bad input, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import CorpusSpecError, build_corpus
from .errors import CapacityError, ResourceLimitError
from .graph import (
    Graph,
    independence_number,
    induced_matching_number,
    is_claw_free,
    matching_number,
    mask_of,
    parse_graph6,
    read_graph6_file,
    star_packing_number,
)
from .ideals import polarization_graph, symbolic_power_cover
from .invariants import (
    cover_degree,
    gamma0_with_witness,
    gamma_with_witness,
    is_1_well_covered,
    is_cameron_walker,
    is_doubly_cm,
    is_well_covered,
    whisker,
    whisker_structure,
)
from .limits import get_caps, parse_caps, set_caps
from .linalg import normalize_field
from .resolution import reg_symbolic_cover, symbolic_cover_betti
from .verifier import field_coherence, oracle_triangulation, run_suite, summarize, to_csv, to_json

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def load_graph(text: str) -> Graph:
    """A graph6 literal, ``@file`` holding one graph6 record, or a JSON edge list."""
    text = text.strip()
    if text.startswith("@"):
        graphs = read_graph6_file(text[1:])
        if len(graphs) != 1:
            raise InputError(f"{text[1:]}: expected exactly one graph, found {len(graphs)}")
        return graphs[0]
    if text.startswith("{"):
        return Graph.from_json(json.loads(text))
    return parse_graph6(text)


def _dump(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _labels(g: Graph, mask: int) -> list[str]:
    return [g.labels[v] for v in range(g.n) if mask >> v & 1]


def cmd_invariants(args) -> int:
    g = load_graph(args.graph)
    out = {
        "graph6": g.to_graph6(),
        "n": g.n,
        "edges": g.num_edges,
        "deg": cover_degree(g),
        "alpha2": star_packing_number(g),
        "independence_number": independence_number(g),
        "match": matching_number(g),
        "ind_match": induced_matching_number(g),
    }
    if g.n:
        gam, arg = gamma_with_witness(g)
        gam0, arg0 = gamma0_with_witness(g)
        out.update(gamma=str(gam), gamma_argmax=_labels(g, arg), gamma0=str(gam0), gamma0_argmax=_labels(g, arg0))
    proper = g.num_edges > 0 and not g.isolated_vertices()
    out["classes"] = {
        "bipartite": g.is_bipartite(),
        "claw_free": is_claw_free(g),
        "well_covered": is_well_covered(g),
        "one_well_covered": is_1_well_covered(g),
        "cameron_walker": is_cameron_walker(g),
        "fully_clique_whiskered": whisker_structure(g) is not None,
        "doubly_cm": is_doubly_cm(g, args.field) if proper else False,
    }
    _dump(out)
    return EXIT_OK


def cmd_ideal(args) -> int:
    g = load_graph(args.graph)
    ideal = symbolic_power_cover(g, args.symbolic)
    payload = ideal.to_json()
    payload["generators"] = [ideal.format_monomial(m) for m in ideal.gens]
    payload["k"] = args.symbolic
    _dump(payload)
    return EXIT_OK


def cmd_reg(args) -> int:
    g = load_graph(args.graph)
    field = normalize_field(args.field)
    value = reg_symbolic_cover(g, args.symbolic, field)
    if not args.betti:
        sys.stdout.write(f"{value}\n")
        return EXIT_OK
    table = symbolic_cover_betti(g, args.symbolic, field)
    payload = {"reg": value, "k": args.symbolic, "betti": table.to_json(),
               "totals": [{"i": i, "j": j, "rank": r} for (i, j), r in table.totals().items()]}
    _dump(payload)
    return EXIT_OK


def cmd_polgraph(args) -> int:
    g = load_graph(args.graph)
    sys.stdout.write(polarization_graph(g, args.k).to_graph6() + "\n")
    return EXIT_OK


def cmd_whisker(args) -> int:
    g = load_graph(args.graph)
    try:
        parts = json.loads(args.partition)
    except json.JSONDecodeError as exc:
        raise InputError(f"--partition must be JSON like [[1,2],[3]]: {exc}") from exc
    if not isinstance(parts, list) or not all(isinstance(p, list) for p in parts):
        raise InputError("--partition must be a list of vertex lists")
    partition = [mask_of(v - 1 for v in part) for part in parts]
    sys.stdout.write(whisker(g, partition).to_graph6() + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    field = normalize_field(args.field)
    corpus = build_corpus(args.corpus)
    only = args.checks.split(",") if args.checks else None
    records = run_suite(corpus, args.kmax, field, threads=args.threads, only=only)
    if args.oracles:
        records += oracle_triangulation(corpus, min(args.kmax, 2), field)
    summary = summarize(records)
    text = to_csv(records)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.json:
        Path(args.json).write_text(to_json(records) + "\n")
    print(f"graphs={len(corpus)} " + " ".join(f"{k}={v}" for k, v in summary.items()), file=sys.stderr)
    if args.field_coherence:
        for finding in field_coherence(corpus, min(args.kmax, 2)):
            print("field discrepancy: " + json.dumps(finding, sort_keys=True), file=sys.stderr)
    for r in records:
        if r.failed:
            print(f"FAILED {r.check_id} {r.graph_id} k={r.k}: {r.lhs} {r.relation} {r.rhs}", file=sys.stderr)
    return EXIT_FAIL if summary["failed"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coverreg", description="Cover ideals, symbolic powers and their regularity.")
    p.add_argument("--caps", help="resource caps as JSON or key=value,... (overrides COVERREG_CAPS)")
    sub = p.add_subparsers(dest="command", required=True)

    graph_help = "graph6 literal, @file with one graph6 record, or JSON {\"n\":..,\"edges\":[[i,j],..]}"

    s = sub.add_parser("invariants", help="graph invariants and class flags as JSON")
    s.add_argument("graph", help=graph_help)
    s.add_argument("--field", default="Q")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("ideal", help="generators of J(G)^(k) as JSON")
    s.add_argument("graph", help=graph_help)
    s.add_argument("--symbolic", type=int, default=1, metavar="K")
    s.set_defaults(func=cmd_ideal)

    s = sub.add_parser("reg", help="regularity of J(G)^(k)")
    s.add_argument("graph", help=graph_help)
    s.add_argument("--symbolic", type=int, default=1, metavar="K")
    s.add_argument("--field", default="Q", help="Q or F2")
    s.add_argument("--betti", action="store_true", help="emit the multigraded Betti table as JSON")
    s.set_defaults(func=cmd_reg)

    s = sub.add_parser("polgraph", help="graph6 of the polarization graph G_k")
    s.add_argument("graph", help=graph_help)
    s.add_argument("-k", type=int, required=True)
    s.set_defaults(func=cmd_polgraph)

    s = sub.add_parser("whisker", help="graph6 of the fully clique-whiskered graph")
    s.add_argument("graph", help=graph_help)
    s.add_argument("--partition", required=True, help="JSON list of 1-based cliques, e.g. [[1,2],[3]]")
    s.set_defaults(func=cmd_whisker)

    s = sub.add_parser("verify", help="run the theorem suite over a corpus")
    s.add_argument("--corpus", required=True, help="corpus spec, e.g. 'cycles:3..6; catalog:connected5'")
    s.add_argument("--kmax", type=int, default=2)
    s.add_argument("--field", default="Q")
    s.add_argument("--out", help="CSV report path (default: standard output)")
    s.add_argument("--json", help="also write the JSON mirror here")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--checks", help="comma-separated subset, e.g. T13,T14")
    s.add_argument("--oracles", action="store_true", help="append Hochster/Taylor cross-check records")
    s.add_argument("--field-coherence", action="store_true", help="report Q vs F2 regularity differences")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = get_caps()
    try:
        if args.caps:
            set_caps(parse_caps(args.caps, saved))
        for name in ("symbolic", "k", "kmax", "threads"):
            if getattr(args, name, 1) < 1:
                raise InputError(f"--{name} must be at least 1")
        return args.func(args)
    except (ResourceLimitError, CapacityError) as exc:
        print(f"coverreg: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, CorpusSpecError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"coverreg: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        set_caps(saved)


if __name__ == "__main__":
    sys.exit(main())
