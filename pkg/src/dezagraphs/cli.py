"""Command-line front end: ``dezagraphs <subcommand> ...``.

Graphs travel as graph6 files.  Commands that emit a graph print the graph6
string on the first line and the vertex labels as a JSON array on the second;
commands that read a graph accept that same two-line form, so outputs can be
piped straight back in.  Every report is one JSON document carrying
``schema_version``.

Exit codes: 0 success, 1 a requested check failed, 2 usage error, 3 malformed
graph input, 4 invalid or infeasible parameters, 5 search bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import families
from .automorphism import DEFAULT_MAX_VERTICES as AUT_BOUND
from .connectivity import DEFAULT_MAX_VERTICES as KAPPA_BOUND, vertex_connectivity
from .deza import (
    Involution,
    deza_from,
    describe,
    enumerate_delta_automorphisms,
    i_automorphism,
    pair_automorphism_t,
)
from .errors import DezaGraphError, Graph6Error, InvalidArgument, SearchBoundExceeded
from .graph import (
    Graph,
    classify_deza,
    classify_srg,
    complement,
    diameter,
    is_clique,
    is_co_edge_regular,
    is_connected,
    is_edge_regular,
    regular_degree,
    second_neighborhood_components,
)
from .graph6 import from_graph6, labels_from_json, labels_to_json, to_graph6
from .path_families import sweep
from .reports import SCHEMA_VERSION, paper_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BAD_GRAPH = 3
EXIT_BAD_PARAMETERS = 4
EXIT_BOUND = 5


def _dump(doc: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **doc}, indent=2)


def _write_json(path: str, doc: dict) -> None:
    Path(path).write_text(_dump(doc) + "\n")


def read_graph(source: str, labels_path: str | None = None) -> Graph:
    """Read a graph6 file (``-`` for stdin), with labels from a sidecar or a second line."""
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise Graph6Error("empty graph input")
    labels = None
    if labels_path is not None:
        labels = labels_from_json(Path(labels_path).read_text())
    elif len(lines) > 1:
        try:
            labels = labels_from_json(lines[1])
        except json.JSONDecodeError as exc:
            raise Graph6Error(f"second line is not a JSON label array: {exc}") from None
    g = from_graph6(lines[0])
    if labels is not None:
        if len(labels) != g.n:
            raise Graph6Error(f"{len(labels)} labels for a graph on {g.n} vertices")
        g = Graph(g.n, g.rows, tuple(labels))
    return g


def _emit_graph(g: Graph) -> None:
    print(to_graph6(g))
    print(labels_to_json(g))


def _family(args) -> Graph:
    return families.by_name(args.family, args.n)


def _resolve_vertex(g: Graph, token: str) -> int:
    if g.labels is not None and token in g.labels:
        return g.index(token)
    try:
        v = int(token)
    except ValueError:
        raise InvalidArgument(f"unknown vertex {token!r}") from None
    if not 0 <= v < g.n:
        raise InvalidArgument(f"vertex {v} out of range 0..{g.n - 1}")
    return v


# -- subcommands -------------------------------------------------------------


def cmd_construct(args) -> int:
    g = _family(args)
    if args.complement:
        g = complement(g)
    if args.labels:
        Path(args.labels).write_text(labels_to_json(g) + "\n")
    _emit_graph(g)
    return EXIT_OK


def cmd_classify(args) -> int:
    g = read_graph(args.input, args.labels)
    srg = classify_srg(g)
    deza = classify_deza(g)
    diam = diameter(g)
    doc = {
        "n": g.n,
        "edges": g.num_edges(),
        "regular_degree": regular_degree(g),
        "connected": is_connected(g),
        "diameter": None if diam == float("inf") else diam,
        "srg": None if srg is None else {
            "v": srg.v, "k": srg.k, "lambda": srg.lambda_, "mu": srg.mu,
            "spectrum": None if srg.spectrum is None else
            {"k": srg.spectrum.k, "r": srg.spectrum.r, "s": srg.spectrum.s},
        },
        "deza": None if deza is None else {
            "v": deza.v, "k": deza.k, "b": deza.b, "a": deza.a, "strict": deza.strict,
        },
        "edge_regular": is_edge_regular(g),
        "co_edge_regular": is_co_edge_regular(g),
    }
    print(_dump(doc))
    return EXIT_OK


def _delta_base(args) -> Graph:
    """Delta-automorphisms act on the complement of the named graph unless ``--as-is``."""
    g = _family(args)
    return g if args.as_is else complement(g)


def cmd_census(args) -> int:
    g = _delta_base(args)
    census = enumerate_delta_automorphisms(g, args.max_aut_vertices)
    doc = {
        "family": args.family,
        "n": args.n,
        "complemented": not args.as_is,
        "vertices": g.n,
        "group_order": census.group_order,
        "delta_automorphisms": len(census.all),
        "count": census.count,
        "classes": [len(c) for c in census.classes],
        "representatives": [describe(r, g) for r in census.class_reps],
    }
    print(_dump(doc))
    return EXIT_OK


def parse_auto(g: Graph, spec: str, family: str, n: int | None, bound: int) -> Involution:
    """Parse ``pair``, ``i=K``, ``class=K`` or ``cycles=u-v;u-v;...`` into an involution.

    Cycle endpoints are vertex labels or indices; ``;`` separates cycles since
    labels such as ``{1,3}`` contain commas.
    """
    key, _, value = spec.partition("=")
    if key == "pair":
        if family != "triangular":
            raise InvalidArgument("the pair automorphism is defined on triangular graphs")
        return pair_automorphism_t(n)
    if key == "i":
        if family != "lattice":
            raise InvalidArgument("the i-automorphism is defined on lattice graphs")
        return i_automorphism(n, int(value))
    if key == "class":
        reps = enumerate_delta_automorphisms(g, bound).class_reps
        k = int(value)
        if not 0 <= k < len(reps):
            raise InvalidArgument(f"class index {k} out of range; {len(reps)} classes")
        return reps[k]
    if key == "cycles":
        cycles = []
        for item in value.split(";"):
            u, sep, v = item.partition("-")
            if not sep:
                raise InvalidArgument(f"malformed 2-cycle {item!r}")
            cycles.append((_resolve_vertex(g, u), _resolve_vertex(g, v)))
        return Involution.from_cycles(g.n, cycles)
    raise InvalidArgument(f"unknown automorphism spec {spec!r}")


def cmd_deza(args) -> int:
    g = _delta_base(args)
    try:
        phi = parse_auto(g, args.auto, args.family, args.n, args.max_aut_vertices)
    except ValueError as exc:
        raise InvalidArgument(str(exc)) from None
    _emit_graph(deza_from(g, phi))
    return EXIT_OK


def cmd_kappa(args) -> int:
    g = read_graph(args.input, args.labels)
    cert = vertex_connectivity(g, args.max_kappa_vertices)
    doc = {"n": g.n, **cert.to_json()}
    if args.certificate:
        _write_json(args.certificate, doc)
    print(_dump(doc))
    if args.expect is not None and cert.kappa != args.expect:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_verify_proof(args) -> int:
    if args.theorem == "L":
        ids = [args.i] if args.i is not None else list(range(1, args.n // 2 + 1))
    else:
        if args.i is not None:
            raise InvalidArgument("--i only applies to theorem L")
        ids = [None]
    summaries = [sweep(args.theorem, args.n, i).to_json() for i in ids]
    doc = {
        "theorem": args.theorem,
        "n": args.n,
        "passed": all(s["passed"] for s in summaries),
        "sweeps": summaries,
    }
    if args.json:
        _write_json(args.json, doc)
        doc = {**doc, "sweeps": [{k: v for k, v in s.items() if k != "records"} for s in summaries]}
    print(_dump(doc))
    return EXIT_OK if doc["passed"] else EXIT_CHECK_FAILED


def cmd_second_nbhd(args) -> int:
    g = read_graph(args.input, args.labels)
    vertices = [_resolve_vertex(g, args.vertex)] if args.vertex is not None else range(g.n)
    rows = []
    for v in vertices:
        comps = second_neighborhood_components(g, v)
        rows.append({
            "vertex": g.label(v),
            "size": sum(len(c) for c in comps),
            "components": [[g.label(u) for u in c] for c in comps],
            "all_cliques": all(is_clique(g, c) for c in comps),
        })
    print(_dump({"n": g.n, "vertices": rows}))
    return EXIT_OK


def cmd_paper_suite(args) -> int:
    bound = args.max_aut_vertices if args.max_aut_vertices is not None else 36
    doc = paper_suite(args.max_n, bound)
    text = json.dumps(doc, indent=2)
    if args.json:
        Path(args.json).write_text(text + "\n")
    print(text)
    return EXIT_OK if doc["passed"] else EXIT_CHECK_FAILED


# -- parser ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dezagraphs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    aut = _Parser(add_help=False)
    aut.add_argument("--max-aut-vertices", type=int, default=AUT_BOUND,
                     help=f"automorphism search bound (default {AUT_BOUND})")
    kap = _Parser(add_help=False)
    kap.add_argument("--max-kappa-vertices", type=int, default=KAPPA_BOUND,
                     help=f"connectivity bound (default {KAPPA_BOUND})")
    fam = _Parser(add_help=False)
    fam.add_argument("--family", required=True, choices=sorted(families.FAMILIES))
    fam.add_argument("--n", type=int, help="size parameter, or the variant for chang")
    inp = _Parser(add_help=False)
    inp.add_argument("--input", required=True, help="graph6 file, '-' for stdin")
    inp.add_argument("--labels", help="JSON label sidecar (overrides a second input line)")

    p = sub.add_parser("construct", parents=[fam], help="build a named graph")
    p.add_argument("--complement", action="store_true")
    p.add_argument("--labels", help="also write the labels to this file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("classify", parents=[inp], help="SRG and Deza parameters")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", parents=[fam, aut], help="count delta-automorphism classes")
    p.add_argument("--as-is", action="store_true", help="search the graph itself, not its complement")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("deza", parents=[fam, aut], help="build the Deza graph of a delta-automorphism")
    p.add_argument("--auto", required=True, help="pair | i=K | class=K | cycles=u-v;u-v;...")
    p.add_argument("--as-is", action="store_true", help="use the graph itself, not its complement")
    p.set_defaults(func=cmd_deza)

    p = sub.add_parser("kappa", parents=[inp, kap], help="vertex connectivity with certificate")
    p.add_argument("--certificate", help="write the certificate JSON here")
    p.add_argument("--expect", type=int, help="fail unless kappa equals this value")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("verify-proof", help="build and verify disjoint path families")
    p.add_argument("--theorem", required=True, choices=["T", "L"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, help="lattice automorphism index; all when omitted")
    p.add_argument("--json", help="write the full report, with per-pair choices, here")
    p.set_defaults(func=cmd_verify_proof)

    p = sub.add_parser("second-nbhd", parents=[inp], help="second-neighbourhood components")
    p.add_argument("--vertex", help="index or label; every vertex when omitted")
    p.set_defaults(func=cmd_second_nbhd)

    p = sub.add_parser("paper-suite", help="run every check and emit one JSON report")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-aut-vertices", type=int, default=None,
                   help="automorphism search bound (default 36, enough for L(6))")
    p.add_argument("--json", help="also write the report here")
    p.set_defaults(func=cmd_paper_suite)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_GRAPH
    except SearchBoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except DezaGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMETERS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
