"""Command-line interface: generate, solve, search densities, verify, render.

Exit codes: 0 success, 1 infeasible or not found, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from ._backend import backend_name
from .density import (
    DensityRecord,
    NoValidQuotientError,
    lift_check,
    required_radius,
    search,
)
from .formats import (
    GraphDocument,
    ParseError,
    document_from_graph,
    graph_from_document,
    load_document,
    serialize,
)
from .graph import FiniteGraph, NotBipartiteError
from .hamilton import (
    bipartite_balance,
    find_hamiltonian_cycle,
    hex_ball_cut_set,
    verify_cut,
)
from .lattice import FamilyKind, FamilySpec, VClass, VertexAddr, build_family, closed_form_counts
from .quotient import DegenerateQuotientError, LatticeQuotient, build_quotient, validate_quotient
from .render import render_svg
from .shares import share_report
from .solvers import (
    InfeasibleError,
    ParamKind,
    brute_force,
    solve,
    verify_witness,
)

#: Known density targets for the infinite lattice, used by ``tb density``
#: to grade search results (d = best density, f = best covered fraction).
DENSITY_TARGETS = {
    ParamKind.GAMMA: ("1/7 < d <= 1/5", lambda d: Fraction(1, 7) < d <= Fraction(1, 5)),
    ParamKind.GAMMA_OP: ("d = 2/9", lambda d: d == Fraction(2, 9)),
    ParamKind.LD: ("1/4 < d <= 8/27", lambda d: Fraction(1, 4) < d <= Fraction(8, 27)),
    ParamKind.IC: ("3/11 <= d <= 1/3", lambda d: Fraction(3, 11) <= d <= Fraction(1, 3)),
    ParamKind.OLD: ("d = 7/18", lambda d: d == Fraction(7, 18)),
    ParamKind.F_MAX: ("11/12 <= f < 1", lambda d: Fraction(11, 12) <= d < 1),
    ParamKind.F_OP_MAX: ("f = 1", lambda d: d == 1),
}


def _add_graph_source_args(p: argparse.ArgumentParser, with_input: bool = True):
    if with_input:
        p.add_argument("--input", help="read a graph file (edges, json, or dimacs)")
    p.add_argument("--family", choices=[k.value for k in FamilyKind])
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int, default=1)
    p.add_argument("--quotient", help="lattice quotient a,c,d")


def _parse_quotient(text: str) -> LatticeQuotient:
    try:
        a, c, d = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"quotient must be a,c,d integers, got {text!r}") from exc
    return LatticeQuotient(a, c, d)


def _resolve_graph(args) -> tuple[FiniteGraph, GraphDocument]:
    if getattr(args, "input", None):
        doc = load_document(args.input)
        return graph_from_document(doc), doc
    if args.family:
        if args.rows is None:
            raise ValueError("--family needs --rows")
        spec = FamilySpec(FamilyKind(args.family), args.rows, args.cols)
        g = build_family(spec)
        source = {"family": args.family, "rows": args.rows, "cols": args.cols}
        return g, document_from_graph(g, source)
    if args.quotient:
        q = _parse_quotient(args.quotient)
        g = build_quotient(q)
        return g, document_from_graph(g, {"quotient": [q.a, q.c, q.d]})
    raise ValueError("no graph given: use --input, --family, or --quotient")


def _parse_vertex_set(g: FiniteGraph, text: str) -> tuple[int, ...]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if ":" in tok:
            cls_s, i_s, j_s = tok.split(":")
            addr = VertexAddr(VClass[cls_s.upper()], int(i_s), int(j_s))
            try:
                out.append(g.index_of(addr))
            except KeyError:
                raise ValueError(f"vertex {addr} is not in the graph")
        else:
            out.append(int(tok))
    return tuple(out)


def _vertex_names(g: FiniteGraph, vs) -> str:
    if g.labels is not None:
        return ", ".join(str(g.labels[v]) for v in vs)
    return ", ".join(str(v) for v in vs)


def _write_output(text: str, path) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _doc_payload(doc: GraphDocument) -> dict:
    return {
        "format": "tumbling-graph/1",
        "source": doc.source,
        "vertices": list(doc.vertices),
        "edges": [list(e) for e in sorted(doc.edges)],
    }


def _emit(payload: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_gen(args) -> int:
    g, doc = _resolve_graph(args)
    _write_output(serialize(doc, args.format), args.output)
    if doc.source and "family" in doc.source:
        spec = FamilySpec(FamilyKind(doc.source["family"]), doc.source["rows"], doc.source["cols"])
        cn, cm = closed_form_counts(spec)
        print(f"n={g.n} m={g.m} (closed form: n={cn} m={cm})", file=sys.stderr)
    elif doc.source and "quotient" in doc.source:
        det = doc.source["quotient"][0] * doc.source["quotient"][2]
        print(f"n={g.n} m={g.m} (3*det={3 * det}, 6*det={6 * det})", file=sys.stderr)
    else:
        print(f"n={g.n} m={g.m}", file=sys.stderr)
    return 0


def cmd_solve(args) -> int:
    g, doc = _resolve_graph(args)
    kind = ParamKind(args.param)
    result = brute_force(g, kind) if args.brute else solve(g, kind)
    print(f"{kind.value} = {result.value}")
    print(f"witness: {_vertex_names(g, result.witness)}")
    ok = verify_witness(g, kind, result.witness, result.value)
    print(f"verification: {'OK' if ok else 'FAIL'}")
    print(
        f"stats: nodes={result.stats.nodes} elapsed={result.stats.elapsed:.3f}s "
        f"backend={backend_name()}"
    )
    if args.emit:
        _emit(
            {
                "type": "solve",
                "param": kind.value,
                "graph": _doc_payload(doc),
                "value": result.value,
                "witness": list(result.witness),
            },
            args.emit,
        )
    return 0 if ok else 1


def cmd_density(args) -> int:
    kind = ParamKind(args.param)
    record = search(kind, args.max_det)
    q = record.quotient
    print(f"{kind.value} best density: {record.density}")
    print(f"quotient: a={q.a} c={q.c} d={q.d} (det={q.det}, {3 * q.det} vertices)")
    print(f"pattern: {', '.join(str(a) for a in record.witness_addresses())}")
    label, good = DENSITY_TARGETS[kind]
    print(f"target: {label} -> {'met' if good(record.density) else 'NOT met'}")
    if args.emit:
        _emit(_density_payload(record), args.emit)
    return 0


def _density_payload(record: DensityRecord) -> dict:
    q = record.quotient
    return {
        "type": "density",
        "param": record.kind.value,
        "quotient": [q.a, q.c, q.d],
        "size": record.size,
        "density": str(record.density),
        "witness": list(record.witness),
        "validated_radius": record.validated_radius,
        "exact_cover": record.exact_cover,
    }


def cmd_shares(args) -> int:
    g, _doc = _resolve_graph(args)
    S = _parse_vertex_set(g, args.set)
    g.check_vertex_set(S)
    # report the first uncovered vertex rather than a bare failure
    sset = frozenset(S)
    for v in range(g.n):
        hits = sum(1 for x in g.adj[v] if x in sset)
        if not args.open and v in sset:
            hits += 1
        if hits == 0:
            name = g.labels[v] if g.labels else v
            raise InfeasibleError(
                f"set is not {'open-' if args.open else ''}dominating: "
                f"vertex {name} is uncovered"
            )
    report = share_report(g, S, open_variant=args.open)
    for v, sh in report.shares.items():
        name = g.labels[v] if g.labels else v
        print(f"{name}: {sh}")
        if not args.open and report.private.get(v):
            print(f"  private neighbors: {_vertex_names(g, report.private[v])}")
    print(f"total: {report.total}")
    return 0


def cmd_verify(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON record: {exc}") from exc
    rtype = payload.get("type")
    if rtype == "solve":
        ok = _verify_solve_record(payload)
    elif rtype == "density":
        ok = _verify_density_record(payload)
    elif rtype == "cut":
        ok = _verify_cut_record(payload)
    else:
        raise ParseError(f"unknown record type {rtype!r}")
    print("OK" if ok else "FAIL")
    return 0 if ok else 1


def _graph_from_payload(payload: dict) -> FiniteGraph:
    from .formats import parse_document

    return graph_from_document(parse_document(json.dumps(payload)))


def _verify_solve_record(payload: dict) -> bool:
    g = _graph_from_payload(payload["graph"])
    kind = ParamKind(payload["param"])
    return verify_witness(g, kind, payload["witness"], payload["value"])


def _verify_density_record(payload: dict) -> bool:
    a, c, d = payload["quotient"]
    q = LatticeQuotient(a, c, d)
    kind = ParamKind(payload["param"])
    radius = payload["validated_radius"]
    if radius < required_radius(kind) or not validate_quotient(q, radius):
        return False
    g = build_quotient(q)
    witness = tuple(payload["witness"])
    density = Fraction(payload["density"])
    record = DensityRecord(
        kind=kind,
        quotient=q,
        size=payload["size"],
        density=density,
        witness=witness,
        validated_radius=radius,
        exact_cover=payload.get("exact_cover", False),
    )
    if record.exact_cover:
        if not verify_witness(g, kind, witness, g.n):
            return False
        if len(witness) != record.size or density != Fraction(record.size, 3 * q.det):
            return False
    else:
        if not verify_witness(g, kind, witness, record.size):
            return False
        if density != Fraction(record.size, 3 * q.det):
            return False
    side = max(12, 2 * radius + 2)
    return lift_check(record, side, side)


def _verify_cut_record(payload: dict) -> bool:
    g = _graph_from_payload(payload["graph"])
    cert = verify_cut(g, payload["removed"])
    return (
        cert.components_after == payload["components_after"]
        and cert.isolated_after == payload["isolated_after"]
    )


def cmd_hamilton(args) -> int:
    g, doc = _resolve_graph(args)
    a, b, balanced = bipartite_balance(g)
    print(f"bipartition sizes: {a}, {b} ({'balanced' if balanced else 'unbalanced'})")
    if not balanced:
        print("unbalanced bipartition: no hamiltonian cycle")
    cert = None
    if args.cut:
        ci, cj = (int(x) for x in args.cut.split(","))
        addrs = hex_ball_cut_set(ci, cj)
        missing = [a_ for a_ in addrs if not g.has_label(a_)]
        if missing:
            raise ValueError(f"cut vertices outside graph: {missing[:3]} ...")
        S = [g.index_of(a_) for a_ in addrs]
        cert = verify_cut(g, S)
        print(
            f"cut of {len(S)} vertices leaves {cert.components_after} components, "
            f"{cert.isolated_after} isolated"
        )
        print(f"certificate: {'valid (components > removed)' if cert.certifies else 'inconclusive'}")
    if args.search:
        cycle = find_hamiltonian_cycle(g)
        if cycle is None:
            print("exhaustive search: no hamiltonian cycle")
        else:
            print(f"hamiltonian cycle: {_vertex_names(g, cycle)}")
    if args.emit and cert is not None:
        _emit(
            {
                "type": "cut",
                "graph": _doc_payload(doc),
                "removed": list(cert.removed),
                "components_after": cert.components_after,
                "isolated_after": cert.isolated_after,
            },
            args.emit,
        )
    return 0


def cmd_render(args) -> int:
    g, _doc = _resolve_graph(args)
    highlight = _parse_vertex_set(g, args.set) if args.set else ()
    g.check_vertex_set(highlight)
    _write_output(render_svg(g, highlight=highlight, scale=args.scale), args.output)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tb",
        description="Tumbling-block lattice graphs: generation, exact domination-type "
        "solvers, periodic density search, share analysis, and rendering.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph file")
    _add_graph_source_args(p, with_input=False)
    p.add_argument("--format", choices=["edges", "json", "dimacs"], default="edges")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="solve a parameter exactly")
    _add_graph_source_args(p)
    p.add_argument("--param", required=True, choices=[k.value for k in ParamKind])
    p.add_argument("--brute", action="store_true", help="use the enumeration oracle")
    p.add_argument("--emit", help="write a verifiable result record (JSON)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("density", help="search periodic patterns on quotients")
    p.add_argument("--param", required=True, choices=[k.value for k in ParamKind])
    p.add_argument("--max-det", type=int, default=12)
    p.add_argument("--emit", help="write a verifiable density record (JSON)")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("shares", help="exact share report for a dominating set")
    _add_graph_source_args(p)
    p.add_argument("--set", required=True, help="vertices: 'w:1:1,u:2:1' or '0,4'")
    p.add_argument("--open", action="store_true", help="open shares instead of shares")
    p.set_defaults(func=cmd_shares)

    p = sub.add_parser("verify", help="re-check an emitted record")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hamilton", help="non-hamiltonicity evidence")
    _add_graph_source_args(p)
    p.add_argument("--cut", help="anchor i,j for the 19-vertex cut certificate")
    p.add_argument("--search", action="store_true", help="exhaustive cycle search (n <= 30)")
    p.add_argument("--emit", help="write a verifiable cut record (JSON)")
    p.set_defaults(func=cmd_hamilton)

    p = sub.add_parser("render", help="render a labeled graph to SVG")
    _add_graph_source_args(p)
    p.add_argument("--set", help="vertices to highlight")
    p.add_argument("--scale", type=float, default=30.0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InfeasibleError, NoValidQuotientError, DegenerateQuotientError, NotBipartiteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
