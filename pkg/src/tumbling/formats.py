"""Graph documents and their serializations (edge list, JSON, DIMACS).

A :class:`GraphDocument` is the lossless interchange form: vertex records in
canonical order (with lattice addresses when known), an edge list over ids,
and the generator descriptor so files can be regenerated bit-identically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .graph import FiniteGraph
from .lattice import (
    FamilyKind,
    FamilySpec,
    VClass,
    VertexAddr,
    build_family,
)
from .quotient import LatticeQuotient, build_quotient

FORMAT_VERSION = "tumbling-graph/1"


class ParseError(ValueError):
    """Input text is not a recognized graph format."""


@dataclass(frozen=True)
class GraphDocument:
    source: Optional[dict]
    vertices: tuple[dict, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)


def document_from_graph(g: FiniteGraph, source: Optional[dict] = None) -> GraphDocument:
    if g.labels is not None:
        vertices = tuple(
            {"id": k, "cls": str(lab.cls), "i": lab.i, "j": lab.j}
            for k, lab in enumerate(g.labels)
        )
    else:
        vertices = tuple({"id": k} for k in range(g.n))
    return GraphDocument(source=source, vertices=vertices, edges=tuple(sorted(g.edges())))


def graph_from_document(doc: GraphDocument) -> FiniteGraph:
    labels = None
    if doc.vertices and "cls" in doc.vertices[0]:
        labels = [
            VertexAddr(VClass[vr["cls"].upper()], vr["i"], vr["j"]) for vr in doc.vertices
        ]
    return FiniteGraph.from_edges(doc.n, doc.edges, labels=labels)


def graph_from_source(source: dict) -> FiniteGraph:
    if "family" in source:
        spec = FamilySpec(
            FamilyKind(source["family"]), source["rows"], source.get("cols", 1)
        )
        return build_family(spec)
    if "quotient" in source:
        a, c, d = source["quotient"]
        return build_quotient(LatticeQuotient(a, c, d))
    raise ParseError(f"unrecognized graph source {source!r}")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def to_edge_list(doc: GraphDocument) -> str:
    lines = [f"p {doc.n} {doc.m}"]
    lines += [f"{a} {b}" for a, b in sorted(doc.edges)]
    return "\n".join(lines) + "\n"


def to_dimacs(doc: GraphDocument) -> str:
    lines = [f"p edge {doc.n} {doc.m}"]
    lines += [f"e {a + 1} {b + 1}" for a, b in sorted(doc.edges)]
    return "\n".join(lines) + "\n"


def to_json(doc: GraphDocument) -> str:
    payload = {
        "format": FORMAT_VERSION,
        "source": doc.source,
        "vertices": list(doc.vertices),
        "edges": [list(e) for e in sorted(doc.edges)],
    }
    return json.dumps(payload, indent=1) + "\n"


SERIALIZERS = {"edges": to_edge_list, "json": to_json, "dimacs": to_dimacs}


def serialize(doc: GraphDocument, fmt: str) -> str:
    try:
        return SERIALIZERS[fmt](doc)
    except KeyError:
        raise ParseError(f"unknown format {fmt!r} (choose from {sorted(SERIALIZERS)})")


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _parse_edge_header(line: str, dimacs: bool) -> tuple[int, int]:
    parts = line.split()
    want = 4 if dimacs else 3
    if len(parts) != want:
        raise ParseError(f"malformed header line {line!r}")
    try:
        return int(parts[-2]), int(parts[-1])
    except ValueError as exc:
        raise ParseError(f"malformed header line {line!r}") from exc


def parse_document(text: str) -> GraphDocument:
    """Parse any supported format, sniffing by leading characters."""
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty input")
    if stripped.startswith("{"):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from exc
        if payload.get("format") != FORMAT_VERSION:
            raise ParseError(f"unsupported document format {payload.get('format')!r}")
        vertices = []
        for vr in payload["vertices"]:
            if "cls" in vr:
                vertices.append(
                    {"id": int(vr["id"]), "cls": vr["cls"], "i": int(vr["i"]), "j": int(vr["j"])}
                )
            else:
                vertices.append({"id": int(vr["id"])})
        edges = tuple(sorted((int(a), int(b)) for a, b in payload["edges"]))
        return GraphDocument(source=payload.get("source"), vertices=tuple(vertices), edges=edges)
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("c")]
    if not lines or not lines[0].startswith("p"):
        raise ParseError("expected 'p' header line")
    dimacs = lines[0].split()[:2] == ["p", "edge"]
    n, m = _parse_edge_header(lines[0], dimacs)
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if dimacs:
            if len(parts) != 3 or parts[0] != "e":
                raise ParseError(f"malformed edge line {ln!r}")
            parts = parts[1:]
        elif len(parts) != 2:
            raise ParseError(f"malformed edge line {ln!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"malformed edge line {ln!r}") from exc
        if dimacs:
            a, b = a - 1, b - 1
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"edge {a} {b} out of range for n={n}")
        edges.append((a, b) if a < b else (b, a))
    if len(edges) != m:
        raise ParseError(f"header promised {m} edges, found {len(edges)}")
    vertices = tuple({"id": k} for k in range(n))
    return GraphDocument(source=None, vertices=vertices, edges=tuple(sorted(edges)))


def load_document(path: str) -> GraphDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_document(fh.read())


def load_graph(path: str) -> FiniteGraph:
    return graph_from_document(load_document(path))
