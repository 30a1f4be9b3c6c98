"""JSON document formats and DOT export.

All writers emit canonical documents (sorted canonical edges, fixed key
order, two-space indent, trailing newline), so write -> read -> write is
byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

from .coloring import EdgeColoring
from .errors import EdgexError
from .extension import Precoloring
from .families import FiberEdge, LayerEdge, ProductGraph
from .graph import Graph, build_graph, canonical_edge


class FormatError(EdgexError):
    """A document does not match its schema."""


def graph_to_dict(g: Graph, name: str = "graph") -> dict:
    return {
        "name": name,
        "vertices": list(g.labels),
        "edges": [[u, v] for (u, v) in g.edges],
    }


def graph_from_dict(doc: dict) -> tuple[str, Graph]:
    try:
        name = doc["name"]
        vertices = doc["vertices"]
        edges = [tuple(e) for e in doc["edges"]]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"graph document missing field: {exc}") from exc
    if not isinstance(name, str) or not all(isinstance(x, str) for x in vertices):
        raise FormatError("graph name and vertex labels must be strings")
    if not all(len(e) == 2 and all(isinstance(i, int) for i in e) for e in edges):
        raise FormatError("edges must be pairs of integers")
    return name, build_graph(vertices, edges)


def product_to_dict(p: ProductGraph, name: str = "product") -> dict:
    doc = graph_to_dict(p.graph, name)
    kinds = []
    for e in p.graph.edges:
        k = p.edge_kind[e]
        if isinstance(k, LayerEdge):
            kinds.append(["L", k.base_edge[0], k.base_edge[1], k.right_vertex])
        else:
            kinds.append(["F", k.base_vertex, k.right_edge[0], k.right_edge[1]])
    doc["product"] = {
        "left": p.left_order,
        "right": p.right_order,
        "edge_kinds": kinds,
    }
    return doc


def product_from_dict(doc: dict) -> tuple[str, ProductGraph]:
    name, graph = graph_from_dict(doc)
    try:
        meta = doc["product"]
        left = meta["left"]
        right = meta["right"]
        kinds = meta["edge_kinds"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"product document missing field: {exc}") from exc
    if len(kinds) != len(graph.edges):
        raise FormatError("edge_kinds length differs from edge count")
    edge_kind: dict = {}
    for e, raw in zip(graph.edges, kinds):
        tag = raw[0] if raw else None
        if tag == "L" and len(raw) == 4:
            edge_kind[e] = LayerEdge(base_edge=canonical_edge(raw[1], raw[2]), right_vertex=raw[3])
        elif tag == "F" and len(raw) == 4:
            edge_kind[e] = FiberEdge(base_vertex=raw[1], right_edge=canonical_edge(raw[2], raw[3]))
        else:
            raise FormatError(f"bad edge kind entry {raw!r}")
    return name, ProductGraph(graph=graph, left_order=left, right_order=right, edge_kind=edge_kind)


def coloring_to_dict(col: EdgeColoring) -> dict:
    return {
        "palette_size": col.palette_size,
        "assignment": [
            {"u": e[0], "v": e[1], "color": c} for e, c in sorted(col.assignment.items())
        ],
    }


def _edge_color_rows(doc: dict, key: str) -> tuple[int, dict]:
    try:
        palette = doc["palette_size"]
        rows = doc[key]
        mapping = {canonical_edge(r["u"], r["v"]): r["color"] for r in rows}
    except (KeyError, TypeError) as exc:
        raise FormatError(f"document missing field: {exc}") from exc
    if not isinstance(palette, int):
        raise FormatError("palette_size must be an integer")
    if not all(
        isinstance(x, int) for r in rows for x in (r["u"], r["v"], r["color"])
    ):
        raise FormatError(f"{key} rows must hold integer u, v, color")
    if len(mapping) != len(rows):
        raise FormatError(f"duplicate edge in {key}")
    return palette, mapping


def coloring_from_dict(doc: dict) -> EdgeColoring:
    palette, assignment = _edge_color_rows(doc, "assignment")
    return EdgeColoring(palette_size=palette, assignment=assignment)


def precoloring_to_dict(pre: Precoloring) -> dict:
    return {
        "palette_size": pre.palette_size,
        "entries": [
            {"u": e[0], "v": e[1], "color": c} for e, c in sorted(pre.entries.items())
        ],
    }


def precoloring_from_dict(doc: dict) -> Precoloring:
    palette, entries = _edge_color_rows(doc, "entries")
    return Precoloring(palette_size=palette, entries=entries)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def write_doc(path: str | Path, doc: dict) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")


def read_doc(path: str | Path) -> dict:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError(f"{path}: top-level value must be an object")
    return doc


# 16 named X11/graphviz colors; edge color index c uses entry (c-1) mod 16
DOT_COLORS = (
    "red",
    "blue",
    "forestgreen",
    "orange",
    "purple",
    "brown",
    "cyan3",
    "magenta",
    "gold",
    "darkgreen",
    "navy",
    "salmon",
    "turquoise4",
    "violetred",
    "gray40",
    "olivedrab",
)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, coloring: EdgeColoring | None = None, name: str = "graph") -> str:
    """Render the graph as DOT; with a coloring, edges carry color attributes."""
    lines = [f"graph {_quote(name)} {{", "  node [shape=circle];"]
    for label in g.labels:
        lines.append(f"  {_quote(label)};")
    for e in g.edges:
        left = _quote(g.labels[e[0]])
        right = _quote(g.labels[e[1]])
        if coloring is not None and e in coloring.assignment:
            c = coloring.assignment[e]
            dot_color = DOT_COLORS[(c - 1) % len(DOT_COLORS)]
            lines.append(f'  {left} -- {right} [color={dot_color} label="{c}"];')
        else:
            lines.append(f"  {left} -- {right};")
    lines.append("}")
    return "\n".join(lines) + "\n"
