"""DIMACS ``.col`` colouring instances (1-based ``e u v`` lines)."""

from __future__ import annotations

from ..errors import GraphError, ParseError
from ..graph import Graph
from .document import MAX_NODES, GraphDocument


def parse_dimacs(text: str) -> GraphDocument:
    n = m = None
    header_line = None
    edges = []
    comments = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "c":
            comments.append(line[1:].strip())
        elif tag == "p":
            if header_line is not None:
                raise ParseError(f"duplicate problem line (first on line {header_line})", line=lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError("problem line must read 'p edge <n> <m>'", line=lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError("node and edge counts must be integers", line=lineno) from None
            if n < 1 or m < 0:
                raise ParseError(f"invalid counts n={n} m={m}", line=lineno)
            if n > MAX_NODES:
                raise ParseError(f"n={n} exceeds the supported maximum {MAX_NODES}", line=lineno)
            header_line = lineno
        elif tag == "e":
            if header_line is None:
                raise ParseError("edge line before the problem line", line=lineno)
            if len(parts) != 3:
                raise ParseError("edge line must read 'e <u> <v>'", line=lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("edge endpoints must be integers", line=lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"edge ({u}, {v}) has an endpoint outside 1..{n}", line=lineno)
            if u == v:
                raise ParseError(f"self-loop at node {u}", line=lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {tag!r}", line=lineno)
    if header_line is None:
        raise ParseError("missing 'p edge <n> <m>' problem line")
    if len(edges) != m:
        raise ParseError(f"problem line declares {m} edges but {len(edges)} were listed", line=header_line)
    try:
        g = Graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
    meta = {"source": "dimacs"}
    if comments:
        # the first comment carries the graph name, as written by write_dimacs
        meta["comments"] = comments
        meta["name"] = comments[0]
    return GraphDocument(g, metadata=meta)


def write_dimacs(doc: GraphDocument | Graph) -> str:
    g = doc.graph if isinstance(doc, GraphDocument) else doc
    lines = []
    name = doc.name if isinstance(doc, GraphDocument) else ""
    if name:
        lines.append(f"c {name}")
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
