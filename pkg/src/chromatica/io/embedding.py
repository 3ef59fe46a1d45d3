"""Embedding documents: versioned JSON carrying edges, coordinates and rotations.

Schema (version 1)::

    {
      "format": "chromatica-embedding",
      "version": 1,
      "name": "dodecahedral",          # optional
      "n": 20,
      "edges": [[0, 1], ...],          # 0-based node pairs
      "coordinates": [[x, y], ...],    # optional, one pair per node
      "rotation": [[w, ...], ...]      # optional, counterclockwise neighbour order per node
    }
"""

from __future__ import annotations

import json
import math

from ..errors import ChromaticaError, EmbeddingError, ParseError
from ..graph import Graph
from ..transforms import RotationSystem
from .document import MAX_NODES, GraphDocument

FORMAT = "chromatica-embedding"
VERSION = 1


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def _pairs(value, what: str):
    if not isinstance(value, list):
        raise ParseError(f"{what} must be a list")
    out = []
    for i, item in enumerate(value):
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError(f"{what}[{i}] must be a two-element list")
        out.append(item)
    return out


def parse_embedding(text: str | bytes) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.pos) from None
    except (UnicodeDecodeError, RecursionError, ValueError) as exc:
        raise ParseError(f"unreadable embedding document: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("embedding document must be a JSON object")
    if data.get("format") != FORMAT:
        raise ParseError(f"not a {FORMAT} document")
    if data.get("version") != VERSION:
        raise ParseError(f"unsupported embedding version {data.get('version')!r}")
    n = _int(data.get("n"), "n")
    if n > MAX_NODES:
        raise ParseError(f"n={n} exceeds the supported maximum {MAX_NODES}")
    edges = [(_int(u, "edge endpoint"), _int(v, "edge endpoint")) for u, v in _pairs(data.get("edges"), "edges")]
    try:
        g = Graph(n, edges)
    except ChromaticaError as exc:
        raise ParseError(str(exc)) from exc

    coords = None
    if data.get("coordinates") is not None:
        coords = []
        for x, y in _pairs(data["coordinates"], "coordinates"):
            if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, (int, float)) \
                    or not isinstance(y, (int, float)):
                raise ParseError("coordinates must be numbers")
            coords.append((float(x), float(y)))
        coords = tuple(coords)

    rotation = None
    if data.get("rotation") is not None:
        rot = data["rotation"]
        if not isinstance(rot, list) or len(rot) != n:
            raise ParseError("rotation must list one neighbour sequence per node")
        cyc = []
        for v, seq in enumerate(rot):
            if not isinstance(seq, list):
                raise EmbeddingError(f"rotation at node {v} must be a list", node=v)
            cyc.append(tuple(_int(w, f"rotation[{v}] entry") for w in seq))
        rotation = RotationSystem(tuple(cyc))

    meta = {"source": "embedding"}
    if isinstance(data.get("name"), str):
        meta["name"] = data["name"]
    return GraphDocument(g, coords, rotation, meta)


def write_embedding(doc: GraphDocument) -> str:
    out = {"format": FORMAT, "version": VERSION}
    if doc.name:
        out["name"] = doc.name
    out["n"] = doc.graph.n
    out["edges"] = [list(e) for e in doc.graph.edges]
    if doc.coordinates is not None:
        if not all(math.isfinite(c) for p in doc.coordinates for c in p):
            raise EmbeddingError("coordinates must be finite")
        out["coordinates"] = [list(p) for p in doc.coordinates]
    if doc.rotation is not None:
        out["rotation"] = [list(r) for r in doc.rotation.rotation]
    # one top-level key per line and one pair/list per line keeps diffs readable
    lines = []
    for key, value in out.items():
        if isinstance(value, list):
            body = ",\n".join("  " + json.dumps(item) for item in value)
            lines.append(f" {json.dumps(key)}: [\n{body}\n ]" if value else f" {json.dumps(key)}: []")
        else:
            lines.append(f" {json.dumps(key)}: {json.dumps(value)}")
    return "{\n" + ",\n".join(lines) + "\n}\n"
