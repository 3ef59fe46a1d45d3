"""Verification, edge classes, closed-form bounds and colour-coded walks."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import isqrt
from typing import Sequence

from .colouring.types import Colouring
from .errors import ChromaticaError, GraphError
from .graph import Graph, max_degree
from .transforms import FaceSet


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    clash_list: tuple[tuple, ...]
    k: int


def verify(g: Graph, colouring: Colouring, faces: FaceSet | None = None) -> VerificationReport:
    """Scan every adjacent pair of elements for equal labels.

    ``g`` is always the original graph. Node colourings are checked along
    edges, edge colourings at every node (pairs of incident edges), and face
    colourings across every edge, which needs the traced ``faces``.
    Clashes are reported as pairs of element indices.
    """
    labels = colouring.assignment
    clashes: list[tuple] = []
    if colouring.kind == "node":
        if len(labels) != g.n:
            raise GraphError(f"colouring has {len(labels)} labels for {g.n} nodes")
        clashes = [(u, v) for u, v in g.edges if labels[u] == labels[v]]
    elif colouring.kind == "edge":
        if len(labels) != g.m:
            raise GraphError(f"colouring has {len(labels)} labels for {g.m} edges")
        seen = set()
        for v in range(g.n):
            incident = [g.index_of_edge(v, w) for w in g.adj[v]]
            for a, b in combinations(sorted(incident), 2):
                if labels[a] == labels[b] and (a, b) not in seen:
                    seen.add((a, b))
                    clashes.append((a, b))
        clashes.sort()
    elif colouring.kind == "face":
        if faces is None:
            raise GraphError("verifying a face colouring needs the traced faces")
        if len(labels) != faces.f:
            raise GraphError(f"colouring has {len(labels)} labels for {faces.f} faces")
        where = faces.face_of_dart()
        found = set()
        for u, v in g.edges:
            a, b = sorted((where[(u, v)], where[(v, u)]))
            if a != b and labels[a] == labels[b]:
                found.add((a, b))
        clashes = sorted(found)
    else:
        raise GraphError(f"unknown colouring kind {colouring.kind!r}")
    return VerificationReport(not clashes, tuple(clashes), len(set(labels)))


class EdgeClass(enum.Enum):
    CLASS1 = "Class1"
    CLASS2 = "Class2"
    UNKNOWN = "Unknown"


def edge_class(g: Graph, certified_chromatic_index: int | None = None) -> EdgeClass:
    """Class 1 if the certified chromatic index equals the maximum degree, Class 2 if one more."""
    if certified_chromatic_index is None:
        return EdgeClass.UNKNOWN
    delta = max_degree(g)
    if certified_chromatic_index == delta:
        return EdgeClass.CLASS1
    if certified_chromatic_index == delta + 1:
        return EdgeClass.CLASS2
    raise GraphError(
        f"chromatic index {certified_chromatic_index} is outside the Vizing window {{{delta}, {delta + 1}}}"
    )


def heawood_bound(h: int) -> int:
    """floor((7 + sqrt(1 + 48h)) / 2) for an h-holed torus, in exact integer arithmetic.

    With s = isqrt(1 + 48h) the true root lies in [s, s + 1), and the floor of
    (7 + root) / 2 equals (7 + s) // 2 in every case.
    """
    if h < 1:
        raise ValueError(f"the bound applies to surfaces with h >= 1 holes, got {h}")
    return (7 + isqrt(1 + 48 * h)) // 2


def euler_check(n: int, m: int, f: int) -> bool:
    return n - m + f == 2


class WalkError(ChromaticaError, ValueError):
    pass


@dataclass(frozen=True)
class WalkCode:
    start: int
    colour_sequence: tuple[int, ...]


def encode_walk(g: Graph, edge_colouring: Colouring, walk: Sequence[int]) -> WalkCode:
    if not walk:
        raise WalkError("a walk needs a start node")
    labels = edge_colouring.assignment
    code = []
    for u, v in zip(walk, walk[1:]):
        if not g.has_edge(u, v):
            raise WalkError(f"walk steps from {u} to non-neighbour {v}")
        code.append(labels[g.index_of_edge(u, v)])
    return WalkCode(walk[0], tuple(code))


def decode_walk(g: Graph, edge_colouring: Colouring, code: WalkCode) -> list[int]:
    """Replay a walk by following, at each node, the unique edge with the next colour."""
    labels = edge_colouring.assignment
    if not 0 <= code.start < g.n:
        raise WalkError(f"start node {code.start} is not in the graph")
    out = [code.start]
    here = code.start
    for step, colour in enumerate(code.colour_sequence):
        nxt = [w for w in g.adj[here] if labels[g.index_of_edge(here, w)] == colour]
        if not nxt:
            raise WalkError(f"walk leaves the graph: no edge of colour {colour} at node {here} (step {step})")
        if len(nxt) > 1:
            raise WalkError(f"edge colouring is invalid: colour {colour} repeats at node {here}")
        here = nxt[0]
        out.append(here)
    return out
