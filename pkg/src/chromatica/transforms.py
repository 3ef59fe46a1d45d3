"""Reductions of edge and face colouring to node colouring.

Embeddings are rotation systems: for every node, the counterclockwise cyclic
order of its neighbours. Faces are traced with the rule "from dart (u, v)
continue with (v, w), where w immediately precedes u in the rotation at v",
which walks bounded faces counterclockwise and the unbounded face clockwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import BridgeError, DisconnectedError, EmbeddingError, GraphError
from .generators import EmbeddedGraph
from .graph import Graph, is_connected

Dart = tuple[int, int]


@dataclass(frozen=True)
class LineGraphResult:
    line_graph: Graph
    edge_of_node: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class RotationSystem:
    rotation: tuple[tuple[int, ...], ...]

    def validate(self, g: Graph) -> None:
        if len(self.rotation) != g.n:
            raise EmbeddingError(f"rotation covers {len(self.rotation)} nodes, graph has {g.n}")
        for v, (rot, nbrs) in enumerate(zip(self.rotation, g.adj)):
            if len(rot) != len(nbrs) or sorted(rot) != list(nbrs):
                raise EmbeddingError(f"rotation at node {v} is not a permutation of its neighbours", node=v)


@dataclass(frozen=True)
class FaceSet:
    """Faces as closed walks of darts; every dart lies in exactly one face."""

    faces: tuple[tuple[Dart, ...], ...]

    @property
    def f(self) -> int:
        return len(self.faces)

    def boundary_nodes(self, i: int) -> list[int]:
        return [u for u, _ in self.faces[i]]

    def face_of_dart(self) -> dict[Dart, int]:
        return {d: i for i, face in enumerate(self.faces) for d in face}


@dataclass(frozen=True)
class DualGraphResult:
    dual: Graph
    face_of_node: tuple[int, ...]
    unbounded_face: int
    faces: FaceSet


def line_graph(g: Graph) -> LineGraphResult:
    """L(G) with node i standing for ``g.edges[i]``."""
    if g.m == 0:
        raise GraphError("no edges to colour")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = []
    for inc in incident:
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                pairs.append((inc[a], inc[b]))
    return LineGraphResult(Graph(g.m, pairs), g.edges)


def rotation_from_coordinates(eg: EmbeddedGraph) -> RotationSystem:
    """Sort each node's neighbours by counterclockwise angle around it."""
    coords = eg.coordinates
    if len(set(coords)) != len(coords):
        seen: dict[tuple[float, float], int] = {}
        for v, p in enumerate(coords):
            if p in seen:
                raise EmbeddingError(f"nodes {seen[p]} and {v} share coordinates {p}", node=v)
            seen[p] = v
    rotation = []
    for v, nbrs in enumerate(eg.graph.adj):
        x0, y0 = coords[v]
        angles = [(math.atan2(coords[w][1] - y0, coords[w][0] - x0), w) for w in nbrs]
        angles.sort()
        for (a1, w1), (a2, w2) in zip(angles, angles[1:]):
            if a1 == a2:
                raise EmbeddingError(f"edges {v}-{w1} and {v}-{w2} leave node {v} in the same direction", node=v)
        rotation.append(tuple(w for _, w in angles))
    return RotationSystem(tuple(rotation))


def trace_faces(g: Graph, rot: RotationSystem) -> FaceSet:
    if not is_connected(g):
        raise DisconnectedError("face tracing needs a connected graph")
    rot.validate(g)
    if g.m == 0:
        return FaceSet(((),))
    position = [{w: i for i, w in enumerate(r)} for r in rot.rotation]
    seen: set[Dart] = set()
    faces = []
    for u0, v0 in g.edges:
        for start in ((u0, v0), (v0, u0)):
            if start in seen:
                continue
            walk = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                walk.append(dart)
                u, v = dart
                r = rot.rotation[v]
                w = r[(position[v][u] - 1) % len(r)]
                dart = (v, w)
            faces.append(tuple(walk))
    return FaceSet(tuple(faces))


def signed_area(face: Sequence[Dart], coords) -> float:
    total = 0.0
    for u, v in face:
        (x1, y1), (x2, y2) = coords[u], coords[v]
        total += x1 * y2 - x2 * y1
    return total / 2


def dual_graph(g: Graph, rot: RotationSystem, coordinates=None) -> DualGraphResult:
    """Face-adjacency graph of the embedding; dual node i is face i.

    With coordinates, the unbounded face is the one enclosing the largest
    area (it is the only clockwise walk, so its signed area is most
    negative). Without them it is the longest walk, lowest index on ties.
    """
    faces = trace_faces(g, rot)
    where = faces.face_of_dart()
    dual_edges = set()
    for u, v in g.edges:
        a, b = where[(u, v)], where[(v, u)]
        if a == b:
            raise BridgeError((u, v))
        dual_edges.add((a, b) if a < b else (b, a))
    if coordinates is not None:
        areas = [signed_area(face, coordinates) for face in faces.faces]
        unbounded = min(range(faces.f), key=lambda i: (areas[i], i))
    else:
        unbounded = min(range(faces.f), key=lambda i: (-len(faces.faces[i]), i))
    dual = Graph(faces.f, dual_edges)
    return DualGraphResult(dual, tuple(range(faces.f)), unbounded, faces)
