"""Algorithm dispatch for node colouring and the edge/face reductions."""

from __future__ import annotations

from typing import Sequence

from ..generators import EmbeddedGraph
from ..graph import Graph, greedy_clique, max_degree
from ..transforms import DualGraphResult, RotationSystem, dual_graph, line_graph, rotation_from_coordinates
from .evolutionary import hea_colour
from .exact import backtracking_colour
from .greedy import dsatur_colour, greedy_colour
from .types import Colouring, HeaParams, OptimalityCertificate

ALGORITHMS = ("greedy", "dsatur", "backtracking", "hea")


def colour_nodes(
    g: Graph,
    algorithm: str = "dsatur",
    *,
    node_limit: int | None = None,
    hea_params: HeaParams | None = None,
    order: Sequence[int] | None = None,
) -> tuple[Colouring, OptimalityCertificate]:
    if algorithm == "backtracking":
        return backtracking_colour(g, node_limit)
    if algorithm == "hea":
        return hea_colour(g, hea_params)
    if algorithm == "dsatur":
        result = dsatur_colour(g)
    elif algorithm == "greedy":
        result = greedy_colour(g, list(range(g.n)) if order is None else order)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {', '.join(ALGORITHMS)}")
    bound = greedy_clique(g).size
    return result, OptimalityCertificate(bound, result.k, result.k == bound)


def colour_edges(g: Graph, algorithm: str = "backtracking", **budget) -> Colouring:
    """Edge colouring via the line graph; element i is ``g.edges[i]``."""
    lg = line_graph(g)
    nodes, cert = colour_nodes(lg.line_graph, algorithm, **budget)
    delta = max_degree(g)
    lower = max(delta, cert.lower_bound)
    cert = OptimalityCertificate(lower, nodes.k, cert.optimal or nodes.k == lower, cert.search_exhausted)
    return Colouring.build(nodes.assignment, "edge", algorithm=algorithm, certificate=cert)


Embedding = EmbeddedGraph | tuple[Graph, RotationSystem] | tuple[Graph, RotationSystem, Sequence]


def embedding_of(target: Embedding):
    """(graph, rotation, coordinates-or-None) for any accepted embedding form.

    A triple supplies an explicit rotation plus coordinates, which are then
    used only to pick the unbounded face.
    """
    if isinstance(target, EmbeddedGraph):
        return target.graph, rotation_from_coordinates(target), target.coordinates
    if len(target) == 3:
        return tuple(target)
    g, rot = target
    return g, rot, None


def face_dual(target: Embedding) -> DualGraphResult:
    g, rot, coords = embedding_of(target)
    return dual_graph(g, rot, coords)


def colour_faces(target: Embedding, algorithm: str = "backtracking", **budget) -> Colouring:
    """Face colouring via the dual graph; element i is face i of the traced face set.

    The unbounded face is coloured like any other; its index is recorded in
    ``provenance["unbounded_face"]``.
    """
    dual = face_dual(target)
    nodes, cert = colour_nodes(dual.dual, algorithm, **budget)
    return Colouring.build(
        nodes.assignment, "face", algorithm=algorithm, certificate=cert, unbounded_face=dual.unbounded_face
    )
