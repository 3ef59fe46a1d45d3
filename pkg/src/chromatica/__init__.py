"""Node, edge and face colouring of graphs."""

from .analysis import (
    EdgeClass,
    VerificationReport,
    WalkCode,
    decode_walk,
    edge_class,
    encode_walk,
    euler_check,
    heawood_bound,
    verify,
)
from .colouring import (
    Colouring,
    HeaParams,
    OptimalityCertificate,
    backtracking_colour,
    colour_edges,
    colour_faces,
    colour_nodes,
    dsatur_colour,
    greedy_colour,
    hea_colour,
)
from .generators import EmbeddedGraph
from .graph import Graph, build_graph, greedy_clique, is_bipartite, is_connected, is_eulerian
from .transforms import RotationSystem, dual_graph, line_graph, rotation_from_coordinates, trace_faces

__version__ = "0.1.0"

__all__ = [
    "Colouring", "EdgeClass", "EmbeddedGraph", "Graph", "HeaParams", "OptimalityCertificate",
    "RotationSystem", "VerificationReport", "WalkCode", "backtracking_colour", "build_graph",
    "colour_edges", "colour_faces", "colour_nodes", "decode_walk", "dsatur_colour", "dual_graph",
    "edge_class", "encode_walk", "euler_check", "greedy_clique", "greedy_colour", "hea_colour",
    "heawood_bound", "is_bipartite", "is_connected", "is_eulerian", "line_graph",
    "rotation_from_coordinates", "trace_faces", "verify",
]
