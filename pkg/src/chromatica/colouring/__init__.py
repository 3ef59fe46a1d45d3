from .drivers import ALGORITHMS, colour_edges, colour_faces, colour_nodes, embedding_of, face_dual
from .evolutionary import count_clashes, gpx_crossover, hea_colour, tabu_search
from .exact import backtracking_colour
from .greedy import dsatur_colour, dsatur_order, greedy_colour
from .types import Colouring, HeaParams, OptimalityCertificate, normalise

__all__ = [
    "ALGORITHMS", "Colouring", "HeaParams", "OptimalityCertificate",
    "backtracking_colour", "colour_edges", "colour_faces", "colour_nodes", "count_clashes",
    "dsatur_colour", "dsatur_order", "embedding_of", "face_dual", "gpx_crossover",
    "greedy_colour", "hea_colour", "normalise", "tabu_search",
]
