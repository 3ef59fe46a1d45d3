from __future__ import annotations

from collections import Counter
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings

from chromatica.errors import BridgeError, DisconnectedError, EmbeddingError, GraphError
from chromatica.generators import (
    EmbeddedGraph,
    binary_tree,
    complete,
    cycle,
    dodecahedral,
    hexagonal_lattice,
    path,
    sierpinski,
    square_lattice,
    star,
    triangular_lattice,
)
from chromatica.graph import Graph, is_bipartite
from chromatica.transforms import (
    RotationSystem,
    dual_graph,
    line_graph,
    rotation_from_coordinates,
    signed_area,
    trace_faces,
)
from test_graph import graphs


def test_line_graph_of_star_is_complete():
    lg = line_graph(star(4))
    assert lg.line_graph == complete(4)
    assert lg.edge_of_node == star(4).edges


def test_line_graph_of_triangle_and_path():
    assert line_graph(cycle(3)).line_graph == complete(3)
    assert line_graph(path(4)).line_graph == path(3)


def test_line_graph_rejects_edgeless():
    with pytest.raises(GraphError, match="no edges"):
        line_graph(Graph(3))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_line_graph_matches_networkx(g):
    if g.m == 0:
        return
    lg = line_graph(g).line_graph
    assert lg.m == sum(comb(d, 2) for d in g.degrees)
    ref = nx.line_graph(nx.Graph(list(g.edges)))
    index = {e: i for i, e in enumerate(g.edges)}
    expected = {tuple(sorted((index[tuple(sorted(a))], index[tuple(sorted(b))]))) for a, b in ref.edges}
    assert set(lg.edges) == expected


def test_rotation_is_counterclockwise():
    # node 0 at the origin with neighbours east, north, west, south
    eg = EmbeddedGraph(star(4), ((0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)))
    rot = rotation_from_coordinates(eg)
    order = rot.rotation[0]
    start = order.index(1)
    assert order[start:] + order[:start] == (1, 2, 3, 4)


def test_rotation_errors():
    with pytest.raises(EmbeddingError):
        rotation_from_coordinates(EmbeddedGraph(path(2), ((0, 0), (0, 0))))
    # two neighbours in the same direction from node 0
    with pytest.raises(EmbeddingError):
        rotation_from_coordinates(EmbeddedGraph(star(2), ((0, 0), (1, 0), (2, 0))))
    with pytest.raises(EmbeddingError):
        RotationSystem(((1,), (0, 2), (1,))).validate(path(3).subgraph([0, 1]))
    with pytest.raises(EmbeddingError):
        RotationSystem(((2,), (0,), (1,))).validate(path(3))


EMBEDDINGS = [dodecahedral(), square_lattice(3, 3), triangular_lattice(2, 4), hexagonal_lattice(3, 2), sierpinski(3)]


@pytest.mark.parametrize("eg", EMBEDDINGS, ids=lambda eg: eg.name)
def test_faces_partition_darts_and_satisfy_euler(eg):
    g = eg.graph
    faces = trace_faces(g, rotation_from_coordinates(eg))
    darts = Counter(d for face in faces.faces for d in face)
    assert set(darts) == {(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges}
    assert set(darts.values()) == {1}
    assert g.n - g.m + faces.f == 2
    for face in faces.faces:  # consecutive darts chain
        for (a, b), (c, d) in zip(face, face[1:] + face[:1]):
            assert b == c


@pytest.mark.parametrize("eg", EMBEDDINGS, ids=lambda eg: eg.name)
def test_exactly_one_clockwise_face(eg):
    faces = trace_faces(eg.graph, rotation_from_coordinates(eg))
    areas = [signed_area(face, eg.coordinates) for face in faces.faces]
    assert sum(a < 0 for a in areas) == 1
    dual = dual_graph(eg.graph, rotation_from_coordinates(eg), eg.coordinates)
    assert areas[dual.unbounded_face] < 0


def test_square_lattice_faces():
    eg = square_lattice(2, 3)
    faces = trace_faces(eg.graph, rotation_from_coordinates(eg))
    lengths = sorted(len(f) for f in faces.faces)
    assert lengths == [4] * 6 + [10]


def test_dodecahedral_dual_is_icosahedral():
    eg = dodecahedral()
    dual = dual_graph(eg.graph, rotation_from_coordinates(eg), eg.coordinates).dual
    assert (dual.n, dual.m) == (12, 30)
    assert set(dual.degrees) == {5}
    assert nx.is_isomorphic(nx.Graph(list(dual.edges)), nx.icosahedral_graph())


def test_unbounded_face_without_coordinates_is_longest_walk():
    eg = square_lattice(2, 2)
    dual = dual_graph(eg.graph, rotation_from_coordinates(eg))
    assert len(dual.faces.faces[dual.unbounded_face]) == 8


def test_sierpinski_dual_is_bipartite():
    eg = sierpinski(4)
    assert is_bipartite(dual_graph(eg.graph, rotation_from_coordinates(eg), eg.coordinates).dual) is not None


def test_bridge_is_rejected():
    eg = binary_tree(7)
    with pytest.raises(BridgeError, match="bridge"):
        dual_graph(eg.graph, rotation_from_coordinates(eg))
    # a triangle with a pendant edge: only the pendant edge is a bridge
    eg = EmbeddedGraph(Graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]), ((0, 0), (2, 0), (1, 1), (1, 3)))
    with pytest.raises(BridgeError) as info:
        dual_graph(eg.graph, rotation_from_coordinates(eg))
    assert info.value.edge == (2, 3)


def test_disconnected_is_rejected():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedError):
        trace_faces(g, RotationSystem(((1,), (0,), (3,), (2,))))


def test_single_node_has_one_face():
    faces = trace_faces(Graph(1), RotationSystem(((),)))
    assert faces.f == 1
