"""Graph families: seeded random graphs, classic families and planar drawings.

Random generation uses :class:`random.Random` (MT19937), whose output for a
given integer seed is fixed across platforms and Python versions.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .errors import EmbeddingError, GraphError
from .graph import Graph

SQRT3_2 = math.sqrt(3) / 2


@dataclass(frozen=True)
class EmbeddedGraph:
    """A graph together with straight-line drawing coordinates."""

    graph: Graph
    coordinates: tuple[tuple[float, float], ...]
    name: str = ""

    def __post_init__(self):
        if len(self.coordinates) != self.graph.n:
            raise EmbeddingError(f"{len(self.coordinates)} coordinates for {self.graph.n} nodes")
        for v, (x, y) in enumerate(self.coordinates):
            if not (math.isfinite(x) and math.isfinite(y)):
                raise EmbeddingError(f"node {v} has non-finite coordinates", node=v)

    def crossings(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        return crossing_pairs(self.graph, self.coordinates)


def _orient(p, q, r) -> float:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _on_segment(p, q, r, eps: float) -> bool:
    """r lies within the bounding box of segment pq (collinearity checked by caller)."""
    return (min(p[0], q[0]) - eps <= r[0] <= max(p[0], q[0]) + eps
            and min(p[1], q[1]) - eps <= r[1] <= max(p[1], q[1]) + eps)


def segments_intersect(p1, p2, q1, q2, eps: float = 1e-12) -> bool:
    d1 = _orient(q1, q2, p1)
    d2 = _orient(q1, q2, p2)
    d3 = _orient(p1, p2, q1)
    d4 = _orient(p1, p2, q2)
    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and \
       ((d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)):
        return True
    if abs(d1) <= eps and _on_segment(q1, q2, p1, eps):
        return True
    if abs(d2) <= eps and _on_segment(q1, q2, p2, eps):
        return True
    if abs(d3) <= eps and _on_segment(p1, p2, q1, eps):
        return True
    if abs(d4) <= eps and _on_segment(p1, p2, q2, eps):
        return True
    return False


def crossing_pairs(g: Graph, coords) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Every pair of edges whose straight-line segments meet anywhere but a shared endpoint."""
    bad = []
    for e, f in combinations(g.edges, 2):
        shared = set(e) & set(f)
        if shared:
            (c,) = shared
            a = e[0] if e[1] == c else e[1]
            b = f[0] if f[1] == c else f[1]
            pc, pa, pb = coords[c], coords[a], coords[b]
            # collinear and pointing the same way: the segments overlap
            if abs(_orient(pc, pa, pb)) <= 1e-12 and \
               (pa[0] - pc[0]) * (pb[0] - pc[0]) + (pa[1] - pc[1]) * (pb[1] - pc[1]) > 0:
                bad.append((e, f))
        elif segments_intersect(coords[e[0]], coords[e[1]], coords[f[0]], coords[f[1]]):
            bad.append((e, f))
    return bad


def _check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < 2**64:
        raise GraphError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p): one uniform draw per node pair in lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(_check_seed(seed))
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 nodes, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def wheel(n: int) -> Graph:
    """Hub node 0 joined to a rim cycle on nodes 1..n-1."""
    if n < 4:
        raise GraphError(f"a wheel needs a hub plus a rim of at least 3 nodes, got n={n}")
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(n - 1, 1)]
    return Graph(n, rim + [(0, i) for i in range(1, n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def binary_tree(node_count: int, angle: float = 30.0, decay: float = 0.55) -> EmbeddedGraph:
    """Heap-indexed binary tree drawn as a fractal.

    The root sits at the origin; each child branches ``angle`` degrees either
    side of its parent's heading, with edge lengths shrinking by ``decay`` per
    level.
    """
    if node_count < 1:
        raise GraphError(f"a tree needs at least one node, got {node_count}")
    edges = [((i - 1) // 2, i) for i in range(1, node_count)]
    coords = [(0.0, 0.0)] * node_count
    heading = [math.pi / 2] * node_count
    depth = [0] * node_count
    turn = math.radians(angle)
    for i in range(1, node_count):
        parent = (i - 1) // 2
        depth[i] = depth[parent] + 1
        heading[i] = heading[parent] + (turn if i % 2 == 1 else -turn)
        length = decay ** (depth[i] - 1)
        px, py = coords[parent]
        coords[i] = (px + length * math.cos(heading[i]), py + length * math.sin(heading[i]))
    return EmbeddedGraph(Graph(node_count, edges), tuple(coords), f"binary-tree-{node_count}")


def _from_keys(keyed_edges, to_xy, name: str) -> EmbeddedGraph:
    """Number integer-keyed points by (y, x) key order and build the embedded graph."""
    keys = sorted({k for e in keyed_edges for k in e}, key=lambda k: (k[1], k[0]))
    index = {k: i for i, k in enumerate(keys)}
    g = Graph(len(keys), ((index[a], index[b]) for a, b in keyed_edges))
    return EmbeddedGraph(g, tuple(to_xy(k) for k in keys), name)


def square_lattice(rows: int, cols: int) -> EmbeddedGraph:
    """rows x cols unit squares; (rows+1)(cols+1) nodes."""
    if rows < 1 or cols < 1:
        raise GraphError("lattice dimensions must be at least 1")
    edges = []
    for r in range(rows + 1):
        for c in range(cols + 1):
            if c < cols:
                edges.append(((c, r), (c + 1, r)))
            if r < rows:
                edges.append(((c, r), (c, r + 1)))
    return _from_keys(edges, lambda k: (float(k[0]), float(k[1])), f"square-{rows}x{cols}")


def triangular_lattice(rows: int, cols: int) -> EmbeddedGraph:
    """rows x cols rhombic cells, each split into two equilateral triangles.

    Key ``(c, r)`` is drawn at ``(c + r/2, r*sqrt(3)/2)``.
    """
    if rows < 1 or cols < 1:
        raise GraphError("lattice dimensions must be at least 1")
    edges = []
    for r in range(rows + 1):
        for c in range(cols + 1):
            if c < cols:
                edges.append(((c, r), (c + 1, r)))
            if r < rows:
                edges.append(((c, r), (c, r + 1)))
                if c < cols:
                    edges.append(((c + 1, r), (c, r + 1)))
    return _from_keys(edges, lambda k: (k[0] + 0.5 * k[1], SQRT3_2 * k[1]), f"triangular-{rows}x{cols}")


def hexagonal_lattice(rows: int, cols: int) -> EmbeddedGraph:
    """rows x cols pointy-top hexagons in offset rows (odd rows shifted right).

    Corner keys are integers in units of (sqrt(3)/2, 1/2) so shared corners
    dedupe exactly.
    """
    if rows < 1 or cols < 1:
        raise GraphError("lattice dimensions must be at least 1")
    ring = [(0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1)]
    edges = set()
    for r in range(rows):
        for c in range(cols):
            cx, cy = 2 * c + (r % 2), 3 * r
            corners = [(cx + dx, cy + dy) for dx, dy in ring]
            for i in range(6):
                a, b = corners[i], corners[(i + 1) % 6]
                edges.add((a, b) if a < b else (b, a))
    return _from_keys(sorted(edges), lambda k: (SQRT3_2 * k[0], 0.5 * k[1]), f"hexagonal-{rows}x{cols}")


def sierpinski(level: int) -> EmbeddedGraph:
    """Sierpinski triangle after ``level`` rounds of subdivision.

    Points use integer barycentric-style keys ``(a, b)`` meaning
    ``a*(1, 0) + b*(1/2, sqrt(3)/2)`` so corners shared by sub-triangles
    coincide exactly.
    """
    if level < 1:
        raise GraphError(f"sierpinski level must be at least 1, got {level}")
    edges = set()

    def build(a: int, b: int, size: int, depth: int) -> None:
        if depth == 0:
            tri = [(a, b), (a + size, b), (a, b + size)]
            for i in range(3):
                p, q = tri[i], tri[(i + 1) % 3]
                edges.add((p, q) if p < q else (q, p))
            return
        half = size // 2
        build(a, b, half, depth - 1)
        build(a + half, b, half, depth - 1)
        build(a, b + half, half, depth - 1)

    build(0, 0, 2**level, level)
    # _from_keys orders by (y-key, x-key); b is the y-like coordinate
    keyed = [((p[0], p[1]), (q[0], q[1])) for p, q in sorted(edges)]
    return _from_keys(keyed, lambda k: (k[0] + 0.5 * k[1], SQRT3_2 * k[1]), f"sierpinski-{level}")


def dodecahedral() -> EmbeddedGraph:
    """Dodecahedral graph drawn as a Schlegel diagram.

    Nodes 0-4 form the outer pentagon, 5-14 the middle 10-cycle and 15-19
    the inner pentagon.
    """
    edges = []
    coords = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, 5 + 2 * i))
        edges.append((5 + 2 * i + 1, 15 + i))
        edges.append((15 + i, 15 + (i + 1) % 5))
    for j in range(10):
        edges.append((5 + j, 5 + (j + 1) % 10))

    def polar(radius: float, turns: float) -> tuple[float, float]:
        theta = math.pi / 2 + 2 * math.pi * turns
        return (radius * math.cos(theta), radius * math.sin(theta))

    coords.extend(polar(3.0, i / 5) for i in range(5))
    coords.extend(polar(2.0, j / 10) for j in range(10))
    coords.extend(polar(1.0, (2 * i + 1) / 10) for i in range(5))
    return EmbeddedGraph(Graph(20, edges), tuple(coords), "dodecahedral")


def sierpinski_counts(level: int) -> tuple[int, int]:
    """Closed-form (n, m) of :func:`sierpinski`."""
    return (3 * (3**level + 1) // 2, 3 ** (level + 1))


FAMILIES = (
    "gnp", "complete", "path", "cycle", "wheel", "star", "binary-tree",
    "square", "triangular", "hexagonal", "sierpinski", "dodecahedral",
)
