"""Immutable simple undirected graphs and structural queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GraphError


class Graph:
    """Simple undirected graph on nodes ``0..n-1``.

    Edges are stored as ``(u, v)`` pairs with ``u < v`` in ascending
    lexicographic order; ``adj[v]`` is the ascending neighbour list of ``v``.
    Instances are never mutated after construction.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphError(f"a graph needs at least one node, got n={n}")
        pairs = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}", (u, v))
            if u == v:
                raise GraphError(f"self-loop at node {u}", (u, v))
            pairs.add((u, v) if u < v else (v, u))
        self._n = n
        self._edges = tuple(sorted(pairs))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self._edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of each node as an integer bitmask."""
        out = []
        for a in self._adj:
            mask = 0
            for w in a:
                mask |= 1 << w
            out.append(mask)
        return tuple(out)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Position of each ``(u, v)`` (``u < v``) in :attr:`edges`."""
        return {e: i for i, e in enumerate(self._edges)}

    def index_of_edge(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_index[key]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge", (u, v)) from None

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def subgraph(self, nodes: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled in the order ``nodes`` are given."""
        pos = {v: i for i, v in enumerate(nodes)}
        return Graph(len(nodes), ((pos[u], pos[v]) for u, v in self._edges if u in pos and v in pos))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, collapsing duplicate edges. Self-loops and bad endpoints raise."""
    return Graph(n, edge_list)


@dataclass(frozen=True)
class Bipartition:
    side: tuple[int, ...]


@dataclass(frozen=True)
class CliqueResult:
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def max_degree(g: Graph) -> int:
    return max(g.degrees, default=0)


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by lowest member."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_bipartite(g: Graph) -> Bipartition | None:
    """Two-colour each component by BFS from its lowest node (side 0), or None."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return Bipartition(tuple(side))


def is_eulerian(g: Graph) -> bool:
    return is_connected(g) and all(d % 2 == 0 for d in g.degrees)


def greedy_clique(g: Graph) -> CliqueResult:
    """Largest of the greedy cliques grown from every start node.

    From each start node, neighbours are scanned by descending degree (ties by
    lower index) and added when adjacent to everything taken so far, which
    yields a clique that is maximal by inclusion.
    """
    masks = g.masks
    deg = g.degrees
    best: list[int] = []
    for s in range(g.n):
        members = [s]
        common = masks[s]
        for w in sorted(g.adj[s], key=lambda x: (-deg[x], x)):
            if (common >> w) & 1:
                members.append(w)
                common &= masks[w]
        if len(members) > len(best):
            best = members
    return CliqueResult(tuple(best))
