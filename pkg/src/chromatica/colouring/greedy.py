"""Constructive heuristics: plain greedy and DSatur."""

from __future__ import annotations

import heapq
from typing import Sequence

from ..errors import GraphError
from ..graph import Graph
from .types import Colouring


def greedy_colour(g: Graph, order: Sequence[int]) -> Colouring:
    """Give each node, in ``order``, the lowest label unused by its neighbours."""
    if len(order) != g.n or sorted(order) != list(range(g.n)):
        raise GraphError("order must be a permutation of the graph's nodes")
    colour = [-1] * g.n
    for v in order:
        taken = {colour[w] for w in g.adj[v]}
        c = 0
        while c in taken:
            c += 1
        colour[v] = c
    return Colouring.build(colour, "node", algorithm="greedy")


def _dsatur(g: Graph) -> tuple[list[int], list[int]]:
    """DSatur labels and selection order.

    Selection key: saturation degree, then degree among uncoloured nodes,
    then lowest index. Stale heap entries are skipped lazily.
    """
    n = g.n
    colour = [-1] * n
    seen_colours: list[set[int]] = [set() for _ in range(n)]
    udeg = list(g.degrees)
    heap = [(0, -udeg[v], v) for v in range(n)]
    heapq.heapify(heap)
    order = []
    while heap:
        neg_sat, neg_deg, v = heapq.heappop(heap)
        if colour[v] >= 0 or -neg_sat != len(seen_colours[v]) or -neg_deg != udeg[v]:
            continue
        c = 0
        while c in seen_colours[v]:
            c += 1
        colour[v] = c
        order.append(v)
        for w in g.adj[v]:
            if colour[w] >= 0:
                continue
            udeg[w] -= 1
            seen_colours[w].add(c)
            heapq.heappush(heap, (-len(seen_colours[w]), -udeg[w], w))
    return colour, order


def dsatur_order(g: Graph) -> list[int]:
    return _dsatur(g)[1]


def dsatur_colour(g: Graph) -> Colouring:
    colour, _ = _dsatur(g)
    return Colouring.build(colour, "node", algorithm="dsatur")
