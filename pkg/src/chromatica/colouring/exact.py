"""Exact node colouring by backtracking with DSatur node selection."""

from __future__ import annotations

from ..graph import Graph, greedy_clique
from .greedy import dsatur_colour
from .types import Colouring, OptimalityCertificate


def backtracking_colour(g: Graph, node_limit: int | None = None) -> tuple[Colouring, OptimalityCertificate]:
    """Find a minimum colouring, or the best one within ``node_limit`` search nodes.

    A greedy clique is coloured 0..|C|-1 up front. The search then colours
    one node per level (chosen by the DSatur rule over the current partial
    colouring, lowest index on ties), trying feasible labels in ascending
    order. Each complete colouring with l colours tightens the budget to
    l-1; reaching l = |C| stops the search early.

    Labels are tried only up to one beyond those in use: any two unused
    labels lead to the same subtree up to renaming.
    """
    n = g.n
    adj = g.adj
    masks = g.masks
    clique = greedy_clique(g).members
    bound = len(clique)

    colour = [-1] * n
    nb_count = [[0] * (n + 1) for _ in range(n)]
    sat = [0] * n
    class_size = [0] * (n + 1)
    state = {"uncol": (1 << n) - 1, "used": 0}

    def assign(v: int, c: int) -> None:
        colour[v] = c
        state["uncol"] &= ~(1 << v)
        class_size[c] += 1
        if class_size[c] == 1:
            state["used"] += 1
        for w in adj[v]:
            cnt = nb_count[w]
            if cnt[c] == 0:
                sat[w] += 1
            cnt[c] += 1

    def unassign(v: int) -> None:
        c = colour[v]
        colour[v] = -1
        state["uncol"] |= 1 << v
        class_size[c] -= 1
        if class_size[c] == 0:
            state["used"] -= 1
        for w in adj[v]:
            cnt = nb_count[w]
            cnt[c] -= 1
            if cnt[c] == 0:
                sat[w] -= 1

    def select() -> int:
        uncol = state["uncol"]
        best_v, best_sat, best_deg = -1, -1, -1
        for v in range(n):
            if colour[v] >= 0:
                continue
            s = sat[v]
            if s < best_sat:
                continue
            d = (masks[v] & uncol).bit_count()
            if s > best_sat or d > best_deg:
                best_v, best_sat, best_deg = v, s, d
        return best_v

    for i, v in enumerate(clique):
        assign(v, i)

    k = n
    best: list[int] | None = None
    visited = 0
    exhausted = True
    if state["uncol"] == 0:
        best = colour[:]
    else:
        stack = [[select(), 0]]
        visited = 1
        while stack:
            frame = stack[-1]
            u, start = frame
            if colour[u] >= 0:
                unassign(u)
            used = state["used"]
            if used > k:
                stack.pop()
                continue
            cnt = nb_count[u]
            c = start
            limit = min(k, used + 1)
            while c < limit and cnt[c]:
                c += 1
            if c >= limit:
                stack.pop()
                continue
            frame[1] = c + 1
            assign(u, c)
            if state["uncol"] == 0:
                best = colour[:]
                used = state["used"]
                if used == bound:
                    break
                k = used - 1
                continue
            if node_limit is not None and visited >= node_limit:
                exhausted = False
                break
            stack.append([select(), 0])
            visited += 1

    if best is None:
        fallback = dsatur_colour(g)
        result = Colouring.build(fallback.assignment, "node", algorithm="backtracking", nodes=visited)
    else:
        result = Colouring.build(best, "node", algorithm="backtracking", nodes=visited)
    k_found = result.k
    hit_bound = k_found == bound
    cert = OptimalityCertificate(
        lower_bound=bound,
        upper_bound=k_found,
        optimal=hit_bound or exhausted,
        search_exhausted=exhausted and not hit_bound,
    )
    return result, cert
