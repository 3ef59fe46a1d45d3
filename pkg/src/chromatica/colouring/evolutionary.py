"""Tabu search, partition crossover and the hybrid evolutionary algorithm.

The local search works on complete k-colourings that may contain clashes
and minimises the number of clashing edges. A table ``gamma[v][c]`` holds
how many neighbours of ``v`` carry colour ``c``, so each move is scored in
constant time.
"""

from __future__ import annotations

import random
import time
from typing import Sequence

from ..errors import GraphError
from ..graph import Graph, greedy_clique
from .greedy import dsatur_colour
from .types import Colouring, HeaParams, OptimalityCertificate


def count_clashes(g: Graph, assignment: Sequence[int]) -> int:
    return sum(1 for u, v in g.edges if assignment[u] == assignment[v])


def _rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _check_labels(assignment: Sequence[int], n: int, k: int, what: str) -> None:
    if len(assignment) != n:
        raise GraphError(f"{what} has {len(assignment)} labels for {n} nodes")
    for v, c in enumerate(assignment):
        if not 0 <= c < k:
            raise GraphError(f"{what} gives node {v} label {c}, outside 0..{k - 1}")


def tabu_search(
    g: Graph,
    k: int,
    start: Sequence[int],
    iterations: int,
    seed: int | random.Random = 0,
    tenure_scale: float = 0.6,
    tenure_jitter: int = 9,
) -> tuple[list[int], int]:
    """Reduce clashes of a k-colouring; returns the best assignment seen and its clash count.

    Each iteration recolours one clashing node with the best non-tabu label
    (ties broken at random). Undoing a move is tabu for
    ``floor(tenure_scale * clashes) + randint(0, tenure_jitter)`` iterations
    unless it would beat the best clash count so far.
    """
    if k < 1:
        raise GraphError(f"colour budget k must be at least 1, got {k}")
    _check_labels(start, g.n, k, "start")
    rng = _rng(seed)
    n, adj = g.n, g.adj
    col = list(start)
    gamma = [[0] * k for _ in range(n)]
    for u, v in g.edges:
        gamma[u][col[v]] += 1
        gamma[v][col[u]] += 1
    clashes = sum(gamma[v][col[v]] for v in range(n)) // 2
    clashing = {v for v in range(n) if gamma[v][col[v]] > 0}
    best, best_clashes = col[:], clashes
    tabu = [[0] * k for _ in range(n)]
    labels = range(k)

    for it in range(iterations):
        if clashes == 0 or k == 1:
            break
        best_delta = n
        moves: list[tuple[int, int]] = []
        aspire = best_clashes - clashes
        for v in sorted(clashing):
            gv = gamma[v]
            cv = col[v]
            own = gv[cv]
            tv = tabu[v]
            for c in labels:
                d = gv[c] - own
                if d > best_delta or c == cv:
                    continue
                if tv[c] > it and d >= aspire:
                    continue
                if d < best_delta:
                    best_delta = d
                    moves = [(v, c)]
                else:
                    moves.append((v, c))
        if moves:
            v, c = moves[rng.randrange(len(moves))]
        else:
            pool = sorted(clashing)
            v = pool[rng.randrange(len(pool))]
            c = rng.randrange(k - 1)
            if c >= col[v]:
                c += 1
        old = col[v]
        clashes += gamma[v][c] - gamma[v][old]
        col[v] = c
        for w in adj[v]:
            gw = gamma[w]
            gw[old] -= 1
            gw[c] += 1
            cw = col[w]
            if cw == old and gw[old] == 0:
                clashing.discard(w)
            elif cw == c:
                clashing.add(w)
        if gamma[v][c] > 0:
            clashing.add(v)
        else:
            clashing.discard(v)
        tabu[v][old] = it + 1 + int(tenure_scale * clashes) + rng.randint(0, tenure_jitter)
        if clashes < best_clashes:
            best, best_clashes = col[:], clashes
    return best, best_clashes


def gpx_crossover(
    parent_a: Sequence[int],
    parent_b: Sequence[int],
    k: int,
    seed: int | random.Random = 0,
) -> list[int]:
    """Greedy partition crossover.

    For steps i = 0..k-1, take the largest remaining colour class of parent A
    (even steps) or B (odd steps), lowest label on ties, give its nodes label
    i, and delete them from both parents. Nodes never copied get random labels.
    """
    n = len(parent_a)
    if len(parent_b) != n:
        raise GraphError("parents must colour the same number of nodes")
    _check_labels(parent_a, n, k, "parent_a")
    _check_labels(parent_b, n, k, "parent_b")
    rng = _rng(seed)
    classes = []
    for parent in (parent_a, parent_b):
        groups: list[set[int]] = [set() for _ in range(k)]
        for v, c in enumerate(parent):
            groups[c].add(v)
        classes.append(groups)
    child = [-1] * n
    for i in range(k):
        source = classes[i % 2]
        label = max(range(k), key=lambda c: (len(source[c]), -c))
        chosen = source[label]
        if not chosen:
            break
        chosen = set(chosen)
        for v in chosen:
            child[v] = i
        for groups in classes:
            for group in groups:
                group -= chosen
    for v in range(n):
        if child[v] < 0:
            child[v] = rng.randrange(k)
    return child


def _random_dsatur(g: Graph, k: int, rng: random.Random) -> list[int]:
    """DSatur with random tie-breaking; nodes with no free label below k get a random one."""
    n = g.n
    col = [-1] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    udeg = list(g.degrees)
    left = set(range(n))
    while left:
        top = max((len(seen[v]), udeg[v]) for v in left)
        ties = sorted(v for v in left if (len(seen[v]), udeg[v]) == top)
        v = ties[rng.randrange(len(ties))]
        c = next((c for c in range(k) if c not in seen[v]), None)
        if c is None:
            c = rng.randrange(k)
        col[v] = c
        left.discard(v)
        for w in g.adj[v]:
            if w in left:
                udeg[w] -= 1
                seen[w].add(c)
    return col


def _drop_colour(g: Graph, col: list[int], k: int, rng: random.Random) -> list[int]:
    """Move nodes labelled k (now out of range) to their least-clashing label below k."""
    out = col[:]
    for v in range(g.n):
        if out[v] < k:
            continue
        counts = [0] * k
        for w in g.adj[v]:
            if out[w] < k:
                counts[out[w]] += 1
        low = min(counts)
        ties = [c for c in range(k) if counts[c] == low]
        out[v] = ties[rng.randrange(len(ties))]
    return out


def hea_colour(g: Graph, params: HeaParams | None = None) -> tuple[Colouring, OptimalityCertificate]:
    """Hybrid evolutionary colouring.

    Starts from the DSatur solution and repeatedly tries k = best - 1. A
    population of k-colourings (clashes allowed) evolves by crossover of
    two random parents, tabu search on the child, and replacement of the
    parent with more clashes. A clash-free member is recorded and k drops
    by one. Stops when k would fall below the clique bound, after
    ``stall_cycles`` cycles without a better clash count at the current k,
    or when the cycle or time budget runs out.
    """
    params = params or HeaParams()
    rng = random.Random(params.seed)
    started = time.monotonic()
    ds = dsatur_colour(g)
    best = list(ds.assignment)
    best_k = ds.k
    bound = greedy_clique(g).size
    cycles = 0

    def spent() -> bool:
        if params.max_cycles is not None and cycles >= params.max_cycles:
            return True
        return params.time_limit is not None and time.monotonic() - started >= params.time_limit

    def improve(sol: list[int], k: int) -> tuple[list[int], int]:
        return tabu_search(
            g, k, sol, params.tabu_iterations_per_offspring, rng,
            params.tabu_tenure_scale, params.tabu_tenure_jitter,
        )

    k = best_k - 1
    population: list[tuple[list[int], int]] = []
    level_best: int | None = None
    stall = 0
    while k >= bound:
        while len(population) < params.population_size and not spent():
            population.append(improve(_random_dsatur(g, k, rng), k))
            if population[-1][1] == 0:
                break
        feasible = next((sol for sol, cl in population if cl == 0), None)
        if feasible is not None:
            best, best_k = feasible, k
            k -= 1
            if k < bound:
                break
            population = [(s, count_clashes(g, s)) for s in (_drop_colour(g, sol, k, rng) for sol, _ in population)]
            level_best, stall = None, 0
            continue
        if level_best is None:
            level_best = min((cl for _, cl in population), default=0)
        if len(population) < 2 or spent() or stall >= params.stall_cycles:
            break
        i, j = rng.sample(range(len(population)), 2)
        child, cl = improve(gpx_crossover(population[i][0], population[j][0], k, rng), k)
        cycles += 1
        weaker = i if population[i][1] > population[j][1] else j
        population[weaker] = (child, cl)
        if cl < level_best:
            level_best, stall = cl, 0
        else:
            stall += 1

    result = Colouring.build(best, "node", algorithm="hea", seed=params.seed, cycles=cycles)
    cert = OptimalityCertificate(bound, result.k, result.k == bound)
    return result, cert
