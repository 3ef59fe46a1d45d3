"""Random-graph benchmark harness.

Every (n, p, trial) instance is generated from ``derive_seed(master, n, p,
trial)`` and each algorithm run on it is seeded with ``derive_seed(master,
n, p, trial, algorithm)``. ``derive_seed`` is the first 8 bytes (little
endian) of BLAKE2b over the colon-joined ``repr`` of its arguments, so
adding an algorithm never changes the streams of the others.
"""

from __future__ import annotations

import hashlib
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .colouring import HeaParams, colour_nodes
from .generators import gnp
from .io.benchmark import BenchmarkRecord


def derive_seed(master: int, *parts) -> int:
    text = ":".join(repr(x) for x in (int(master), *parts))
    return int.from_bytes(hashlib.blake2b(text.encode(), digest_size=8).digest(), "little")


@dataclass(frozen=True)
class BenchTask:
    n: int
    p: float
    trial: int
    algorithm: str
    master_seed: int
    node_limit: int | None = None
    hea_params: HeaParams | None = None
    timing: bool = False


def run_task(task: BenchTask) -> BenchmarkRecord:
    graph_seed = derive_seed(task.master_seed, task.n, float(task.p), task.trial)
    g = gnp(task.n, task.p, graph_seed)
    params = replace(task.hea_params or HeaParams(),
                     seed=derive_seed(task.master_seed, task.n, float(task.p), task.trial, task.algorithm))
    started = time.perf_counter()
    colouring, cert = colour_nodes(g, task.algorithm, node_limit=task.node_limit, hea_params=params)
    millis = round((time.perf_counter() - started) * 1000) if task.timing else 0
    return BenchmarkRecord(task.n, float(task.p), graph_seed, task.algorithm, colouring.k,
                           cert.lower_bound, cert.optimal, millis)


def run_bench(
    ns: Sequence[int],
    ps: Sequence[float],
    trials: int,
    algorithms: Iterable[str],
    master_seed: int = 0,
    node_limit: int | None = None,
    hea_params: HeaParams | None = None,
    workers: int | None = None,
    timing: bool = False,
) -> list[BenchmarkRecord]:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    tasks = [
        BenchTask(n, float(p), t, alg, master_seed, node_limit, hea_params, timing)
        for n in ns for p in ps for t in range(trials) for alg in algorithms
    ]
    workers = workers or os.cpu_count() or 1
    if workers == 1 or len(tasks) == 1:
        records = [run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run_task, tasks))
    return sorted(records, key=lambda r: (r.n, r.p, r.seed, r.algorithm))
