from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal, Sequence

Kind = Literal["node", "edge", "face"]


def normalise(labels: Sequence[int]) -> tuple[int, ...]:
    """Relabel so colours appear as 0, 1, 2, ... in element-index order."""
    mapping: dict[int, int] = {}
    return tuple(mapping.setdefault(c, len(mapping)) for c in labels)


@dataclass(frozen=True)
class Colouring:
    """Total assignment of colour labels to nodes, edges or faces.

    Labels are always the contiguous range ``0..k-1``. For edge colourings
    element i is ``graph.edges[i]``; for face colourings it is face i of the
    traced :class:`~chromatica.transforms.FaceSet`.
    """

    assignment: tuple[int, ...]
    kind: Kind = "node"
    provenance: dict[str, Any] = field(default_factory=dict, compare=False)

    @classmethod
    def build(cls, labels: Sequence[int], kind: Kind = "node", **provenance: Any) -> Colouring:
        return cls(normalise(labels), kind, provenance)

    @property
    def k(self) -> int:
        return len(set(self.assignment))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for i, c in enumerate(self.assignment):
            out[c].append(i)
        return out

    def __len__(self) -> int:
        return len(self.assignment)


@dataclass(frozen=True)
class OptimalityCertificate:
    lower_bound: int
    upper_bound: int
    optimal: bool
    search_exhausted: bool = False


@dataclass(frozen=True)
class HeaParams:
    """Budget and tuning knobs of the hybrid evolutionary algorithm.

    ``max_cycles`` and ``time_limit`` both cap the run; runs capped only by
    cycle counts are reproducible. ``stall_cycles`` is the number of
    offspring cycles without improvement at the current k before giving up.
    """

    population_size: int = 10
    tabu_iterations_per_offspring: int = 4000
    tabu_tenure_scale: float = 0.6
    tabu_tenure_jitter: int = 9
    time_limit: float | None = None
    max_cycles: int | None = None
    stall_cycles: int = 20
    seed: int = 0

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population_size must be at least 2")
        if self.tabu_iterations_per_offspring < 1 or self.stall_cycles < 1:
            raise ValueError("iteration and stall budgets must be positive")
        if self.tabu_tenure_jitter < 0 or self.tabu_tenure_scale < 0:
            raise ValueError("tabu tenure parameters must be non-negative")
        if self.max_cycles is not None and self.max_cycles < 0:
            raise ValueError("max_cycles must be non-negative")
