from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..errors import EmbeddingError
from ..generators import EmbeddedGraph
from ..graph import Graph
from ..transforms import RotationSystem

# parsers refuse larger node counts instead of allocating for them
MAX_NODES = 1 << 24


@dataclass(frozen=True)
class GraphDocument:
    """A graph plus whatever embedding data and metadata travelled with it."""

    graph: Graph
    coordinates: tuple[tuple[float, float], ...] | None = None
    rotation: RotationSystem | None = None
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.coordinates is not None:
            if len(self.coordinates) != self.graph.n:
                raise EmbeddingError(f"{len(self.coordinates)} coordinate pairs for {self.graph.n} nodes")
            for v, (x, y) in enumerate(self.coordinates):
                if not (math.isfinite(x) and math.isfinite(y)):
                    raise EmbeddingError(f"node {v} has non-finite coordinates", node=v)
        if self.rotation is not None:
            self.rotation.validate(self.graph)

    @property
    def name(self) -> str:
        return self.metadata.get("name", "")

    def embedded(self) -> EmbeddedGraph | None:
        if self.coordinates is None:
            return None
        return EmbeddedGraph(self.graph, self.coordinates, self.name)

    @classmethod
    def from_embedded(cls, eg: EmbeddedGraph, rotation: RotationSystem | None = None, **metadata) -> GraphDocument:
        metadata.setdefault("name", eg.name)
        return cls(eg.graph, eg.coordinates, rotation, metadata)
