"""Exception hierarchy shared by every chromatica module."""

from __future__ import annotations


class ChromaticaError(Exception):
    """Base class for all errors raised by chromatica."""


class GraphError(ChromaticaError, ValueError):
    """Invalid graph construction input (bad endpoint, self-loop, ...)."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class EmbeddingError(ChromaticaError, ValueError):
    """A rotation system or coordinate set does not describe a valid embedding."""

    def __init__(self, message: str, node: int | None = None):
        super().__init__(message)
        self.node = node


class StructuralError(ChromaticaError):
    """The requested colouring is undefined for this input (bridge, disconnected graph)."""


class BridgeError(StructuralError):
    def __init__(self, edge: tuple[int, int]):
        super().__init__(f"face colouring undefined across a bridge: edge {edge}")
        self.edge = edge


class DisconnectedError(StructuralError):
    def __init__(self, message: str = "graph is not connected"):
        super().__init__(message)


class ParseError(ChromaticaError, ValueError):
    """Malformed file content. ``line`` is 1-based, ``column`` is a 0-based offset."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"offset {column}")
        text = f"{message} ({', '.join(where)})" if where else message
        super().__init__(text)
        self.line = line
        self.column = column


class FetchError(ChromaticaError):
    """Base class for House of Graphs retrieval failures."""


class HttpError(FetchError):
    def __init__(self, url: str, status: int | None, reason: str = ""):
        super().__init__(f"HTTP failure fetching {url}: {status} {reason}".rstrip())
        self.url = url
        self.status = status


class UnknownGraphError(FetchError):
    def __init__(self, hog_id: int):
        super().__init__(f"House of Graphs has no graph with id {hog_id}")
        self.hog_id = hog_id


class NotCachedError(FetchError):
    def __init__(self, hog_id: int, path: str):
        super().__init__(f"graph {hog_id} not cached at {path} and offline mode forbids network access")
        self.hog_id = hog_id
        self.path = path
