"""Colouring files: ``# k=<k>`` and ``# kind=<kind>`` headers, then ``<element> <label>`` lines."""

from __future__ import annotations

from ..colouring.types import Colouring
from ..errors import ParseError


def write_colouring(colouring: Colouring) -> str:
    lines = [f"# k={colouring.k}", f"# kind={colouring.kind}"]
    lines.extend(f"{i} {c}" for i, c in enumerate(colouring.assignment))
    return "\n".join(lines) + "\n"


def parse_colouring(text: str) -> Colouring:
    kind = "node"
    declared_k = None
    labels: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for token in line[1:].split():
                key, _, value = token.partition("=")
                if key == "kind":
                    if value not in ("node", "edge", "face"):
                        raise ParseError(f"unknown colouring kind {value!r}", line=lineno)
                    kind = value
                elif key == "k":
                    try:
                        declared_k = int(value)
                    except ValueError:
                        raise ParseError("k must be an integer", line=lineno) from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected '<element> <label>'", line=lineno)
        try:
            element, label = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("element and label must be integers", line=lineno) from None
        if element < 0 or label < 0:
            raise ParseError("element and label must be non-negative", line=lineno)
        if element in labels:
            raise ParseError(f"element {element} listed twice", line=lineno)
        labels[element] = label
    if sorted(labels) != list(range(len(labels))):
        raise ParseError("element indices must run 0..N-1 without gaps")
    assignment = tuple(labels[i] for i in range(len(labels)))
    # the header k is informational: a corrupted label should surface as a
    # clash during verification, not as a parse failure
    return Colouring(assignment, kind, {"source": "file", "declared_k": declared_k})
