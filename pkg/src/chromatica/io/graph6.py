"""graph6 encoding: size header, then the upper triangle column by column, 6 bits per byte + 63."""

from __future__ import annotations

from ..errors import GraphError, ParseError
from ..graph import Graph

HEADER = ">>graph6<<"


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphError(f"graph6 cannot encode n={n}")


def write_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        mask = g.masks[j]
        bits.extend((mask >> i) & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)
    )
    return (_encode_size(g.n) + body).decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    data = text.encode("latin-1", "replace") if isinstance(text, str) else bytes(text)
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    data = data.rstrip(b"\r\n")
    offset0 = 0
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"byte {byte!r} outside the graph6 range 63..126", column=pos)
    if not data:
        raise ParseError("empty graph6 string", column=0)
    if data[0] < 126:
        n, offset0 = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated 8-byte size header", column=len(data))
        n, offset0 = 0, 8
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
    else:
        if len(data) < 4:
            raise ParseError("truncated 4-byte size header", column=len(data))
        n, offset0 = 0, 4
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
    needed = (n * (n - 1) // 2 + 5) // 6
    body = data[offset0:]
    if len(body) < needed:
        raise ParseError(f"truncated: need {needed} data bytes for n={n}, got {len(body)}", column=len(data))
    if len(body) > needed:
        raise ParseError("trailing bytes after graph6 data", column=offset0 + needed)
    if n < 1:
        raise ParseError("graph6 string encodes an empty graph", column=0)
    edges = []
    bit = 0
    total = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            byte = body[bit // 6] - 63
            if (byte >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    tail = total % 6
    if tail and (body[-1] - 63) & ((1 << (6 - tail)) - 1):
        raise ParseError("non-zero padding bits", column=len(data) - 1)
    return Graph(n, edges)
