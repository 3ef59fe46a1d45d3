"""Node layouts and SVG output for node, edge and face colourings."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .colouring.types import Colouring
from .errors import ChromaticaError, GraphError
from .graph import Graph
from .transforms import FaceSet, signed_area

Style = Literal["spring", "circular", "multipartite", "provided"]

# tab10, the default Tableau palette
TABLEAU10 = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)

# spring layout constants
SPRING_ITERATIONS = 200
SPRING_START_TEMPERATURE = 0.1


class RenderError(ChromaticaError, ValueError):
    pass


@dataclass(frozen=True)
class Palette:
    colours: tuple[str, ...] = TABLEAU10

    def __post_init__(self):
        if not self.colours or len(set(self.colours)) != len(self.colours):
            raise ValueError("palette entries must be distinct and non-empty")

    def __getitem__(self, label: int) -> str:
        return self.colours[label % len(self.colours)]


@dataclass(frozen=True)
class Layout:
    positions: tuple[tuple[float, float], ...]
    style: Style = "provided"


def _normalise(pos: np.ndarray) -> np.ndarray:
    """Fit into the unit square, keeping aspect ratio, centred."""
    lo = pos.min(axis=0)
    span = pos.max(axis=0) - lo
    scale = span.max()
    if scale == 0:
        return np.full_like(pos, 0.5)
    out = (pos - lo) / scale
    return out + (1 - span / scale) / 2


def spring_layout(g: Graph, seed: int = 0, iterations: int = SPRING_ITERATIONS, normalise: bool = True) -> Layout:
    """Fruchterman-Reingold force simulation.

    Nodes repel with force k^2/d and edges pull with d^2/k, where
    k = sqrt(1/n) is the ideal edge length. Each step moves a node by at most
    the temperature, which cools linearly to zero.
    """
    n = g.n
    if n == 1:
        return Layout(((0.5, 0.5),), "spring")
    rng = random.Random(seed)
    pos = np.array([[rng.random(), rng.random()] for _ in range(n)])
    k = math.sqrt(1.0 / n)
    edges = np.array(g.edges, dtype=int).reshape(-1, 2)
    temperature = SPRING_START_TEMPERATURE
    cool = temperature / (iterations + 1)
    for _ in range(iterations):
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.linalg.norm(delta, axis=-1)
        np.fill_diagonal(dist, 1.0)
        dist = np.maximum(dist, 1e-9)
        force = (k * k / dist**2)[:, :, None] * delta
        disp = force.sum(axis=1)
        if len(edges):
            d = pos[edges[:, 0]] - pos[edges[:, 1]]
            length = np.maximum(np.linalg.norm(d, axis=1), 1e-9)
            pull = (length / k)[:, None] * d
            np.add.at(disp, edges[:, 0], -pull)
            np.add.at(disp, edges[:, 1], pull)
        size = np.maximum(np.linalg.norm(disp, axis=1), 1e-9)
        pos += disp / size[:, None] * np.minimum(size, temperature)[:, None]
        temperature -= cool
    if normalise:
        pos = _normalise(pos)
    return Layout(tuple((float(x), float(y)) for x, y in pos), "spring")


def _require_node_colouring(g: Graph, colouring: Colouring) -> None:
    if colouring.kind != "node":
        raise RenderError(f"this layout needs a node colouring, got a {colouring.kind} colouring")
    if len(colouring) != g.n:
        raise GraphError(f"colouring has {len(colouring)} labels for {g.n} nodes")


def circular_grouped_layout(g: Graph, colouring: Colouring) -> Layout:
    """Nodes on the unit circle, sorted by (colour, index), equally spaced."""
    _require_node_colouring(g, colouring)
    order = sorted(range(g.n), key=lambda v: (colouring.assignment[v], v))
    pos = [(0.0, 0.0)] * g.n
    for i, v in enumerate(order):
        theta = math.pi / 2 - 2 * math.pi * i / g.n
        pos[v] = (math.cos(theta), math.sin(theta))
    return Layout(tuple(pos), "circular")


def multipartite_layout(g: Graph, colouring: Colouring) -> Layout:
    """Colour class c becomes column x = c, stacked upward in index order."""
    _require_node_colouring(g, colouring)
    height = [0] * colouring.k
    pos = []
    for c in colouring.assignment:
        pos.append((float(c), float(height[c])))
        height[c] += 1
    return Layout(tuple(pos), "multipartite")


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def render_svg(
    g: Graph,
    layout: Layout | Sequence[tuple[float, float]],
    colouring: Colouring | None = None,
    *,
    faces: FaceSet | None = None,
    unbounded_face: int | None = None,
    palette: Palette | None = None,
    hide_nodes: bool = False,
    hide_unbounded: bool = False,
    size: int = 600,
    margin: int = 20,
    edge_width: float = 2.0,
    node_radius: float | None = None,
) -> str:
    """SVG drawing; identical inputs give byte-identical output.

    Face colourings draw bounded faces as polygons in decreasing area order
    over a background rectangle in the unbounded face's colour (omitted with
    ``hide_unbounded``). Edge colourings stroke each edge with its colour;
    node colourings fill each node circle.
    """
    palette = palette or Palette()
    positions = layout.positions if isinstance(layout, Layout) else tuple(layout)
    if len(positions) != g.n:
        raise RenderError(f"{len(positions)} positions for {g.n} nodes")
    kind = colouring.kind if colouring is not None else None
    if kind == "face" and faces is None:
        raise RenderError("face rendering needs the traced faces of an embedding")
    if colouring is not None:
        expected = {"node": g.n, "edge": g.m, "face": faces.f if faces else 0}[kind]
        if len(colouring) != expected:
            raise RenderError(f"{kind} colouring has {len(colouring)} labels, expected {expected}")

    pts = np.array(positions, dtype=float)
    lo = pts.min(axis=0)
    span = pts.max(axis=0) - lo
    scale = (size - 2 * margin) / span.max() if span.max() > 0 else 1.0
    offset = (size - 2 * margin - span * scale) / 2 + margin

    def xy(v: int) -> tuple[str, str]:
        x = (pts[v, 0] - lo[0]) * scale + offset[0]
        y = size - ((pts[v, 1] - lo[1]) * scale + offset[1])
        return _fmt(x), _fmt(y)

    radius = node_radius if node_radius is not None else max(2.0, min(10.0, 0.3 * size / math.sqrt(g.n + 1)))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    if kind == "face":
        labels = colouring.assignment
        if unbounded_face is None:
            unbounded_face = min(range(faces.f), key=lambda i: (signed_area(faces.faces[i], positions), i))
        if not hide_unbounded:
            out.append(f'<rect class="face unbounded" x="0" y="0" width="{size}" height="{size}" '
                       f'fill="{palette[labels[unbounded_face]]}"/>')
        bounded = [i for i in range(faces.f) if i != unbounded_face]
        bounded.sort(key=lambda i: (-abs(signed_area(faces.faces[i], positions)), i))
        for i in bounded:
            points = " ".join(",".join(xy(u)) for u, _ in faces.faces[i])
            out.append(f'<polygon class="face" points="{points}" fill="{palette[labels[i]]}" '
                       f'fill-rule="nonzero" stroke="none"/>')
    for i, (u, v) in enumerate(g.edges):
        (x1, y1), (x2, y2) = xy(u), xy(v)
        stroke = palette[colouring.assignment[i]] if kind == "edge" else ("#000000" if kind == "face" else "#555555")
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{stroke}" '
                   f'stroke-width="{_fmt(edge_width)}" stroke-linecap="round"/>')
    if not hide_nodes:
        for v in range(g.n):
            x, y = xy(v)
            fill = palette[colouring.assignment[v]] if kind == "node" else "#ffffff"
            out.append(f'<circle cx="{x}" cy="{y}" r="{_fmt(radius)}" fill="{fill}" stroke="#000000" '
                       f'stroke-width="1.00"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_dot(g: Graph, colouring: Colouring | None = None, palette: Palette | None = None) -> str:
    """Graphviz DOT text with colour attributes for node or edge colourings."""
    palette = palette or Palette()
    lines = ["graph G {"]
    for v in range(g.n):
        if colouring is not None and colouring.kind == "node":
            c = colouring.assignment[v]
            lines.append(f'  {v} [style=filled, fillcolor="{palette[c]}", colour_label={c}];')
        else:
            lines.append(f"  {v};")
    for i, (u, v) in enumerate(g.edges):
        if colouring is not None and colouring.kind == "edge":
            c = colouring.assignment[i]
            lines.append(f'  {u} -- {v} [color="{palette[c]}", colour_label={c}];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
