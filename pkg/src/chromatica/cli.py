"""Command-line interface: ``chromatica gen|fetch|color|verify|render|bench|info``.

Exit codes: 0 success, 1 verification failure, 2 usage or format error,
3 structural infeasibility (bridge, disconnected embedding), 4 network or
cache failure. Graph files are read and written by extension: ``.col`` /
``.dimacs`` (DIMACS), ``.g6`` (graph6), ``.emb`` / ``.json`` (embedding).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import generators
from .analysis import euler_check, verify
from .bench import run_bench
from .colouring import ALGORITHMS, HeaParams, colour_edges, colour_faces, colour_nodes, face_dual
from .errors import ChromaticaError, FetchError, StructuralError
from .graph import Graph, components, greedy_clique, is_bipartite, is_eulerian, max_degree
from .io import (
    GraphDocument,
    hog_fetch,
    parse_colouring,
    parse_dimacs,
    parse_embedding,
    parse_graph6,
    write_benchmark_csv,
    write_colouring,
    write_dimacs,
    write_embedding,
    write_graph6,
)
from .render import Palette, circular_grouped_layout, multipartite_layout, render_svg, spring_layout, to_dot
from .transforms import rotation_from_coordinates

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_STRUCTURAL, EXIT_FETCH = 0, 1, 2, 3, 4

FORMATS = {".col": "dimacs", ".dimacs": "dimacs", ".g6": "graph6", ".emb": "embedding", ".json": "embedding"}

FAMILIES = (
    "gnp", "complete", "path", "cycle", "wheel", "star", "binary-tree",
    "square-lattice", "triangular-lattice", "hexagonal-lattice", "sierpinski", "dodecahedral",
)


class UsageError(ChromaticaError):
    pass


def _format_of(path: str) -> str:
    fmt = FORMATS.get(Path(path).suffix.lower())
    if fmt is None:
        raise UsageError(f"cannot tell the format of {path!r}; use one of {', '.join(sorted(FORMATS))}")
    return fmt


def load_document(path: str) -> GraphDocument:
    fmt = _format_of(path)
    data = Path(path).read_bytes()
    if fmt == "graph6":
        return GraphDocument(parse_graph6(data), metadata={"name": Path(path).stem})
    if fmt == "embedding":
        return parse_embedding(data)
    return parse_dimacs(data.decode("utf-8", errors="replace"))


def save_document(doc: GraphDocument, path: str) -> None:
    fmt = _format_of(path)
    if fmt == "graph6":
        text = write_graph6(doc.graph) + "\n"
    elif fmt == "embedding":
        text = write_embedding(doc)
    else:
        text = write_dimacs(doc)
    Path(path).write_text(text)


def face_target(doc: GraphDocument):
    """The embedding used for face colouring, verification and rendering alike."""
    if doc.rotation is not None:
        if doc.coordinates is not None:
            return doc.graph, doc.rotation, doc.coordinates
        return doc.graph, doc.rotation
    eg = doc.embedded()
    if eg is None:
        raise UsageError("face colouring needs an embedding file with coordinates or a rotation system")
    return eg


# ---------------------------------------------------------------- gen


def _need(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family} needs {', '.join(missing)}")


def generate(args) -> GraphDocument:
    fam = args.family
    if args.p is not None and not 0.0 <= args.p <= 1.0:
        raise UsageError(f"--p must lie in [0, 1], got {args.p}")
    if fam == "gnp":
        _need(args, "n", "p")
        return GraphDocument(generators.gnp(args.n, args.p, args.seed), metadata={"name": f"gnp-{args.n}-{args.p}-{args.seed}"})
    simple = {"complete": generators.complete, "path": generators.path, "cycle": generators.cycle,
              "wheel": generators.wheel, "star": generators.star}
    if fam in simple:
        _need(args, "n")
        return GraphDocument(simple[fam](args.n), metadata={"name": f"{fam}-{args.n}"})
    if fam == "binary-tree":
        _need(args, "n")
        eg = generators.binary_tree(args.n)
    elif fam.endswith("-lattice"):
        _need(args, "rows", "cols")
        maker = {"square-lattice": generators.square_lattice, "triangular-lattice": generators.triangular_lattice,
                 "hexagonal-lattice": generators.hexagonal_lattice}[fam]
        eg = maker(args.rows, args.cols)
    elif fam == "sierpinski":
        _need(args, "level")
        eg = generators.sierpinski(args.level)
    else:
        eg = generators.dodecahedral()
    return GraphDocument.from_embedded(eg, rotation_from_coordinates(eg))


def cmd_gen(args) -> int:
    try:
        doc = generate(args)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc
    save_document(doc, args.output)
    print(f"family={args.family} n={doc.graph.n} m={doc.graph.m} -> {args.output}")
    return EXIT_OK


# ---------------------------------------------------------------- fetch


def cmd_fetch(args) -> int:
    doc = hog_fetch(args.id, cache_dir=args.cache_dir, offline=args.offline)
    line = f"HoG {args.id}: n={doc.graph.n} m={doc.graph.m}"
    if doc.metadata.get("cached"):
        line += " (cached)"
    if args.output:
        save_document(doc, args.output)
        line += f" -> {args.output}"
    print(line)
    return EXIT_OK


# ---------------------------------------------------------------- color


def _hea_params(args) -> HeaParams:
    kwargs = {"seed": args.seed, "time_limit": args.time_limit, "max_cycles": args.max_cycles}
    if args.tabu_iterations is not None:
        kwargs["tabu_iterations_per_offspring"] = args.tabu_iterations
    if args.stall_cycles is not None:
        kwargs["stall_cycles"] = args.stall_cycles
    if args.population is not None:
        kwargs["population_size"] = args.population
    return HeaParams(**kwargs)


def cmd_color(args) -> int:
    doc = load_document(args.input)
    budget = {"node_limit": args.node_limit, "hea_params": _hea_params(args)}
    if args.target == "nodes":
        colouring, cert = colour_nodes(doc.graph, args.algorithm, **budget)
    elif args.target == "edges":
        colouring = colour_edges(doc.graph, args.algorithm, **budget)
        cert = colouring.provenance["certificate"]
    else:
        colouring = colour_faces(face_target(doc), args.algorithm, **budget)
        cert = colouring.provenance["certificate"]
    print(f"k={colouring.k} lower={cert.lower_bound} optimal={str(cert.optimal).lower()}")
    text = write_colouring(colouring)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    doc = load_document(args.graph)
    colouring = parse_colouring(Path(args.colouring).read_text())
    faces = face_dual(face_target(doc)).faces if colouring.kind == "face" else None
    report = verify(doc.graph, colouring, faces)
    if report.valid:
        print(f"valid {colouring.kind} colouring, k={report.k}")
        return EXIT_OK
    for a, b in report.clash_list:
        print(f"clash {a} {b}")
    print(f"invalid {colouring.kind} colouring: {len(report.clash_list)} clashes")
    return EXIT_INVALID


# ---------------------------------------------------------------- render


def cmd_render(args) -> int:
    doc = load_document(args.graph)
    g = doc.graph
    colouring = parse_colouring(Path(args.colouring).read_text()) if args.colouring else None
    palette = Palette()
    if Path(args.output).suffix.lower() == ".dot":
        Path(args.output).write_text(to_dot(g, colouring, palette))
        return EXIT_OK
    layout_name = args.layout or ("provided" if doc.coordinates is not None else "spring")
    kind = colouring.kind if colouring else None
    if kind == "face" and layout_name != "provided":
        raise UsageError("face colourings can only be drawn with --layout provided")
    if layout_name in ("circular", "multipartite") and kind != "node":
        raise UsageError(f"--layout {layout_name} needs a node colouring")
    if layout_name == "provided":
        if doc.coordinates is None:
            raise UsageError("--layout provided needs an embedding file with coordinates")
        positions = doc.coordinates
    elif layout_name == "spring":
        positions = spring_layout(g, seed=args.seed)
    elif layout_name == "circular":
        positions = circular_grouped_layout(g, colouring)
    else:
        positions = multipartite_layout(g, colouring)
    faces = unbounded = None
    if kind == "face":
        dual = face_dual(face_target(doc))
        faces, unbounded = dual.faces, dual.unbounded_face
    svg = render_svg(
        g, positions, colouring, faces=faces, unbounded_face=unbounded, palette=palette,
        hide_nodes=args.hide_nodes, hide_unbounded=args.hide_unbounded, size=args.size,
    )
    Path(args.output).write_text(svg)
    return EXIT_OK


# ---------------------------------------------------------------- bench


def cmd_bench(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if any(not 0.0 <= p <= 1.0 for p in args.p):
        raise UsageError("every --p must lie in [0, 1]")
    records = run_bench(
        args.n, args.p, args.trials, args.algorithms, master_seed=args.master_seed,
        node_limit=args.node_limit, hea_params=_hea_params(args), workers=args.workers, timing=args.timing,
    )
    text = write_benchmark_csv(records)
    if args.output:
        Path(args.output).write_text(text)
        print(f"{len(records)} rows -> {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------- info


def cmd_info(args) -> int:
    doc = load_document(args.input)
    g: Graph = doc.graph
    print(f"name: {doc.name or Path(args.input).stem}")
    print(f"n: {g.n}")
    print(f"m: {g.m}")
    print(f"max degree: {max_degree(g)}")
    print(f"components: {len(components(g))}")
    print(f"bipartite: {str(is_bipartite(g) is not None).lower()}")
    print(f"eulerian: {str(is_eulerian(g)).lower()}")
    print(f"clique lower bound: {greedy_clique(g).size}")
    if doc.rotation is not None or doc.coordinates is not None:
        try:
            faces = face_dual(face_target(doc)).faces
        except StructuralError as exc:
            print(f"faces: unavailable ({exc})")
        else:
            print(f"faces: {faces.f}")
            print(f"euler n-m+f=2: {str(euler_check(g.n, g.m, faces.f)).lower()}")
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="seed for randomised algorithms and layouts")
    p.add_argument("--node-limit", type=int, help="search-node budget for backtracking")
    p.add_argument("--time-limit", type=float, help="HEA wall-clock limit in seconds")
    p.add_argument("--max-cycles", type=int, help="HEA offspring-cycle budget")
    p.add_argument("--tabu-iterations", type=int, help="HEA tabu iterations per offspring")
    p.add_argument("--stall-cycles", type=int, help="HEA cycles without improvement before giving up a k")
    p.add_argument("--population", type=int, help="HEA population size")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromatica", description="Node, edge and face colouring of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int, help="node count (leaf count for star)")
    p.add_argument("--p", type=float, help="edge probability for gnp")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--level", type=int)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fetch", help="fetch a graph from House of Graphs")
    p.add_argument("id", type=int)
    p.add_argument("--cache-dir", help="cache directory (default $CHROMATICA_CACHE or ~/.cache/chromatica)")
    p.add_argument("--offline", action="store_true", help="only use the cache")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fetch)

    p = sub.add_parser("color", aliases=["colour"], help="colour nodes, edges or faces")
    p.add_argument("target", choices=("nodes", "edges", "faces"))
    p.add_argument("input")
    p.add_argument("-a", "--algorithm", choices=ALGORITHMS, default="dsatur")
    _budget_flags(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a colouring file against a graph")
    p.add_argument("graph")
    p.add_argument("colouring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a graph and optional colouring as SVG (or DOT)")
    p.add_argument("graph")
    p.add_argument("colouring", nargs="?")
    p.add_argument("--layout", choices=("spring", "circular", "multipartite", "provided"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--hide-nodes", action="store_true")
    p.add_argument("--hide-unbounded", action="store_true")
    p.add_argument("--size", type=int, default=600)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="random-graph benchmark to CSV")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--p", type=float, nargs="+", required=True)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("-a", "--algorithms", nargs="+", choices=ALGORITHMS, default=["dsatur", "backtracking"])
    p.add_argument("--master-seed", type=int, default=0)
    p.add_argument("--workers", type=int, help="worker processes (default: CPU count)")
    p.add_argument("--timing", action="store_true", help="record wall-clock millis (breaks byte-identical output)")
    _budget_flags(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("info", help="summarise a graph file")
    p.add_argument("input")
    p.set_defaults(func=cmd_info)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except StructuralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL
    except FetchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FETCH
    except (ChromaticaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
