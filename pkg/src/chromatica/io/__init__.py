from .benchmark import BenchmarkRecord, parse_benchmark_csv, write_benchmark_csv
from .colouring_file import parse_colouring, write_colouring
from .dimacs import parse_dimacs, write_dimacs
from .document import GraphDocument
from .embedding import parse_embedding, write_embedding
from .graph6 import parse_graph6, write_graph6
from .hog import hog_fetch

__all__ = [
    "BenchmarkRecord", "GraphDocument", "hog_fetch", "parse_benchmark_csv", "parse_colouring",
    "parse_dimacs", "parse_embedding", "parse_graph6", "write_benchmark_csv", "write_colouring",
    "write_dimacs", "write_embedding", "write_graph6",
]
