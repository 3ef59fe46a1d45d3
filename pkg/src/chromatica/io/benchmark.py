from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from ..errors import ParseError

HEADER = ("n", "p", "seed", "algorithm", "colours", "lower_bound", "optimal", "millis")


@dataclass(frozen=True, order=True)
class BenchmarkRecord:
    """One algorithm run on one random graph."""

    n: int
    p: float
    seed: int
    algorithm: str
    colours: int
    lower_bound: int
    optimal: bool
    millis: int

    def __post_init__(self):
        if self.colours < self.lower_bound:
            raise ValueError(f"{self.colours} colours is below the lower bound {self.lower_bound}")


def write_benchmark_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    for r in sorted(records, key=lambda r: (r.n, r.p, r.seed, r.algorithm)):
        writer.writerow([r.n, repr(float(r.p)), r.seed, r.algorithm, r.colours, r.lower_bound,
                         "true" if r.optimal else "false", r.millis])
    return buf.getvalue()


def parse_benchmark_csv(text: str) -> list[BenchmarkRecord]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != HEADER:
        raise ParseError("missing benchmark header", line=1)
    out = []
    for lineno, row in enumerate(rows[1:], 2):
        if len(row) != len(HEADER):
            raise ParseError(f"expected {len(HEADER)} fields", line=lineno)
        try:
            n, p, seed, alg, colours, lower, optimal, millis = row
            if optimal not in ("true", "false"):
                raise ValueError(optimal)
            out.append(BenchmarkRecord(int(n), float(p), int(seed), alg, int(colours), int(lower),
                                       optimal == "true", int(millis)))
        except ValueError as exc:
            raise ParseError(f"bad benchmark row: {exc}", line=lineno) from None
    return out
