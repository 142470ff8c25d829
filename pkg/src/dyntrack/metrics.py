"""Partition quality and per-snapshot measurement records.

Modularity of a weighted partition:

    phi = 1/(2M) * sum_i sum_j (w_ij - WD_i*WD_j/(2M)) * delta(c_i, c_j)

with M the total (unordered) edge weight. The double sum runs over
ordered pairs including i = j with w_ii = 0, so every node contributes
the self term -WD_i^2/(4M^2). Aggregated per community this collapses to

    phi = (sum of intra edge weights)/M - sum_c (S_c/(2M))^2

with S_c the summed weighted degree of community c.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyci import Partition
from .graph import SnapshotGraph


class EmptyGraph(Exception):
    """Modularity is undefined when the total edge weight is zero."""


def modularity(g: SnapshotGraph, p: Partition) -> float:
    m = g.total_weight()
    if m <= 0:
        raise EmptyGraph("total edge weight is zero")
    intra = 0.0
    for a, b, w in g.edges():
        if p.membership[a] == p.membership[b]:
            intra += w
    degree_sums: dict[int, float] = {}
    for n in g.nodes:
        c = p.membership[n]
        degree_sums[c] = degree_sums.get(c, 0.0) + sum(g.neighbors(n).values())
    null = sum(s * s for s in degree_sums.values()) / (4.0 * m * m)
    return intra / m - null


@dataclass
class SnapshotReport:
    """The three per-snapshot measurements: quality, size, speed."""

    t: int
    algorithm: str  # "dyci" | "ga"
    modularity: float
    community_count: int
    elapsed_ms: float

    def __post_init__(self):
        if not (-1.0 - 1e-9 <= self.modularity <= 1.0 + 1e-9):
            raise ValueError(f"modularity out of range: {self.modularity}")
        if self.community_count < 0:
            raise ValueError("negative community count")


def report(g: SnapshotGraph, p: Partition, elapsed_ms: float, algorithm: str) -> SnapshotReport:
    return SnapshotReport(
        t=g.t,
        algorithm=algorithm,
        modularity=modularity(g, p),
        community_count=p.community_count(),
        elapsed_ms=elapsed_ms,
    )


def write_reports(reports, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("t,algorithm,modularity,communities,elapsed_ms\n")
        for r in reports:
            fh.write(f"{r.t},{r.algorithm},{r.modularity:.10f},"
                     f"{r.community_count},{r.elapsed_ms:.3f}\n")


def sequence_averages(reports) -> dict[str, dict[str, float]]:
    """Unweighted per-algorithm means over all snapshots."""
    by_algo: dict[str, list[SnapshotReport]] = {}
    for r in reports:
        by_algo.setdefault(r.algorithm, []).append(r)
    out = {}
    for algo, rs in by_algo.items():
        n = len(rs)
        out[algo] = {
            "modularity": sum(r.modularity for r in rs) / n,
            "communities": sum(r.community_count for r in rs) / n,
            "elapsed_ms": sum(r.elapsed_ms for r in rs) / n,
        }
    return out
