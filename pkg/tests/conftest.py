"""Shared brute-force oracles and random-graph helpers."""

from __future__ import annotations

import random

from dyntrack.graph import SnapshotGraph


def brute_force_modularity(g: SnapshotGraph, membership: dict) -> float:
    """Literal ordered double-loop evaluation of the modularity sum."""
    nodes = sorted(g.nodes)
    m = g.total_weight()
    wd = {n: sum(g.neighbors(n).values()) for n in nodes}
    total = 0.0
    for i in nodes:
        for j in nodes:
            if membership[i] != membership[j]:
                continue
            w = g.weight(i, j) if g.has_edge(i, j) else 0.0
            total += w - wd[i] * wd[j] / (2.0 * m)
    return total / (2.0 * m)


def brute_force_iw(g: SnapshotGraph, members: set) -> float:
    """Eq-style intra weight: ordered pair sum halved."""
    total = 0.0
    for i in members:
        for j, w in g.neighbors(i).items():
            if j in members:
                total += w / 2.0
    return total


def brute_force_inw(g: SnapshotGraph, a: set, b: set) -> float:
    total = 0.0
    for i in a:
        for j, w in g.neighbors(i).items():
            if j in b:
                total += w
    return total


def random_graph(rng: random.Random, names, p: float, wmax: int = 10) -> SnapshotGraph:
    names = list(names)
    edges = []
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            if rng.random() < p:
                edges.append((names[i], names[j], rng.randint(1, wmax)))
    return SnapshotGraph.build(nodes=names, edges=edges)
