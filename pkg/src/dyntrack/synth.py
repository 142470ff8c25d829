"""Planted-partition dynamic graph generator.

Substitute benchmark data: a community structure is planted, then churned
across snapshots through the five update classes (node add/remove, edge
add/remove, weight update). Ground-truth memberships are kept per
snapshot so recovery can be scored.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field, asdict

from .graph import SnapshotGraph, write_sequence


@dataclass
class ChurnRates:
    """Per-step churn, as fractions of current node / edge counts."""

    node_remove: float = 0.0
    node_add: float = 0.0
    edge_remove: float = 0.0
    edge_add: float = 0.0
    weight_update: float = 0.0


@dataclass
class SynthSpec:
    nodes: int = 100
    communities: int = 4
    p_intra: float = 0.3
    p_inter: float = 0.01
    weight_min: int = 1
    weight_max: int = 10
    snapshots: int = 5
    churn: ChurnRates = field(default_factory=ChurnRates)
    intra_bias: float = 0.9  # fraction of churned edges kept intra-community
    seed: int = 0

    def __post_init__(self):
        if self.nodes < 1 or self.communities < 1 or self.snapshots < 1:
            raise ValueError("nodes, communities, snapshots must be positive")
        if not 0.0 <= self.p_inter <= self.p_intra <= 1.0:
            raise ValueError("need 0 <= p_inter <= p_intra <= 1")
        if self.weight_min < 1 or self.weight_max < self.weight_min:
            raise ValueError("invalid weight range")
        if isinstance(self.churn, dict):
            self.churn = ChurnRates(**self.churn)

    @classmethod
    def from_json(cls, path: str) -> "SynthSpec":
        with open(path, encoding="utf-8") as fh:
            return cls(**json.load(fh))

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def _node_name(i: int) -> str:
    return f"n{i:05d}"


class _Generator:
    def __init__(self, spec: SynthSpec):
        self.spec = spec
        self.rng = random.Random(spec.seed)
        self.truth: dict[str, int] = {}
        self.adj: dict[str, dict[str, int]] = {}
        self.next_node = 0

    def _weight(self) -> int:
        return self.rng.randint(self.spec.weight_min, self.spec.weight_max)

    def _add_edge(self, a: str, b: str, w: int) -> None:
        self.adj[a][b] = w
        self.adj[b][a] = w

    def _new_node(self, community: int | None = None) -> str:
        n = _node_name(self.next_node)
        self.next_node += 1
        c = community if community is not None else self.rng.randrange(self.spec.communities)
        self.truth[n] = c
        self.adj[n] = {}
        return n

    def initial(self) -> None:
        s = self.spec
        for i in range(s.nodes):
            self._new_node(i % s.communities)
        nodes = sorted(self.adj)
        for i, a in enumerate(nodes):
            for b in nodes[i + 1:]:
                p = s.p_intra if self.truth[a] == self.truth[b] else s.p_inter
                if p > 0 and self.rng.random() < p:
                    self._add_edge(a, b, self._weight())

    def _edge_list(self):
        return [(a, b) for a in sorted(self.adj) for b in self.adj[a] if a < b]

    def _pick_pair(self) -> tuple[str, str] | None:
        """Random non-adjacent pair, biased toward intra-community."""
        nodes = sorted(self.adj)
        if len(nodes) < 2:
            return None
        want_intra = self.rng.random() < self.spec.intra_bias
        for _ in range(50):
            a, b = self.rng.sample(nodes, 2)
            if b in self.adj[a]:
                continue
            if (self.truth[a] == self.truth[b]) == want_intra:
                return a, b
        return None

    def churn_step(self) -> None:
        s, rng = self.spec, self.rng
        n_nodes = len(self.adj)
        edges = self._edge_list()
        n_edges = len(edges)

        for n in rng.sample(sorted(self.adj), min(int(s.churn.node_remove * n_nodes), n_nodes - 1)):
            for nbr in list(self.adj[n]):
                del self.adj[nbr][n]
            del self.adj[n]
            del self.truth[n]

        for _ in range(int(s.churn.node_add * n_nodes)):
            n = self._new_node()
            mates = [m for m in sorted(self.adj) if m != n and self.truth[m] == self.truth[n]]
            others = [m for m in sorted(self.adj) if m != n and self.truth[m] != self.truth[n]]
            for m in mates:
                if rng.random() < s.p_intra:
                    self._add_edge(n, m, self._weight())
            for m in others:
                if s.p_inter > 0 and rng.random() < s.p_inter:
                    self._add_edge(n, m, self._weight())

        edges = self._edge_list()
        for a, b in rng.sample(edges, min(int(s.churn.edge_remove * n_edges), len(edges))):
            if b in self.adj.get(a, {}):
                del self.adj[a][b]
                del self.adj[b][a]

        for _ in range(int(s.churn.edge_add * n_edges)):
            pair = self._pick_pair()
            if pair:
                self._add_edge(pair[0], pair[1], self._weight())

        edges = self._edge_list()
        k = min(int(s.churn.weight_update * n_edges), len(edges))
        for a, b in rng.sample(edges, k):
            old = self.adj[a][b]
            new = self._weight()
            if new == old:
                new = old + 1 if old < s.weight_max else max(1, old - 1)
            self._add_edge(a, b, new)

    def snapshot(self, t: int) -> SnapshotGraph:
        return SnapshotGraph.build(
            nodes=sorted(self.adj),
            edges=[(a, b, w) for a in sorted(self.adj) for b, w in self.adj[a].items() if a < b],
            t=t)


def generate(spec: SynthSpec) -> tuple[list[SnapshotGraph], list[dict[str, int]]]:
    """Produce the snapshot sequence and per-snapshot ground truth."""
    gen = _Generator(spec)
    gen.initial()
    graphs = [gen.snapshot(0)]
    truths = [dict(gen.truth)]
    for t in range(1, spec.snapshots):
        gen.churn_step()
        graphs.append(gen.snapshot(t))
        truths.append(dict(gen.truth))
    return graphs, truths


def write_synth(spec: SynthSpec, out_dir: str) -> None:
    """Write snapshot files plus truth_<t>.csv ground-truth partitions."""
    graphs, truths = generate(spec)
    write_sequence(graphs, out_dir)
    for t, truth in enumerate(truths):
        with open(os.path.join(out_dir, f"truth_{t}.csv"), "w", encoding="utf-8") as fh:
            for n in sorted(truth):
                fh.write(f"{n},{truth[n]}\n")
