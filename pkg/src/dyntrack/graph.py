"""Snapshot graphs, typed update sets, and snapshot diffing.

A dynamic graph is a sequence of undirected, edge-weighted snapshots.
Consecutive snapshots are related by an update set holding five lists:
node removals, edge removals, node additions (with incident edges),
edge additions, and edge weight changes.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field

NodeId = str
Edge = tuple[NodeId, NodeId]


class InconsistentUpdate(Exception):
    """An update entry conflicts with the graph or another entry."""


def edge_key(a: NodeId, b: NodeId) -> Edge:
    """Canonical (sorted) form of an undirected edge."""
    return (a, b) if a <= b else (b, a)


class SnapshotGraph:
    """Undirected weighted graph at one instant.

    Adjacency is symmetric, weights are strictly positive, no self loops.
    Instances are treated as immutable after construction; all mutating
    operations return a new graph.
    """

    __slots__ = ("t", "_adj")

    def __init__(self, t: int = 0):
        self.t = t
        self._adj: dict[NodeId, dict[NodeId, float]] = {}

    @classmethod
    def build(cls, nodes=(), edges=(), t: int = 0) -> "SnapshotGraph":
        """Construct from iterables of node ids and (a, b, w) triples."""
        g = cls(t)
        for n in nodes:
            g._adj.setdefault(n, {})
        for a, b, w in edges:
            g._add_edge(a, b, w)
        return g

    # -- internal mutators, used only during construction ---------------

    def _add_node(self, n: NodeId) -> None:
        self._adj.setdefault(n, {})

    def _add_edge(self, a: NodeId, b: NodeId, w: float) -> None:
        if a == b:
            raise ValueError(f"self-loop on {a!r}")
        if w <= 0:
            raise ValueError(f"non-positive weight {w} on ({a!r},{b!r})")
        self._adj.setdefault(a, {})[b] = w
        self._adj.setdefault(b, {})[a] = w

    def _remove_edge(self, a: NodeId, b: NodeId) -> None:
        del self._adj[a][b]
        del self._adj[b][a]

    def _remove_node(self, n: NodeId) -> None:
        for nbr in list(self._adj[n]):
            del self._adj[nbr][n]
        del self._adj[n]

    # -- read interface --------------------------------------------------

    @property
    def nodes(self):
        return self._adj.keys()

    def __contains__(self, n: NodeId) -> bool:
        return n in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def neighbors(self, n: NodeId) -> dict[NodeId, float]:
        return self._adj[n]

    def has_edge(self, a: NodeId, b: NodeId) -> bool:
        return a in self._adj and b in self._adj[a]

    def weight(self, a: NodeId, b: NodeId) -> float:
        return self._adj[a][b]

    def edges(self):
        """Yield each undirected edge once as (a, b, w) with a < b."""
        for a, nbrs in self._adj.items():
            for b, w in nbrs.items():
                if a < b:
                    yield a, b, w

    def total_weight(self) -> float:
        """M: sum of weights over undirected edges."""
        return sum(w for _, _, w in self.edges())

    def copy(self, t: int | None = None) -> "SnapshotGraph":
        g = SnapshotGraph(self.t if t is None else t)
        g._adj = {n: dict(nbrs) for n, nbrs in self._adj.items()}
        return g

    def equals(self, other: "SnapshotGraph") -> bool:
        """Structural equality: same nodes, edges, and weights."""
        return self._adj == other._adj

    def __repr__(self) -> str:
        ne = sum(len(v) for v in self._adj.values()) // 2
        return f"SnapshotGraph(t={self.t}, nodes={len(self._adj)}, edges={ne})"


@dataclass
class UpdateSet:
    """The five typed update lists transforming G_t into G_{t+1}."""

    node_to_remove: list[NodeId] = field(default_factory=list)
    edge_to_remove: list[Edge] = field(default_factory=list)
    node_to_add: list[tuple[NodeId, list[tuple[NodeId, float]]]] = field(default_factory=list)
    edge_to_add: list[tuple[NodeId, NodeId, float]] = field(default_factory=list)
    edge_weight_update: list[tuple[NodeId, NodeId, float]] = field(default_factory=list)

    def is_empty(self) -> bool:
        return not (self.node_to_remove or self.edge_to_remove or self.node_to_add
                    or self.edge_to_add or self.edge_weight_update)


def apply_updates(g: SnapshotGraph, u: UpdateSet) -> SnapshotGraph:
    """Apply an update set: removals, then additions, then weight updates.

    Raises InconsistentUpdate naming the first violating entry.
    """
    out = g.copy(t=g.t + 1)
    for n in u.node_to_remove:
        if n not in out:
            raise InconsistentUpdate(f"nodeToRemove: unknown node {n!r}")
        out._remove_node(n)
    for a, b in u.edge_to_remove:
        if not out.has_edge(a, b):
            raise InconsistentUpdate(f"edgeToRemove: no edge ({a!r},{b!r})")
        out._remove_edge(a, b)
    for n, incident in u.node_to_add:
        if n in out:
            raise InconsistentUpdate(f"nodeToAdd: node {n!r} already present")
        out._add_node(n)
        for nbr, w in incident:
            if nbr not in out:
                raise InconsistentUpdate(
                    f"nodeToAdd: edge ({n!r},{nbr!r}) references missing node {nbr!r}")
            if out.has_edge(n, nbr):
                raise InconsistentUpdate(f"nodeToAdd: edge ({n!r},{nbr!r}) already present")
            out._add_edge(n, nbr, w)
    for a, b, w in u.edge_to_add:
        if a not in out or b not in out:
            raise InconsistentUpdate(f"edgeToAdd: ({a!r},{b!r}) has a missing endpoint")
        if out.has_edge(a, b):
            raise InconsistentUpdate(f"edgeToAdd: edge ({a!r},{b!r}) already present")
        out._add_edge(a, b, w)
    for a, b, w in u.edge_weight_update:
        if not out.has_edge(a, b):
            raise InconsistentUpdate(f"edgeWeightUpdate: no edge ({a!r},{b!r})")
        if w <= 0:
            raise InconsistentUpdate(f"edgeWeightUpdate: non-positive weight {w}")
        out._adj[a][b] = w
        out._adj[b][a] = w
    return out


def diff_snapshots(g_prev: SnapshotGraph, g_next: SnapshotGraph) -> UpdateSet:
    """Minimal update set u with apply_updates(g_prev, u) equal to g_next.

    Edges incident to a removed node are implied, never listed. Edges with
    a new endpoint are folded into that node's nodeToAdd entry; an edge
    between two new nodes is attached to the later-added endpoint so that
    additions replay in list order.
    """
    u = UpdateSet()
    prev_nodes = set(g_prev.nodes)
    next_nodes = set(g_next.nodes)

    u.node_to_remove = sorted(prev_nodes - next_nodes)
    new_nodes = sorted(next_nodes - prev_nodes)
    new_rank = {n: i for i, n in enumerate(new_nodes)}

    for a, b, w in g_prev.edges():
        if a in new_rank or b in new_rank:
            continue  # endpoint gone entirely: implied by node removal
        if a not in next_nodes or b not in next_nodes:
            continue
        if not g_next.has_edge(a, b):
            u.edge_to_remove.append((a, b))

    incident: dict[NodeId, list[tuple[NodeId, float]]] = {n: [] for n in new_nodes}
    for a, b, w in g_next.edges():
        a_new, b_new = a in new_rank, b in new_rank
        if a_new and b_new:
            # attach to the endpoint added later
            owner, other = (a, b) if new_rank[a] > new_rank[b] else (b, a)
            incident[owner].append((other, w))
        elif a_new or b_new:
            owner, other = (a, b) if a_new else (b, a)
            incident[owner].append((other, w))
        elif not g_prev.has_edge(a, b):
            u.edge_to_add.append((a, b, w))
        elif g_prev.weight(a, b) != w:
            u.edge_weight_update.append((a, b, w))

    u.node_to_add = [(n, sorted(incident[n])) for n in new_nodes]
    u.edge_to_remove.sort()
    u.edge_to_add.sort()
    u.edge_weight_update.sort()
    return u


# -- snapshot file format ---------------------------------------------------
# One edge per line: `src,dst,weight` (weight a positive integer); lines
# starting with `#` are ignored; an isolated node is a line `nodeid,,`.
# A sequence is a directory of files snapshot_<t>.edges, t = 0,1,2,...

_SNAPSHOT_RE = re.compile(r"^snapshot_(\d+)\.edges$")


def read_snapshot(path: str, t: int = 0) -> SnapshotGraph:
    g = SnapshotGraph(t)
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(",")
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: expected 3 fields, got {len(parts)}")
            src, dst, w = (p.strip() for p in parts)
            if dst == "" and w == "":
                g._add_node(src)
                continue
            weight = int(w)
            if weight <= 0:
                raise ValueError(f"{path}:{lineno}: weight must be positive")
            if g.has_edge(src, dst):
                raise ValueError(f"{path}:{lineno}: duplicate edge ({src},{dst})")
            g._add_edge(src, dst, weight)
    return g


def write_snapshot(g: SnapshotGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        isolated = sorted(n for n in g.nodes if not g.neighbors(n))
        for n in isolated:
            fh.write(f"{n},,\n")
        for a, b, w in sorted(g.edges()):
            wtxt = str(int(w)) if float(w).is_integer() else str(w)
            fh.write(f"{a},{b},{wtxt}\n")


def read_sequence(directory: str) -> list[SnapshotGraph]:
    """Load snapshot_<t>.edges files; indices must be contiguous from 0."""
    found = {}
    for name in os.listdir(directory):
        m = _SNAPSHOT_RE.match(name)
        if m:
            found[int(m.group(1))] = os.path.join(directory, name)
    if not found:
        raise ValueError(f"no snapshot_<t>.edges files in {directory}")
    if sorted(found) != list(range(len(found))):
        raise ValueError(f"snapshot indices not contiguous from 0: {sorted(found)}")
    return [read_snapshot(found[t], t) for t in range(len(found))]


def write_sequence(graphs, directory: str) -> None:
    os.makedirs(directory, exist_ok=True)
    for t, g in enumerate(graphs):
        write_snapshot(g, os.path.join(directory, f"snapshot_{t}.edges"))
