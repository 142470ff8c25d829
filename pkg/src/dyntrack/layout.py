"""Incremental force-directed layout with three positioning modes.

Each snapshot is embedded by a weighted Fruchterman-Reingold spring
embedder seeded from the previous frame. Persistent nodes are handled
per mode: free (fully movable), fixed (pinned at their previous
position), or anchored (tied to an invisible virtual node pinned at the
previous position by a spring). Anchors exert no repulsion and never
appear in exports.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import shortest_path

from .dyci import CommunityId, Partition
from .graph import NodeId, SnapshotGraph


class PartitionMismatch(Exception):
    pass


FREE = "free"
FIXED = "fixed"
ANCHORED = "anchored"


@dataclass
class LayoutMode:
    kind: str = ANCHORED
    anchor_stiffness: float = 0.5  # relative to a unit-weight edge spring

    def __post_init__(self):
        if self.kind not in (FREE, FIXED, ANCHORED):
            raise ValueError(f"unknown layout mode {self.kind!r}")
        if self.anchor_stiffness <= 0:
            raise ValueError("anchor_stiffness must be positive")


@dataclass
class LayoutFrame:
    t: int
    positions: dict[NodeId, tuple[float, float]]
    community_of: dict[NodeId, CommunityId] = field(default_factory=dict)
    presence_count: dict[NodeId, int] = field(default_factory=dict)
    is_initial: dict[NodeId, bool] = field(default_factory=dict)
    edges: list[tuple[NodeId, NodeId, float]] = field(default_factory=list)
    converged: bool = True


# spring-embedder constants; k is the ideal edge length in layout units
_K = 1.0
_MAX_ITER = 1000
_CONV_TOL = 1e-3
_COOL = 0.95


def _initial_positions(g: SnapshotGraph, prev: LayoutFrame | None,
                       rng: np.random.Generator) -> tuple[list[NodeId], np.ndarray, np.ndarray]:
    """Seed positions: persistent nodes from prev, new nodes at the jittered
    centroid of placed neighbours, unplaced components on a circle."""
    nodes = sorted(g.nodes)
    idx = {n: i for i, n in enumerate(nodes)}
    pos = np.zeros((len(nodes), 2))
    placed = np.zeros(len(nodes), dtype=bool)
    if prev is not None:
        for n, (x, y) in prev.positions.items():
            if n in idx:
                pos[idx[n]] = (x, y)
                placed[idx[n]] = True

    # nodes with at least one placed neighbour: weighted centroid + jitter
    pending = [n for n in nodes if not placed[idx[n]]]
    progress = True
    while progress:
        progress = False
        for n in list(pending):
            nbrs = [(m, w) for m, w in g.neighbors(n).items() if placed[idx[m]]]
            if not nbrs:
                continue
            tw = sum(w for _, w in nbrs)
            cx = sum(pos[idx[m]][0] * w for m, w in nbrs) / tw
            cy = sum(pos[idx[m]][1] * w for m, w in nbrs) / tw
            jitter = rng.normal(scale=0.05 * _K, size=2)
            pos[idx[n]] = (cx + jitter[0], cy + jitter[1])
            placed[idx[n]] = True
            pending.remove(n)
            progress = True

    if pending:
        # whole components without any placed node: lay them on a circle
        center = pos[placed].mean(axis=0) if placed.any() else np.zeros(2)
        radius = _K * math.sqrt(len(nodes)) / 2.0
        if len(pending) == 1 and not placed.any():
            pos[idx[pending[0]]] = center
        else:
            offset = 2.0 * radius if placed.any() else 0.0
            for j, n in enumerate(sorted(pending)):
                ang = 2.0 * math.pi * j / len(pending)
                pos[idx[n]] = (center[0] + offset + radius * math.cos(ang),
                               center[1] + radius * math.sin(ang))
    return nodes, pos, placed


def layout_step(g: SnapshotGraph, prev: LayoutFrame | None, mode: LayoutMode,
                rng: np.random.Generator) -> LayoutFrame:
    """Embed one snapshot, seeded from the previous frame."""
    nodes, pos, placed = _initial_positions(g, prev, rng)
    n = len(nodes)
    idx = {m: i for i, m in enumerate(nodes)}
    edges = sorted(g.edges())

    if mode.kind == FIXED:
        movable = ~placed
    else:
        movable = np.ones(n, dtype=bool)
    anchors = pos.copy() if mode.kind == ANCHORED else None
    anchored_mask = placed if mode.kind == ANCHORED else np.zeros(n, dtype=bool)

    converged = True
    if movable.any() and n > 1:
        eu = np.array([idx[a] for a, b, w in edges], dtype=np.int64)
        ev = np.array([idx[b] for a, b, w in edges], dtype=np.int64)
        ew = np.array([w for a, b, w in edges], dtype=np.float64)
        w_scale = ew.mean() if len(ew) else 1.0
        temp = _K * math.sqrt(n) / 4.0
        converged = False
        for _ in range(_MAX_ITER):
            delta = pos[:, None, :] - pos[None, :, :]
            dist = np.sqrt((delta ** 2).sum(axis=2))
            np.fill_diagonal(dist, 1.0)
            dist = np.maximum(dist, 1e-9)
            # repulsion k^2/d between all real node pairs
            rep = (_K * _K) / (dist ** 2)
            np.fill_diagonal(rep, 0.0)
            disp = (delta * rep[:, :, None]).sum(axis=1)
            # attraction d^2/k along edges, scaled by relative weight
            if len(ew):
                evec = pos[eu] - pos[ev]
                ed = np.maximum(np.sqrt((evec ** 2).sum(axis=1)), 1e-9)
                f = (ew / w_scale) * ed / _K  # force magnitude per unit length
                pull = evec * f[:, None]
                np.add.at(disp, eu, -pull)
                np.add.at(disp, ev, pull)
            if anchors is not None and anchored_mask.any():
                avec = pos - anchors
                ad = np.maximum(np.sqrt((avec ** 2).sum(axis=1)), 1e-9)
                af = mode.anchor_stiffness * ad / _K
                disp -= np.where(anchored_mask[:, None], avec * af[:, None], 0.0)
            disp[~movable] = 0.0
            norm = np.maximum(np.sqrt((disp ** 2).sum(axis=1)), 1e-12)
            step = np.minimum(norm, temp)
            pos = pos + disp / norm[:, None] * step[:, None]
            temp *= _COOL
            if step[movable].max() < _CONV_TOL:
                converged = True
                break

    positions = {m: (float(pos[i, 0]), float(pos[i, 1])) for m, i in idx.items()}
    return LayoutFrame(t=g.t, positions=positions, edges=edges, converged=converged)


def annotate(frame: LayoutFrame, p: Partition, history: dict[NodeId, int],
             initial_set: set[NodeId]) -> LayoutFrame:
    """Fill community, presence-count, and initial-node attributes."""
    if set(frame.positions) != set(p.membership):
        raise PartitionMismatch("frame and partition cover different node sets")
    frame.community_of = {n: p.membership[n] for n in frame.positions}
    frame.presence_count = {n: history[n] for n in frame.positions}
    frame.is_initial = {n: n in initial_set for n in frame.positions}
    return frame


def frames_to_json(frames: list[LayoutFrame]) -> str:
    doc = {"frames": []}
    for f in frames:
        doc["frames"].append({
            "t": f.t,
            "nodes": [{
                "id": n,
                "x": f.positions[n][0],
                "y": f.positions[n][1],
                "community": int(f.community_of[n]),
                "presence": int(f.presence_count[n]),
                "initial": bool(f.is_initial[n]),
            } for n in sorted(f.positions)],
            "edges": [{"s": a, "d": b, "w": w} for a, b, w in f.edges],
        })
    return json.dumps(doc, indent=1)


def write_frames(frames: list[LayoutFrame], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(frames_to_json(frames))


# -- layout quality helpers (used by benchmarks and tests) -------------------


def mean_displacement(prev: LayoutFrame, cur: LayoutFrame) -> float:
    """Mean movement of nodes present in both frames; 0 if none persist."""
    common = set(prev.positions) & set(cur.positions)
    if not common:
        return 0.0
    total = 0.0
    for n in common:
        (x0, y0), (x1, y1) = prev.positions[n], cur.positions[n]
        total += math.hypot(x1 - x0, y1 - y0)
    return total / len(common)


def normalized_stress(g: SnapshotGraph, frame: LayoutFrame) -> float:
    """Scale-invariant stress of the drawing against graph distances.

    Pairs in different components are skipped. The drawing is rescaled by
    the stress-optimal factor before evaluation.
    """
    nodes = sorted(g.nodes)
    idx = {n: i for i, n in enumerate(nodes)}
    n = len(nodes)
    if n < 2:
        return 0.0
    us, vs = [], []
    for a, b, _ in g.edges():
        us.append(idx[a])
        vs.append(idx[b])
    adj = coo_matrix((np.ones(len(us)), (us, vs)), shape=(n, n))
    d = shortest_path(adj, directed=False, unweighted=True)
    pos = np.array([frame.positions[m] for m in nodes])
    delta = pos[:, None, :] - pos[None, :, :]
    euc = np.sqrt((delta ** 2).sum(axis=2))
    iu = np.triu_indices(n, 1)
    dg, de = d[iu], euc[iu]
    mask = np.isfinite(dg)
    dg, de = dg[mask], de[mask]
    if not len(dg):
        return 0.0
    alpha = (de / dg).sum() / np.maximum((de ** 2 / dg ** 2).sum(), 1e-12)
    return float((((alpha * de - dg) / dg) ** 2).sum() / len(dg))
