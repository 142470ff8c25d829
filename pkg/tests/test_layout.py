import json
import math
import random

import numpy as np
import pytest

from conftest import random_graph
from dyntrack.dyci import Partition, seed_partition
from dyntrack.graph import SnapshotGraph, diff_snapshots
from dyntrack.layout import (ANCHORED, FIXED, FREE, LayoutFrame, LayoutMode,
                             PartitionMismatch, annotate, frames_to_json,
                             layout_step, mean_displacement, normalized_stress)
from dyntrack.synth import ChurnRates, SynthSpec, generate


def test_single_node_at_origin():
    g = SnapshotGraph.build(nodes=["a"])
    f = layout_step(g, None, LayoutMode(FREE), np.random.default_rng(0))
    assert f.positions == {"a": (0.0, 0.0)}


def test_positions_cover_exactly_current_nodes():
    g = SnapshotGraph.build(nodes=["iso"], edges=[("a", "b", 2)])
    f = layout_step(g, None, LayoutMode(FREE), np.random.default_rng(0))
    assert set(f.positions) == {"a", "b", "iso"}
    assert all(math.isfinite(x) and math.isfinite(y) for x, y in f.positions.values())


def test_fixed_mode_identical_graph_bitwise_stable():
    rng = random.Random(0)
    g = random_graph(rng, [f"v{i}" for i in range(20)], 0.2)
    f0 = layout_step(g, None, LayoutMode(FREE), np.random.default_rng(1))
    f1 = layout_step(g, f0, LayoutMode(FIXED), np.random.default_rng(2))
    assert f1.positions == f0.positions


def test_deterministic_under_seed():
    rng = random.Random(1)
    g = random_graph(rng, [f"v{i}" for i in range(15)], 0.3)
    f1 = layout_step(g, None, LayoutMode(ANCHORED), np.random.default_rng(9))
    f2 = layout_step(g, None, LayoutMode(ANCHORED), np.random.default_rng(9))
    assert f1.positions == f2.positions


def _frames_for_mode(graphs, mode, seed):
    rng = np.random.default_rng(seed)
    frames, prev = [], None
    for g in graphs:
        prev = layout_step(g, prev, mode, rng)
        frames.append(prev)
    return frames


def churned_sequence(seed, nodes=40, snapshots=4):
    spec = SynthSpec(nodes=nodes, communities=4, p_intra=0.3, p_inter=0.01,
                     snapshots=snapshots, seed=seed,
                     churn=ChurnRates(0.02, 0.02, 0.05, 0.05, 0.05))
    return generate(spec)[0]


def test_stability_ordering_fixed_anchored_free():
    disps = {FIXED: [], ANCHORED: [], FREE: []}
    for seed in range(5):
        graphs = churned_sequence(seed)
        for kind in disps:
            frames = _frames_for_mode(graphs, LayoutMode(kind), seed)
            disps[kind].append(np.mean([
                mean_displacement(a, b) for a, b in zip(frames, frames[1:])]))
    assert np.mean(disps[FIXED]) <= np.mean(disps[ANCHORED]) <= np.mean(disps[FREE])


def test_anchor_stiffness_sweep_approaches_fixed():
    graphs = churned_sequence(3, nodes=50)
    means = []
    for stiffness in (0.05, 0.5, 5.0, 50.0):
        frames = _frames_for_mode(graphs, LayoutMode(ANCHORED, stiffness), 7)
        means.append(np.mean([mean_displacement(a, b)
                              for a, b in zip(frames, frames[1:])]))
    assert means == sorted(means, reverse=True)
    assert means[-1] < 0.25 * means[0]


def test_annotate_fills_attributes():
    g = SnapshotGraph.build(edges=[("a", "b", 1)])
    p = Partition.from_membership(g, {"a": 0, "b": 0})
    f = layout_step(g, None, LayoutMode(FREE), np.random.default_rng(0))
    annotate(f, p, {"a": 3, "b": 1}, initial_set={"a"})
    assert f.presence_count == {"a": 3, "b": 1}
    assert f.is_initial == {"a": True, "b": False}
    assert f.community_of == {"a": 0, "b": 0}


def test_annotate_rejects_mismatched_partition():
    g = SnapshotGraph.build(edges=[("a", "b", 1)])
    p = Partition.from_membership(g, {"a": 0, "b": 0})
    f = LayoutFrame(t=0, positions={"a": (0, 0)})
    with pytest.raises(PartitionMismatch):
        annotate(f, p, {"a": 1}, set())


def test_frames_json_schema():
    g = SnapshotGraph.build(edges=[("a", "b", 2)])
    p = Partition.from_membership(g, {"a": 0, "b": 0})
    f = layout_step(g, None, LayoutMode(FREE), np.random.default_rng(0))
    annotate(f, p, {"a": 1, "b": 1}, {"a", "b"})
    doc = json.loads(frames_to_json([f]))
    assert list(doc) == ["frames"]
    frame = doc["frames"][0]
    assert set(frame) == {"t", "nodes", "edges"}
    node = frame["nodes"][0]
    assert set(node) == {"id", "x", "y", "community", "presence", "initial"}
    assert frame["edges"] == [{"s": "a", "d": "b", "w": 2}]


def test_normalized_stress_zero_for_perfect_embedding():
    # a path drawn on a line at its graph distances has zero stress
    g = SnapshotGraph.build(edges=[("a", "b", 1), ("b", "c", 1)])
    f = LayoutFrame(t=0, positions={"a": (0, 0), "b": (1, 0), "c": (2, 0)})
    assert normalized_stress(g, f) == pytest.approx(0.0, abs=1e-12)


def test_new_nodes_near_placed_neighbours():
    g0 = SnapshotGraph.build(edges=[("a", "b", 1)])
    f0 = layout_step(g0, None, LayoutMode(FREE), np.random.default_rng(0))
    g1 = SnapshotGraph.build(edges=[("a", "b", 1), ("a", "n", 10), ("b", "n", 10)])
    g1.t = 1
    f1 = layout_step(g1, f0, LayoutMode(FIXED), np.random.default_rng(1))
    ax, ay = f1.positions["a"]
    nx_, ny = f1.positions["n"]
    assert math.hypot(nx_ - ax, ny - ay) < 5.0
