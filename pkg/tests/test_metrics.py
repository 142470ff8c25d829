import random

import pytest

from conftest import brute_force_modularity, random_graph
from dyntrack.dyci import Partition
from dyntrack.graph import SnapshotGraph
from dyntrack.metrics import (EmptyGraph, SnapshotReport, modularity, report,
                              sequence_averages, write_reports)


def test_single_edge_one_community_is_zero():
    g = SnapshotGraph.build(edges=[("a", "b", 1)])
    p = Partition.from_membership(g, {"a": 0, "b": 0})
    assert modularity(g, p) == pytest.approx(0.0, abs=1e-12)


def test_two_disconnected_edges_half():
    g = SnapshotGraph.build(edges=[("a", "b", 1), ("c", "d", 1)])
    p = Partition.from_membership(g, {"a": 0, "b": 0, "c": 1, "d": 1})
    assert modularity(g, p) == pytest.approx(0.5, abs=1e-12)


def test_all_singletons_closed_form():
    g = SnapshotGraph.build(edges=[("a", "b", 2), ("b", "c", 3), ("c", "d", 1), ("a", "d", 4)])
    p = Partition.from_membership(g, {n: i for i, n in enumerate(sorted(g.nodes))})
    m = g.total_weight()
    wd = {n: sum(g.neighbors(n).values()) for n in g.nodes}
    expected = -sum(v * v for v in wd.values()) / (4.0 * m * m)
    assert modularity(g, p) == pytest.approx(expected, abs=1e-12)


def test_matches_brute_force_double_loop():
    rng = random.Random(3)
    for _ in range(50):
        names = [f"v{i}" for i in range(rng.randint(2, 20))]
        g = random_graph(rng, names, 0.4)
        if g.total_weight() == 0:
            continue
        membership = {n: rng.randrange(4) for n in names}
        p = Partition.from_membership(g, membership)
        assert modularity(g, p) == pytest.approx(
            brute_force_modularity(g, membership), abs=1e-9)


def test_scale_invariance():
    rng = random.Random(5)
    names = [f"v{i}" for i in range(12)]
    g = random_graph(rng, names, 0.5)
    membership = {n: rng.randrange(3) for n in names}
    p1 = Partition.from_membership(g, membership)
    g2 = SnapshotGraph.build(nodes=names, edges=[(a, b, w * 17) for a, b, w in g.edges()])
    p2 = Partition.from_membership(g2, membership)
    assert modularity(g, p1) == pytest.approx(modularity(g2, p2), abs=1e-9)


def test_empty_graph_raises():
    g = SnapshotGraph.build(nodes=["a", "b"])
    p = Partition.from_membership(g, {"a": 0, "b": 1})
    with pytest.raises(EmptyGraph):
        modularity(g, p)


def test_report_copies_fields():
    g = SnapshotGraph.build(edges=[("a", "b", 1)], t=4)
    p = Partition.from_membership(g, {"a": 0, "b": 0})
    r = report(g, p, 12.5, "dyci")
    assert (r.t, r.algorithm, r.community_count, r.elapsed_ms) == (4, "dyci", 1, 12.5)


def test_report_rejects_out_of_range():
    with pytest.raises(ValueError):
        SnapshotReport(t=0, algorithm="dyci", modularity=1.5, community_count=1, elapsed_ms=0)


def test_sequence_averages_are_arithmetic_means():
    rs = [SnapshotReport(t, "dyci", phi, c, ms)
          for t, (phi, c, ms) in enumerate([(0.2, 3, 10.0), (0.4, 5, 30.0), (0.6, 4, 20.0)])]
    means = sequence_averages(rs)["dyci"]
    assert means["modularity"] == pytest.approx(0.4)
    assert means["communities"] == pytest.approx(4.0)
    assert means["elapsed_ms"] == pytest.approx(20.0)


def test_reports_csv_header(tmp_path):
    g = SnapshotGraph.build(edges=[("a", "b", 1)])
    p = Partition.from_membership(g, {"a": 0, "b": 0})
    path = tmp_path / "reports.csv"
    write_reports([report(g, p, 1.0, "ga")], str(path))
    lines = path.read_text().splitlines()
    assert lines[0] == "t,algorithm,modularity,communities,elapsed_ms"
    assert lines[1].startswith("0,ga,")
