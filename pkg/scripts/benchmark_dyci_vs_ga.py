#!/usr/bin/env python3
"""Compare the incremental detector against the GA baseline on synthetic
planted-partition dynamic sequences: per-snapshot modularity, community
count, and runtime, plus sequence averages."""

import argparse
import time

import numpy as np

from dyntrack import dyci, ga, metrics
from dyntrack.graph import diff_snapshots
from dyntrack.synth import ChurnRates, SynthSpec, generate


def run_sequence(seed, nodes, communities, snapshots, churn, ga_cfg):
    spec = SynthSpec(nodes=nodes, communities=communities, p_intra=0.3,
                     p_inter=0.005, snapshots=snapshots, seed=seed,
                     churn=ChurnRates(churn / 5, churn / 5, churn / 2.5,
                                      churn / 2.5, churn / 2.5))
    graphs, _ = generate(spec)
    rows = []

    g = graphs[0]
    t0 = time.perf_counter()
    p = dyci.seed_partition(g)
    rows.append(("dyci", 0, metrics.modularity(g, p), p.community_count(),
                 (time.perf_counter() - t0) * 1000))
    for g_next in graphs[1:]:
        u = diff_snapshots(g, g_next)
        t0 = time.perf_counter()
        g, p = dyci.step(g, p, u)
        rows.append(("dyci", g.t, metrics.modularity(g, p), p.community_count(),
                     (time.perf_counter() - t0) * 1000))

    for g_t in graphs:
        t0 = time.perf_counter()
        p_ga, fit = ga.evolve(g_t, ga_cfg)
        rows.append(("ga", g_t.t, fit, p_ga.community_count(),
                     (time.perf_counter() - t0) * 1000))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--nodes", type=int, default=300)
    ap.add_argument("--communities", type=int, default=8)
    ap.add_argument("--snapshots", type=int, default=10)
    ap.add_argument("--churn", type=float, default=0.05,
                    help="approximate edge churn per step")
    ap.add_argument("--gens", type=int, default=50)
    args = ap.parse_args()

    finals = {"dyci": [], "ga": []}
    times = {"dyci": [], "ga": []}
    for seed in range(args.seeds):
        ga_cfg = ga.GaConfig(generations=args.gens, rng_seed=seed)
        rows = run_sequence(seed, args.nodes, args.communities,
                            args.snapshots, args.churn, ga_cfg)
        last_t = max(r[1] for r in rows)
        for algo, t, phi, count, ms in rows:
            times[algo].append(ms)
            if t == last_t:
                finals[algo].append(phi)
        d = next(r for r in rows if r[0] == "dyci" and r[1] == last_t)
        g = next(r for r in rows if r[0] == "ga" and r[1] == last_t)
        print(f"seed {seed}: final dyci phi={d[2]:.3f} ({d[3]} comms, {d[4]:.1f} ms) "
              f"| ga phi={g[2]:.3f} ({g[3]} comms, {g[4]:.0f} ms)")

    print(f"\nmean final modularity: dyci {np.mean(finals['dyci']):.3f} "
          f"| ga {np.mean(finals['ga']):.3f}")
    print(f"mean per-snapshot time: dyci {np.mean(times['dyci']):.1f} ms "
          f"| ga {np.mean(times['ga']):.0f} ms")


if __name__ == "__main__":
    main()
