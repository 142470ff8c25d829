#!/usr/bin/env python3
"""Sweep the anchored-mode spring stiffness and report the trade-off
between frame-to-frame node displacement and layout stress."""

import argparse

import numpy as np

from dyntrack.layout import (ANCHORED, FIXED, FREE, LayoutMode, layout_step,
                             mean_displacement, normalized_stress)
from dyntrack.synth import ChurnRates, SynthSpec, generate


def measure(graphs, mode, seed):
    rng = np.random.default_rng(seed)
    frames, prev = [], None
    for g in graphs:
        prev = layout_step(g, prev, mode, rng)
        frames.append(prev)
    disp = np.mean([mean_displacement(a, b) for a, b in zip(frames, frames[1:])])
    stress = np.mean([normalized_stress(g, f) for g, f in zip(graphs, frames)])
    return disp, stress


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nodes", type=int, default=50)
    ap.add_argument("--snapshots", type=int, default=5)
    ap.add_argument("--seeds", type=int, default=10)
    args = ap.parse_args()

    stiffnesses = [0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0]
    rows = {s: [] for s in stiffnesses}
    ref = {FREE: [], FIXED: []}
    for seed in range(args.seeds):
        spec = SynthSpec(nodes=args.nodes, communities=4, p_intra=0.3,
                         p_inter=0.01, snapshots=args.snapshots, seed=seed,
                         churn=ChurnRates(0.05, 0.05, 0.10, 0.10, 0.10))
        graphs, _ = generate(spec)
        for kind in ref:
            ref[kind].append(measure(graphs, LayoutMode(kind), seed))
        for s in stiffnesses:
            rows[s].append(measure(graphs, LayoutMode(ANCHORED, s), seed))

    print(f"{'stiffness':>10} {'displacement':>13} {'stress':>8}")
    for kind in (FREE, FIXED):
        d, s = np.mean(ref[kind], axis=0)
        print(f"{kind:>10} {d:13.3f} {s:8.3f}")
    for stiff in stiffnesses:
        d, s = np.mean(rows[stiff], axis=0)
        print(f"{stiff:10.2f} {d:13.3f} {s:8.3f}")


if __name__ == "__main__":
    main()
