"""Genetic algorithm baseline for single-snapshot community detection.

Chromosomes use the locus-based adjacency representation (LAR): gene i
holds either its own index or the index of a neighbour of node i, and the
encoded partition is the set of connected components of the gene-link
graph. Crossover and mutation preserve feasibility by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .dyci import Partition
from .graph import SnapshotGraph
from .metrics import EmptyGraph


class InfeasibleChromosome(Exception):
    pass


class LengthMismatch(Exception):
    pass


@dataclass
class GaConfig:
    """Hyperparameters; defaults follow the published benchmark setup."""

    population_size: int = 100
    crossover_prob: float = 0.9
    mutation_prob: float = 0.1
    elite_fraction: float = 0.20
    generations: int = 50
    rng_seed: int = 0

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        for name in ("crossover_prob", "mutation_prob", "elite_fraction"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must be in [0,1], got {v}")


class GraphIndex:
    """Dense-index view of a snapshot for array-based GA operators."""

    def __init__(self, g: SnapshotGraph):
        self.nodes = sorted(g.nodes)
        self.index = {n: i for i, n in enumerate(self.nodes)}
        n = len(self.nodes)
        us, vs, ws = [], [], []
        for a, b, w in g.edges():
            us.append(self.index[a])
            vs.append(self.index[b])
            ws.append(w)
        self.edge_u = np.asarray(us, dtype=np.int64)
        self.edge_v = np.asarray(vs, dtype=np.int64)
        self.edge_w = np.asarray(ws, dtype=np.float64)
        self.total_weight = float(self.edge_w.sum())
        self.degree = np.zeros(n, dtype=np.float64)
        np.add.at(self.degree, self.edge_u, self.edge_w)
        np.add.at(self.degree, self.edge_v, self.edge_w)
        # allele set of locus i: {i} + neighbour indices, stored flat
        alleles = [[i] + sorted(self.index[nbr] for nbr in g.neighbors(node))
                   for i, node in enumerate(self.nodes)]
        self.allele_counts = np.array([len(a) for a in alleles], dtype=np.int64)
        self.allele_offsets = np.zeros(n, dtype=np.int64)
        np.cumsum(self.allele_counts[:-1], out=self.allele_offsets[1:])
        self.allele_flat = np.concatenate(alleles) if n else np.zeros(0, np.int64)
        self.n = n

    def is_feasible(self, genes: np.ndarray) -> bool:
        if len(genes) != self.n:
            return False
        for i, a in enumerate(genes):
            off, cnt = self.allele_offsets[i], self.allele_counts[i]
            if a not in self.allele_flat[off:off + cnt]:
                return False
        return True

    def random_chromosome(self, rng: np.random.Generator) -> np.ndarray:
        picks = (rng.random(self.n) * self.allele_counts).astype(np.int64)
        return self.allele_flat[self.allele_offsets + picks]

    def labels(self, genes: np.ndarray) -> np.ndarray:
        """Component labels of the gene-link graph, relabelled compactly."""
        links = coo_matrix(
            (np.ones(self.n), (np.arange(self.n), genes)), shape=(self.n, self.n))
        _, labels = connected_components(links, directed=False)
        return labels

    def fitness(self, genes: np.ndarray) -> float:
        """Modularity of the decoded partition."""
        labels = self.labels(genes)
        m = self.total_weight
        intra = self.edge_w[labels[self.edge_u] == labels[self.edge_v]].sum()
        sums = np.bincount(labels, weights=self.degree)
        return float(intra / m - (sums ** 2).sum() / (4.0 * m * m))


def decode(genes: np.ndarray, g: SnapshotGraph, gi: GraphIndex | None = None) -> Partition:
    """Decode a chromosome into a full Partition with weight caches."""
    gi = gi or GraphIndex(g)
    if not gi.is_feasible(np.asarray(genes)):
        raise InfeasibleChromosome("allele outside own index + neighbourhood")
    labels = gi.labels(np.asarray(genes))
    membership = {node: int(labels[i]) for i, node in enumerate(gi.nodes)}
    return Partition.from_membership(g, membership)


def uniform_crossover(p1: np.ndarray, p2: np.ndarray, rng: np.random.Generator,
                      crossover_prob: float = 0.9) -> np.ndarray:
    """Gene-wise uniform crossover, applied with probability crossover_prob;
    otherwise the child is a copy of the first parent."""
    if len(p1) != len(p2):
        raise LengthMismatch(f"{len(p1)} vs {len(p2)}")
    if rng.random() >= crossover_prob:
        return p1.copy()
    mask = rng.random(len(p1)) < 0.5
    return np.where(mask, p1, p2)


def mutate(genes: np.ndarray, gi: GraphIndex, rng: np.random.Generator,
           mutation_prob: float = 0.1) -> np.ndarray:
    """Each gene independently redrawn uniformly from its allele set with
    probability mutation_prob."""
    out = genes.copy()
    mask = rng.random(gi.n) < mutation_prob
    if mask.any():
        idx = np.nonzero(mask)[0]
        picks = (rng.random(len(idx)) * gi.allele_counts[idx]).astype(np.int64)
        out[idx] = gi.allele_flat[gi.allele_offsets[idx] + picks]
    return out


def evolve(g: SnapshotGraph, cfg: GaConfig) -> tuple[Partition, float]:
    """Run the GA and return (best partition, its modularity).

    Steady-state loop: per generation, population_size reproduction events;
    each picks two parents uniformly from the elite slice, produces one
    child via crossover + mutation, inserts it and drops the single weakest
    individual.
    """
    if len(g) == 0:
        raise EmptyGraph("cannot evolve on an empty graph")
    gi = GraphIndex(g)
    if gi.total_weight <= 0:
        raise EmptyGraph("graph has no edges; modularity undefined")
    rng = np.random.default_rng(cfg.rng_seed)

    pop = [gi.random_chromosome(rng) for _ in range(cfg.population_size)]
    fits = [gi.fitness(ch) for ch in pop]
    order = sorted(range(len(pop)), key=lambda i: -fits[i])
    pop = [pop[i] for i in order]
    fits = [fits[i] for i in order]

    elite = max(1, int(cfg.elite_fraction * cfg.population_size))
    for _ in range(cfg.generations):
        for _ in range(cfg.population_size):
            i1 = int(rng.integers(elite))
            i2 = int(rng.integers(elite))
            child = uniform_crossover(pop[i1], pop[i2], rng, cfg.crossover_prob)
            child = mutate(child, gi, rng, cfg.mutation_prob)
            f = gi.fitness(child)
            # insert keeping descending fitness order, drop the weakest
            lo, hi = 0, len(fits)
            while lo < hi:
                mid = (lo + hi) // 2
                if fits[mid] >= f:
                    lo = mid + 1
                else:
                    hi = mid
            pop.insert(lo, child)
            fits.insert(lo, f)
            pop.pop()
            fits.pop()

    best = pop[0]
    return decode(best, g, gi), fits[0]
