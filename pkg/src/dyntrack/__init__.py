"""dyntrack: incremental community tracking and stable layout of dynamic
weighted graphs, with a genetic-algorithm quality baseline."""

from .graph import SnapshotGraph, UpdateSet, apply_updates, diff_snapshots
from .dyci import Partition, seed_partition, step
from .metrics import modularity

__all__ = [
    "SnapshotGraph", "UpdateSet", "apply_updates", "diff_snapshots",
    "Partition", "seed_partition", "step", "modularity",
]
