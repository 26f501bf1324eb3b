"""Deterministic seeding: (seed, worker_count) fixes every Monte Carlo result."""
from __future__ import annotations

import numpy as np

# Per-worker sampling proceeds in fixed-size chunks so that results do not
# depend on caller batch sizes.
CHUNK = 8192


def split_streams(seed: int, workers: int) -> list[np.random.Generator]:
    """Independent child generators, one per worker, derived from one seed."""
    if workers < 1:
        raise ValueError("workers must be positive")
    children = np.random.SeedSequence(seed).spawn(workers)
    return [np.random.default_rng(child) for child in children]


def shard_sizes(total: int, workers: int) -> list[int]:
    """Deterministic near-even split of a sample budget across workers."""
    if total < 0:
        raise ValueError("total must be non-negative")
    base, extra = divmod(total, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]
