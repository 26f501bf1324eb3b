"""Preference sequences, parking predicates, enumeration, and exact-uniform sampling."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from .errors import GuardError
from .rng import CHUNK, shard_sizes, split_streams

ENUMERATION_GUARD = 8


@dataclass(frozen=True)
class PrefSeq:
    """A preference sequence pi in [n]^n (1-based spots)."""

    n: int
    prefs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefs", tuple(int(v) for v in self.prefs))
        if self.n < 1 or len(self.prefs) != self.n:
            raise ValueError(f"need exactly n={self.n} preferences")
        for v in self.prefs:
            if not 1 <= v <= self.n:
                raise ValueError(f"preference {v} outside [1, {self.n}]")

    @classmethod
    def of(cls, prefs: Sequence[int]) -> "PrefSeq":
        return cls(len(prefs), tuple(prefs))

    @classmethod
    def from_text(cls, text: str) -> "PrefSeq":
        prefs = tuple(int(tok) for tok in text.split(","))
        return cls.of(prefs)

    def text(self) -> str:
        return ",".join(str(v) for v in self.prefs)

    def __iter__(self):
        return iter(self.prefs)

    def __len__(self):
        return self.n


@dataclass(frozen=True)
class ParkingOutcome:
    """Result of running the sequential parking process."""

    success: bool
    assignment: Optional[tuple[int, ...]]
    failed_car: Optional[int]


SeqLike = Union[PrefSeq, Sequence[int]]


def as_prefs(seq: SeqLike) -> tuple[int, ...]:
    if isinstance(seq, PrefSeq):
        return seq.prefs
    return tuple(int(v) for v in seq)


def is_parking_function(seq: SeqLike) -> bool:
    """Sorted criterion: the weakly increasing sort satisfies pi_(i) <= i."""
    prefs = as_prefs(seq)
    return all(v <= i for i, v in enumerate(sorted(prefs), start=1))


def satisfies_prefix_counts(seq: SeqLike) -> bool:
    """Counting criterion: at least i entries are <= i, for every i."""
    prefs = as_prefs(seq)
    n = len(prefs)
    counts = [0] * (n + 1)
    for v in prefs:
        counts[v] += 1
    running = 0
    for i in range(1, n + 1):
        running += counts[i]
        if running < i:
            return False
    return True


def simulate_parking(seq: Sequence[int], n: int,
                     occupied: Iterable[int] = ()) -> ParkingOutcome:
    """Park each car at its preference or the first free spot after it.

    ``seq`` holds the preferences of the cars still to park; ``occupied``
    marks spots taken before any of them arrives.
    """
    taken = [False] * (n + 1)
    for spot in occupied:
        if not 1 <= spot <= n:
            raise ValueError(f"occupied spot {spot} outside [1, {n}]")
        taken[spot] = True
    free = n - sum(taken)
    if len(seq) > free:
        raise ValueError(f"{len(seq)} cars cannot fit in {free} free spots")
    assignment = []
    for car, pref in enumerate(seq, start=1):
        if not 1 <= pref <= n:
            raise ValueError(f"preference {pref} outside [1, {n}]")
        spot = pref
        while spot <= n and taken[spot]:
            spot += 1
        if spot > n:
            return ParkingOutcome(False, None, car)
        taken[spot] = True
        assignment.append(spot)
    return ParkingOutcome(True, tuple(assignment), None)


def count_parking_functions(n: int) -> int:
    """(n+1)**(n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    return (n + 1) ** (n - 1)


def enumerate_parking_functions(n: int, force: bool = False) -> Iterator[tuple[int, ...]]:
    """Yield every parking function of size n in lexicographic order.

    Backtracking over prefix-feasible sequences: a slack counter per spot
    tracks how many more entries <= i the suffix may still skip, so every
    branch explored leads to at least one parking function.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > ENUMERATION_GUARD and not force:
        raise GuardError(f"enumeration guard is n <= {ENUMERATION_GUARD}; pass force to override")
    # slack[v] == 0 exactly when no further value > v is admissible at this node
    slack = [0] + [n - i for i in range(1, n + 1)]
    vals = [1] * (n + 1)
    t = 0
    while True:
        if t < n:
            vals[t] = 1
            t += 1
            continue
        yield tuple(vals[:n])
        t -= 1
        while t >= 0:
            v = vals[t]
            if slack[v] > 0:
                slack[v] -= 1
                vals[t] = v + 1
                t += 1
                break
            for i in range(1, v):
                slack[i] += 1
            t -= 1
        if t < 0:
            return


def iter_enumeration_successors(n: int, chunk: int = 16384,
                                force: bool = False) -> Iterator[np.ndarray]:
    """Stream the full enumeration as 0-based successor arrays of shape (b, n).

    The yielded array is reused between chunks; consume each chunk before
    advancing the iterator.
    """
    buf = np.empty((chunk, n), dtype=np.int64)
    fill = 0
    for prefs in enumerate_parking_functions(n, force=force):
        buf[fill] = prefs
        fill += 1
        if fill == chunk:
            buf -= 1
            yield buf
            fill = 0
    if fill:
        out = buf[:fill]
        out -= 1
        yield out


def rotate_to_parking_function(wrapped: np.ndarray) -> np.ndarray:
    """Map circular preference words in {1..n+1}^n to parking functions.

    ``wrapped`` has shape (batch, n). Parking on a circle of n+1 spots leaves
    exactly one spot empty; that spot is the first argmin of the prefix sums
    of (occupancy count - 1). Rotating so the empty spot becomes spot n+1
    yields an exactly uniform parking function per row.
    """
    batch, n = wrapped.shape
    m = n + 1
    offsets = np.arange(batch, dtype=np.int64) * m
    flat = (wrapped - 1 + offsets[:, None]).ravel()
    counts = np.bincount(flat, minlength=batch * m).reshape(batch, m)
    walk = np.cumsum(counts - 1, axis=1)
    empty = np.argmin(walk, axis=1)  # 0-based index of the empty spot
    return (wrapped - empty[:, None] - 2) % m + 1


def sample_uniform_batch(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Draw ``count`` independent uniform parking functions as an array (count, n)."""
    wrapped = rng.integers(1, n + 2, size=(count, n), dtype=np.int64)
    return rotate_to_parking_function(wrapped)


def sample_uniform(n: int, rng: np.random.Generator) -> PrefSeq:
    """One exactly uniform parking function via the circle construction."""
    row = sample_uniform_batch(n, 1, rng)[0]
    return PrefSeq(n, tuple(int(v) for v in row))


def iter_sample_successors(n: int, samples: int, seed: int,
                           workers: int = 1) -> Iterator[np.ndarray]:
    """Stream 0-based successor arrays of uniform parking functions.

    Yields chunks of shape (b, n). The multiset of rows produced depends only
    on (seed, workers); chunk boundaries are fixed so repeated runs are
    identical draw by draw.
    """
    streams = split_streams(seed, workers)
    for rng, size in zip(streams, shard_sizes(samples, workers)):
        remaining = size
        while remaining > 0:
            b = min(CHUNK, remaining)
            yield sample_uniform_batch(n, b, rng) - 1
            remaining -= b
