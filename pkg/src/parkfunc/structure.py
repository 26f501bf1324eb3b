"""Functional digraph of a preference sequence: cycles, tails, cycle profiles."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .parking import SeqLike, as_prefs


@dataclass(frozen=True)
class FunctionalGraph:
    """Successor digraph i -> pi_i with per-vertex cycle/tail classification.

    All per-vertex tuples are indexed 0-based internally; vertex labels in the
    public accessors are 1-based. ``cycle_id`` and ``cycle_length`` are None
    for tree vertices; ``tail_length`` counts edges to the nearest cycle
    vertex and is 0 on cycles.
    """

    n: int
    successor: tuple[int, ...]
    on_cycle: tuple[bool, ...]
    cycle_id: tuple[Optional[int], ...]
    cycle_length: tuple[Optional[int], ...]
    tail_length: tuple[int, ...]

    def cycle_count(self) -> int:
        return len({c for c in self.cycle_id if c is not None})


@dataclass(frozen=True)
class CycleProfile:
    """Cycle counts (C_1, ..., C_n) and their total."""

    n: int
    counts: tuple[int, ...]
    total: int

    def __post_init__(self):
        if len(self.counts) != self.n:
            raise ValueError("counts must have length n")
        if sum(k * c for k, c in enumerate(self.counts, start=1)) > self.n:
            raise ValueError("cycles cannot cover more than n vertices")
        if self.total != sum(self.counts):
            raise ValueError("total must equal the sum of counts")

    def count(self, k: int) -> int:
        return self.counts[k - 1]

    def truncate(self, d: int) -> tuple[int, ...]:
        return self.counts[:d]

    def sparse(self) -> dict[int, int]:
        return {k: c for k, c in enumerate(self.counts, start=1) if c}


def functional_graph(seq: SeqLike) -> FunctionalGraph:
    """Classify every vertex of the digraph i -> pi_i in linear time."""
    prefs = as_prefs(seq)
    n = len(prefs)
    succ = [v - 1 for v in prefs]
    color = [0] * n  # 0 new, 1 on current walk, 2 resolved
    pos = [0] * n
    on_cycle = [False] * n
    cid: list[Optional[int]] = [None] * n
    clen: list[Optional[int]] = [None] * n
    tail = [-1] * n
    ncyc = 0
    for start in range(n):
        if color[start] != 0:
            continue
        path = []
        u = start
        while color[u] == 0:
            color[u] = 1
            pos[u] = len(path)
            path.append(u)
            u = succ[u]
        if color[u] == 1:
            first = pos[u]
            length = len(path) - first
            for w in path[first:]:
                on_cycle[w] = True
                cid[w] = ncyc
                clen[w] = length
                tail[w] = 0
            ncyc += 1
        for w in path:
            color[w] = 2
    # tails, with memoization along each walk
    for start in range(n):
        if tail[start] >= 0:
            continue
        path = []
        u = start
        while tail[u] < 0:
            path.append(u)
            u = succ[u]
        t = tail[u]
        for w in reversed(path):
            t += 1
            tail[w] = t
    return FunctionalGraph(n, tuple(v + 1 for v in succ), tuple(on_cycle),
                           tuple(cid), tuple(clen), tuple(tail))


def cycle_profile(seq: SeqLike) -> CycleProfile:
    """Count distinct cycles of each length."""
    graph = functional_graph(seq)
    n = graph.n
    counts = [0] * n
    seen = set()
    for v in range(n):
        c = graph.cycle_id[v]
        if c is not None and c not in seen:
            seen.add(c)
            counts[graph.cycle_length[v] - 1] += 1
    return CycleProfile(n, tuple(counts), len(seen))


def cycle_length_at(seq: SeqLike, a: int) -> Optional[int]:
    """Length of the cycle through vertex a, or None if a sits in a tree."""
    graph = functional_graph(seq)
    if not 1 <= a <= graph.n:
        raise ValueError(f"vertex {a} outside [1, {graph.n}]")
    return graph.cycle_length[a - 1]


def path_length_at(seq: SeqLike, a: int) -> Optional[int]:
    """Vertices on the path from tree vertex a through its root, inclusive.

    None when a lies on a cycle. This vertex-count convention (tail edges + 1)
    is the one whose per-length probabilities obey the (k+1)/(n+1) bound; the
    plain edge count does not.
    """
    graph = functional_graph(seq)
    if not 1 <= a <= graph.n:
        raise ValueError(f"vertex {a} outside [1, {graph.n}]")
    if graph.on_cycle[a - 1]:
        return None
    return graph.tail_length[a - 1] + 1


def tail_length_at(seq: SeqLike, a: int) -> int:
    """Edges from vertex a to the first cycle vertex on its forward orbit."""
    graph = functional_graph(seq)
    if not 1 <= a <= graph.n:
        raise ValueError(f"vertex {a} outside [1, {graph.n}]")
    return graph.tail_length[a - 1]
