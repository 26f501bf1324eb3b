"""Joint laws of truncated cycle-count vectors and total variation distances."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Union

import numpy as np

from . import _kernels
from .errors import GuardError, InternalConsistencyError
from .parking import count_parking_functions, iter_sample_successors

EXACT_JOINT_GUARD = 8
_RADIX_LIMIT = 50_000_000

Mass = Union[Fraction, float]


def poisson_pmf(rate: Union[int, float, Fraction], j: int) -> float:
    """P(Poisson(rate) = j), computed in log space."""
    r = float(rate)
    if r <= 0:
        raise ValueError("rate must be positive")
    if j < 0:
        raise ValueError("j must be non-negative")
    return math.exp(-r + j * math.log(r) - math.lgamma(j + 1))


def product_poisson_pmf(d: int, w: tuple[int, ...]) -> float:
    """Joint pmf of independent Poisson(1/k) coordinates, k = 1..d."""
    if len(w) != d:
        raise ValueError(f"w must have length d={d}")
    out = 1.0
    for k, wk in enumerate(w, start=1):
        out *= poisson_pmf(Fraction(1, k), wk)
    return out


@dataclass(frozen=True)
class JointDistribution:
    """Probability mass over d-dimensional cycle-count vectors."""

    d: int
    kind: str  # "exact" or "empirical"
    mass: dict[tuple[int, ...], Mass]
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("exact", "empirical"):
            raise ValueError(f"unknown kind {self.kind!r}")
        n = self.meta.get("n")
        for w in self.mass:
            if len(w) != self.d:
                raise ValueError("support keys must have length d")
            if n is not None and sum(k * wk for k, wk in enumerate(w, start=1)) > n:
                raise ValueError(f"profile {w} cannot occur at n={n}")
        total = sum(self.mass.values())
        if self.kind == "exact":
            if total != 1:
                raise InternalConsistencyError(f"exact masses sum to {total}")
        elif abs(total - 1.0) > 1e-12:
            raise InternalConsistencyError(f"empirical masses sum to {total}")

    @classmethod
    def from_counts(cls, d: int, counts: Mapping[tuple[int, ...], int],
                    meta: dict, exact: bool) -> "JointDistribution":
        total = sum(counts.values())
        meta = dict(meta, counts=dict(counts), sample_count=total)
        if exact:
            mass: dict[tuple[int, ...], Mass] = {
                w: Fraction(c, total) for w, c in counts.items()}
            return cls(d, "exact", mass, meta)
        mass = {w: c / total for w, c in counts.items()}
        return cls(d, "empirical", mass, meta)


def exact_joint_distribution(n: int, d: int, force: bool = False) -> JointDistribution:
    """Exact law of (C_1..C_d) under the uniform distribution, by enumeration."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    if n > EXACT_JOINT_GUARD and not force:
        raise GuardError(f"exact-joint guard is n <= {EXACT_JOINT_GUARD}; "
                         "pass force to override")
    if (n + 1) ** d > _RADIX_LIMIT:
        raise GuardError(f"profile table (n+1)^d = {(n + 1) ** d} too large")
    flat = _kernels.enum_joint_counts(n, d)
    total = int(flat.sum())
    if total != count_parking_functions(n):
        raise InternalConsistencyError(f"enumeration found {total} parking functions")
    radix = n + 1
    counts = {}
    for idx in np.flatnonzero(flat):
        key = []
        rem = int(idx)
        for _ in range(d):
            key.append(rem % radix)
            rem //= radix
        counts[tuple(key)] = int(flat[idx])
    return JointDistribution.from_counts(d, counts, {"n": n}, exact=True)


def empirical_joint_distribution(n: int, d: int, samples: int, seed: int,
                                 workers: int = 1) -> JointDistribution:
    """Observed frequencies of (C_1..C_d) over uniform samples."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    counts: dict[tuple[int, ...], int] = {}
    for succ in iter_sample_successors(n, samples, seed, workers):
        profiles, _ = _kernels.batch_cycle_stats(succ, d)
        rows, row_counts = np.unique(profiles, axis=0, return_counts=True)
        for row, c in zip(rows, row_counts):
            key = tuple(int(v) for v in row)
            counts[key] = counts.get(key, 0) + int(c)
    meta = {"n": n, "seed": seed, "workers": workers}
    return JointDistribution.from_counts(d, counts, meta, exact=False)


def tv_distance_to_poisson(dist: JointDistribution) -> float:
    """Total variation distance to independent Poisson(1/k) coordinates.

    The reference law has infinite support; the mass it places outside the
    support of ``dist`` is handled exactly through the residual 1 - Q(supp).
    """
    support_q = 0.0
    diff = 0.0
    for w, p in dist.mass.items():
        q = product_poisson_pmf(dist.d, w)
        support_q += q
        diff += abs(float(p) - q)
    return 0.5 * (diff + (1.0 - support_q))


def tv_distance(p: JointDistribution, q: JointDistribution) -> float:
    """Total variation distance between two finitely supported laws."""
    if p.d != q.d:
        raise ValueError(f"dimension mismatch: {p.d} != {q.d}")
    keys = set(p.mass) | set(q.mass)
    return 0.5 * sum(abs(float(p.mass.get(w, 0)) - float(q.mass.get(w, 0)))
                     for w in keys)
