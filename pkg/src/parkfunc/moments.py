"""Exact and Monte Carlo moments of cycle counts."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import _kernels
from .completions import OccupiedVector, completions_count
from .errors import GuardError, InternalConsistencyError
from .exact_math import harmonic_number
from .parking import ENUMERATION_GUARD, count_parking_functions, iter_sample_successors

K_CYCLES_EXACT_GUARD = 12


def expected_fixed_points(n: int) -> Fraction:
    """Mean number of fixed points of a uniform parking function (exactly 1).

    Evaluated as the completion-count sum over the fixed spot, then verified
    against the known total.
    """
    if n < 1:
        raise ValueError("n must be positive")
    total = sum(completions_count(OccupiedVector(n, (i,))) for i in range(1, n + 1))
    npf = count_parking_functions(n)
    value = Fraction(total, npf)
    if value != 1:
        raise InternalConsistencyError(f"fixed-point sum gave {value} instead of 1 at n={n}")
    return value


def expected_transpositions(n: int) -> Fraction:
    """Mean number of 2-cycles: n / (2(n+1))."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return Fraction(n, 2 * (n + 1))


def expected_k_cycles_exact(n: int, k: int, force: bool = False) -> Fraction:
    """Exact mean of C_k via the sum of completion counts over k-subsets."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if n > K_CYCLES_EXACT_GUARD and not force:
        raise GuardError(f"guard is n <= {K_CYCLES_EXACT_GUARD}; pass force to override")
    total = sum(completions_count(OccupiedVector(n, combo))
                for combo in itertools.combinations(range(1, n + 1), k))
    return Fraction(math.factorial(k - 1) * total, count_parking_functions(n))


def cycle_len_prob_bound(n: int, k: int) -> Fraction:
    """Upper bound (k+1)/(n+1) on P(vertex lies on a k-cycle), and on the
    matching tail-length probability."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    return Fraction(k + 1, n + 1)


def asymptotic_k_cycle_mean(n: int, k: int) -> Fraction:
    """Finite-n reference (1/k) (n/(n+1))**(k-1) accompanying the 1/k limit."""
    return Fraction(1, k) * Fraction(n, n + 1) ** (k - 1)


@dataclass(frozen=True)
class KCycleEstimate:
    k: int
    mean: float
    stderr: float


def expected_k_cycles_mc(n: int, k_max: int, samples: int, seed: int,
                         workers: int = 1) -> list[KCycleEstimate]:
    """Sample means of C_1..C_{k_max} with standard errors."""
    if not 1 <= k_max <= n:
        raise ValueError(f"need 1 <= k_max <= n, got k_max={k_max}, n={n}")
    sums = np.zeros(k_max, dtype=np.int64)
    sqsums = np.zeros(k_max, dtype=np.int64)
    for succ in iter_sample_successors(n, samples, seed, workers):
        profiles, _ = _kernels.batch_cycle_stats(succ, k_max)
        sums += profiles.sum(axis=0)
        sqsums += (profiles * profiles).sum(axis=0)
    means = sums / samples
    var = sqsums / samples - means ** 2
    stderr = np.sqrt(np.maximum(var, 0.0) / samples)
    return [KCycleEstimate(k + 1, float(means[k]), float(stderr[k])) for k in range(k_max)]


@dataclass(frozen=True)
class EnumeratedCycleMeans:
    """Exact per-length cycle-count means obtained by full enumeration."""

    n: int
    count: int
    means: tuple[Fraction, ...]  # index k-1 holds the mean of C_k
    mean_total: Fraction


def enumeration_cycle_means(n: int, force: bool = False) -> EnumeratedCycleMeans:
    """Enumerate all parking functions and average every C_k exactly."""
    if n > ENUMERATION_GUARD and not force:
        raise GuardError(f"enumeration guard is n <= {ENUMERATION_GUARD}; pass force to override")
    total, sums, ksum = _kernels.enum_cycle_sums(n)
    if total != count_parking_functions(n):
        raise InternalConsistencyError(
            f"enumeration found {total} parking functions at n={n}")
    means = tuple(Fraction(int(sums[k]), total) for k in range(1, n + 1))
    return EnumeratedCycleMeans(n, total, means, Fraction(int(ksum), total))


@dataclass(frozen=True)
class TotalCyclesStats:
    """Mean of the total cycle count next to the harmonic-number reference."""

    n: int
    mean: float
    stderr: Optional[float]
    harmonic: Fraction
    exact: Optional[Fraction]


def total_cycles_stats(n: int, samples: Optional[int] = None,
                       seed: Optional[int] = None, workers: int = 1,
                       force: bool = False) -> TotalCyclesStats:
    """Mean total cycle count, exact (samples=None) or by Monte Carlo."""
    href = harmonic_number(n)
    if samples is None:
        exact = enumeration_cycle_means(n, force=force).mean_total
        return TotalCyclesStats(n, float(exact), None, href, exact)
    if seed is None:
        raise ValueError("seed is required for Monte Carlo runs")
    tot = 0
    sq = 0
    for succ in iter_sample_successors(n, samples, seed, workers):
        _, totals = _kernels.batch_cycle_stats(succ, 1)
        tot += int(totals.sum())
        sq += int((totals * totals).sum())
    mean = tot / samples
    var = sq / samples - mean ** 2
    stderr = math.sqrt(max(var, 0.0) / samples)
    return TotalCyclesStats(n, mean, stderr, href, None)
