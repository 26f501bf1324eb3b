"""Exact counting of parking completions.

Counts the preference sequences for the remaining cars that let everyone park
when some spots are pre-occupied, via the lattice-sum formula, its contiguous
block special case, and an exhaustive simulation oracle.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator

from .errors import GuardError, InternalConsistencyError
from .parking import count_parking_functions, simulate_parking

BRUTE_FORCE_GUARD = 7


@dataclass(frozen=True)
class OccupiedVector:
    """Strictly increasing pre-occupied spots v_1 < ... < v_l in [1, n]."""

    n: int
    v: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        if self.n < 1:
            raise ValueError("n must be positive")
        for a, b in zip((0,) + self.v, self.v):
            if not a < b <= self.n:
                raise ValueError(f"spots must be strictly increasing within [1, {self.n}]")

    @property
    def ell(self) -> int:
        return len(self.v)


@dataclass(frozen=True)
class LatticePoint:
    """One summand index of the lattice-sum formula."""

    s: tuple[int, ...]


def _weight(s: int) -> int:
    # (s+1)^(s-1); the s == 0 term is 1^(-1) == 1
    return (s + 1) ** (s - 1) if s > 0 else 1


def lattice_points(occ: OccupiedVector) -> Iterator[LatticePoint]:
    """Members of the summation lattice, lexicographically.

    Vectors s of length l+1 with non-negative entries summing to n - l whose
    partial sums satisfy s_1 + ... + s_i >= v_i - i for each occupied spot.
    Any prefix meeting its own constraints extends to a full member, so the
    search never dead-ends.
    """
    n, v, ell = occ.n, occ.v, occ.ell
    total = n - ell
    s = [0] * (ell + 1)

    def rec(i: int, acc: int) -> Iterator[LatticePoint]:
        if i == ell:
            s[i] = total - acc
            yield LatticePoint(tuple(s))
            return
        lo = max(0, v[i] - (i + 1) - acc)
        for si in range(lo, total - acc + 1):
            s[i] = si
            yield from rec(i + 1, acc + si)

    return rec(0, 0)


def completions_count_lattice(occ: OccupiedVector) -> int:
    """Direct summation over the lattice stream (reference path, small inputs)."""
    n, ell = occ.n, occ.ell
    total = 0
    mfact = factorial(n - ell)
    for pt in lattice_points(occ):
        coeff = mfact
        for si in pt.s:
            coeff //= factorial(si)
        term = coeff
        for si in pt.s:
            term *= _weight(si)
        total += term
    return total


def completions_count(occ: OccupiedVector) -> int:
    """Number of parking completions of the occupied vector.

    Evaluates the lattice sum by dynamic programming over prefix totals, so
    large lattices are never materialized: g_i(t) accumulates the scaled
    weight of all admissible prefixes (s_1, ..., s_i) summing to t.
    """
    n, v, ell = occ.n, occ.v, occ.ell
    if ell == 0:
        return count_parking_functions(n)
    total = n - ell
    # g[t] = sum over admissible prefixes with sum t of multinomial(t; s) * prod weight(s_j)
    g = [1] + [0] * total
    for i in range(1, ell + 1):
        lo = max(0, v[i - 1] - i)
        h = [0] * (total + 1)
        for t in range(lo, total + 1):
            acc = 0
            for si in range(t + 1):
                prev = g[t - si]
                if prev:
                    acc += comb(t, si) * prev * _weight(si)
            h[t] = acc
        g = h
    return sum(comb(total, t) * g[t] * _weight(total - t) for t in range(total + 1))


def completions_count_block(n: int, i: int, ell: int) -> int:
    """Completions when the occupied spots are the block (i+1, ..., i+ell).

    The i >= 1 case sums terms that are individually fractional; the rational
    total must come out integral and is returned as an int.
    """
    if ell < 1 or i < 0 or i > n - ell:
        raise ValueError(f"need 1 <= ell and 0 <= i <= n - ell, got n={n}, i={i}, ell={ell}")
    if i == 0:
        if ell == n:
            return 1  # (ell+1)(n+1)^(n-ell-1) with the exponent at -1
        return (ell + 1) * (n + 1) ** (n - ell - 1)
    total = Fraction(0)
    for k in range(i, n - ell + 1):
        total += comb(n - ell, k) * (k + 1) ** (k - 1) * ell * Fraction(n - k) ** (n - k - ell - 1)
    if total.denominator != 1:
        raise InternalConsistencyError(
            f"block formula total is non-integral for n={n}, i={i}, ell={ell}: {total}")
    return total.numerator


def completions_count_bruteforce(occ: OccupiedVector, force: bool = False) -> int:
    """Oracle: count the preference tuples that park under direct simulation."""
    n, v, ell = occ.n, occ.v, occ.ell
    if n > BRUTE_FORCE_GUARD and not force:
        raise GuardError(f"brute-force guard is n <= {BRUTE_FORCE_GUARD}; pass force to override")
    count = 0
    for seq in itertools.product(range(1, n + 1), repeat=n - ell):
        if simulate_parking(seq, n, occupied=v).success:
            count += 1
    return count
