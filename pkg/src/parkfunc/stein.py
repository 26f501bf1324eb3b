"""Exchangeable-pair machinery for the Poisson approximation of cycle counts.

The pair move swaps the entries at two uniformly chosen positions of a uniform
parking function. Event A_k (resp. B_k) raises (lowers) C_k by exactly one
while leaving C_{k+1}..C_d unchanged; the module measures how far the observed
event probabilities sit from the Poisson heuristic and evaluates the explicit
closed-form bounds on those discrepancies.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from . import _kernels
from .errors import GuardError
from .parking import (PrefSeq, SeqLike, as_prefs, count_parking_functions,
                      iter_enumeration_successors, iter_sample_successors)
from .structure import CycleProfile, cycle_profile

STEIN_EXACT_GUARD = 7


def transpose_entries(seq: SeqLike, a: int, b: int) -> PrefSeq:
    """Swap the preference values at positions a < b (1-based)."""
    prefs = as_prefs(seq)
    n = len(prefs)
    if not 1 <= a < b <= n:
        raise ValueError(f"need 1 <= a < b <= {n}, got a={a}, b={b}")
    out = list(prefs)
    out[a - 1], out[b - 1] = out[b - 1], out[a - 1]
    return PrefSeq(n, tuple(out))


class TransitionEvent(enum.Enum):
    A = "A"
    B = "B"
    NEITHER = "neither"


def classify_transition(w: CycleProfile, w_new: CycleProfile, k: int,
                        d: int) -> TransitionEvent:
    """A if C_k rose by one, B if it fell by one, with C_{k+1}..C_d frozen."""
    if not 1 <= k <= d <= w.n:
        raise ValueError(f"need 1 <= k <= d <= n, got k={k}, d={d}, n={w.n}")
    if any(w.count(j) != w_new.count(j) for j in range(k + 1, d + 1)):
        return TransitionEvent.NEITHER
    delta = w_new.count(k) - w.count(k)
    if delta == 1:
        return TransitionEvent.A
    if delta == -1:
        return TransitionEvent.B
    return TransitionEvent.NEITHER


def conditional_event_probs(seq: SeqLike, k: int, d: int) -> tuple[Fraction, Fraction]:
    """Exact P(A_k | pi) and P(B_k | pi) by looping over all unordered pairs.

    This is the reference path: each pair is re-profiled from scratch. The
    accelerated kernel used by :func:`stein_terms` is validated against it.
    """
    prefs = as_prefs(seq)
    n = len(prefs)
    if n < 2:
        return Fraction(0), Fraction(0)
    w = cycle_profile(prefs)
    na = nb = 0
    for a in range(1, n):
        for b in range(a + 1, n + 1):
            w_new = cycle_profile(transpose_entries(prefs, a, b))
            event = classify_transition(w, w_new, k, d)
            if event is TransitionEvent.A:
                na += 1
            elif event is TransitionEvent.B:
                nb += 1
    pairs = n * (n - 1) // 2
    return Fraction(na, pairs), Fraction(nb, pairs)


def bound_term_a(n: int, k: int, d: int) -> Fraction:
    """Closed-form bound on E|1/k - (n/4k) P(A_k | pi)|."""
    _check_kdn(n, k, d)
    return (Fraction(d * d + 2 * d * k + d + 6 * k * k + 4 * k + 1, k * (n - 1))
            + Fraction(d * k + 2 * k * k + 10 * k + 3, n - k))


def bound_term_b(n: int, k: int, d: int) -> Fraction:
    """Closed-form bound on E|C_k - (n/3k) P(B_k | pi)|."""
    _check_kdn(n, k, d)
    return (Fraction(k + 1, n - 1)
            + Fraction(2 * d * d * k + 2 * d * d + d * k ** 3 - d * k * k
                       + 2 * d + 4 * k ** 3 + 2 * k * k + 2, k * (n - k)))


def tv_upper_bound(n: int, d: int) -> Fraction:
    """Explicit four-term bound on the total variation distance between the
    first d cycle counts and independent Poisson(1/k) coordinates."""
    if not 1 <= d < n:
        raise ValueError(f"need 1 <= d < n, got d={d}, n={n}")
    return (Fraction(4 * d ** 3 + 7 * d * d + 4 * d, n - 1)
            + Fraction(7 * d ** 3 + 39 * d * d + 50 * d, 6 * (n - d))
            + Fraction(d * d + 3 * d, 2 * (n + 1))
            + Fraction(3 * d ** 5 + 26 * d ** 4 + 65 * d ** 3 + 46 * d * d + 28 * d,
                       12 * (n - d)))


def _check_kdn(n: int, k: int, d: int) -> None:
    if not 1 <= k <= d < n:
        raise ValueError(f"need 1 <= k <= d < n, got k={k}, d={d}, n={n}")


@dataclass(frozen=True)
class SteinTermRecord:
    """Per-index summary: observed discrepancy terms next to their bounds."""

    k: int
    lam: Fraction
    c_a: Fraction
    c_b: Fraction
    term_a: Union[Fraction, float]
    term_b: Union[Fraction, float]
    bound_a: Fraction
    bound_b: Fraction
    alpha: float


@dataclass(frozen=True)
class SteinReport:
    n: int
    d: int
    mode: str
    records: tuple[SteinTermRecord, ...]
    total_bound: Fraction
    samples: Optional[int] = None
    seed: Optional[int] = None
    c_b_denominator: int = 3


def stein_terms(n: int, d: int, mode: str = "exact",
                samples: Optional[int] = None, seed: Optional[int] = None,
                workers: int = 1, c_b_denominator: int = 3,
                force: bool = False) -> SteinReport:
    """Discrepancy terms of the exchangeable-pair construction for k <= d.

    term_a(k) averages |1/k - (n/4k) P(A_k | pi)| and term_b(k) averages
    |C_k - c P(B_k | pi)| with c = n/(c_b_denominator * k), over all parking
    functions (mode="exact", exact rationals) or over samples (mode="mc").
    """
    if not 1 <= d < n:
        raise ValueError(f"need 1 <= d < n, got d={d}, n={n}")
    if c_b_denominator not in (3, 4):
        raise ValueError("c_b_denominator must be 3 or 4")
    pairs = n * (n - 1) // 2
    beta = c_b_denominator
    abs_a = np.zeros(d, dtype=object)  # sums of |4*pairs - n*A_k| etc., exact ints
    abs_b = np.zeros(d, dtype=object)
    if mode == "exact":
        if n > STEIN_EXACT_GUARD and not force:
            raise GuardError(f"exact-mode guard is n <= {STEIN_EXACT_GUARD}; "
                             "pass force to override")
        chunks = iter_enumeration_successors(n)
        weight = count_parking_functions(n)
    elif mode == "mc":
        if samples is None or seed is None:
            raise ValueError("mc mode requires samples and seed")
        chunks = iter_sample_successors(n, samples, seed, workers)
        weight = samples
    else:
        raise ValueError(f"unknown mode {mode!r}")
    ks = np.arange(1, d + 1, dtype=np.int64)
    for succ in chunks:
        acnt, bcnt = _kernels.batch_transposition_events(succ, d)
        profiles, _ = _kernels.batch_cycle_stats(succ, d)
        dev_a = np.abs(4 * pairs - n * acnt)
        dev_b = np.abs(beta * ks[None, :] * pairs * profiles - n * bcnt)
        abs_a += dev_a.sum(axis=0, dtype=np.int64)
        abs_b += dev_b.sum(axis=0, dtype=np.int64)
    records = []
    for k in range(1, d + 1):
        term_a = Fraction(int(abs_a[k - 1]), 4 * k * pairs * weight)
        term_b = Fraction(int(abs_b[k - 1]), beta * k * pairs * weight)
        if mode == "mc":
            term_a, term_b = float(term_a), float(term_b)
        records.append(SteinTermRecord(
            k=k,
            lam=Fraction(1, k),
            c_a=Fraction(n, 4 * k),
            c_b=Fraction(n, beta * k),
            term_a=term_a,
            term_b=term_b,
            bound_a=bound_term_a(n, k, d),
            bound_b=bound_term_b(n, k, d),
            alpha=min(1.0, 1.4 * k ** 0.5),
        ))
    return SteinReport(n=n, d=d, mode=mode, records=tuple(records),
                       total_bound=tv_upper_bound(n, d), samples=samples,
                       seed=seed, c_b_denominator=beta)
