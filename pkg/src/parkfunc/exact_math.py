"""Exact integer/rational combinatorics and the Abel multinomial sum.

Everything in this module is computed with arbitrary-precision integers or
`fractions.Fraction`; no floating point appears anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod
from typing import Iterator, Sequence, Union

# All exact rational values in this package are plain stdlib Fractions.
ExactRational = Fraction

Rationalish = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """C(n, k); zero outside the range 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (parts_1! * ... * parts_m!), requiring sum(parts) == n."""
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be non-negative")
    if sum(parts) != n:
        raise ValueError(f"multinomial parts must sum to n={n}, got {sum(parts)}")
    return factorial(n) // prod(factorial(p) for p in parts)


def signed_power(base: Rationalish, exp: int) -> Fraction:
    """Exact base**exp for integer exp of either sign, with 0**0 == 1."""
    b = Fraction(base)
    if b == 0 and exp < 0:
        raise ValueError("zero base with negative exponent")
    return b ** exp


def compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """All (s_1, ..., s_m) >= 0 with sum n, in lexicographic order."""
    if m < 1:
        raise ValueError("need at least one part")
    s = [0] * m

    def rec(j: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if j == m - 1:
            s[j] = remaining
            yield tuple(s)
            return
        for v in range(remaining + 1):
            s[j] = v
            yield from rec(j + 1, remaining - v)

    return rec(0, n)


@dataclass(frozen=True)
class AbelSpec:
    """Input to the Abel multinomial sum: order n, shifts x, exponent offsets p."""

    n: int
    x: tuple[Fraction, ...]
    p: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(Fraction(v) for v in self.x))
        object.__setattr__(self, "p", tuple(int(v) for v in self.p))
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if len(self.x) != len(self.p) or not self.x:
            raise ValueError("x and p must be non-empty and of equal length")
        for xj, pj in zip(self.x, self.p):
            if pj < 0 and xj == 0:
                raise ValueError("x_j must be nonzero wherever p_j < 0")

    @property
    def m(self) -> int:
        return len(self.x)


def abel_sum(spec: AbelSpec) -> Fraction:
    """Direct evaluation of the Abel multinomial sum.

    Sums multinomial(n, s) * prod_j (s_j + x_j)**(s_j + p_j) over all
    compositions s of n into m parts, enumerated lexicographically.
    """
    n, x, p = spec.n, spec.x, spec.p
    if all(pj in (-1, 0) for pj in p) and all(xj.denominator == 1 and xj > 0 for xj in x):
        return _abel_sum_integral(n, tuple(xj.numerator for xj in x), p)
    total = Fraction(0)
    for s in compositions(n, spec.m):
        term = Fraction(multinomial(n, s))
        for sj, xj, pj in zip(s, x, p):
            term *= signed_power(sj + xj, sj + pj)
        total += term
    return total


def _abel_sum_integral(n: int, x: tuple[int, ...], p: tuple[int, ...]) -> Fraction:
    # Fast path for positive integer x with p_j in {-1, 0}: every denominator
    # divides D = prod of the x_j carrying p_j == -1, so the sum accumulates
    # as a single big integer over D.
    denom = prod(xj for xj, pj in zip(x, p) if pj == -1)
    total = 0
    for s in compositions(n, len(x)):
        term = multinomial(n, s) * denom
        for sj, xj, pj in zip(s, x, p):
            e = sj + pj
            base = sj + xj
            if e >= 0:
                term *= base ** e
            else:
                term //= base ** (-e)
        total += term
    return Fraction(total, denom)


def abel_closed_all_minus_one(n: int, x: Sequence[Rationalish]) -> Fraction:
    """Closed form of the Abel sum when every exponent offset is -1."""
    xs = [Fraction(v) for v in x]
    if any(v == 0 for v in xs):
        raise ValueError("all x_j must be nonzero")
    s = sum(xs)
    return s * signed_power(s + n, n - 1) / prod(xs)


def abel_closed_last_zero(n: int, x: Sequence[Rationalish]) -> Fraction:
    """Closed form when the exponent offsets are (-1, ..., -1, 0)."""
    xs = [Fraction(v) for v in x]
    if any(v == 0 for v in xs):
        raise ValueError("all x_j must be nonzero")
    s = sum(xs)
    return xs[-1] * signed_power(s + n, n) / prod(xs)


def harmonic_number(n: int) -> Fraction:
    """H_n = sum_{k<=n} 1/k as an exact rational."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def format_exact(value: Union[int, Fraction]) -> str:
    """Serialize an exact value as "num/den", omitting "/den" when den == 1."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_exact(text: str) -> Fraction:
    """Inverse of :func:`format_exact`."""
    return Fraction(text)
