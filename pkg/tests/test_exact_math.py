import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parkfunc.exact_math import (AbelSpec, abel_closed_all_minus_one,
                                 abel_closed_last_zero, abel_sum, binomial,
                                 compositions, format_exact, harmonic_number,
                                 multinomial, parse_exact, signed_power)


def test_binomial_matches_math_comb():
    for n in range(0, 20):
        for k in range(-2, n + 3):
            assert binomial(n, k) == (math.comb(n, k) if 0 <= k <= n else 0)


def test_multinomial_small_cases():
    assert multinomial(4, (2, 2)) == 6
    assert multinomial(6, (1, 2, 3)) == 60
    assert multinomial(0, ()) == 1
    with pytest.raises(ValueError):
        multinomial(5, (2, 2))


@given(st.integers(0, 8), st.integers(1, 4))
def test_compositions_count_and_sums(n, m):
    comps = list(compositions(n, m))
    assert len(comps) == math.comb(n + m - 1, m - 1)
    assert len(set(comps)) == len(comps)
    assert all(len(c) == m and sum(c) == n and min(c) >= 0 for c in comps)
    assert comps == sorted(comps)


def test_signed_power_conventions():
    assert signed_power(0, 0) == 1
    assert signed_power(3, -2) == Fraction(1, 9)
    assert signed_power(2, 3) == 8
    with pytest.raises(ValueError):
        signed_power(0, -1)


def test_abel_sum_direct_small():
    # n=1, x=(a,b), p=(-1,-1): sum over s in {(0,1),(1,0)}
    a, b = 2, 5
    # s=(0,1): (0+a)^(-1) * (1+b)^0 ; s=(1,0): (1+a)^0 * (0+b)^(-1)
    expected = Fraction(1, a) + Fraction(1, b)
    assert abel_sum(AbelSpec(1, (a, b), (-1, -1))) == expected


def test_abel_closed_forms_match_direct_summation():
    for m in range(1, 4):
        for x in [(1,) * m, (2, 3, 4)[:m], (5, 1, 2)[:m]]:
            for n in range(0, 7):
                spec = AbelSpec(n, x, (-1,) * m)
                assert abel_sum(spec) == abel_closed_all_minus_one(n, x)
                spec0 = AbelSpec(n, x, (-1,) * (m - 1) + (0,))
                assert abel_sum(spec0) == abel_closed_last_zero(n, x)


@settings(deadline=None, max_examples=60)
@given(st.integers(0, 6),
       st.lists(st.integers(1, 6), min_size=1, max_size=4))
def test_abel_all_minus_one_symmetric_in_x(n, xs):
    # the closed form is symmetric in x; the raw sum must be too
    x = tuple(xs)
    rev = tuple(reversed(x))
    assert abel_sum(AbelSpec(n, x, (-1,) * len(x))) == \
        abel_sum(AbelSpec(n, rev, (-1,) * len(x)))


def test_abel_spec_rejects_zero_base_with_negative_exponent():
    with pytest.raises(ValueError):
        AbelSpec(2, (0, 1), (-1, -1))


def test_harmonic_number():
    assert harmonic_number(0) == 0
    assert harmonic_number(1) == 1
    assert harmonic_number(4) == Fraction(25, 12)
    with pytest.raises(ValueError):
        harmonic_number(-1)


@given(st.integers(-10 ** 30, 10 ** 30), st.integers(1, 10 ** 12))
def test_format_parse_round_trip(num, den):
    q = Fraction(num, den)
    assert parse_exact(format_exact(q)) == q


def test_format_exact_omits_unit_denominator():
    assert format_exact(Fraction(7)) == "7"
    assert format_exact(Fraction(-3, 4)) == "-3/4"
