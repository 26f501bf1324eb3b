import math
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parkfunc.distributions import (JointDistribution,
                                    empirical_joint_distribution,
                                    exact_joint_distribution, poisson_pmf,
                                    product_poisson_pmf, tv_distance,
                                    tv_distance_to_poisson)
from parkfunc.errors import GuardError
from parkfunc.parking import enumerate_parking_functions
from parkfunc.structure import cycle_profile


def test_poisson_pmf_reference_values():
    assert poisson_pmf(1, 0) == pytest.approx(math.exp(-1))
    assert poisson_pmf(1, 3) == pytest.approx(math.exp(-1) / 6)
    assert poisson_pmf(Fraction(1, 2), 2) == pytest.approx(math.exp(-0.5) / 8)
    with pytest.raises(ValueError):
        poisson_pmf(0, 1)
    with pytest.raises(ValueError):
        poisson_pmf(1, -1)


def test_poisson_pmf_sums_to_one():
    for rate in (Fraction(1, 3), 1, 2.5):
        assert sum(poisson_pmf(rate, j) for j in range(200)) == pytest.approx(1.0)


def test_product_poisson_pmf_factorizes():
    assert product_poisson_pmf(2, (1, 0)) == pytest.approx(
        poisson_pmf(1, 1) * poisson_pmf(Fraction(1, 2), 0))
    with pytest.raises(ValueError):
        product_poisson_pmf(2, (1,))


@pytest.mark.parametrize("n,d", [(3, 1), (4, 2), (5, 3)])
def test_exact_joint_matches_bruteforce(n, d):
    dist = exact_joint_distribution(n, d)
    brute = Counter()
    for prefs in enumerate_parking_functions(n):
        brute[cycle_profile(prefs).truncate(d)] += 1
    total = sum(brute.values())
    assert dist.mass == {w: Fraction(c, total) for w, c in brute.items()}
    assert dist.kind == "exact"


def test_exact_joint_guard():
    with pytest.raises(GuardError):
        exact_joint_distribution(9, 1)


def test_empirical_close_to_exact():
    exact = exact_joint_distribution(5, 2)
    emp = empirical_joint_distribution(5, 2, samples=200000, seed=17)
    assert emp.kind == "empirical"
    assert emp.meta["sample_count"] == 200000
    assert tv_distance(emp, exact) < 0.01


def test_empirical_reproducible():
    a = empirical_joint_distribution(6, 2, samples=5000, seed=2)
    b = empirical_joint_distribution(6, 2, samples=5000, seed=2)
    assert a.mass == b.mass


def test_tv_distance_basic_properties():
    p = JointDistribution(1, "exact", {(0,): Fraction(1, 2), (1,): Fraction(1, 2)})
    q = JointDistribution(1, "exact", {(0,): Fraction(1, 4), (1,): Fraction(3, 4)})
    assert tv_distance(p, p) == 0
    assert tv_distance(p, q) == pytest.approx(0.25)
    assert tv_distance(p, q) == pytest.approx(tv_distance(q, p))
    with pytest.raises(ValueError):
        tv_distance(p, exact_joint_distribution(3, 2))


def test_tv_to_poisson_equals_truncated_direct_sum():
    dist = exact_joint_distribution(6, 2)
    # independent heavy truncation of the reference law as an oracle
    direct = 0.0
    support = {(i, j) for i in range(40) for j in range(40)}
    for w in support:
        p = float(dist.mass.get(w, 0))
        direct += abs(p - product_poisson_pmf(2, w))
    assert tv_distance_to_poisson(dist) == pytest.approx(0.5 * direct, abs=1e-9)


def test_joint_distribution_validation():
    with pytest.raises(ValueError):
        JointDistribution(2, "exact", {(1,): Fraction(1)})
    with pytest.raises(ValueError):
        JointDistribution(1, "weird", {(0,): Fraction(1)})


@settings(deadline=None, max_examples=20)
@given(st.integers(2, 6), st.integers(1, 2))
def test_tv_to_poisson_in_unit_interval(n, d):
    dist = exact_joint_distribution(n, min(d, n))
    tv = tv_distance_to_poisson(dist)
    assert 0 <= tv <= 1
