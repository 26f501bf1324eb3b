from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parkfunc import _kernels
from parkfunc.errors import GuardError
from parkfunc.parking import enumerate_parking_functions
from parkfunc.stein import (TransitionEvent, bound_term_a, bound_term_b,
                            classify_transition, conditional_event_probs,
                            stein_terms, transpose_entries, tv_upper_bound)
from parkfunc.structure import cycle_profile


def test_transpose_entries_swaps_and_validates():
    out = transpose_entries((3, 1, 2), 1, 3)
    assert out.prefs == (2, 1, 3)
    with pytest.raises(ValueError):
        transpose_entries((3, 1, 2), 2, 2)
    with pytest.raises(ValueError):
        transpose_entries((3, 1, 2), 0, 1)


@settings(deadline=None, max_examples=60)
@given(st.integers(2, 8).flatmap(
    lambda n: st.tuples(st.lists(st.integers(1, n), min_size=n, max_size=n),
                        st.integers(1, n - 1), st.integers(1, n))),
       )
def test_transpose_is_an_involution(args):
    seq, a, b = args
    if b <= a:
        b = a + 1
    once = transpose_entries(seq, a, b)
    twice = transpose_entries(once, a, b)
    assert twice.prefs == tuple(seq)


def test_classify_transition_known_cases():
    # swapping the two entries of (2, 1) gives (1, 2): the 2-cycle splits
    w = cycle_profile((2, 1))
    w_new = cycle_profile(transpose_entries((2, 1), 1, 2))
    assert classify_transition(w, w_new, 2, 2) is TransitionEvent.B
    assert classify_transition(w, w_new, 1, 2) is TransitionEvent.NEITHER
    # swapping the entries of (1, 2) merges two fixed points into a 2-cycle
    w = cycle_profile((1, 2))
    w_new = cycle_profile(transpose_entries((1, 2), 1, 2))
    assert classify_transition(w, w_new, 2, 2) is TransitionEvent.A
    # with d = 1 the change at length 2 is invisible but C_1 drops by two
    assert classify_transition(w, w_new, 1, 1) is TransitionEvent.NEITHER


def test_conditional_probs_match_by_hand_at_n2():
    pa, pb = conditional_event_probs((1, 2), 2, 2)
    assert (pa, pb) == (Fraction(1), Fraction(0))
    pa, pb = conditional_event_probs((2, 1), 2, 2)
    assert (pa, pb) == (Fraction(0), Fraction(1))


@settings(deadline=None, max_examples=40)
@given(st.integers(2, 9).flatmap(
    lambda n: st.tuples(st.just(n),
                        st.lists(st.integers(1, n), min_size=n, max_size=n),
                        st.integers(1, min(n - 1, 3)))))
def test_event_kernel_matches_bruteforce_oracle(args):
    n, seq, d = args
    succ = np.array([[v - 1 for v in seq]], dtype=np.int64)
    acnt, bcnt = _kernels.batch_transposition_events(succ, d)
    pairs = n * (n - 1) // 2
    for k in range(1, d + 1):
        pa, pb = conditional_event_probs(seq, k, d)
        assert Fraction(int(acnt[0, k - 1]), pairs) == pa
        assert Fraction(int(bcnt[0, k - 1]), pairs) == pb


def test_bound_formulas_frozen_values():
    assert bound_term_a(7, 2, 2) == Fraction(131, 12)
    assert bound_term_b(7, 2, 2) == Fraction(83, 10)
    assert bound_term_a(7, 1, 1) == Fraction(15, 6) + Fraction(16, 6)
    assert tv_upper_bound(7, 1) == Fraction(31, 4)
    with pytest.raises(ValueError):
        bound_term_a(5, 3, 5)
    with pytest.raises(ValueError):
        tv_upper_bound(4, 4)


def test_tv_upper_bound_shrinks_in_n():
    values = [tv_upper_bound(n, 2) for n in (10, 100, 1000, 10000)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert float(tv_upper_bound(10 ** 6, 3)) < 0.01


def test_exact_terms_match_direct_average():
    n, d = 4, 2
    report = stein_terms(n, d, mode="exact")
    npf = 125
    for rec in report.records:
        k = rec.k
        sa = Fraction(0)
        sb = Fraction(0)
        for prefs in enumerate_parking_functions(n):
            pa, pb = conditional_event_probs(prefs, k, d)
            w = cycle_profile(prefs)
            sa += abs(Fraction(1, k) - Fraction(n, 4 * k) * pa)
            sb += abs(w.count(k) - Fraction(n, 3 * k) * pb)
        assert rec.term_a == sa / npf
        assert rec.term_b == sb / npf
        assert rec.term_a <= rec.bound_a
        assert rec.term_b <= rec.bound_b


def test_alternative_c_b_denominator():
    r3 = stein_terms(5, 2, mode="exact", c_b_denominator=3)
    r4 = stein_terms(5, 2, mode="exact", c_b_denominator=4)
    assert r3.records[0].c_b == Fraction(5, 3)
    assert r4.records[0].c_b == Fraction(5, 4)
    assert r3.records[0].term_b != r4.records[0].term_b


def test_mc_mode_reproducible_and_near_exact():
    exact = stein_terms(6, 2, mode="exact")
    mc1 = stein_terms(6, 2, mode="mc", samples=20000, seed=9)
    mc2 = stein_terms(6, 2, mode="mc", samples=20000, seed=9)
    assert mc1 == mc2
    for rec, ref in zip(mc1.records, exact.records):
        assert abs(rec.term_a - float(ref.term_a)) < 0.02
        assert abs(rec.term_b - float(ref.term_b)) < 0.02


def test_exact_guard_and_arg_validation():
    with pytest.raises(GuardError):
        stein_terms(8, 2, mode="exact")
    with pytest.raises(ValueError):
        stein_terms(6, 6, mode="exact")
    with pytest.raises(ValueError):
        stein_terms(6, 2, mode="mc")  # missing samples/seed
