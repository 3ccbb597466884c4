"""Blocked smallest-factor searches: plain, progression, and wheel."""

import math
import random

import pytest

from bsgsfactor.numtheory import iroot_ceil, iroot_floor
from bsgsfactor.stats import OpStats
from bsgsfactor.strassen import (
    SearchOutcome,
    strassen_basic,
    strassen_progression,
    wheel_search,
)


def smallest_factor(n):
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def test_outcome_validation():
    with pytest.raises(ValueError):
        SearchOutcome("bogus", 1)
    out = SearchOutcome.factor_found(7)
    assert out.is_factor and out.value == 7


def test_strassen_basic_examples():
    assert strassen_basic(91, 10) == SearchOutcome.factor_found(7)
    assert strassen_basic(101, 10) == SearchOutcome.no_divisor_below(10)
    assert strassen_basic(4, 2) == SearchOutcome.factor_found(2)


def test_strassen_basic_never_returns_n():
    # a prime input has no nontrivial divisor, whatever the bound
    assert strassen_basic(13, 13) == SearchOutcome.no_divisor_below(13)


def test_strassen_progression_examples():
    assert strassen_progression(91, 1, 3, 13) == SearchOutcome.factor_found(7)
    out = strassen_progression(91, 1, 6, 13)
    assert out.is_factor and out.value in (7, 13)
    assert strassen_progression(101, 1, 2, 10) == SearchOutcome.no_divisor_below(10)
    with pytest.raises(ValueError):
        strassen_progression(91, 91, 3, 13)


def test_progression_unit_modulus_matches_basic():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randrange(2, 10**6)
        delta = rng.randrange(1, math.isqrt(n) + 2)
        if delta >= n:
            continue
        assert strassen_progression(n, 1, 1, delta) == strassen_basic(n, delta)


def test_wheel_search_examples():
    assert wheel_search(221, 15) == SearchOutcome.factor_found(13)
    assert wheel_search(7909787, 199) == SearchOutcome.no_divisor_below(199)
    assert wheel_search(7909787, 2069) == SearchOutcome.factor_found(2069)
    with pytest.raises(ValueError):
        wheel_search(7909787, 3)  # below n^(1/3)
    with pytest.raises(ValueError):
        wheel_search(100, 26)  # above n/4


def test_search_agrees_with_trial_oracle():
    """Both searches find exactly the smallest prime factor when it is in
    range; exhaustive on small N, seeded samples further out."""
    rng = random.Random(42)
    ns = list(range(8, 3000)) + [rng.randrange(3000, 10**6) for _ in range(300)]
    for n in ns:
        spf = smallest_factor(n)
        for delta in (iroot_ceil(n, 3), math.isqrt(n) + 1):
            if delta >= n:
                continue
            want = (
                SearchOutcome.factor_found(spf)
                if spf <= delta and spf < n
                else SearchOutcome.no_divisor_below(delta)
            )
            assert strassen_basic(n, delta) == want, (n, delta)
            if iroot_floor(n, 3) <= delta <= n // 4:
                assert wheel_search(n, delta) == want, (n, delta)


def test_progression_respects_residue_class():
    # factors outside the stated class are invisible by contract
    n = 7 * 19  # 7 ≡ 3, 19 ≡ 3 (mod 4)
    assert strassen_progression(n, 3, 4, 20).is_factor
    assert strassen_progression(n, 1, 4, 20) == SearchOutcome.no_divisor_below(20)


def test_block_point_budget():
    # evaluation points stay within ~2*sqrt(candidate count)
    for n, deltas in [(10**9 + 7, (2000, 30000)), (10**12 + 39, (30000, 150000))]:
        for delta in deltas:
            st = OpStats()
            strassen_basic(n, delta, stats=st)
            assert st.poly_eval_points <= 2 * math.isqrt(delta) + 8

            st = OpStats()
            out = wheel_search(n, delta, stats=st)
            assert out.is_no_divisor
            b = math.floor(math.log(n) / 19)
            q = math.prod(p for p in (2, 3, 5, 7, 11, 13) if p <= b)
            cand = sum(1 for c in range(2, delta + 1) if math.gcd(c, q) == 1)
            assert st.poly_eval_points <= 2 * math.isqrt(cand) + 8


def test_wheel_tunable_b_factor():
    # a larger wheel must not change the answer, only the work shape
    assert wheel_search(7909787, 2069, b_factor=1 / 8).value == 2069
    assert wheel_search(7909787, 199, b_factor=1 / 8).is_no_divisor
