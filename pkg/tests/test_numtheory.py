"""Scalar helpers: modular arithmetic, sieve, analytic bounds, sum splitting."""

import math
import random

import pytest

from bsgsfactor.numtheory import (
    euler_phi,
    inverse_mod,
    iroot_ceil,
    iroot_floor,
    is_prime_trial,
    isqrt,
    legendre,
    mod_pow,
    next_prime,
    pi,
    primes_up_to,
    split_from_sum,
    theta,
    trial_division,
)


def test_mod_pow_examples():
    assert mod_pow(2, 10, 1000) == 24
    assert mod_pow(5, 0, 7) == 1
    assert mod_pow(5, 0, 1) == 0  # 1 mod 1
    assert mod_pow(3, 6, 7) == 1
    with pytest.raises(ValueError):
        mod_pow(2, 3, 0)


def test_mod_pow_against_naive():
    # full small grid, then seeded spot checks further out
    for n in range(1, 40):
        for a in range(0, 40):
            acc = 1 % n
            for e in range(0, 12):
                assert mod_pow(a, e, n) == acc
                acc = acc * a % n
    rng = random.Random(1)
    for _ in range(300):
        a = rng.randrange(0, 300)
        e = rng.randrange(0, 300)
        n = rng.randrange(1, 300)
        naive = 1 % n
        for _ in range(e):
            naive = naive * a % n
        assert mod_pow(a, e, n) == naive


def test_gcd_values():
    assert math.gcd(12, 18) == 6
    assert math.gcd(1, 999999937) == 1
    assert math.gcd(91, 2**6 - 1) == 7


def test_isqrt_examples():
    assert isqrt(16) == (4, True)
    assert isqrt(29) == (5, False)
    assert isqrt(0) == (0, True)
    for n in range(0, 5000):
        root, exact = isqrt(n)
        assert root * root <= n < (root + 1) * (root + 1)
        assert exact == (root * root == n)


def test_iroot_bounds():
    for n in (1, 7, 8, 26, 27, 28, 1000, 10**12 + 7):
        for k in (2, 3, 5):
            f = iroot_floor(n, k)
            c = iroot_ceil(n, k)
            assert f**k <= n < (f + 1) ** k
            assert (c - 1) ** k < n <= c**k


def test_inverse_mod():
    assert inverse_mod(3, 7) == 5
    with pytest.raises(ValueError):
        inverse_mod(6, 9)


def test_split_from_sum_examples():
    assert split_from_sum(77, 18) == (7, 11)
    assert split_from_sum(7909787, 5892) == (2069, 3823)
    assert split_from_sum(35, 13) is None


def test_split_from_sum_roundtrip_small():
    # every divisor pair of every N <= 10^4 must be recovered from its sum
    for n in range(1, 10001):
        d = 1
        while d * d <= n:
            if n % d == 0:
                u, v = d, n // d
                got = split_from_sum(n, u + v)
                assert got == (min(u, v), max(u, v))
            d += 1


def test_split_from_sum_forward_small():
    # any (N, S) answer must actually multiply and add back
    for n in range(1, 200):
        for s in range(2, 2 * n + 2):
            got = split_from_sum(n, s)
            if got is not None:
                u, v = got
                assert u * v == n and u + v == s and u <= v
            else:
                assert not any(
                    n % u == 0 and u + n // u == s for u in range(1, n + 1)
                )


def test_primes_up_to():
    assert primes_up_to(1) == []
    assert primes_up_to(10) == [2, 3, 5, 7]
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    ps = primes_up_to(1000)
    assert len(ps) == 168
    assert all(is_prime_trial(p) for p in ps)


def test_pi_theta_examples():
    assert pi(17) == 7
    assert pi(1) == 0
    assert theta(10) == pytest.approx(math.log(210))
    assert theta(1) == 0.0


def test_prime_count_lower_bound():
    # x / log x < pi(x) on sampled points of [17, 10^6]
    rng = random.Random(2)
    xs = [17, 100, 1000, 10**6] + [rng.randrange(17, 10**6) for _ in range(40)]
    for x in xs:
        assert x / math.log(x) < pi(x)


def test_theta_upper_bounds():
    rng = random.Random(3)
    xs = [2, 10, 97, 10**4] + [rng.randrange(2, 10**6) for _ in range(40)]
    for x in xs:
        t = theta(x)
        assert t - x < x / (4 * math.log(x))
        assert t - x < (math.log(2) / 2) * pi(x) - 0.5 * math.log(math.log(x))


def test_primorial_ratio_band():
    # empirical Theta check: prod (r+1)/r over r <= B grows like log B
    for b in (10, 100, 1000, 10**5):
        ratio = 1.0
        for r in primes_up_to(b):
            ratio *= (r + 1) / r
        assert 0.5 <= ratio / math.log(b) <= 5.0


def test_euler_phi():
    assert euler_phi(1) == 1
    assert euler_phi(2310) == 480
    for r in (3, 5, 7, 11, 97):
        assert euler_phi(r) == r - 1
    assert euler_phi(2310, {2: 1, 3: 1, 5: 1, 7: 1, 11: 1}) == 480
    with pytest.raises(ValueError):
        euler_phi(12, {2: 1, 3: 1})  # incomplete factorization


def test_legendre():
    assert legendre(2, 5) == -1
    assert legendre(4, 7) == 1
    assert legendre(10, 5) == 0
    with pytest.raises(ValueError):
        legendre(3, 8)
    with pytest.raises(ValueError):
        legendre(3, 15)
    # agreement with the square-scan definition
    for p in (3, 5, 7, 11, 13):
        squares = {x * x % p for x in range(1, p)}
        for a in range(0, 2 * p):
            want = 0 if a % p == 0 else (1 if a % p in squares else -1)
            assert legendre(a, p) == want


def test_trial_division():
    assert trial_division(360, 7) == ({2: 3, 3: 2, 5: 1}, 1)
    assert trial_division(7909787, 7) == ({}, 7909787)
    assert trial_division(13, 7) == ({}, 13)
    factors, cof = trial_division(2**10 * 3**4 * 101, 100)
    assert factors == {2: 10, 3: 4} and cof == 101


def test_next_prime():
    assert next_prime(1) == 2
    assert next_prime(2) == 3
    assert next_prime(8) == 11
    assert next_prime(7908) == 7919
