"""Shared integer arithmetic: sieve-backed prime tables, exact roots,
modular helpers, and trial division.

Everything here is deterministic and exact; floating point appears only in
theta(), which feeds parameter heuristics and never correctness decisions.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from math import gcd  # re-exported; Euclid lives in the platform

__all__ = [
    "primes_up_to",
    "pi",
    "theta",
    "mod_pow",
    "inverse_mod",
    "gcd",
    "isqrt",
    "iroot_floor",
    "iroot_ceil",
    "split_from_sum",
    "euler_phi",
    "legendre",
    "trial_division",
    "is_prime_trial",
    "next_prime",
]

# Sieve cache, grown geometrically so repeated callers amortize.
_sieve_limit: int = 0
_primes: list[int] = []
_log_prefix: list[float] = [0.0]  # _log_prefix[i] = sum(log p for p in _primes[:i])


def _ensure_sieved(limit: int) -> None:
    global _sieve_limit, _primes, _log_prefix
    if limit <= _sieve_limit:
        return
    limit = max(limit, 2 * _sieve_limit, 1 << 10)
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    primes = [i for i in range(2, limit + 1) if flags[i]]
    prefix = [0.0]
    acc = 0.0
    for p in primes:
        acc += math.log(p)
        prefix.append(acc)
    _sieve_limit = limit
    _primes = primes
    _log_prefix = prefix


def primes_up_to(bound: int) -> list[int]:
    """All primes <= bound, ascending."""
    if bound < 2:
        return []
    _ensure_sieved(bound)
    return _primes[: bisect_right(_primes, bound)]


def pi(x: float) -> int:
    """Number of primes <= x."""
    xi = math.floor(x)
    if xi < 2:
        return 0
    _ensure_sieved(xi)
    return bisect_right(_primes, xi)


def theta(x: float) -> float:
    """Chebyshev theta: sum of log p over primes p <= x."""
    xi = math.floor(x)
    if xi < 2:
        return 0.0
    _ensure_sieved(xi)
    return _log_prefix[bisect_right(_primes, xi)]


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus. Negative exp requires gcd(base, modulus) = 1."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    return pow(base, exp, modulus)


def inverse_mod(a: int, modulus: int) -> int:
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    return pow(a, -1, modulus)


def isqrt(n: int) -> tuple[int, bool]:
    """(floor(sqrt(n)), n is a perfect square)."""
    if n < 0:
        raise ValueError(f"isqrt of negative {n}")
    r = math.isqrt(n)
    return r, r * r == n


def iroot_floor(n: int, k: int) -> int:
    """floor(n**(1/k)) by Newton iteration; exact for any magnitude."""
    if n < 0 or k < 1:
        raise ValueError(f"iroot_floor({n}, {k})")
    if n == 0 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    r = 1 << -(-n.bit_length() // k)  # >= true root
    while True:
        nxt = ((k - 1) * r + n // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def iroot_ceil(n: int, k: int) -> int:
    r = iroot_floor(n, k)
    return r if r**k == n else r + 1


def split_from_sum(n: int, s: int) -> tuple[int, int] | None:
    """Recover (u, v) with u*v = n, u+v = s, u <= v, or None.

    Accepts the trivial split u = 1; callers that want a proper divisor
    must filter."""
    disc = s * s - 4 * n
    if disc < 0:
        return None
    d, exact = isqrt(disc)
    if not exact or (s - d) % 2 != 0:
        return None
    u = (s - d) // 2
    v = (s + d) // 2
    if u < 1 or u * v != n:
        return None
    return u, v


def euler_phi(m: int, factors: dict[int, int] | None = None) -> int:
    """Euler's totient. Pass the factorization of m if already known."""
    if m < 1:
        raise ValueError(f"euler_phi of {m}")
    if factors is None:
        factors, cofactor = trial_division(m, m)
        assert cofactor == 1
    check = 1
    for p, e in factors.items():
        check *= p**e
    if check != m:
        raise ValueError(f"factorization {factors} does not multiply to {m}")
    phi = m
    for p in factors:
        phi = phi // p * (p - 1)
    return phi


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for odd prime p, via Euler's criterion."""
    if p < 3 or p % 2 == 0 or not is_prime_trial(p):
        raise ValueError(f"legendre needs an odd prime, got {p}")
    t = pow(a % p, (p - 1) // 2, p)
    if t == 0:
        return 0
    return 1 if t == 1 else -1


def trial_division(n: int, bound: int) -> tuple[dict[int, int], int]:
    """Strip every prime factor <= bound from n.

    Returns ({prime: multiplicity}, cofactor); the cofactor has no prime
    factor <= bound."""
    if n < 1:
        raise ValueError(f"trial_division of {n}")
    factors: dict[int, int] = {}
    rem = n
    limit = min(bound, math.isqrt(n) + 1)
    if limit <= 1_000_000:
        candidates: object = primes_up_to(limit)
    else:
        candidates = _candidates_23_wheel(limit)
    for p in candidates:
        if p > bound or p * p > rem:
            break
        while rem % p == 0:
            rem //= p
            factors[p] = factors.get(p, 0) + 1
    if rem > 1 and rem <= bound:
        # every composite <= bound has a prime factor <= sqrt(bound),
        # already stripped, so rem is prime here
        factors[rem] = factors.get(rem, 0) + 1
        rem = 1
    return factors, rem


def _candidates_23_wheel(limit: int):
    yield 2
    yield 3
    f = 5
    step = 2
    while f <= limit:
        yield f
        f += step
        step = 6 - step


def is_prime_trial(n: int) -> bool:
    """Deterministic primality by trial division (intended for n < ~2**50)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    step = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += step
        step = 6 - step
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    if n < 2:
        return 2
    c = n + 1 if n % 2 == 0 else n + 2
    if c == 3:
        return 3
    while not is_prime_trial(c):
        c += 2
    return c
