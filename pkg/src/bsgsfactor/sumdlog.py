"""Babystep-giantstep search for exponents x with a^x ≡ a^(N+1) (mod N),
babysteps restricted to the sum set L_{N,m}.

For semiprime N = p*q, Fermat gives a^(N+1) = a^(p+q) mod N, and p+q lies
in L_{N,m} for every modulus m. Restricting babystep exponents to L_{N,m}
with m built from many small primes shrinks the table by roughly
prod (r+1)/2r while the giantstep stride grows to m, so the candidate set
L it returns still contains p+q whenever p+q <= T.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import ceil, gcd, prod

from .crtenum import ResidueSet, crt_enumerate_pow
from .hyperbola import sum_set_power_of_two, sum_set_prime
from .numtheory import pi, primes_up_to
from .stats import OpStats

_QUARTER_LOG2 = 0.25 * math.log(2.0)


def xi(t: float) -> float:
    """log(2)/4 divided by log(log(t)/2); the exponent-saving factor."""
    if t <= math.exp(2.0):
        raise ValueError(f"xi needs T > e^2, got {t}")
    return _QUARTER_LOG2 / math.log(0.5 * math.log(t))


@dataclass(frozen=True)
class SumDlogParams:
    """Derived search-shape parameters for a given sum bound T.

    m = 2^k * Q is the babystep modulus: Q collects the odd primes up to
    B = log(T)/2 and 2^k lifts m just past alpha, the optimal stride."""

    t: int
    b: float
    q: int
    k: int
    m: int
    alpha: float
    beta: float
    giantstep_count: int

    def __post_init__(self) -> None:
        assert self.t >= 2
        assert abs(self.b - 0.5 * math.log(self.t)) < 1e-9
        assert self.k >= 1
        assert self.m == (1 << self.k) * self.q
        assert math.isfinite(self.alpha) and self.alpha > 0
        assert math.isfinite(self.beta) and self.beta > 0
        assert (1 << (self.k - 1)) * self.q < self.alpha + 1 <= self.m
        assert self.giantstep_count == ceil(self.beta) + 1
        # the non-fallback regime: m stays below (T/2)^(2/3)
        assert 4 * self.m**3 < self.t**2


def derive_params(t: int) -> SumDlogParams | None:
    """Parameters for the restricted search, or None when T is too small
    for the asymptotic shape to make sense (caller falls back to plain
    BSGS over [1, T])."""
    if t < 2:
        raise ValueError(f"T must be >= 2, got {t}")
    b = 0.5 * math.log(t)
    if b < 3.0:
        return None
    q = prod(r for r in primes_up_to(math.floor(b)) if r > 2)
    pi_b = pi(b)
    log_b = math.log(b)
    alpha = math.sqrt(t) * log_b**-0.5 * 2.0 ** (pi_b / 2)
    beta = math.sqrt(t) * log_b**0.5 * 2.0 ** (-pi_b / 2)
    if q >= alpha:
        # impossible for B >= 3 by the prime-product growth bound
        raise RuntimeError(f"odd-prime product {q} reached alpha={alpha} at T={t}")
    k = 1
    while (1 << k) * q < alpha + 1:
        k += 1
    m = (1 << k) * q
    if 4 * m**3 >= t * t:
        return None
    return SumDlogParams(
        t=t, b=b, q=q, k=k, m=m, alpha=alpha, beta=beta,
        giantstep_count=ceil(beta) + 1,
    )


@dataclass(frozen=True)
class CandidateSums:
    """Search result: every x in values satisfies a^x ≡ a^(N+1) (mod N).

    factor is set instead when trial division up to B hit a divisor of N,
    in which case values is empty and the caller splits directly. params
    is None when the plain-BSGS fallback ran."""

    values: tuple[int, ...]
    stats: OpStats
    params: SumDlogParams | None
    fallback: bool
    factor: int | None
    tie_count: int


def _plain_bsgs_matches(
    n: int, a: int, b: int, t: int, stats: OpStats
) -> list[int]:
    """All x in [1, t] with a**x ≡ b (mod n), by unrestricted BSGS."""
    ms = math.isqrt(t)
    if ms * ms < t:
        ms += 1
    baby: dict[int, list[int]] = {}
    cur = 1
    for i in range(ms):
        baby.setdefault(cur, []).append(i)
        cur = cur * a % n
        stats.group_mults += 1
    stats.babysteps += ms
    step = pow(a, -ms, n)
    stats.count_pow(ms)
    out = []
    g = b
    for j in range(t // ms + 1):
        stats.giantsteps += 1
        for i in baby.get(g, ()):
            x = ms * j + i
            if 1 <= x <= t:
                out.append(x)
        g = g * step % n
        stats.group_mults += 1
    out.sort()
    return out


def candidate_sums(
    n: int,
    t: int,
    a: int,
    stats: OpStats | None = None,
    force_fallback: bool = False,
) -> CandidateSums:
    """Candidate sums L for a^x ≡ a^(N+1) (mod N) with x in [1, ~T].

    The caller must certify ord_N(a) >= (T/2)^(2/3); that bound is what
    makes the babysteps distinct and the output complete for semiprimes
    with p+q <= T."""
    if t < 2 or t * t < n or t > n:
        raise ValueError(f"need sqrt(N) <= T <= N, got T={t} N={n}")
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    a %= n
    if stats is None:
        stats = OpStats()
    b_target = pow(a, n + 1, n)
    stats.count_pow(n + 1)
    params = None if force_fallback else derive_params(t)
    if params is None:
        values = _plain_bsgs_matches(n, a, b_target, t, stats)
        for x in values:
            assert pow(a, x, n) == b_target
        return CandidateSums(
            values=tuple(values), stats=stats, params=None,
            fallback=True, factor=None, tie_count=0,
        )
    for r in primes_up_to(math.floor(params.b)):
        if n % r == 0:
            return CandidateSums(
                values=(), stats=stats, params=params,
                fallback=False, factor=r, tie_count=0,
            )
    # giantsteps: peel a^(-m) off the target one multiplication at a time
    step = pow(a, -params.m, n)
    stats.count_pow(params.m)
    giant: list[int] = []
    g = b_target
    for _ in range(params.giantstep_count):
        giant.append(g)
        stats.giantsteps += 1
        g = g * step % n
        stats.group_mults += 1
    # babysteps: a^i for i in L_{N,m}, walked in CRT clock order
    sets: list[ResidueSet] = [sum_set_power_of_two(n, params.k)]
    for r in primes_up_to(math.floor(params.b)):
        if r > 2:
            sets.append(sum_set_prime(n, r))
    pairs = crt_enumerate_pow(sets, n, a, stats)
    stats.babysteps += len(pairs)
    baby: dict[int, int] = {}
    ties = 0
    for i, value in pairs:
        seen = baby.get(value)
        if seen is None:
            baby[value] = i
        else:
            # collisions cannot happen while ord(a) > m; counted anyway
            ties += 1
            if i < seen:
                baby[value] = i
    values = []
    for j, g_val in enumerate(giant):
        i = baby.get(g_val)
        if i is not None:
            x = params.m * j + i
            if x > 0:
                values.append(x)
    values.sort()
    bound = params.m * params.giantstep_count + params.m
    for x in values:
        assert x <= bound
        assert pow(a, x, n) == b_target
    return CandidateSums(
        values=tuple(values), stats=stats, params=params,
        fallback=False, factor=None, tie_count=ties,
    )
