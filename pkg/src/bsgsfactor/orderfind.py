"""Babystep-giantstep discrete logs, order finding, and the deterministic
factor / prime / large-order trichotomy.

Order finding first forces the small-prime part of the order into the
exponent: s = a^(prod r^e_r) over primes r <= B with r^e_r >= T, so ord(s)
is coprime to their product Q whenever ord(a) <= T. The BSGS for ord(s)
then restricts babysteps to exponents coprime to Q, cutting the table by
phi(Q)/Q, and the small-prime powers are stripped off afterwards to
recover ord(a) exactly.
"""

from __future__ import annotations

import math
from math import gcd, lcm, prod

from .numtheory import iroot_floor, primes_up_to, trial_division
from .stats import OpStats
from .strassen import SearchOutcome, strassen_progression


def _isqrt_ceil(x: int) -> int:
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def bsgs_dlog(
    n: int, a: int, b: int, e: int, t: int, stats: OpStats | None = None
) -> int | None:
    """Smallest x in [e, t] with a**x ≡ b (mod n), or None."""
    if not 1 <= e < t <= n:
        raise ValueError(f"need 1 <= E < T <= N, got E={e} T={t} N={n}")
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    a %= n
    b %= n
    m = _isqrt_ceil(t - e)
    baby: dict[int, int] = {}
    cur = pow(a, e, n)
    if stats is not None:
        stats.count_pow(e)
        stats.babysteps += m
    for i in range(m):
        if cur not in baby:
            baby[cur] = i
        cur = cur * a % n
        if stats is not None:
            stats.group_mults += 1
    step = pow(a, -m, n)
    if stats is not None:
        stats.count_pow(m)
    g = b
    for j in range((t - e) // m + 1):
        if stats is not None:
            stats.giantsteps += 1
        i = baby.get(g)
        if i is not None:
            # first matched j carries the global minimum x: any later j
            # exceeds e + m(j+1) > this x
            x = e + m * j + i
            return x if x <= t else None
        g = g * step % n
        if stats is not None:
            stats.group_mults += 1
    return None


def _order_rough(
    n: int, s: int, t: int, q: int, units: list[int], stats: OpStats | None
) -> int | None:
    """Smallest x in [1, t] coprime to q with s**x ≡ 1 (mod n), or None.

    Babysteps walk the coprime exponents by cached gap powers, one
    multiplication each; the giantstep stride m is a multiple of q so the
    residue restriction survives the split x = m*j + i."""
    phi = len(units)
    w = max(1, round(math.sqrt(t / (q * phi))))
    m = q * w
    baby: dict[int, int] = {}
    gap_pows: dict[int, int] = {}
    cur = 0
    prev = None
    for block in range(w):
        base = block * q
        for u in units:
            i = base + u
            if prev is None:
                cur = pow(s, i, n)
                if stats is not None:
                    stats.count_pow(i)
            else:
                gap = i - prev
                sg = gap_pows.get(gap)
                if sg is None:
                    sg = pow(s, gap, n)
                    gap_pows[gap] = sg
                    if stats is not None:
                        stats.count_pow(gap)
                cur = cur * sg % n
                if stats is not None:
                    stats.group_mults += 1
            if cur not in baby:
                baby[cur] = i
            prev = i
    if stats is not None:
        stats.babysteps += w * phi
    step = pow(s, -m, n)
    if stats is not None:
        stats.count_pow(m)
    y = 1
    for j in range(t // m + 1):
        if stats is not None:
            stats.giantsteps += 1
        i = baby.get(y)
        if i is not None:
            x = m * j + i
            return x if x <= t else None
        y = y * step % n
        if stats is not None:
            stats.group_mults += 1
    return None


def bsgs_order(n: int, a: int, t: int, stats: OpStats | None = None) -> int | None:
    """ord_N(a) if it is <= t, else None (meaning the order exceeds t)."""
    if t < 1:
        raise ValueError(f"T must be >= 1, got {t}")
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    a %= n
    if n == 1 or a == 1:
        return 1
    # the order never exceeds n - 1, so larger bounds change nothing
    t = min(t, n)
    b = max(2.0, 0.5 * math.log(t))
    rs = primes_up_to(math.floor(b))
    q = prod(rs)
    big_p = prod(r ** _log_ceil(r, t) for r in rs)
    s = pow(a, big_p, n)
    if stats is not None:
        stats.count_pow(big_p)
    if s == 1:
        # ord(a) divides the smooth exponent; strip it down directly
        return _strip_smooth(n, a, big_p, rs, t, stats)
    units = [u for u in range(1, q) if gcd(u, q) == 1]
    d = _order_rough(n, s, t, q, units, stats)
    if d is None:
        return None
    return _strip_smooth(n, a, d * big_p, rs, t, stats)


def _log_ceil(r: int, t: int) -> int:
    """Smallest e with r**e >= t."""
    e = 0
    v = 1
    while v < t:
        v *= r
        e += 1
    return e


def _strip_smooth(
    n: int, a: int, multiple: int, rs: list[int], t: int, stats: OpStats | None
) -> int | None:
    """Reduce a known multiple of ord(a) (with all its non-smooth part
    already exact) to the order itself; None if the result exceeds t."""
    cur = multiple
    for r in rs:
        while cur % r == 0:
            if stats is not None:
                stats.count_pow(cur // r)
            if pow(a, cur // r, n) != 1:
                break
            cur //= r
    return cur if cur <= t else None


def find_large_order_element(
    n: int, delta: int, stats: OpStats | None = None
) -> SearchOutcome:
    """FactorFound, Prime, or LargeOrderElement(a) with ord_N(a) > delta.

    Accumulates M = lcm of discovered small orders; once every prime
    divisor of n is forced into 1 + M*Z with M^3 >= delta, a progression
    search up to sqrt(n) settles factor-or-prime."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n < 32:
        for c in range(2, math.isqrt(n) + 1):
            if n % c == 0:
                return SearchOutcome.factor_found(c)
        return SearchOutcome.prime(n)
    if delta > n:
        raise ValueError(f"delta={delta} exceeds n={n}")
    if delta**5 < n**2:
        raise ValueError(f"delta={delta} below n^(2/5) for n={n}")
    t1 = iroot_floor(delta, 3)
    m_cur = 1
    a = 2
    for _ in range(delta.bit_length() + 64):
        while n % a != 0 and pow(a, m_cur, n) == 1:
            a += 1
        if n % a == 0:
            if a == n:
                return SearchOutcome.prime(n)
            return SearchOutcome.factor_found(a)
        order = bsgs_order(n, a, t1, stats)
        if order is None:
            order = bsgs_order(n, a, delta, stats)
            if order is None:
                return SearchOutcome.large_order_element(a)
        factors, cofactor = trial_division(order, order)
        assert cofactor == 1
        for r in sorted(factors):
            if stats is not None:
                stats.count_pow(order // r)
                stats.gcd_calls += 1
            g = gcd(n, pow(a, order // r, n) - 1)
            if g != 1:
                # g = n would need a^(order/r) ≡ 1, impossible below the order
                assert 1 < g < n
                return SearchOutcome.factor_found(g)
        m_next = lcm(m_cur, order)
        assert m_next >= 2 * m_cur
        if m_next**3 >= delta:
            if m_next >= n:
                # every prime divisor would satisfy p ≡ 1 (mod m_next) > n
                return SearchOutcome.prime(n)
            out = strassen_progression(n, 1, m_next, math.isqrt(n), stats)
            if out.is_factor:
                return out
            return SearchOutcome.prime(n)
        m_cur = m_next
        a += 1
    raise AssertionError("order accumulation failed to terminate")
