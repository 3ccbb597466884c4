"""Deterministic smallest-factor search below a bound via blocked
multipoint evaluation.

The classic scheme: candidates 1..delta are grouped into blocks, the block
product is taken mod N in one polynomial evaluation, and gcd(product, N)
flags any block containing a candidate that shares a factor with N. Only a
flagged block is rescanned element by element. The minimum candidate
sharing a factor with N is its smallest prime factor, and it sits in the
first flagged block, so the first qualifying hit of the scan is exact.

Variants restrict the candidate list to an arithmetic progression or, in
wheel_search, to residues coprime to a primorial Q, shrinking the block
degree by a factor of phi(Q)/Q without losing any prime candidate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd, prod

from .crtenum import ResidueSet, crt_enumerate
from .numtheory import iroot_floor, primes_up_to
from .polyeval import build_linear_product, multipoint_eval
from .stats import OpStats

# Below this many candidates, a plain divisibility loop wins.
_TRIAL_FALLBACK = 64


@dataclass(frozen=True)
class SearchOutcome:
    """Tri-state search result shared by the divisor searches and the
    order-finding loop.

    kind 'factor': value is a nontrivial divisor (1 < value < N).
    kind 'no_divisor': value is the bound below which no prime divides N.
    kind 'prime': value is N itself, certified prime.
    kind 'large_order': value is a unit whose order exceeds the bound the
    producing call was given.
    """

    kind: str
    value: int

    _KINDS = ("factor", "no_divisor", "prime", "large_order")

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown outcome kind {self.kind!r}")

    @classmethod
    def factor_found(cls, d: int) -> "SearchOutcome":
        return cls("factor", d)

    @classmethod
    def no_divisor_below(cls, bound: int) -> "SearchOutcome":
        return cls("no_divisor", bound)

    @classmethod
    def prime(cls, n: int) -> "SearchOutcome":
        return cls("prime", n)

    @classmethod
    def large_order_element(cls, a: int) -> "SearchOutcome":
        return cls("large_order", a)

    @property
    def is_factor(self) -> bool:
        return self.kind == "factor"

    @property
    def is_no_divisor(self) -> bool:
        return self.kind == "no_divisor"

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    @property
    def is_large_order(self) -> bool:
        return self.kind == "large_order"


def _probe(n: int, c: int, stats: OpStats | None) -> int | None:
    """gcd probe for one candidate; None unless it exposes a proper factor."""
    if stats is not None:
        stats.gcd_calls += 1
    g = gcd(c, n)
    if 1 < g < n:
        return g
    return None


def _scan_candidates(n, candidates, stats) -> SearchOutcome | None:
    for c in candidates:
        if c < 2:
            continue
        g = _probe(n, c, stats)
        if g is not None:
            return SearchOutcome.factor_found(g)
    return None


def strassen_basic(n: int, delta: int, stats: OpStats | None = None) -> SearchOutcome:
    """FactorFound(smallest prime factor) if it is <= delta, else
    NoDivisorBelow(delta)."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    if delta < _TRIAL_FALLBACK:
        hit = _scan_candidates(n, range(2, delta + 1), stats)
        return hit if hit is not None else SearchOutcome.no_divisor_below(delta)
    d = math.isqrt(delta)
    if d * d < delta:
        d += 1
    blocks = -(-delta // d)
    g = build_linear_product(range(1, d + 1), n).root
    points = [i * d for i in range(blocks)]
    values = multipoint_eval(g, points)
    if stats is not None:
        stats.poly_eval_points += len(points)
    for i, v in enumerate(values):
        if stats is not None:
            stats.gcd_calls += 1
        if gcd(v, n) > 1:
            block = range(i * d + 1, min((i + 1) * d, delta) + 1)
            hit = _scan_candidates(n, block, stats)
            if hit is not None:
                return hit
    return SearchOutcome.no_divisor_below(delta)


def strassen_progression(
    n: int, s: int, m: int, bound: int, stats: OpStats | None = None
) -> SearchOutcome:
    """Search only candidates x <= bound with x ≡ s (mod m).

    Callers use this when every prime divisor of n is known to lie in the
    progression; the search itself just reports the first candidate exposing
    a proper gcd."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if m < 1 or s < 0 or s >= n or m >= n:
        raise ValueError(f"need 0 <= s < n and 1 <= m < n, got s={s} m={m}")
    first = s if s >= 1 else m
    if first > bound:
        return SearchOutcome.no_divisor_below(bound)
    count = (bound - first) // m + 1
    if count < _TRIAL_FALLBACK:
        hit = _scan_candidates(n, range(first, bound + 1, m), stats)
        return hit if hit is not None else SearchOutcome.no_divisor_below(bound)
    d = math.isqrt(count)
    if d * d < count:
        d += 1
    blocks = -(-count // d)
    g = build_linear_product([first + t * m for t in range(d)], n).root
    span = d * m
    points = [i * span for i in range(blocks)]
    values = multipoint_eval(g, points)
    if stats is not None:
        stats.poly_eval_points += len(points)
    for i, v in enumerate(values):
        if stats is not None:
            stats.gcd_calls += 1
        if gcd(v, n) > 1:
            lo = i * d
            block = (first + t * m for t in range(lo, min(lo + d, count)))
            hit = _scan_candidates(n, block, stats)
            if hit is not None:
                return hit
    return SearchOutcome.no_divisor_below(bound)


def wheel_search(
    n: int, delta: int, b_factor: float = 1 / 19, stats: OpStats | None = None
) -> SearchOutcome:
    """FactorFound(q) for a prime q <= delta, or NoDivisorBelow(delta).

    Trial-divides by the primes up to B = b_factor*log(n); past that, every
    remaining prime candidate is coprime to their product Q, so blocks are
    built from the phi(Q) unit residues per Q-length window only."""
    if n < 8:
        raise ValueError(f"n must be >= 8, got {n}")
    if not iroot_floor(n, 3) <= delta <= n // 4:
        raise ValueError(f"delta={delta} outside [n^(1/3), n/4] for n={n}")
    b = b_factor * math.log(n)
    small = primes_up_to(math.floor(b))
    for r in small:
        if n % r == 0:
            return SearchOutcome.factor_found(r)
    q = prod(small)
    if q == 1:
        return strassen_basic(n, delta, stats)
    if q > delta:
        hit = _scan_candidates(
            n, (c for c in range(2, delta + 1) if gcd(c, q) == 1), stats
        )
        return hit if hit is not None else SearchOutcome.no_divisor_below(delta)
    units = crt_enumerate(
        [ResidueSet(r, tuple(range(1, r))) for r in small]
    ).residues
    assert all(gcd(u, q) == 1 for u in units)
    phi = len(units)
    k_est = delta * phi // q + 1
    w = max(1, round(math.sqrt(k_est) / phi))
    offsets = [t * q + u for t in range(w) for u in units]
    span = w * q
    blocks = -(-(delta + 1) // span)
    g = build_linear_product(offsets, n).root
    points = [i * span for i in range(blocks)]
    values = multipoint_eval(g, points)
    if stats is not None:
        stats.poly_eval_points += len(points)
    for i, v in enumerate(values):
        if stats is not None:
            stats.gcd_calls += 1
        if gcd(v, n) > 1:
            base = i * span
            block = (base + o for o in offsets if base + o <= delta)
            hit = _scan_candidates(n, block, stats)
            if hit is not None:
                return hit
    return SearchOutcome.no_divisor_below(delta)
