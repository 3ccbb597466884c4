"""Sum sets of modular hyperbolas.

For a unit x mod m, the point (x, n*x**-1) lies on the hyperbola xy = n
mod m; the sum set collects x + n*x**-1 over all units. Any divisor pair
u*v = n with gcd(uv, m) = 1 has u + v in the sum set mod m, so these sets
are exactly the residues a divisor-sum search must cover.

Mod an odd prime r with r not dividing n, the sum set has exactly
(r + 1)/2 elements when n is a quadratic residue and (r - 1)/2 otherwise:
s is attained iff s^2 - 4n is a square mod r, and counting via the
Legendre character of s^2 - 4n telescopes. Composite moduli split by CRT,
factor by factor.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

from .crtenum import ResidueSet, crt_enumerate
from .numtheory import is_prime_trial, legendre


def hyperbola_points(n: int, m: int) -> list[tuple[int, int]]:
    """Points (x, n*x**-1 mod m) for every unit x, ascending in x."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if gcd(n, m) != 1:
        raise ValueError(f"gcd({n}, {m}) != 1")
    if m == 1:
        return [(0, 0)]
    out = []
    for x in range(1, m):
        try:
            inv = pow(x, -1, m)
        except ValueError:
            continue
        out.append((x, inv * n % m))
    return out


def sum_set(n: int, m: int) -> ResidueSet:
    """Direct enumeration over all units; the oracle the fast builders are
    checked against."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return ResidueSet(1, (0,))
    values = set()
    for x in range(1, m):
        try:
            inv = pow(x, -1, m)
        except ValueError:
            continue
        values.add((x + inv * n) % m)
    return ResidueSet(m, tuple(sorted(values)))


def prime_sum_set_size(n: int, r: int) -> int:
    """Exact sum-set cardinality mod an odd prime r with gcd(n, r) = 1."""
    if n % r == 0:
        raise ValueError(f"{r} divides {n}")
    return (r + 1) // 2 if legendre(n, r) == 1 else (r - 1) // 2


def _prime_inverse_table(r: int) -> list[int]:
    # inv[i] = i**-1 mod r in O(r): inv[i] = -(r//i) * inv[r mod i]
    inv = [0] * r
    inv[1] = 1
    for i in range(2, r):
        inv[i] = (r - r // i) * inv[r % i] % r
    return inv


def sum_set_prime(n: int, r: int) -> ResidueSet:
    """Sum set mod an odd prime r not dividing n."""
    if r < 3 or not is_prime_trial(r):
        raise ValueError(f"{r} is not an odd prime")
    if n % r == 0:
        raise ValueError(f"{r} divides {n}")
    nr = n % r
    inv = _prime_inverse_table(r)
    values = set()
    for x in range(1, r):
        values.add((x + nr * inv[x]) % r)
    result = ResidueSet(r, tuple(sorted(values)))
    assert len(result) == prime_sum_set_size(n, r)
    return result


def sum_set_power_of_two(n: int, k: int) -> ResidueSet:
    """Sum set mod 2**k for odd n."""
    if k < 0:
        raise ValueError(f"negative exponent {k}")
    if n % 2 == 0:
        raise ValueError(f"{n} must be odd")
    if k == 0:
        return ResidueSet(1, (0,))
    m = 1 << k
    nm = n % m
    values = set()
    for x in range(1, m, 2):
        values.add((x + nm * pow(x, -1, m)) % m)
    return ResidueSet(m, tuple(sorted(values)))


def sum_set_composite(n: int, moduli: Sequence[int]) -> ResidueSet:
    """Sum set mod the product of pairwise coprime factor moduli, built by
    CRT-combining the per-factor sum sets."""
    parts = []
    for m in moduli:
        if m < 1:
            raise ValueError(f"modulus must be >= 1, got {m}")
        if m & (m - 1) == 0:
            parts.append(sum_set_power_of_two(n, m.bit_length() - 1))
        elif m % 2 == 1 and is_prime_trial(m):
            parts.append(sum_set_prime(n, m))
        else:
            parts.append(sum_set(n, m))
    return crt_enumerate(parts)
