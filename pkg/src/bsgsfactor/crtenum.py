"""Incremental Chinese-remainder enumeration.

Given residue sets A_i modulo pairwise coprime m_i, walk the full combined
set {x mod M : x mod m_i in A_i} like a clock: one digit per factor, and a
step costs one precomputed delta addition per digit that moved. Sorting
factors by descending residue count puts the fastest wheel first, so the
amortized cost per element stays near a single addition.

The exponentiated walk maps each delta addition to one modular
multiplication by a precomputed power (two when the exponent wraps around
the combined modulus), which is what lets a babystep table over a
residue-restricted range cost about one group operation per element.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence

from .stats import OpStats


@dataclass(frozen=True)
class ResidueSet:
    """Ascending distinct residues in [0, modulus)."""

    modulus: int
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        prev = -1
        for r in self.residues:
            if not 0 <= r < self.modulus:
                raise ValueError(f"residue {r} out of range mod {self.modulus}")
            if r <= prev:
                raise ValueError("residues must be strictly ascending")
            prev = r

    def __len__(self) -> int:
        return len(self.residues)

    def __contains__(self, x: int) -> bool:
        lo, hi = 0, len(self.residues)
        x %= self.modulus
        while lo < hi:
            mid = (lo + hi) // 2
            if self.residues[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(self.residues) and self.residues[lo] == x


def _check_pairwise_coprime(sets: Sequence[ResidueSet]) -> int:
    m = 1
    for s in sets:
        if gcd(m, s.modulus) != 1:
            raise ValueError("factor moduli must be pairwise coprime")
        m *= s.modulus
    return m


def _sorted_tables(sets: Sequence[ResidueSet], big_m: int):
    """Per-factor delta tables, fastest wheel (largest residue set) first.

    Table i holds deltas[l] = (rho_l - rho_{l-1}) * M_i mod M, with l = 0
    wrapping back from the last residue to the first; adding deltas[l] moves
    the combined value to the one whose digit-i residue is rho_l.
    """
    order = sorted(sets, key=lambda s: (-len(s.residues), s.modulus))
    tables = []
    start = 0
    for s in order:
        mi = s.modulus
        crt_unit = (big_m // mi) * pow(big_m // mi, -1, mi) % big_m
        rho = s.residues
        deltas = [(rho[0] - rho[-1]) * crt_unit % big_m]
        deltas += [(rho[l] - rho[l - 1]) * crt_unit % big_m for l in range(1, len(rho))]
        tables.append(deltas)
        start = (start + rho[0] * crt_unit) % big_m
    return order, tables, start


def crt_enumerate(sets: Sequence[ResidueSet]) -> ResidueSet:
    """Combine residue sets over pairwise coprime moduli into the full set
    mod the product, sorted ascending."""
    big_m = _check_pairwise_coprime(sets)
    if any(len(s) == 0 for s in sets):
        return ResidueSet(big_m, ())
    if not sets:
        return ResidueSet(1, (0,))
    order, tables, start = _sorted_tables(sets, big_m)
    counts = [len(s.residues) for s in order]
    total = prod(counts)
    digits = [0] * len(order)
    values = [0] * total
    x = start
    values[0] = x
    for step in range(1, total):
        i = 0
        while True:
            digits[i] = (digits[i] + 1) % counts[i]
            x = (x + tables[i][digits[i]]) % big_m
            if digits[i] != 0:
                break
            i += 1
        values[step] = x
    values.sort()
    assert all(values[j] < values[j + 1] for j in range(len(values) - 1))
    return ResidueSet(big_m, tuple(values))


def crt_enumerate_pow(
    sets: Sequence[ResidueSet],
    n: int,
    a: int,
    stats: OpStats | None = None,
) -> list[tuple[int, int]]:
    """[(x, a**x mod n)] over the combined residue set, in clock order (not
    sorted). One modular multiplication per delta applied, plus one more on
    the steps where x wraps around the combined modulus."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    if gcd(a, n) != 1:
        raise ValueError(f"base {a} is not a unit mod {n}")
    big_m = _check_pairwise_coprime(sets)
    if any(len(s) == 0 for s in sets):
        return []
    if not sets:
        return [(0, 1 % n)]
    order, tables, start = _sorted_tables(sets, big_m)
    counts = [len(s.residues) for s in order]
    total = prod(counts)
    a %= n
    pow_tables = []
    for deltas in tables:
        row = []
        for d in deltas:
            row.append(pow(a, d, n))
            if stats is not None:
                stats.count_pow(d)
        pow_tables.append(row)
    # when x wraps past M the true exponent of y runs ahead by M; one
    # multiplication by a^(-M) per wrap keeps y = a^x for the canonical x
    inv_big = pow(a, -big_m, n)
    if stats is not None:
        stats.count_pow(big_m)
    digits = [0] * len(order)
    x = start
    y = pow(a, start, n)
    if stats is not None:
        stats.count_pow(start)
    out = [(x, y)]
    for _ in range(total - 1):
        i = 0
        while True:
            digits[i] = (digits[i] + 1) % counts[i]
            x += tables[i][digits[i]]
            y = y * pow_tables[i][digits[i]] % n
            if stats is not None:
                stats.group_mults += 1
            if x >= big_m:
                x -= big_m
                y = y * inv_big % n
                if stats is not None:
                    stats.group_mults += 1
            if digits[i] != 0:
                break
            i += 1
        out.append((x, y))
    return out
