"""Operation counters shared by the search and solver stages.

Counters are plain integers so they can be compared exactly across runs;
wall_time_ms is the only nondeterministic field and is never used in
correctness checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class OpStats:
    group_mults: int = 0
    babysteps: int = 0
    giantsteps: int = 0
    poly_eval_points: int = 0
    gcd_calls: int = 0
    wall_time_ms: float = 0.0

    def count_pow(self, exponent: int) -> None:
        """Charge a square-and-multiply exponentiation to group_mults."""
        e = abs(exponent)
        if e <= 1:
            return
        self.group_mults += e.bit_length() - 1 + e.bit_count() - 1

    def merge(self, other: "OpStats") -> None:
        self.group_mults += other.group_mults
        self.babysteps += other.babysteps
        self.giantsteps += other.giantsteps
        self.poly_eval_points += other.poly_eval_points
        self.gcd_calls += other.gcd_calls
        self.wall_time_ms += other.wall_time_ms

    def as_dict(self) -> dict[str, int | float]:
        return {
            "group_mults": self.group_mults,
            "babysteps": self.babysteps,
            "giantsteps": self.giantsteps,
            "poly_eval_points": self.poly_eval_points,
            "gcd_calls": self.gcd_calls,
            "wall_time_ms": self.wall_time_ms,
        }
