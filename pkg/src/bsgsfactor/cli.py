"""Command-line front end: factor with certificates, benchmark methods.

Exit codes: 0 success, 2 usage error, 3 input out of the supported range.
All integers in JSON output are decimal strings so consumers never hit
integer-width limits.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time
from dataclasses import dataclass
from math import prod

from .factorizer import (
    SMALL_N_CUTOFF,
    STAGE_NAMES,
    PrimePair,
    StageRecord,
    choose_delta,
    factor_semiprime_or_prime,
    factorize_with_trace,
)
from .numtheory import next_prime, pi, trial_division
from .stats import OpStats
from .strassen import strassen_basic

MAX_N = 1 << 96

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RANGE = 3


@dataclass
class Certificate:
    """Machine-checkable factorization record."""

    n: str
    factors: list[dict]
    method_trace: list[dict]
    candidate_sum_used: str | None

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "factors": self.factors,
                "method_trace": self.method_trace,
                "candidate_sum_used": self.candidate_sum_used,
            },
            indent=2,
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        obj = json.loads(text)
        return cls(
            n=obj["n"],
            factors=obj["factors"],
            method_trace=obj["method_trace"],
            candidate_sum_used=obj["candidate_sum_used"],
        )

    def verify(self) -> bool:
        n = int(self.n)
        if prod(int(f["p"]) ** f["e"] for f in self.factors) != n:
            return False
        return all(rec["stage"] in STAGE_NAMES for rec in self.method_trace)


def _public_params(params: dict) -> dict:
    out = {}
    for k, v in params.items():
        if isinstance(v, bool):
            out[k] = v
        elif isinstance(v, int):
            out[k] = str(v)
        else:
            out[k] = v
    return out


def build_certificate(
    n: int, factors: dict[int, int], trace: list[StageRecord]
) -> Certificate:
    sum_used = None
    method_trace = []
    for rec in trace:
        method_trace.append(
            {
                "stage": rec.stage,
                "params": _public_params(rec.params),
                "stats": rec.stats.as_dict(),
            }
        )
        if rec.stage == "split":
            sum_used = str(rec.params["s"])
    return Certificate(
        n=str(n),
        factors=[{"p": str(p), "e": e} for p, e in sorted(factors.items())],
        method_trace=method_trace,
        candidate_sum_used=sum_used,
    )


def _format_factorization(n: int, factors: dict[int, int]) -> str:
    if n == 1:
        return "1 = 1"
    if factors == {n: 1}:
        return f"{n} is prime"
    terms = " * ".join(
        f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(factors.items())
    )
    return f"{n} = {terms}"


def _strassen_factorize(n: int) -> tuple[dict[int, int], list[StageRecord]]:
    """Repeated smallest-factor extraction by the blocked search alone."""
    factors: dict[int, int] = {}
    trace: list[StageRecord] = []
    rem = n
    while rem > 1:
        delta = math.isqrt(rem)
        st = OpStats()
        t0 = time.perf_counter()
        out = strassen_basic(rem, max(1, delta), stats=st)
        st.wall_time_ms = (time.perf_counter() - t0) * 1000.0
        trace.append(
            StageRecord("wheel", {"variant": "basic", "n": rem, "delta": delta}, st)
        )
        if out.is_factor:
            p = out.value
            factors[p] = factors.get(p, 0) + 1
            rem //= p
        else:
            # no divisor up to sqrt(rem) means rem is prime
            factors[rem] = factors.get(rem, 0) + 1
            rem = 1
    assert prod(p**e for p, e in factors.items()) == n
    return dict(sorted(factors.items())), trace


def cmd_factor(args: argparse.Namespace) -> int:
    try:
        n = int(args.n, 10)
    except ValueError:
        print(f"error: not a decimal integer: {args.n!r}", file=sys.stderr)
        return EXIT_USAGE
    if n < 1 or n >= MAX_N:
        print(f"error: N must satisfy 1 <= N < 2^96, got {args.n}", file=sys.stderr)
        return EXIT_RANGE
    t0 = time.perf_counter()
    try:
        if args.method == "trial":
            factors, cofactor = trial_division(n, n)
            assert cofactor == 1
            trace = [StageRecord("trial", {"bound": n}, OpStats())]
        elif args.method == "strassen":
            factors, trace = _strassen_factorize(n)
        else:
            factors, trace = factorize_with_trace(
                n,
                delta_override=args.delta,
                force_sum_fallback=(args.method == "bsgs"),
            )
    except ValueError as exc:
        # a --delta override outside [N^(2/5), N^(1/2)] lands here
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    wall_ms = (time.perf_counter() - t0) * 1000.0
    if args.json:
        print(build_certificate(n, factors, trace).to_json())
    else:
        print(_format_factorization(n, factors))
        if args.stats:
            total = OpStats()
            for rec in trace:
                total.merge(rec.stats)
            total.wall_time_ms = wall_ms
            pieces = ", ".join(f"{k}={v}" for k, v in total.as_dict().items())
            print(f"stats: {pieces}")
    return EXIT_OK


@dataclass
class BenchRow:
    """One generated semiprime, run through both sum-search methods."""

    bits: int
    n: int
    p: int
    q: int
    hybrid: OpStats
    plain: OpStats
    hybrid_sum_steps: int
    plain_sum_steps: int
    ratio: float
    predicted: float


def _gen_semiprime(rng: random.Random, bits: int) -> tuple[int, int, int]:
    """Deterministic semiprime with both factors above the search cutoff,
    so the sum-search stage is always exercised."""
    while True:
        half = bits // 2
        p = next_prime(rng.randrange(1 << (half - 1), 1 << half))
        q = next_prime(rng.randrange(1 << (bits - half - 1), 1 << (bits - half)))
        if p == q:
            continue
        n = p * q
        if n.bit_length() != bits or n < SMALL_N_CUTOFF:
            continue
        if min(p, q) <= choose_delta(n).delta:
            continue
        return n, min(p, q), max(p, q)


def _run_pipeline(n: int, p: int, q: int, fallback: bool) -> tuple[OpStats, int, int]:
    """Factor n, return (total stats, sum-stage steps, sum-stage T)."""
    trace: list[StageRecord] = []
    t0 = time.perf_counter()
    res = factor_semiprime_or_prime(
        n, choose_delta(n).delta, trace=trace, force_sum_fallback=fallback
    )
    wall_ms = (time.perf_counter() - t0) * 1000.0
    assert res == PrimePair(p, q)
    total = OpStats()
    for rec in trace:
        total.merge(rec.stats)
    total.wall_time_ms = wall_ms
    sum_steps = 0
    sum_t = 0
    for rec in trace:
        if rec.stage in ("sum_dlog", "fallback_bsgs"):
            sum_steps = rec.stats.babysteps + rec.stats.giantsteps
            sum_t = rec.params["T"]
    return total, sum_steps, sum_t


def predicted_ratio(t: int) -> float:
    """Expected step savings of the restricted search at sum bound t."""
    if t < 2:
        return 1.0
    b = 0.5 * math.log(t)
    if b < 3.0:
        return 1.0
    return math.sqrt(math.log(b)) * 2.0 ** (-pi(b) / 2)


def bench_rows(min_bits: int, max_bits: int, count: int, seed: int) -> list[BenchRow]:
    rng = random.Random(seed)
    span = max_bits - min_bits + 1
    rows = []
    for idx in range(count):
        bits = min_bits + idx % span
        n, p, q = _gen_semiprime(rng, bits)
        hybrid, hyb_steps, sum_t = _run_pipeline(n, p, q, fallback=False)
        plain, plain_steps, _ = _run_pipeline(n, p, q, fallback=True)
        if hyb_steps and plain_steps:
            ratio = hyb_steps / plain_steps
        else:
            # factor fell out before the sum stage in both runs: a tie
            ratio = 1.0
        rows.append(
            BenchRow(
                bits=bits, n=n, p=p, q=q, hybrid=hybrid, plain=plain,
                hybrid_sum_steps=hyb_steps, plain_sum_steps=plain_steps,
                ratio=ratio,
                predicted=predicted_ratio(sum_t) if sum_t else 1.0,
            )
        )
    return rows


def _csv_line(bits: int, n: int, method: str, st: OpStats) -> str:
    return (
        f"{bits},{n},{method},{st.babysteps},{st.giantsteps},"
        f"{st.group_mults},{st.wall_time_ms:.3f}"
    )


def cmd_bench(args: argparse.Namespace) -> int:
    if not 22 <= args.min_bits <= args.max_bits <= 95 or args.count < 1:
        print(
            "error: need 22 <= min-bits <= max-bits <= 95 and count >= 1",
            file=sys.stderr,
        )
        return EXIT_USAGE
    rows = bench_rows(args.min_bits, args.max_bits, args.count, args.seed)
    if args.csv:
        print("bits,n,method,babysteps,giantsteps,group_mults,ms")
        for row in rows:
            print(_csv_line(row.bits, row.n, "hybrid", row.hybrid))
            print(_csv_line(row.bits, row.n, "bsgs", row.plain))
        return EXIT_OK
    header = (
        f"{'bits':>4}  {'n':>20}  {'method':<6}  {'babysteps':>9}  "
        f"{'giantsteps':>10}  {'group_mults':>11}  {'ms':>9}  "
        f"{'ratio':>6}  {'predicted':>9}"
    )
    print(header)
    for row in rows:
        print(
            f"{row.bits:>4}  {row.n:>20}  {'hybrid':<6}  "
            f"{row.hybrid.babysteps:>9}  {row.hybrid.giantsteps:>10}  "
            f"{row.hybrid.group_mults:>11}  {row.hybrid.wall_time_ms:>9.3f}  "
            f"{row.ratio:>6.3f}  {row.predicted:>9.3f}"
        )
        print(
            f"{row.bits:>4}  {row.n:>20}  {'bsgs':<6}  "
            f"{row.plain.babysteps:>9}  {row.plain.giantsteps:>10}  "
            f"{row.plain.group_mults:>11}  {row.plain.wall_time_ms:>9.3f}  "
            f"{'':>6}  {'':>9}"
        )
    mean = sum(r.ratio for r in rows) / len(rows)
    print(f"rows: {len(rows)}, mean ratio: {mean:.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsgsfactor",
        description="Deterministic integer factorization with search certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    f = sub.add_parser("factor", help="factor one integer")
    f.add_argument("n", help="decimal integer, 1 <= N < 2^96")
    f.add_argument(
        "--method",
        choices=["hybrid", "strassen", "trial", "bsgs"],
        default="hybrid",
        help="hybrid pipeline (default), blocked search only, trial "
        "division only, or the pipeline with an unrestricted BSGS sum stage",
    )
    f.add_argument("--delta", type=int, default=None, help="override the cutoff")
    f.add_argument("--json", action="store_true", help="print a certificate")
    f.add_argument("--stats", action="store_true", help="print operation counts")
    b = sub.add_parser("bench", help="compare methods on random semiprimes")
    b.add_argument("--min-bits", type=int, required=True)
    b.add_argument("--max-bits", type=int, required=True)
    b.add_argument("--count", type=int, required=True)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--csv", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "factor":
        return cmd_factor(args)
    return cmd_bench(args)


if __name__ == "__main__":
    sys.exit(main())
