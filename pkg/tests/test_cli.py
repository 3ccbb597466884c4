"""Command-line interface: output formats, exit codes, bench determinism."""

import json
import re

import pytest

from bsgsfactor.cli import (
    EXIT_OK,
    EXIT_RANGE,
    EXIT_USAGE,
    Certificate,
    bench_rows,
    build_certificate,
    main,
    predicted_ratio,
)
from bsgsfactor.factorizer import factorize_with_trace

WORKED_N = "7909787"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_factor_semiprime_text(capsys):
    code, out, _ = run(capsys, "factor", WORKED_N)
    assert code == EXIT_OK
    assert out.strip() == "7909787 = 2069 * 3823"


def test_factor_exponent_text(capsys):
    code, out, _ = run(capsys, "factor", "360")
    assert code == EXIT_OK
    assert out.strip() == "360 = 2^3 * 3^2 * 5"


def test_factor_one_and_prime_text(capsys):
    code, out, _ = run(capsys, "factor", "1")
    assert code == EXIT_OK
    assert out.strip() == "1 = 1"
    code, out, _ = run(capsys, "factor", "1000003")
    assert code == EXIT_OK
    assert out.strip() == "1000003 is prime"


def test_factor_json_certificate(capsys):
    code, out, _ = run(capsys, "factor", WORKED_N, "--json")
    assert code == EXIT_OK
    cert = Certificate.from_json(out)
    assert cert.n == WORKED_N
    assert cert.factors == [{"p": "2069", "e": 1}, {"p": "3823", "e": 1}]
    assert cert.verify()
    # default cutoff 2484 exceeds the smaller prime, so the wheel finds it
    # and no candidate sum is consumed
    assert cert.candidate_sum_used is None
    assert Certificate.from_json(cert.to_json()) == cert


def test_factor_json_candidate_sum_used(capsys):
    # cutoff below both primes pushes the run through the sum search,
    # and the certificate must name the sum that split N
    code, out, _ = run(capsys, "factor", WORKED_N, "--json", "--delta", "2000")
    assert code == EXIT_OK
    cert = Certificate.from_json(out)
    assert cert.factors == [{"p": "2069", "e": 1}, {"p": "3823", "e": 1}]
    assert cert.verify()
    assert cert.candidate_sum_used == "5892"
    stages = [rec["stage"] for rec in cert.method_trace]
    assert "split" in stages and ("sum_dlog" in stages or "fallback_bsgs" in stages)


def test_factor_json_empty_for_one(capsys):
    code, out, _ = run(capsys, "factor", "1", "--json")
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["factors"] == []
    assert obj["method_trace"] == []


def test_certificate_verify_rejects_tampering():
    factors, trace = factorize_with_trace(int(WORKED_N))
    cert = build_certificate(int(WORKED_N), factors, trace)
    assert cert.verify()
    bad = Certificate(
        n=cert.n,
        factors=[{"p": "2069", "e": 2}, {"p": "3823", "e": 1}],
        method_trace=cert.method_trace,
        candidate_sum_used=cert.candidate_sum_used,
    )
    assert not bad.verify()


def test_factor_methods_agree(capsys):
    for n in (WORKED_N, "99799811", "360"):
        outs = set()
        for method in ("hybrid", "strassen", "trial", "bsgs"):
            code, out, _ = run(capsys, "factor", n, "--method", method)
            assert code == EXIT_OK
            outs.add(out.strip())
        assert len(outs) == 1, outs


def test_factor_stats_line(capsys):
    code, out, _ = run(capsys, "factor", WORKED_N, "--stats")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "7909787 = 2069 * 3823"
    assert lines[1].startswith("stats: ")
    assert "group_mults=" in lines[1]
    assert "wall_time_ms=" in lines[1]


def test_factor_exit_codes(capsys):
    code, _, err = run(capsys, "factor", "abc")
    assert code == EXIT_USAGE and "decimal" in err
    code, _, err = run(capsys, "factor", "0")
    assert code == EXIT_RANGE
    code, _, err = run(capsys, "factor", "-7")
    assert code == EXIT_RANGE
    code, _, err = run(capsys, "factor", str(1 << 96))
    assert code == EXIT_RANGE and "2^96" in err
    # an override outside [N^(2/5), N^(1/2)] is a usage error
    code, _, err = run(capsys, "factor", WORKED_N, "--delta", "10")
    assert code == EXIT_USAGE and "delta" in err


def test_bench_invalid_ranges(capsys):
    code, _, err = run(capsys, "bench", "--min-bits", "21", "--max-bits", "30", "--count", "2")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "bench", "--min-bits", "30", "--max-bits", "29", "--count", "2")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "bench", "--min-bits", "24", "--max-bits", "25", "--count", "0")
    assert code == EXIT_USAGE
    code, _, err = run(capsys, "bench", "--min-bits", "30", "--max-bits", "96", "--count", "2")
    assert code == EXIT_USAGE


def _strip_ms(text: str) -> str:
    # wall-clock columns are the only nondeterministic output
    return re.sub(r"\d+\.\d{3}", "MS", text)


def test_bench_deterministic(capsys):
    args = ("bench", "--min-bits", "24", "--max-bits", "26", "--count", "3", "--seed", "42")
    code, out1, _ = run(capsys, *args)
    assert code == EXIT_OK
    code, out2, _ = run(capsys, *args)
    assert code == EXIT_OK
    assert _strip_ms(out1) == _strip_ms(out2)
    # one row per generated semiprime, bits cycling min..max
    assert out1.count(" hybrid") == 3
    assert out1.count(" bsgs") == 3


def test_bench_csv_format(capsys):
    args = (
        "bench", "--min-bits", "24", "--max-bits", "24",
        "--count", "2", "--seed", "7", "--csv",
    )
    code, out, _ = run(capsys, *args)
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "bits,n,method,babysteps,giantsteps,group_mults,ms"
    assert len(lines) == 1 + 2 * 2
    for line in lines[1:]:
        bits, n, method, bs, gs, gm, ms = line.split(",")
        assert bits == "24"
        assert int(n).bit_length() == 24
        assert method in ("hybrid", "bsgs")
        assert int(bs) >= 0 and int(gs) >= 0 and int(gm) >= 0
        float(ms)


def test_bench_ratio_bound_at_30_bits():
    rows = bench_rows(30, 31, 4, seed=1)
    for row in rows:
        assert row.ratio <= 1.0
        assert row.hybrid_sum_steps <= row.plain_sum_steps or row.ratio == 1.0


def test_predicted_ratio_shape():
    assert predicted_ratio(1) == 1.0
    # below the wheel threshold the prediction degenerates to parity
    assert predicted_ratio(300) == 1.0
    assert 0.0 < predicted_ratio(10**10) < 1.0
