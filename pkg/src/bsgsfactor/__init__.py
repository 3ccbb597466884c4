"""Deterministic integer factorization via blocked polynomial searches
and sum-restricted babystep-giantstep discrete logs."""

from .crtenum import ResidueSet, crt_enumerate, crt_enumerate_pow
from .factorizer import (
    DeltaChoice,
    PrimePair,
    StageRecord,
    choose_delta,
    factor_semiprime_or_prime,
    factorize,
    factorize_with_trace,
)
from .hyperbola import (
    hyperbola_points,
    sum_set,
    sum_set_composite,
    sum_set_power_of_two,
    sum_set_prime,
)
from .orderfind import bsgs_dlog, bsgs_order, find_large_order_element
from .polyeval import PolyModN, ProductTree, build_linear_product, multipoint_eval
from .stats import OpStats
from .strassen import SearchOutcome, strassen_basic, strassen_progression, wheel_search
from .sumdlog import CandidateSums, SumDlogParams, candidate_sums, derive_params, xi

__version__ = "0.1.0"

__all__ = [
    "CandidateSums",
    "DeltaChoice",
    "OpStats",
    "PolyModN",
    "PrimePair",
    "ProductTree",
    "ResidueSet",
    "SearchOutcome",
    "StageRecord",
    "SumDlogParams",
    "bsgs_dlog",
    "bsgs_order",
    "build_linear_product",
    "candidate_sums",
    "choose_delta",
    "crt_enumerate",
    "crt_enumerate_pow",
    "derive_params",
    "factor_semiprime_or_prime",
    "factorize",
    "factorize_with_trace",
    "find_large_order_element",
    "hyperbola_points",
    "multipoint_eval",
    "strassen_basic",
    "strassen_progression",
    "sum_set",
    "sum_set_composite",
    "sum_set_power_of_two",
    "sum_set_prime",
    "wheel_search",
    "xi",
    "__version__",
]
