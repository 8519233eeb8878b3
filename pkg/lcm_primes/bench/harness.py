"""
Benchmark Harness - Timed, oracle-checked n-th prime runs.

Each (variant, n) pair is run a fixed number of times, strictly one after
another, and the median wall-clock time is kept. A record is only produced
once its p_n has been checked against the sieve.
"""

import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional

import numpy as np

from lcm_primes.formula.nth_prime import Variant, nth_prime
from lcm_primes.oracle.sieve import SieveTable, sieve
from lcm_primes.verify import VerificationMismatch, sieve_limit_for

logger = logging.getLogger(__name__)


@dataclass
class BenchRecord:
    """One timed measurement."""
    variant: Variant
    n: int
    p_n: int
    k_lo: int
    k_hi: int
    terms_evaluated: int
    elapsed_seconds: float
    repetitions: int

    def __post_init__(self) -> None:
        self.variant = Variant(self.variant)
        if self.elapsed_seconds < 0:
            raise ValueError(f"elapsed_seconds must be >= 0, got {self.elapsed_seconds}")
        if self.repetitions < 1:
            raise ValueError(f"repetitions must be >= 1, got {self.repetitions}")

    @property
    def label(self) -> str:
        """Row label in the comparative table, e.g. P10=29."""
        return f"P{self.n}={self.p_n}"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "variant": self.variant.value,
            "n": self.n,
            "p_n": self.p_n,
            "k_lo": self.k_lo,
            "k_hi": self.k_hi,
            "terms_evaluated": self.terms_evaluated,
            "elapsed_seconds": self.elapsed_seconds,
            "repetitions": self.repetitions,
        }

    def to_json(self, indent: int = 2) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BenchRecord":
        """Create from dictionary; string values (CSV cells) are converted."""
        return cls(
            variant=Variant(data["variant"]),
            n=int(data["n"]),
            p_n=int(data["p_n"]),
            k_lo=int(data["k_lo"]),
            k_hi=int(data["k_hi"]),
            terms_evaluated=int(data["terms_evaluated"]),
            elapsed_seconds=float(data["elapsed_seconds"]),
            repetitions=int(data["repetitions"]),
        )


def measure(
    variant: Variant,
    n: int,
    repetitions: int,
    table: SieveTable,
    early_exit: bool = False,
) -> BenchRecord:
    """
    Time one (variant, n) pair.

    Raises:
        VerificationMismatch: if any repetition returns a wrong p_n
    """
    expected = table.nth(n)
    timings: List[float] = []
    result = None
    for _ in range(repetitions):
        result = nth_prime(n, variant, early_exit=early_exit)
        if result.p_n != expected:
            raise VerificationMismatch("nth_prime", n, result.p_n, expected, variant)
        timings.append(result.elapsed)
    assert result is not None

    record = BenchRecord(
        variant=variant,
        n=n,
        p_n=result.p_n,
        k_lo=result.bounds.k_lo,
        k_hi=result.bounds.k_hi,
        terms_evaluated=result.terms_evaluated,
        elapsed_seconds=float(np.median(timings)),
        repetitions=repetitions,
    )
    logger.info(
        "bench %s n=%d p_n=%d median=%.6fs over %d runs",
        variant.value, n, record.p_n, record.elapsed_seconds, repetitions,
    )
    return record


def run_bench(
    variants: Iterable[Variant],
    ns: Iterable[int],
    repetitions: int = 3,
    early_exit: bool = False,
    naive_max_n: Optional[int] = None,
    table: Optional[SieveTable] = None,
) -> List[BenchRecord]:
    """
    Time every (variant, n) pair, one after another.

    Args:
        variants: Variants to time
        ns: Indices to time
        repetitions: Runs per pair; the median is recorded
        early_exit: Passed through to nth_prime
        naive_max_n: Skip NAIVE above this n (None times everything)
        table: Oracle to check against; built from the grid if None

    Returns:
        BenchRecords in (n, variant) order
    """
    if repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {repetitions}")
    variants = [Variant(v) for v in variants]
    ns = sorted(set(ns))
    if not variants or not ns:
        raise ValueError("run_bench needs at least one variant and one n")
    for variant in variants:
        low = [n for n in ns if n < variant.min_n]
        if low:
            raise ValueError(f"variant {variant.value} needs n >= {variant.min_n}, got {low[0]}")

    if table is None:
        table = sieve(sieve_limit_for(max(ns)))

    records: List[BenchRecord] = []
    for n in ns:
        for variant in variants:
            if variant is Variant.NAIVE and naive_max_n is not None and n > naive_max_n:
                logger.warning("skipping naive at n=%d (cap %d)", n, naive_max_n)
                continue
            records.append(measure(variant, n, repetitions, table, early_exit))
    return records
