"""
n-th Prime - Summation formulas over pi(k) and their three variants.

    p_n = base + sum_{k=k_lo}^{k_hi} (1 - floor(pi(k) / n))

Each term is 1 while fewer than n primes are <= k, so the sum counts the k
below p_n inside the window. The basic window is [1, floor(2n ln n + 2)]
with base 1. The accelerated window starts at floor(n ln n), a known lower
bound for p_n, and ends at floor(c_n + 3) with
c_n = n ln n + n (ln ln n - 1/2).

"Log" is the natural logarithm throughout. Bounds are evaluated in double
precision; that is exact for the ranges exercised here, but very large n
would need guarded rounding where n ln n lands next to an integer.
"""

import json
import logging
import math
import time
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

from lcm_primes.formula.prime_count import PiAccumulator, pi_fresh

logger = logging.getLogger(__name__)


class Variant(str, Enum):
    """Algorithm variants for the n-th prime."""
    NAIVE = "naive"     # basic window, pi(k) rebuilt from scratch per k
    MEMOIZED = "memo"   # basic window, one streaming accumulator
    RS = "rs"           # accelerated window, one streaming accumulator

    @property
    def min_n(self) -> int:
        """Smallest n the variant is defined for."""
        return 2 if self is Variant.RS else 1


class BoundsError(RuntimeError):
    """Summation bounds came out inverted where they never should."""


@dataclass(frozen=True)
class Bounds:
    """Summation window and the constant added outside the sum."""
    k_lo: int
    k_hi: int
    base: int

    def __post_init__(self) -> None:
        if self.k_lo > self.k_hi + 1:
            raise BoundsError(f"window [{self.k_lo}, {self.k_hi}] is inverted")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {"k_lo": self.k_lo, "k_hi": self.k_hi, "base": self.base}


@dataclass
class NthPrimeResult:
    """Computed p_n with the instrumentation the benchmark reads."""
    n: int
    p_n: int
    variant: Variant
    bounds: Bounds
    terms_evaluated: int
    elapsed: float
    early_exit: bool = False

    @property
    def pnt_error(self) -> Optional[int]:
        """p_n - floor(n ln n): distance from the prime number theorem estimate."""
        if self.n < 2:
            return None
        return self.p_n - math.floor(self.n * math.log(self.n))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "n": self.n,
            "p_n": self.p_n,
            "variant": self.variant.value,
            "bounds": self.bounds.to_dict(),
            "terms_evaluated": self.terms_evaluated,
            "elapsed_seconds": self.elapsed,
            "early_exit": self.early_exit,
            "pnt_error": self.pnt_error,
        }

    def to_json(self, indent: int = 2) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict(), indent=indent)


def bounds_basic(n: int) -> Bounds:
    """Window [1, floor(2 n ln n + 2)] with base 1."""
    if n < 1:
        raise ValueError(f"bounds_basic needs n >= 1, got {n}")
    return Bounds(k_lo=1, k_hi=math.floor(2 * n * math.log(n) + 2), base=1)


def rs_c(n: int) -> float:
    """c_n = n ln n + n (ln ln n - 1/2). Negative for very small n."""
    if n < 2:
        raise ValueError(f"rs_c needs n >= 2, got {n}")
    log_n = math.log(n)
    return n * log_n + n * (math.log(log_n) - 0.5)


def bounds_rs(n: int) -> Bounds:
    """Window [floor(n ln n), floor(c_n + 3)] with base floor(n ln n)."""
    if n < 2:
        raise ValueError(f"bounds_rs needs n >= 2, got {n}")
    lower = math.floor(n * math.log(n))
    upper = math.floor(rs_c(n) + 3)
    if upper < lower:
        raise BoundsError(f"accelerated window for n={n} is empty: [{lower}, {upper}]")
    return Bounds(k_lo=lower, k_hi=upper, base=lower)


def bounds_for(n: int, variant: Variant) -> Bounds:
    """Window used by a given variant."""
    return bounds_rs(n) if variant is Variant.RS else bounds_basic(n)


def _check_domain(n: int, variant: Variant) -> None:
    if n < variant.min_n:
        raise ValueError(
            f"variant {variant.value} needs n >= {variant.min_n}, got {n}"
        )


def nth_prime(
    n: int,
    variant: Variant = Variant.MEMOIZED,
    early_exit: bool = False,
) -> NthPrimeResult:
    """
    Compute the n-th prime with one of the summation variants.

    Args:
        n: Index of the prime (n >= 1; n >= 2 for RS)
        variant: NAIVE, MEMOIZED or RS
        early_exit: Stop at the first zero term. Later terms are all zero
            because pi is nondecreasing, so p_n is unchanged.

    Returns:
        NthPrimeResult with p_n, the window used, terms evaluated and
        wall-clock seconds
    """
    variant = Variant(variant)
    _check_domain(n, variant)
    bounds = bounds_for(n, variant)

    start = time.perf_counter()
    total = bounds.base
    terms = 0

    if variant is Variant.NAIVE:
        for k in range(bounds.k_lo, bounds.k_hi + 1):
            term = 1 - pi_fresh(k) // n
            total += term
            terms += 1
            if early_exit and term == 0:
                break
    else:
        acc = PiAccumulator()
        for k in range(bounds.k_lo, bounds.k_hi + 1):
            acc.advance_to(k)
            term = 1 - acc.pi_k // n
            total += term
            terms += 1
            if early_exit and term == 0:
                break

    elapsed = time.perf_counter() - start
    logger.debug(
        "nth_prime n=%d variant=%s p_n=%d terms=%d elapsed=%.6f",
        n, variant.value, total, terms, elapsed,
    )
    return NthPrimeResult(
        n=n,
        p_n=total,
        variant=variant,
        bounds=bounds,
        terms_evaluated=terms,
        elapsed=elapsed,
        early_exit=early_exit,
    )
