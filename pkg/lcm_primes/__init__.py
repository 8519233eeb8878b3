"""
lcm-primes - n-th prime formulas built on lcm(1, 2, ..., j).

This package provides:
- The lcm(1..j) recurrence and the prime indicator derived from its ratios
- Prime counting, batch and streaming
- Three n-th prime variants (naive, memoized, accelerated window)
- An independent sieve/trial-division oracle and agreement suite
- A timing harness with power-law complexity fits
"""

from lcm_primes.cli import main
from lcm_primes.formula import Variant, char_fn, nth_prime, pi_fresh, pi_stream

__version__ = "0.1.0"
__all__ = ["main", "Variant", "char_fn", "nth_prime", "pi_fresh", "pi_stream"]
