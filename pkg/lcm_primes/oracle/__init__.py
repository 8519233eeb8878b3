"""Ground-truth prime data that shares no code with the LCM formulas."""

from lcm_primes.oracle.sieve import (
    SieveTable,
    is_prime,
    prime_power_decompose,
    ratio_law,
    sieve,
)

__all__ = [
    "SieveTable",
    "is_prime",
    "prime_power_decompose",
    "ratio_law",
    "sieve",
]
