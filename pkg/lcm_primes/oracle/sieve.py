"""
Prime Oracle - Independent ground truth for the LCM formulas.

Sieve of Eratosthenes, trial division and prime-power decomposition. Nothing
here computes an lcm, so agreement with the LCM formulas means something.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class SieveTable:
    """
    Primality flags, cumulative counts and the ordered primes up to limit.

    The arrays are marked read-only after construction, so one table can be
    shared freely between threads.
    """
    limit: int
    flags: np.ndarray
    pi_table: np.ndarray
    primes: np.ndarray

    def is_prime(self, j: int) -> bool:
        """Table lookup; j must lie in [0, limit]."""
        self._check_range(j)
        return bool(self.flags[j])

    def pi(self, k: int) -> int:
        """Number of primes <= k, for 0 <= k <= limit."""
        self._check_range(k)
        return int(self.pi_table[k])

    def nth(self, n: int) -> int:
        """The n-th prime (1-based)."""
        if not 1 <= n <= len(self.primes):
            raise ValueError(
                f"sieve up to {self.limit} holds {len(self.primes)} primes, asked for #{n}"
            )
        return int(self.primes[n - 1])

    def _check_range(self, j: int) -> None:
        if not 0 <= j <= self.limit:
            raise ValueError(f"{j} is outside the sieved range [0, {self.limit}]")


def sieve(limit: int) -> SieveTable:
    """
    Sieve of Eratosthenes over [0, limit].

    Args:
        limit: Upper end, limit >= 2

    Returns:
        SieveTable with flags, prefix counts and prime list
    """
    if limit < 2:
        raise ValueError(f"sieve needs limit >= 2, got {limit}")
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    pi_table = np.cumsum(flags, dtype=np.int64)
    primes = np.flatnonzero(flags)
    for arr in (flags, pi_table, primes):
        arr.setflags(write=False)
    return SieveTable(limit=limit, flags=flags, pi_table=pi_table, primes=primes)


def is_prime(j: int) -> bool:
    """Trial division up to floor(sqrt(j))."""
    if j < 2:
        return False
    if j % 2 == 0:
        return j == 2
    for d in range(3, math.isqrt(j) + 1, 2):
        if j % d == 0:
            return False
    return True


def _smallest_factor(j: int) -> int:
    if j % 2 == 0:
        return 2
    for d in range(3, math.isqrt(j) + 1, 2):
        if j % d == 0:
            return d
    return j


def prime_power_decompose(j: int) -> Optional[Tuple[int, int]]:
    """
    Write j as p^a.

    Returns:
        (p, a) if j is a prime power, otherwise None
    """
    if j < 2:
        raise ValueError(f"prime_power_decompose needs j >= 2, got {j}")
    p = _smallest_factor(j)
    exponent = 0
    rest = j
    while rest % p == 0:
        rest //= p
        exponent += 1
    return (p, exponent) if rest == 1 else None


def ratio_law(j: int) -> int:
    """Predicted lcm(1..j) / lcm(1..j-1): p when j = p^a, else 1."""
    if j < 2:
        raise ValueError(f"ratio_law needs j >= 2, got {j}")
    decomposed = prime_power_decompose(j)
    return decomposed[0] if decomposed else 1
