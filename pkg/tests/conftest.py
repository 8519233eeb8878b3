"""Shared fixtures."""

import pytest

from lcm_primes.oracle import SieveTable, sieve


@pytest.fixture(scope="session")
def table() -> SieveTable:
    # covers every basic summation window up to n = 300 (k_hi = 3425)
    return sieve(5000)
