"""LCM-based prime indicator, prime counting and n-th prime formulas."""

from lcm_primes.formula.lcm_core import (
    CharValue,
    CorruptedStateError,
    LcmState,
    advance,
    char_fn,
    char_from_ratio,
    chebyshev_psi,
    iter_states,
    lcm_fresh,
    ratio,
    smarandache_p,
)
from lcm_primes.formula.prime_count import PiAccumulator, pi_fresh, pi_step, pi_stream
from lcm_primes.formula.nth_prime import (
    Bounds,
    BoundsError,
    NthPrimeResult,
    Variant,
    bounds_basic,
    bounds_for,
    bounds_rs,
    nth_prime,
    rs_c,
)

__all__ = [
    "CharValue",
    "CorruptedStateError",
    "LcmState",
    "advance",
    "char_fn",
    "char_from_ratio",
    "chebyshev_psi",
    "iter_states",
    "lcm_fresh",
    "ratio",
    "smarandache_p",
    "PiAccumulator",
    "pi_fresh",
    "pi_step",
    "pi_stream",
    "Bounds",
    "BoundsError",
    "NthPrimeResult",
    "Variant",
    "bounds_basic",
    "bounds_for",
    "bounds_rs",
    "nth_prime",
    "rs_c",
]
