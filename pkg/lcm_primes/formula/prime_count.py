"""
Prime Counting - pi(k) as the running sum of the LCM prime indicator.

Two evaluation paths are kept on purpose: pi_fresh rebuilds every lcm from
scratch, PiAccumulator carries one lcm forward. Both must agree exactly.
"""

from dataclasses import dataclass
from math import gcd
from typing import Any, Dict

from lcm_primes.formula.lcm_core import LcmState, char_fn


@dataclass
class PiAccumulator:
    """
    Streaming prime counter.

    Holds pi(k) together with L = lcm(1..k). Mutable and single-owner;
    step() moves it forward by one index in place. The pair is kept as
    plain ints and only wrapped in an LcmState at the boundary (see inner).
    """
    k: int = 1
    pi_k: int = 0
    L: int = 1

    def __post_init__(self) -> None:
        LcmState(j=self.k, L=self.L)
        if self.pi_k < 0 or self.pi_k > self.k:
            raise ValueError(f"pi_k={self.pi_k} is impossible at k={self.k}")

    @property
    def inner(self) -> LcmState:
        """The recurrence state at the current index."""
        return LcmState(j=self.k, L=self.L)

    def step(self) -> "PiAccumulator":
        """Advance to k+1 with exactly one LCM update."""
        return self.advance_to(self.k + 1)

    def advance_to(self, k: int) -> "PiAccumulator":
        """Step forward until the accumulator sits at index k."""
        if k < self.k:
            raise ValueError(f"cannot move accumulator back from {self.k} to {k}")
        j, L, pi_k = self.k, self.L, self.pi_k
        while j < k:
            j += 1
            nxt = L // gcd(L, j) * j
            # floor(lcm(1..j) / (j * lcm(1..j-1)))
            pi_k += nxt // L // j
            L = nxt
        self.k, self.L, self.pi_k = j, L, pi_k
        return self

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {"k": self.k, "pi_k": self.pi_k}


def pi_fresh(k: int) -> int:
    """
    pi(k) = sum of char_fn(j) for j = 2..k, every lcm recomputed from scratch.

    Args:
        k: Index, k >= 1 (k = 1 is the empty sum)

    Returns:
        Number of primes <= k
    """
    if k < 1:
        raise ValueError(f"pi_fresh needs k >= 1, got {k}")
    return sum(char_fn(j).value for j in range(2, k + 1))


def pi_step(acc: PiAccumulator) -> PiAccumulator:
    """Advance a streaming accumulator by one index."""
    return acc.step()


def pi_stream(k: int) -> int:
    """pi(k) through a single accumulator walked from 1 to k."""
    if k < 1:
        raise ValueError(f"pi_stream needs k >= 1, got {k}")
    return PiAccumulator().advance_to(k).pi_k
