"""
LCM Core - The lcm(1..j) recurrence and the prime indicator built on it.

lcm(1..j) / lcm(1..j-1) is 1 unless j is a prime power p^a, where it is p.
Dividing that ratio by j and flooring therefore gives 1 exactly at primes.
All values are Python ints, so nothing overflows as lcm(1..j) grows like e^j.
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, Iterator


class CorruptedStateError(ArithmeticError):
    """An LcmState pair no longer satisfies L = lcm(1..j)."""


def _lcm(a: int, b: int) -> int:
    # divide before multiplying to keep the intermediate small
    return a // math.gcd(a, b) * b


@dataclass
class LcmState:
    """
    Running pair (j, lcm(1..j)) for the recurrence.

    A state is owned by one caller at a time; advance() returns a new state
    rather than mutating this one.
    """
    j: int = 1
    L: int = 1

    def __post_init__(self) -> None:
        if self.j < 1:
            raise ValueError(f"j must be >= 1, got {self.j}")
        if self.L < 1:
            raise ValueError(f"L must be a positive integer, got {self.L}")
        if self.j == 1 and self.L != 1:
            raise CorruptedStateError(f"lcm(1..1) is 1, state holds {self.L}")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {"j": self.j, "L": str(self.L), "bits": self.L.bit_length()}


@dataclass(frozen=True)
class CharValue:
    """Value of the prime indicator at index j, with the ratio it came from."""
    value: int
    j: int
    ratio: int


def lcm_fresh(j: int) -> int:
    """
    Compute lcm(1..j) from scratch by folding pairwise lcm over 1..j.

    Args:
        j: Upper end of the range, j >= 1

    Returns:
        lcm(1, 2, ..., j)
    """
    if j < 1:
        raise ValueError(f"lcm_fresh needs j >= 1, got {j}")
    result = 1
    for i in range(2, j + 1):
        result = _lcm(result, i)
    return result


def advance(state: LcmState) -> LcmState:
    """Step the recurrence: (j, lcm(1..j)) -> (j+1, lcm(lcm(1..j), j+1))."""
    nxt = state.j + 1
    return LcmState(j=nxt, L=_lcm(state.L, nxt))


def iter_states(stop: int) -> Iterator[LcmState]:
    """Yield the recurrence states for j = 1..stop."""
    state = LcmState()
    while state.j <= stop:
        yield state
        state = advance(state)


def ratio(state_after: LcmState, L_before: int) -> int:
    """
    Exact quotient lcm(1..j) / lcm(1..j-1).

    Raises:
        CorruptedStateError: if the division is not exact
    """
    if state_after.j < 2:
        raise ValueError(f"ratio needs a state at j >= 2, got j={state_after.j}")
    quotient, remainder = divmod(state_after.L, L_before)
    if remainder:
        raise CorruptedStateError(
            f"lcm at j={state_after.j} is not a multiple of the previous lcm"
        )
    return quotient


def char_from_ratio(step_ratio: int, j: int) -> int:
    """Floor-quotient step of the indicator: 1 iff step_ratio == j."""
    return step_ratio // j


def char_fn(j: int) -> CharValue:
    """
    Prime indicator floor(lcm(1..j) / (j * lcm(1..j-1))), evaluated fresh.

    Args:
        j: Index, j >= 2

    Returns:
        CharValue with value 1 if j is prime, 0 if composite
    """
    if j < 2:
        raise ValueError(f"char_fn is defined for j >= 2, got {j}")
    before = lcm_fresh(j - 1)
    after = LcmState(j=j, L=_lcm(before, j))
    step_ratio = ratio(after, before)
    return CharValue(value=char_from_ratio(step_ratio, j), j=j, ratio=step_ratio)


def smarandache_p(j: int) -> int:
    """Complement of the prime indicator: 0 at primes, 1 at composites."""
    if j < 2:
        raise ValueError(f"smarandache_p is defined for j >= 2, got {j}")
    return 1 - char_fn(j).value


def chebyshev_psi(j: int) -> float:
    """Chebyshev psi(j) = ln lcm(1..j), taken on the exact integer."""
    return math.log(lcm_fresh(j))
