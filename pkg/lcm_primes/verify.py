"""
Verification Suite - Exact agreement checks between the formulas and the oracle.

Runs the indicator, ratio law, prime counting and n-th prime checks over a
range and collects the outcome of each, keeping the first counterexample.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from lcm_primes.formula.lcm_core import LcmState, advance, char_from_ratio, ratio
from lcm_primes.formula.nth_prime import Variant, bounds_basic, bounds_rs, nth_prime
from lcm_primes.formula.prime_count import PiAccumulator
from lcm_primes.oracle.sieve import SieveTable, ratio_law, sieve

logger = logging.getLogger(__name__)


class VerificationMismatch(AssertionError):
    """A formula value disagreed with the oracle."""

    def __init__(
        self,
        check: str,
        index: int,
        got: int,
        expected: int,
        variant: Optional[Variant] = None,
    ):
        self.check = check
        self.index = index
        self.got = got
        self.expected = expected
        self.variant = variant
        where = f"{check}[{variant.value}]" if variant else check
        super().__init__(f"{where}({index}) = {got}, expected {expected}")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "check": self.check,
            "variant": self.variant.value if self.variant else None,
            "index": self.index,
            "got": self.got,
            "expected": self.expected,
        }


@dataclass
class CheckOutcome:
    """Result of one agreement check over a range."""
    name: str
    low: int
    high: int
    checked: int = 0
    mismatches: int = 0
    first_mismatch: Optional[VerificationMismatch] = None

    @property
    def passed(self) -> bool:
        return self.mismatches == 0

    def record(self, mismatch: VerificationMismatch) -> None:
        """Count a mismatch, keeping the first one seen."""
        self.mismatches += 1
        if self.first_mismatch is None:
            self.first_mismatch = mismatch
            logger.error("verification mismatch: %s", mismatch)

    def summary(self) -> str:
        return (
            f"{self.name}: {self.checked} checked in [{self.low}, {self.high}], "
            f"{self.mismatches} mismatches"
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "name": self.name,
            "range": [self.low, self.high],
            "checked": self.checked,
            "mismatches": self.mismatches,
            "first_mismatch": self.first_mismatch.to_dict() if self.first_mismatch else None,
        }


@dataclass
class RsMargin:
    """Smallest slack k_hi - (p_n - 1) of the accelerated window over a range."""
    min_slack: int
    at_n: int


@dataclass
class VerificationReport:
    """Everything one verify run found."""
    max_n: int
    sieve_limit: int
    naive_max_n: Optional[int]
    outcomes: List[CheckOutcome] = field(default_factory=list)
    rs_margin: Optional[RsMargin] = None

    @property
    def mismatches(self) -> int:
        return sum(o.mismatches for o in self.outcomes)

    @property
    def passed(self) -> bool:
        return self.mismatches == 0

    @property
    def first_mismatch(self) -> Optional[VerificationMismatch]:
        for outcome in self.outcomes:
            if outcome.first_mismatch is not None:
                return outcome.first_mismatch
        return None

    def summary_lines(self) -> List[str]:
        """Human-readable report, one line per check."""
        lines = [o.summary() for o in self.outcomes]
        if self.naive_max_n is not None:
            lines.append(f"naive variant capped at n <= {self.naive_max_n}")
        if self.rs_margin is not None:
            lines.append(
                f"rs bound margin: min slack {self.rs_margin.min_slack} "
                f"at n={self.rs_margin.at_n}"
            )
        status = "PASS" if self.passed else "FAIL"
        lines.append(f"verify: {status}, {self.mismatches} mismatches")
        if self.first_mismatch is not None:
            lines.append(f"first counterexample: {self.first_mismatch}")
        return lines

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "max_n": self.max_n,
            "sieve_limit": self.sieve_limit,
            "naive_max_n": self.naive_max_n,
            "passed": self.passed,
            "mismatches": self.mismatches,
            "checks": [o.to_dict() for o in self.outcomes],
            "rs_margin": (
                {"min_slack": self.rs_margin.min_slack, "at_n": self.rs_margin.at_n}
                if self.rs_margin
                else None
            ),
        }

    def to_json(self, indent: int = 2) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict(), indent=indent)


def sieve_limit_for(max_n: int, minimum: int = 5000) -> int:
    """Oracle size that covers every basic summation window up to max_n."""
    return max(minimum, bounds_basic(max_n).k_hi)


def check_char_and_ratio(table: SieveTable, limit: int) -> List[CheckOutcome]:
    """Walk the recurrence to limit, checking the indicator and the ratio law."""
    char_outcome = CheckOutcome("char_fn", 2, limit)
    law_outcome = CheckOutcome("ratio_law", 2, limit)
    state = LcmState()
    while state.j < limit:
        before = state.L
        state = advance(state)
        j = state.j
        step_ratio = ratio(state, before)

        predicted = ratio_law(j)
        law_outcome.checked += 1
        if predicted != step_ratio:
            law_outcome.record(VerificationMismatch("ratio", j, step_ratio, predicted))

        value = char_from_ratio(step_ratio, j)
        expected = int(table.is_prime(j))
        char_outcome.checked += 1
        if value != expected:
            char_outcome.record(VerificationMismatch("char_fn", j, value, expected))
    return [char_outcome, law_outcome]


def check_pi(table: SieveTable, limit: int) -> CheckOutcome:
    """Streaming pi(k) against the sieve's prefix counts for k in [1, limit]."""
    outcome = CheckOutcome("pi", 1, limit)
    acc = PiAccumulator()
    while True:
        outcome.checked += 1
        expected = table.pi(acc.k)
        if acc.pi_k != expected:
            outcome.record(VerificationMismatch("pi", acc.k, acc.pi_k, expected))
        if acc.k >= limit:
            break
        acc.step()
    return outcome


def check_nth_prime(table: SieveTable, variant: Variant, max_n: int) -> CheckOutcome:
    """Every n in the variant's domain up to max_n, with early exit off and on."""
    low = variant.min_n
    outcome = CheckOutcome(f"nth_prime[{variant.value}]", low, max_n)
    for n in range(low, max_n + 1):
        expected = table.nth(n)
        for early_exit in (False, True):
            got = nth_prime(n, variant, early_exit=early_exit).p_n
            outcome.checked += 1
            if got != expected:
                outcome.record(VerificationMismatch("nth_prime", n, got, expected, variant))
    return outcome


def check_rs_bounds(table: SieveTable, max_n: int) -> Tuple[CheckOutcome, RsMargin]:
    """floor(n ln n) <= p_n - 1 <= floor(c_n + 3) for n in [2, max_n]."""
    outcome = CheckOutcome("rs_bounds", 2, max_n)
    margin: Optional[RsMargin] = None
    for n in range(2, max_n + 1):
        bounds = bounds_rs(n)
        target = table.nth(n) - 1
        outcome.checked += 1
        if target < bounds.k_lo:
            outcome.record(VerificationMismatch("rs_k_lo", n, bounds.k_lo, target))
        slack = bounds.k_hi - target
        if slack < 0:
            outcome.record(VerificationMismatch("rs_k_hi", n, bounds.k_hi, target))
        if margin is None or slack < margin.min_slack:
            margin = RsMargin(min_slack=slack, at_n=n)
    assert margin is not None
    return outcome, margin


def run_verification(
    max_n: int,
    variants: Iterable[Variant] = tuple(Variant),
    sieve_min: int = 5000,
    naive_max_n: int = 40,
) -> VerificationReport:
    """
    Run every agreement check up to max_n.

    Args:
        max_n: Largest n for the n-th prime and bound checks, max_n >= 2
        variants: Variants whose n-th prime results are checked
        sieve_min: Lower bound on the oracle sieve (and indicator/pi range)
        naive_max_n: Cap on n for the NAIVE variant, whose cost is cubic

    Returns:
        VerificationReport; passed is True iff nothing disagreed
    """
    if max_n < 2:
        raise ValueError(f"verify needs max_n >= 2, got {max_n}")
    variants = [Variant(v) for v in variants]
    limit = sieve_limit_for(max_n, sieve_min)
    table = sieve(limit)
    logger.info("verifying up to n=%d with oracle limit %d", max_n, limit)

    capped = Variant.NAIVE in variants and naive_max_n < max_n
    report = VerificationReport(
        max_n=max_n,
        sieve_limit=limit,
        naive_max_n=naive_max_n if capped else None,
    )
    report.outcomes.extend(check_char_and_ratio(table, limit))
    report.outcomes.append(check_pi(table, limit))
    for variant in variants:
        top = min(max_n, naive_max_n) if variant is Variant.NAIVE else max_n
        report.outcomes.append(check_nth_prime(table, variant, top))
    rs_outcome, report.rs_margin = check_rs_bounds(table, max_n)
    report.outcomes.append(rs_outcome)
    return report
