"""
Complexity Fitting - Empirical power laws t = a * x^b from timed records.

Fits a straight line to (log x, log t) by least squares, where x is either n
or n ln n. The slope is the exponent b; R^2 is measured on the log-log data.
"""

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, List

import numpy as np

from lcm_primes.bench.harness import BenchRecord
from lcm_primes.formula.nth_prime import Variant

MIN_POINTS = 4


class Predictor(str, Enum):
    """Size measure the runtime is regressed on."""
    N = "n"
    N_LOG_N = "n_log_n"

    def evaluate(self, n: int) -> float:
        if self is Predictor.N:
            return float(n)
        return n * math.log(n)


@dataclass
class ComplexityFit:
    """Fitted power law for one variant."""
    variant: Variant
    predictor: Predictor
    exponent_b: float
    coefficient_a: float
    r_squared: float
    points_used: int

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "variant": self.variant.value,
            "predictor": self.predictor.value,
            "exponent_b": self.exponent_b,
            "coefficient_a": self.coefficient_a,
            "r_squared": self.r_squared,
            "points_used": self.points_used,
        }

    def to_json(self, indent: int = 2) -> str:
        """Serialize to JSON string."""
        return json.dumps(self.to_dict(), indent=indent)

    def summary(self) -> str:
        """Single-line report used by `bench --fit`."""
        return (
            f"fit {self.variant.value} predictor={self.predictor.value} "
            f"exponent={self.exponent_b:.3f} coefficient={self.coefficient_a:.3e} "
            f"r_squared={self.r_squared:.4f} points={self.points_used}"
        )


def fit_complexity(
    records: Iterable[BenchRecord],
    predictor: Predictor = Predictor.N,
) -> ComplexityFit:
    """
    Least-squares power-law fit for one variant's records.

    Args:
        records: Records of a single variant, one per n
        predictor: Regress on n or on n ln n

    Returns:
        ComplexityFit with exponent, coefficient and R^2

    Raises:
        ValueError: mixed variants, repeated n, non-positive timings, or
            fewer than 4 usable points
    """
    predictor = Predictor(predictor)
    records = list(records)
    if not records:
        raise ValueError("fit_complexity needs records")
    variants = {r.variant for r in records}
    if len(variants) > 1:
        raise ValueError(f"fit one variant at a time, got {sorted(v.value for v in variants)}")
    seen: set[int] = set()
    for record in records:
        if record.n in seen:
            raise ValueError(f"n={record.n} appears more than once")
        seen.add(record.n)
        if record.elapsed_seconds <= 0:
            raise ValueError(
                f"n={record.n} timed at {record.elapsed_seconds}s, below clock resolution; "
                "raise n or repetitions"
            )

    usable: List[BenchRecord] = [r for r in records if predictor.evaluate(r.n) > 0]
    if len(usable) < MIN_POINTS:
        raise ValueError(
            f"need at least {MIN_POINTS} points with {predictor.value} > 0, got {len(usable)}"
        )

    log_x = np.log([predictor.evaluate(r.n) for r in usable])
    log_t = np.log([r.elapsed_seconds for r in usable])
    slope, intercept = np.polyfit(log_x, log_t, 1)

    residuals = log_t - (slope * log_x + intercept)
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((log_t - log_t.mean()) ** 2))
    r_squared = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0

    return ComplexityFit(
        variant=records[0].variant,
        predictor=predictor,
        exponent_b=float(slope),
        coefficient_a=float(np.exp(intercept)),
        r_squared=min(1.0, max(0.0, r_squared)),
        points_used=len(usable),
    )
