"""Configuration management for lcm-primes."""

import os
from typing import Tuple

from dotenv import load_dotenv
from pydantic import BaseModel, Field

from lcm_primes.formula.nth_prime import Variant

load_dotenv()


class BenchConfig(BaseModel):
    """Timing harness defaults."""
    default_ns: Tuple[int, ...] = Field(
        default=(10, 20, 30, 40, 50, 100, 200),
        description="Indices n timed when --ns is not given",
    )
    default_variants: Tuple[Variant, ...] = Field(
        default=(Variant.NAIVE, Variant.MEMOIZED, Variant.RS),
        description="Variants timed when --variants is not given",
    )
    repetitions: int = Field(default=3, ge=1, description="Runs per (variant, n); median is kept")
    naive_max_n: int = Field(
        default=50, ge=1, description="Largest n timed for the NAIVE variant"
    )


class VerifyConfig(BaseModel):
    """Oracle-agreement suite defaults."""
    default_max_n: int = Field(default=300, ge=2, description="Largest n checked by verify")
    min_sieve_limit: int = Field(
        default=5000, ge=2, description="Lower bound on the oracle sieve size"
    )
    naive_max_n: int = Field(
        default=40, ge=1, description="Largest n checked for the NAIVE variant"
    )


class Config(BaseModel):
    """Main configuration container."""
    bench: BenchConfig = Field(default_factory=BenchConfig)
    verify: VerifyConfig = Field(default_factory=VerifyConfig)
    log_level: str = Field(default="WARNING", description="Root log level for the CLI")

    @classmethod
    def from_env(cls) -> "Config":
        """Load configuration from environment variables."""
        return cls(
            bench=BenchConfig(
                repetitions=int(os.getenv("LCM_PRIMES_BENCH_REPS", "3")),
                naive_max_n=int(os.getenv("LCM_PRIMES_NAIVE_MAX_N", "50")),
            ),
            verify=VerifyConfig(
                min_sieve_limit=int(os.getenv("LCM_PRIMES_SIEVE_MIN", "5000")),
                naive_max_n=int(os.getenv("LCM_PRIMES_VERIFY_NAIVE_MAX_N", "40")),
            ),
            log_level=os.getenv("LCM_PRIMES_LOG_LEVEL", "WARNING").upper(),
        )


# Global config instance
config = Config.from_env()
