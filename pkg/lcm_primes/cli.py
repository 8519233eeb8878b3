"""
lcm-primes command line - compute, verify and benchmark the LCM prime formulas.

Subcommands:
- prime:  n-th prime with a chosen variant
- pi:     prime counting via the streaming indicator
- char:   indicator value and lcm ratio at one index
- verify: oracle-agreement suite
- bench:  comparative timing table, optional power-law fits

Exit codes: 0 success, 1 usage or domain error, 2 verification mismatch.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from lcm_primes.bench.fitting import Predictor, fit_complexity
from lcm_primes.bench.harness import run_bench
from lcm_primes.bench.tables import TableFormat, emit_table
from lcm_primes.config import config
from lcm_primes.formula.lcm_core import char_fn
from lcm_primes.formula.nth_prime import Variant, nth_prime
from lcm_primes.formula.prime_count import pi_stream
from lcm_primes.oracle.sieve import sieve
from lcm_primes.verify import VerificationMismatch, run_verification, sieve_limit_for

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    """Bad command line; reported on stderr with exit status 1."""


def _split(value: Any) -> Any:
    if isinstance(value, str):
        return [part.strip() for part in value.split(",") if part.strip()]
    return value


# ============================================================================
# Input Models
# ============================================================================

class CliConfig(BaseModel):
    """Common base for validated subcommand inputs."""
    model_config = ConfigDict(str_strip_whitespace=True, extra="forbid")


class PrimeInput(CliConfig):
    """Input for the prime subcommand."""
    n: int = Field(..., description="Index of the prime")
    variant: Variant = Field(default=Variant.MEMOIZED, description="naive, memo or rs")
    early_exit: bool = Field(default=False, description="Stop at the first zero term")
    timing: bool = Field(default=False, description="Print `n p_n seconds`")
    check: bool = Field(default=False, description="Append the oracle's n-th prime")

    @model_validator(mode="after")
    def check_domain(self) -> "PrimeInput":
        if self.n < self.variant.min_n:
            raise ValueError(
                f"variant {self.variant.value} needs n >= {self.variant.min_n}, got {self.n}"
            )
        return self


class PiInput(CliConfig):
    """Input for the pi subcommand."""
    k: int = Field(..., ge=1, description="Upper end of the count")


class CharInput(CliConfig):
    """Input for the char subcommand."""
    j: int = Field(..., ge=2, description="Index to classify")


class VerifyInput(CliConfig):
    """Input for the verify subcommand."""
    max_n: int = Field(default=config.verify.default_max_n, ge=2)
    variants: List[Variant] = Field(default_factory=lambda: list(Variant))
    naive_max_n: int = Field(default=config.verify.naive_max_n, ge=1)
    sieve_min: int = Field(default=config.verify.min_sieve_limit, ge=2)
    json_output: bool = Field(default=False, description="Print the report as JSON")

    @field_validator("variants", mode="before")
    @classmethod
    def split_variants(cls, value: Any) -> Any:
        return _split(value)


class BenchInput(CliConfig):
    """Input for the bench subcommand."""
    ns: List[int] = Field(default_factory=lambda: list(config.bench.default_ns), min_length=1)
    variants: List[Variant] = Field(
        default_factory=lambda: list(config.bench.default_variants), min_length=1
    )
    reps: int = Field(default=config.bench.repetitions, ge=1)
    format: TableFormat = Field(default=TableFormat.MARKDOWN)
    fit: bool = Field(default=False, description="Append power-law fits per variant")
    out: Optional[Path] = Field(default=None, description="Write here instead of stdout")
    early_exit: bool = Field(default=False)
    naive_max_n: int = Field(default=config.bench.naive_max_n, ge=1)

    @field_validator("ns", "variants", mode="before")
    @classmethod
    def split_lists(cls, value: Any) -> Any:
        return _split(value)

    @field_validator("ns")
    @classmethod
    def check_positive(cls, ns: List[int]) -> List[int]:
        bad = [n for n in ns if n < 1]
        if bad:
            raise ValueError(f"n must be >= 1, got {bad[0]}")
        return sorted(set(ns))

    @model_validator(mode="after")
    def check_grid(self) -> "BenchInput":
        for variant in self.variants:
            grid = self.grid_for(variant)
            low = [n for n in grid if n < variant.min_n]
            if low:
                raise ValueError(f"variant {variant.value} needs n >= {variant.min_n}, got {low[0]}")
            if self.fit:
                usable = [n for n in grid if n >= 2]
                if len(usable) < 4:
                    raise ValueError(
                        f"--fit needs at least 4 distinct n >= 2 for {variant.value}, "
                        f"got {len(usable)}"
                    )
        return self

    def grid_for(self, variant: Variant) -> List[int]:
        """The ns actually timed for a variant after the NAIVE cap."""
        if variant is Variant.NAIVE:
            return [n for n in self.ns if n <= self.naive_max_n]
        return list(self.ns)


# ============================================================================
# Subcommands
# ============================================================================

def cmd_prime(params: PrimeInput) -> int:
    """Print p_n; with --timing `n p_n seconds`, with --check the oracle value too."""
    result = nth_prime(params.n, params.variant, early_exit=params.early_exit)
    if not (params.timing or params.check):
        print(result.p_n)
        return EXIT_OK

    fields = [str(params.n), str(result.p_n)]
    if params.timing:
        fields.append(f"{result.elapsed:.6f}")
    status = EXIT_OK
    if params.check:
        expected = sieve(sieve_limit_for(params.n, minimum=2)).nth(params.n)
        fields.append(str(expected))
        if expected != result.p_n:
            status = EXIT_MISMATCH
    print(" ".join(fields))
    return status


def cmd_pi(params: PiInput) -> int:
    """Print pi(k) from the streaming indicator."""
    print(pi_stream(params.k))
    return EXIT_OK


def cmd_char(params: CharInput) -> int:
    """Print the indicator value and the lcm ratio it came from."""
    value = char_fn(params.j)
    print(f"{value.value} (ratio={value.ratio})")
    return EXIT_OK


def cmd_verify(params: VerifyInput) -> int:
    """Run the agreement suite; exit 0 iff every check passes."""
    report = run_verification(
        params.max_n,
        params.variants,
        sieve_min=params.sieve_min,
        naive_max_n=params.naive_max_n,
    )
    if params.json_output:
        print(report.to_json())
    else:
        print("\n".join(report.summary_lines()))
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_bench(params: BenchInput) -> int:
    """Time the grid, render the table and optionally the fits."""
    records = run_bench(
        params.variants,
        params.ns,
        repetitions=params.reps,
        early_exit=params.early_exit,
        naive_max_n=params.naive_max_n,
    )
    text = emit_table(records, params.format)
    if params.fit:
        lines = []
        for variant in params.variants:
            mine = [r for r in records if r.variant is variant]
            for predictor in Predictor:
                lines.append(fit_complexity(mine, predictor).summary())
        fits = "\n".join(lines) + "\n"
        # csv and json stay machine-readable
        if params.format is TableFormat.MARKDOWN:
            text += "\n" + fits
        else:
            sys.stderr.write(fits)

    if params.out is not None:
        params.out.write_text(text)
        logger.info("wrote %s", params.out)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ============================================================================
# Argument parsing
# ============================================================================

class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> Any:
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for all subcommands."""
    variant_names = [v.value for v in Variant]
    parser = _Parser(
        prog="lcm-primes", description="Compute, verify and benchmark the LCM prime formulas."
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("prime", help="n-th prime")
    p.add_argument("n", type=int)
    p.add_argument("--variant", choices=variant_names, default=Variant.MEMOIZED.value)
    p.add_argument("--early-exit", action="store_true", dest="early_exit")
    p.add_argument("--timing", action="store_true", help="print `n p_n seconds`")
    p.add_argument("--check", action="store_true", help="append the oracle's n-th prime")

    p = sub.add_parser("pi", help="prime counting function")
    p.add_argument("k", type=int)

    p = sub.add_parser("char", help="prime indicator at j")
    p.add_argument("j", type=int)

    p = sub.add_parser("verify", help="oracle-agreement suite")
    p.add_argument("--max-n", type=int, default=config.verify.default_max_n, dest="max_n")
    p.add_argument("--variants", default=",".join(variant_names))
    p.add_argument("--naive-max-n", type=int, default=config.verify.naive_max_n, dest="naive_max_n")
    p.add_argument("--sieve-min", type=int, default=config.verify.min_sieve_limit, dest="sieve_min")
    p.add_argument("--json", action="store_true", dest="json_output")

    p = sub.add_parser("bench", help="comparative timing table")
    p.add_argument("--ns", default=",".join(str(n) for n in config.bench.default_ns))
    p.add_argument(
        "--variants", default=",".join(v.value for v in config.bench.default_variants)
    )
    p.add_argument("--reps", type=int, default=config.bench.repetitions)
    p.add_argument("--format", choices=[f.value for f in TableFormat], default="md")
    p.add_argument("--fit", action="store_true")
    p.add_argument("--out", default=None)
    p.add_argument("--early-exit", action="store_true", dest="early_exit")
    p.add_argument("--naive-max-n", type=int, default=config.bench.naive_max_n, dest="naive_max_n")
    return parser


COMMANDS = {
    "prime": (PrimeInput, cmd_prime),
    "pi": (PiInput, cmd_pi),
    "char": (CharInput, cmd_char),
    "verify": (VerifyInput, cmd_verify),
    "bench": (BenchInput, cmd_bench),
}


def _configure_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level: Any = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = config.log_level
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point for the lcm-primes console script."""
    try:
        namespace = build_parser().parse_args(argv)
        _configure_logging(namespace.verbose)
        model, handler = COMMANDS[namespace.command]
        values = {k: v for k, v in vars(namespace).items() if k not in ("command", "verbose")}
        params = model.model_validate(values)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as e:
        first = e.errors()[0]
        print(f"usage error: {first['msg']}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return handler(params)
    except VerificationMismatch as e:
        print(f"verification mismatch: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
