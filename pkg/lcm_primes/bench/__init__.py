"""Timing harness, complexity fitting and table emission."""

from lcm_primes.bench.harness import BenchRecord, measure, run_bench
from lcm_primes.bench.fitting import ComplexityFit, Predictor, fit_complexity
from lcm_primes.bench.tables import CSV_FIELDS, TableFormat, emit_table, parse_csv

__all__ = [
    "BenchRecord",
    "measure",
    "run_bench",
    "ComplexityFit",
    "Predictor",
    "fit_complexity",
    "CSV_FIELDS",
    "TableFormat",
    "emit_table",
    "parse_csv",
]
