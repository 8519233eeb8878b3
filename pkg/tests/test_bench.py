import dataclasses
import json
import math

import pytest

import lcm_primes.bench.harness as harness
from lcm_primes.bench import (
    CSV_FIELDS,
    BenchRecord,
    Predictor,
    TableFormat,
    emit_table,
    fit_complexity,
    parse_csv,
    run_bench,
)
from lcm_primes.formula.lcm_core import iter_states
from lcm_primes.formula.nth_prime import Variant
from lcm_primes.verify import VerificationMismatch


def _record(variant, n, seconds, p_n=0):
    return BenchRecord(
        variant=variant,
        n=n,
        p_n=p_n,
        k_lo=1,
        k_hi=n,
        terms_evaluated=n,
        elapsed_seconds=seconds,
        repetitions=1,
    )


# ============================================================================
# run_bench
# ============================================================================

def test_single_memoized_record():
    records = run_bench([Variant.MEMOIZED], [10], repetitions=3)
    assert len(records) == 1
    record = records[0]
    assert record.p_n == 29
    assert record.repetitions == 3
    assert (record.k_lo, record.k_hi) == (1, 48)
    assert record.elapsed_seconds >= 0


def test_single_rs_record():
    (record,) = run_bench([Variant.RS], [100], repetitions=3)
    assert record.p_n == 541
    assert (record.k_lo, record.k_hi) == (460, 566)


def test_naive_slower_than_memoized():
    records = run_bench([Variant.NAIVE, Variant.MEMOIZED], [20], repetitions=1)
    by_variant = {r.variant: r for r in records}
    assert by_variant[Variant.NAIVE].elapsed_seconds > by_variant[Variant.MEMOIZED].elapsed_seconds


@pytest.mark.slow
def test_naive_slower_than_memoized_at_50():
    records = run_bench([Variant.NAIVE, Variant.MEMOIZED], [50], repetitions=1)
    by_variant = {r.variant: r for r in records}
    assert by_variant[Variant.NAIVE].elapsed_seconds > by_variant[Variant.MEMOIZED].elapsed_seconds


@pytest.mark.slow
def test_variant_ordering_at_100():
    records = run_bench(list(Variant), [100], repetitions=5)
    t = {r.variant: r.elapsed_seconds for r in records}
    assert t[Variant.NAIVE] >= 2 * t[Variant.MEMOIZED]
    assert t[Variant.MEMOIZED] > t[Variant.RS]


def _lcm_bits_walked(k_hi):
    return sum(state.L.bit_length() for state in iter_states(k_hi))


@pytest.mark.parametrize("n", [100, 200])
def test_rs_walk_does_under_half_the_lcm_work(n):
    records = run_bench([Variant.MEMOIZED, Variant.RS], [n], repetitions=1)
    walked = {r.variant: _lcm_bits_walked(r.k_hi) for r in records}
    assert walked[Variant.MEMOIZED] >= 2 * walked[Variant.RS]


def test_naive_cap_skips_points():
    records = run_bench([Variant.NAIVE, Variant.MEMOIZED], [10, 20], repetitions=1, naive_max_n=10)
    assert [(r.variant, r.n) for r in records] == [
        (Variant.NAIVE, 10),
        (Variant.MEMOIZED, 10),
        (Variant.MEMOIZED, 20),
    ]


def test_out_of_domain_grid():
    with pytest.raises(ValueError):
        run_bench([Variant.RS], [1, 10])
    with pytest.raises(ValueError):
        run_bench([Variant.MEMOIZED], [10], repetitions=0)


def test_wrong_answer_is_never_recorded(monkeypatch):
    real = harness.nth_prime

    def off_by_one(n, variant, early_exit=False):
        result = real(n, variant, early_exit=early_exit)
        return dataclasses.replace(result, p_n=result.p_n + 1)

    monkeypatch.setattr(harness, "nth_prime", off_by_one)
    with pytest.raises(VerificationMismatch) as info:
        run_bench([Variant.RS], [10], repetitions=1)
    assert (info.value.variant, info.value.index) == (Variant.RS, 10)
    assert (info.value.got, info.value.expected) == (30, 29)


# ============================================================================
# fit_complexity
# ============================================================================

def test_fit_recovers_cubic():
    records = [_record(Variant.MEMOIZED, n, 2 * n**3) for n in (10, 20, 40, 80)]
    fit = fit_complexity(records, Predictor.N)
    assert fit.exponent_b == pytest.approx(3.0, abs=0.01)
    assert fit.coefficient_a == pytest.approx(2.0, rel=1e-6)
    assert fit.r_squared > 0.999
    assert fit.points_used == 4


def test_fit_recovers_n_log_n_power():
    records = [
        _record(Variant.RS, n, 5 * (n * math.log(n)) ** 1.5) for n in (10, 20, 40, 80, 160)
    ]
    fit = fit_complexity(records, Predictor.N_LOG_N)
    assert fit.exponent_b == pytest.approx(1.5, abs=0.015)
    assert fit.r_squared > 0.999


def test_fit_needs_four_points():
    records = [_record(Variant.MEMOIZED, n, float(n)) for n in (10, 20, 30)]
    with pytest.raises(ValueError, match="at least 4"):
        fit_complexity(records)


def test_fit_drops_n_one_for_n_log_n():
    records = [_record(Variant.MEMOIZED, n, float(n)) for n in (1, 10, 20, 30)]
    assert fit_complexity(records, Predictor.N).points_used == 4
    with pytest.raises(ValueError):
        fit_complexity(records, Predictor.N_LOG_N)


def test_fit_rejects_zero_timings():
    records = [_record(Variant.MEMOIZED, n, float(n)) for n in (10, 20, 30)]
    records.append(_record(Variant.MEMOIZED, 40, 0.0))
    with pytest.raises(ValueError, match="clock resolution"):
        fit_complexity(records)


def test_fit_rejects_mixed_variants_and_repeats():
    mixed = [_record(Variant.MEMOIZED, n, float(n)) for n in (10, 20, 30)]
    mixed.append(_record(Variant.RS, 40, 40.0))
    with pytest.raises(ValueError):
        fit_complexity(mixed)
    repeated = [_record(Variant.MEMOIZED, n, float(n)) for n in (10, 20, 30, 30)]
    with pytest.raises(ValueError):
        fit_complexity(repeated)


@pytest.mark.slow
def test_memoized_fit_on_real_timings():
    records = run_bench([Variant.MEMOIZED], [25, 50, 100, 150, 200], repetitions=3)
    fit = fit_complexity(records, Predictor.N)
    assert fit.r_squared >= 0.9
    assert fit.exponent_b > 0


# ============================================================================
# emit_table / parse_csv
# ============================================================================

def test_markdown_row_label():
    text = emit_table([_record(Variant.MEMOIZED, 10, 0.0213, p_n=29)], TableFormat.MARKDOWN)
    lines = text.splitlines()
    assert lines[0] == "| Prime | memo |"
    assert lines[2].startswith("| P10=29 |")
    assert lines[2] == "| P10=29 | 0.02 |"


def test_markdown_one_row_per_n():
    records = [
        _record(Variant.RS, 10, 0.004, p_n=29),
        _record(Variant.MEMOIZED, 10, 0.02, p_n=29),
        _record(Variant.MEMOIZED, 20, 1.5, p_n=71),
    ]
    lines = emit_table(records).splitlines()
    assert lines[0] == "| Prime | memo | rs |"
    assert lines[2] == "| P10=29 | 0.02 | 0.00 |"
    assert lines[3] == "| P20=71 | 1.50 |  |"


def test_empty_table_is_an_error():
    with pytest.raises(ValueError):
        emit_table([])


def test_csv_header_is_exact():
    text = emit_table([_record(Variant.RS, 10, 0.5, p_n=29)], TableFormat.CSV)
    assert text.splitlines()[0] == "variant,n,p_n,k_lo,k_hi,terms_evaluated,elapsed_seconds,repetitions"
    assert text.splitlines()[0].split(",") == CSV_FIELDS


def test_csv_round_trip():
    records = [
        _record(Variant.NAIVE, 10, 0.06123456789012345, p_n=29),
        _record(Variant.MEMOIZED, 20, 1e-05, p_n=71),
        _record(Variant.RS, 200, 4.59, p_n=1223),
    ]
    assert parse_csv(emit_table(records, TableFormat.CSV)) == records


def test_csv_round_trip_of_real_run():
    records = run_bench([Variant.MEMOIZED, Variant.RS], [10, 20], repetitions=1)
    assert parse_csv(emit_table(records, "csv")) == records


def test_parse_csv_rejects_foreign_header():
    with pytest.raises(ValueError):
        parse_csv("a,b\n1,2\n")


def test_json_table():
    data = json.loads(emit_table([_record(Variant.RS, 10, 0.5, p_n=29)], TableFormat.JSON))
    assert data == [
        {
            "variant": "rs",
            "n": 10,
            "p_n": 29,
            "k_lo": 1,
            "k_hi": 10,
            "terms_evaluated": 10,
            "elapsed_seconds": 0.5,
            "repetitions": 1,
        }
    ]


def test_record_validation():
    with pytest.raises(ValueError):
        _record(Variant.RS, 10, -1.0)
    assert _record("memo", 10, 1.0).variant is Variant.MEMOIZED
