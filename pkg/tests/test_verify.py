import json

import pytest

import lcm_primes.verify as verify
from lcm_primes.formula.nth_prime import Variant, bounds_basic
from lcm_primes.verify import VerificationMismatch, run_verification, sieve_limit_for


def _fault_at_nine(step_ratio, j):
    return 1 if j == 9 else step_ratio // j


def test_sieve_limit_covers_windows():
    assert sieve_limit_for(300) == 5000
    assert sieve_limit_for(1000) == bounds_basic(1000).k_hi
    assert sieve_limit_for(10, minimum=2) == bounds_basic(10).k_hi


def test_full_suite_passes_to_300():
    report = run_verification(300, [Variant.MEMOIZED, Variant.RS])
    assert report.passed
    assert report.mismatches == 0
    assert report.sieve_limit == 5000
    assert report.naive_max_n is None
    checked = {o.name: o.checked for o in report.outcomes}
    assert checked["char_fn"] == 4999
    assert checked["ratio_law"] == 4999
    assert checked["pi"] == 5000
    assert checked["nth_prime[memo]"] == 600
    assert checked["nth_prime[rs]"] == 598
    assert checked["rs_bounds"] == 299
    assert report.rs_margin.min_slack >= 0


def test_naive_is_capped():
    report = run_verification(30, list(Variant), sieve_min=500, naive_max_n=12)
    assert report.passed
    naive = next(o for o in report.outcomes if o.name == "nth_prime[naive]")
    assert (naive.low, naive.high) == (1, 12)
    assert "naive variant capped at n <= 12" in report.summary_lines()


def test_injected_fault_is_reported(monkeypatch):
    monkeypatch.setattr(verify, "char_from_ratio", _fault_at_nine)
    report = run_verification(10, [Variant.RS], sieve_min=100)
    assert not report.passed
    first = report.first_mismatch
    assert (first.check, first.index, first.got, first.expected) == ("char_fn", 9, 1, 0)
    assert report.summary_lines()[-1] == "first counterexample: char_fn(9) = 1, expected 0"


def test_report_json():
    data = json.loads(run_verification(20, [Variant.RS], sieve_min=200).to_json())
    assert data["passed"] is True
    assert data["rs_margin"]["min_slack"] >= 0
    assert {c["name"] for c in data["checks"]} == {
        "char_fn",
        "ratio_law",
        "pi",
        "nth_prime[rs]",
        "rs_bounds",
    }


def test_rejects_tiny_range():
    with pytest.raises(ValueError):
        run_verification(1)


def test_mismatch_message_names_variant():
    mismatch = VerificationMismatch("nth_prime", 10, 30, 29, Variant.MEMOIZED)
    assert str(mismatch) == "nth_prime[memo](10) = 30, expected 29"
    assert mismatch.to_dict()["variant"] == "memo"
