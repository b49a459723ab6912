"""Unit tests for sampling, certification, and counterexample search."""

import numpy as np
import pytest

from divcascade import analysis, catalog


def test_sample_pairs_policy():
    a, b = analysis.sample_pairs(10_000, seed=0)
    assert a.shape == b.shape == (10_000,)
    assert np.all(a > 0) and np.all(b > 0)
    assert a.min() >= 1e-6 and a.max() <= 1e6
    # A tenth of the draws form a near-diagonal band.
    near = np.abs(a / b - 1.0) <= 1e-3
    assert near.sum() >= 1_000


def test_sample_pairs_deterministic():
    a1, b1 = analysis.sample_pairs(1_000, seed=5)
    a2, b2 = analysis.sample_pairs(1_000, seed=5)
    assert np.array_equal(a1, a2) and np.array_equal(b1, b2)
    a3, _ = analysis.sample_pairs(1_000, seed=6)
    assert not np.array_equal(a1, a3)


def test_default_grid_covers_band():
    g = analysis.default_grid()
    assert g.min() == pytest.approx(1e-4)
    assert g.max() == pytest.approx(1e4)
    assert np.any((g > 0.999) & (g < 1.001))
    assert np.all(np.diff(g) > 0)


def test_fd_second_derivative_on_cubic():
    val = analysis.fd_second_derivative(lambda x: x**3, 2.0)
    assert val == pytest.approx(12.0, rel=1e-6)


def test_certify_convexity_passes_for_divergence():
    res = analysis.certify_convexity("delta")
    assert res.verdict == "pass"
    assert res.kind == "convexity"


def test_certify_convexity_rejects_means():
    with pytest.raises(ValueError):
        analysis.certify_convexity("A")


def test_estimate_sup_ratio_attained_at_one():
    num = catalog.get("D1").gen
    den = catalog.get("D15").gen
    sup, arg, limit = analysis.estimate_sup_ratio(num, den)
    assert limit == pytest.approx(1.0 / 14.0, abs=1e-9)
    assert sup <= 1.0 / 14.0 + 1e-9
    assert arg == pytest.approx(1.0, abs=1e-2)


def test_scan_finds_reversed_chain_violation():
    a, b = analysis.sample_pairs(2_000, seed=3)
    terms = [(1.0, "K"), (1.0, "delta")]  # K dominates delta: reversed
    worst, records = analysis.scan_chain_terms(terms, a, b, 1e-12)
    assert worst > 1e-6
    assert records
    rec = records[0]
    assert {"index", "a", "b", "step", "violation"} <= set(rec)


def test_scan_worker_independence():
    a, b = analysis.sample_pairs(300_000, seed=9)
    terms = [(1.0, "delta"), (1.0, "K"), (0.5, "psi")]
    w1 = analysis.scan_chain_terms(terms, a, b, 1e-12, workers=1)
    w4 = analysis.scan_chain_terms(terms, a, b, 1e-12, workers=4)
    assert w1[0] == w4[0]
    assert w1[1] == w4[1]


def test_counterexample_search_callable_claim():
    res = analysis.counterexample_search(
        lambda a, b: np.where(a > b, 1.0, -1.0), samples=100, seed=0,
        check_id="always-bad")
    assert res.verdict == "fail"
    assert res.id == "always-bad"
    assert len(res.counterexamples) <= 10
