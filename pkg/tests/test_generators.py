"""Unit tests for the generated families and their exponential series."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divcascade import catalog, generators

ratio = st.floats(min_value=0.2, max_value=5.0,
                  allow_nan=False, allow_infinity=False)

FAMILIES = ("Delta1", "Delta2", "K1", "K2", "Hgen", "Mnew")


def test_family_members_match_catalog():
    pair = (4.0, 1.0)
    for fid in FAMILIES:
        for t in range(5):
            via_fn = generators.family(fid, t, pair)
            via_catalog = catalog.get(f"{fid}:{t}").value(*pair)
            assert via_fn == pytest.approx(via_catalog, rel=1e-12), (fid, t)


@given(ratio)
@settings(max_examples=40)
def test_step_ratio_is_constant_in_t(r):
    pair = (r, 1.0)
    for fid in FAMILIES:
        q = generators.step_ratio(fid, pair)
        for t in range(4):
            cur = generators.family(fid, t, pair)
            nxt = generators.family(fid, t + 1, pair)
            assert nxt == pytest.approx(q * cur, rel=1e-11), (fid, t)


def test_exp_series_matches_closed_form():
    for fid in FAMILIES:
        for pair in [(1.5, 1.0), (3.0, 2.0), (0.4, 1.1)]:
            closed = generators.exp_representation(fid, pair)
            partial = generators.exp_series_partial(fid, pair, 30)
            assert partial == pytest.approx(closed, rel=1e-13), (fid, pair)


def test_exp_series_partial_is_monotone_in_n():
    pair = (3.0, 1.0)
    closed = generators.exp_representation("Delta1", pair)
    errs = [abs(generators.exp_series_partial("Delta1", pair, n) - closed)
            for n in (5, 10, 20, 30)]
    assert errs[0] > errs[-1]
    assert errs == sorted(errs, reverse=True)


def test_L_series_offset_weights():
    """The L members sum with 1/(t+1)! weights from t = -1; the naive
    1/t! weighting from t = 0 produces the K-led closed form instead."""
    for pair in [(1.5, 1.0), (4.0, 1.0), (2.0, 5.0)]:
        a, b = pair
        arg = (a + b) / (2.0 * math.sqrt(a * b))
        shifted = generators.exp_L_series_partial(pair, 35, offset=True)
        assert shifted == pytest.approx(
            2.0 * catalog.get("delta").value(a, b) * math.exp(arg),
            rel=1e-12)
        assert generators.exp_L_representation(pair) == pytest.approx(
            shifted, rel=1e-12)
        naive = generators.exp_L_series_partial(pair, 35, offset=False)
        assert naive == pytest.approx(
            catalog.get("K").value(a, b) * math.exp(arg), rel=1e-12)


def test_display_mismatches_are_the_known_three():
    mismatched = set()
    for fid, form in generators.EXP_FORMS.items():
        a, b = 4.0, 1.0
        if (abs(form["printed_lead"](a, b) - form["lead"](a, b)) > 1e-12
                or abs(form["printed_arg"](a, b) - form["arg"](a, b)) > 1e-12):
            mismatched.add(fid)
    assert mismatched == {"Delta1", "K1", "Mnew"}


def test_witness_reconstruction_matches_analytic():
    for fid in generators.WITNESS_FORMS:
        for t in range(4):
            fpp = catalog.family_gen(fid, t).d2x()
            for x in (0.3, 1.5, 4.0):
                truth = float(fpp(x))
                recon = generators.witness_second_derivative(fid, x, t)
                assert recon == pytest.approx(truth, rel=1e-12), (fid, t, x)


def test_printed_witness_variants_deviate():
    # The corrupted printed forms exist for two families and differ from
    # the analytic second derivative away from x = 1.
    got = generators.witness_second_derivative("Delta1", 2.0, 2, printed=True)
    truth = generators.witness_second_derivative("Delta1", 2.0, 2)
    assert abs(got - truth) > 1e-3 * abs(truth)
    got_m = generators.witness_second_derivative("Mnew", 2.0, 2, printed=True)
    truth_m = generators.witness_second_derivative("Mnew", 2.0, 2)
    assert abs(got_m - truth_m) > 1e-3 * abs(truth_m)


def test_witness_positive_on_grid():
    for fid in FAMILIES:
        for t in range(3):
            for x in (0.2, 0.9, 1.1, 7.0):
                assert generators.convexity_witness(fid, x, t) > 0.0
