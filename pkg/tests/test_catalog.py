"""Unit tests for the measure catalog and generated families."""

from fractions import Fraction

import numpy as np
import pytest

from divcascade import catalog


def test_static_catalog_size_and_kinds():
    ids = catalog.all_ids()
    assert len(ids) == 108
    assert len(set(ids)) == 108
    kinds = {catalog.get(i).kind for i in ids}
    assert kinds == {"mean", "divergence"}
    assert sum(1 for i in ids if catalog.get(i).kind == "mean") == 7


def test_expected_groups_present():
    ids = set(catalog.all_ids())
    assert {"H", "G", "N", "A", "R", "S", "C"} <= ids
    assert {"delta", "h", "K", "psi", "F", "L"} <= ids
    assert all(f"W{i}" in ids for i in range(1, 10))
    assert all(f"V{t}" in ids for t in range(1, 15))
    assert all(f"U{t}" in ids for t in range(1, 16))
    assert all(f"D{k}" in ids for k in range(1, 37))
    assert sum(1 for i in ids if i.startswith("D_")) == 21


def test_normalization_at_one():
    for mid in catalog.all_ids():
        m = catalog.get(mid)
        expected = 1.0 if m.kind == "mean" else 0.0
        if m.gen is not None:
            assert m.gen.limit_at_1() == expected, mid
        else:
            # Root-mean-square measures are irrational in sqrt(x) and carry
            # a plain function instead of an exact form.
            assert float(m(1.0)) == pytest.approx(expected, abs=1e-15), mid


def test_unknown_ids_raise_or_return_none():
    with pytest.raises(KeyError):
        catalog.get("nope")
    assert catalog.try_get("nope") is None


def test_family_members_resolve_and_anchor():
    assert catalog.get("Delta1:0").value(4.0, 1.0) == pytest.approx(
        catalog.get("delta").value(4.0, 1.0), rel=1e-15)
    assert catalog.get("Lt:0").value(4.0, 1.0) == pytest.approx(
        catalog.get("K").value(4.0, 1.0), rel=1e-15)


def test_family_ranges_enforced():
    assert catalog.family_range("Mnew") == (0, catalog.FAMILY_T_MAX)
    assert catalog.family_range("Lt") == catalog.LT_T_RANGE
    with pytest.raises(KeyError):
        catalog.get(f"Delta1:{catalog.FAMILY_T_MAX + 1}")
    with pytest.raises(KeyError):
        catalog.get("Lt:9")
    # In-range members exist at both ends.
    assert catalog.try_get(f"Mnew:{catalog.FAMILY_T_MAX}") is not None
    assert catalog.try_get("Lt:-8") is not None


def test_w_formula_aliases_are_exact():
    scale = {"W1": (Fraction(2), "delta"), "W5": (Fraction(8), "h"),
             "W6": (Fraction(1), "K"), "W7": (Fraction(1, 2), "psi"),
             "W8": (Fraction(1, 2), "F"), "W9": (Fraction(1, 8), "L")}
    for wid, (c, base) in scale.items():
        assert wid in catalog.FORMULA
        diff = catalog.get(wid).gen - c * catalog.get(base).gen
        assert diff.is_zero(), wid


def test_value_broadcasts():
    a = np.array([4.0, 9.0])
    v = catalog.get("K").value(a, 1.0)
    assert v.shape == (2,)
    assert v[0] == pytest.approx(4.5, rel=1e-15)


def test_pinned_point_values():
    assert catalog.get("delta").value(4.0, 1.0) == pytest.approx(1.8)
    assert catalog.get("psi").value(4.0, 1.0) == pytest.approx(11.25)
    assert catalog.get("V1").value(4.0, 1.0) == pytest.approx(0.1)
    assert catalog.get("h").value(4.0, 1.0) == pytest.approx(0.5)
    assert catalog.get("L").value(4.0, 1.0) == pytest.approx(70.3125)


def test_measure_metadata():
    m = catalog.get("V1")
    assert m.ref == "Eq (13)"
    w8 = catalog.get("W8")
    assert "position 8" in w8.ref
