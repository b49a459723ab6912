"""Unit tests for chains, pyramid differences, and residual decompositions."""

from fractions import Fraction

import numpy as np
import pytest

from divcascade import analysis, cascade, catalog


def test_chain_registry():
    assert len(cascade.CHAINS) == 26
    assert set(cascade.chains()) == set(cascade.CHAINS)
    with pytest.raises(KeyError):
        cascade.get_chain("bogus")


def test_every_chain_passes_small_sample():
    for cid in cascade.chains():
        res = cascade.audit_chain(cascade.get_chain(cid), samples=20_000,
                                  seed=11, tol=1e-12)
        assert res.verdict == "pass", (cid, res.max_violation)


def test_chain_from_dict_roundtrip():
    doc = {"id": "custom", "ref": "", "terms": [["1", "delta"], ["1", "K"]]}
    chain = cascade.chain_from_dict(doc)
    res = cascade.audit_chain(chain, samples=5_000, seed=1)
    assert res.verdict == "pass"


def test_w_values_match_closed_forms():
    pair = (4.0, 1.0)
    assert cascade.W(1, pair) == pytest.approx(2 * 1.8, rel=1e-15)
    assert cascade.W(6, pair) == pytest.approx(4.5, rel=1e-15)
    assert cascade.W(7, pair) == pytest.approx(11.25 / 2, rel=1e-15)
    assert cascade.W(8, pair) == pytest.approx(14.0625 / 2, rel=1e-15)
    assert cascade.W(9, pair) == pytest.approx(70.3125 / 8, rel=1e-15)


def test_w8_second_derivative_corrected_vs_printed():
    x = 2.0
    corrected = (15 * x**4 + 2 * x**2 + 15) / (16 * x**3.5)
    assert cascade.W_second_derivative(8, x) == pytest.approx(
        corrected, rel=1e-13)
    printed = cascade.W_FPP_PRINTED[8](x)
    assert abs(printed - corrected) > 1e-3
    # The other eight printed second derivatives agree with the analytic ones.
    for i in (1, 2, 3, 4, 5, 6, 7, 9):
        assert cascade.W_FPP_PRINTED[i](x) == pytest.approx(
            cascade.W_second_derivative(i, x), rel=1e-10)


def test_pyramid_indexing():
    assert cascade.pyramid_pair(1) == (2, 1)
    assert cascade.pyramid_pair(36) == (9, 1)
    with pytest.raises(ValueError):
        cascade.pyramid_pair(0)
    with pytest.raises(ValueError):
        cascade.pyramid_pair(37)


def test_pyramid_common_value():
    pair = (4.0, 1.0)
    common, gaps = cascade.pyramid_equalities(pair)
    # (sqrt a - sqrt b)^4 / (a + b) at (4, 1).
    assert common == pytest.approx(0.2, rel=1e-14)
    assert len(gaps) == 10
    assert max(gaps.values()) <= 1e-12


def test_theorem_part_counts_and_betas():
    parts = cascade.theorem_parts()
    assert len(parts) == 53
    assert len(cascade.theorem_parts("2.2")) == 14
    p1 = cascade.THEOREM_PARTS["2.1:1"]
    assert cascade.beta_constant(p1) == Fraction(1, 14)
    assert cascade.beta_exact(p1) == Fraction(1, 14)


def test_residual_decomposition_point_check():
    part = cascade.THEOREM_PARTS["2.1:1"]
    out = cascade.residual_decompositions(part, (4.0, 1.0))
    assert out["passed"]
    assert out["claim"].startswith("1/14*D15 - D1")


def test_residual_identities_exact():
    for part in cascade.theorem_parts():
        assert cascade.residual_identity_exact(part), part.id


def test_printed_constant_repair_is_recorded():
    repaired = [p for p in cascade.theorem_parts()
                if p.printed_c is not None and p.printed_c != p.c]
    assert [p.id for p in repaired] == ["2.1:17"]
    assert repaired[0].printed_c == Fraction(1, 4)
    assert repaired[0].c == Fraction(1, 16)


def test_combination_lines_statuses():
    assert set(cascade.COMBINATION_LINES) >= {"V1", "U1", "U15"}
    for mid, lines in cascade.COMBINATION_LINES.items():
        statuses = {ln.status for ln in lines}
        assert statuses <= {"ok", "corrected", "printed"}, mid
        assert ("ok" in statuses) or ("corrected" in statuses), mid
    for ln in cascade.combination_lines("V1"):
        if ln.status in ("ok", "corrected"):
            assert cascade.combo_line_exact(ln), ln
        else:
            assert not cascade.combo_line_exact(ln), ln


def test_fit_combination_recovers_known_expansion():
    fit = cascade.fit_combination("V1", ["psi", "K", "delta", "D_CN"])
    assert fit == {"psi": Fraction(0), "K": Fraction(1),
                   "delta": Fraction(26), "D_CN": Fraction(-48)}
    assert cascade.fit_combination("V1", ["psi"]) is None


def test_equivalent_expression_matches_direct_value():
    pair = (4.0, 1.0)
    direct = catalog.get("V1").value(*pair)
    via_combo = cascade.equivalent_expression("V1", pair)
    assert via_combo == pytest.approx(direct, abs=1e-11)


def test_v_and_u_helpers():
    assert cascade.V(1, (4.0, 1.0)) == pytest.approx(0.1, rel=1e-12)
    assert cascade.U(1, (4.0, 1.0)) == pytest.approx(0.05, rel=1e-12)
    # Array evaluation goes through the catalog measure directly.
    a = np.array([4.0, 9.0])
    vals = catalog.get("V1").value(a, 1.0)
    assert vals.shape == (2,)
    assert vals[0] == pytest.approx(0.1, rel=1e-12)
