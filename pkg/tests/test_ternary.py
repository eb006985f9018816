import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import diag_counts_brute
from thetasums.forms import TernaryTuple, rep_series
from thetasums.ternary import (
    CongruenceConstraint,
    DiagonalForm,
    ExclusionRule,
    LemmaOutcome,
    binary_reps,
    check_coprime_six_rerep,
    check_nine_times_rerep,
    check_not_both_div3_rerep,
    check_odd_pair_rerep,
    constrained_rep_exists,
    empirical_excluded,
    load_rules,
    reduction_bridge,
    rep_series_diag,
    rule_excluded,
    verify_dickson,
)

coef = st.integers(1, 12)


def test_form_validation_and_order():
    assert DiagonalForm(3, 1, 2).canonical() == DiagonalForm(1, 2, 3)
    assert DiagonalForm(1, 2, 3).value(1, 1, 1) == 6
    with pytest.raises(ValueError):
        DiagonalForm(0, 1, 1)


def test_three_squares_excluded():
    assert empirical_excluded(DiagonalForm(1, 1, 1), 64) == [7, 15, 23, 28, 31, 39, 47, 55, 60, 63]


def test_sum_of_three_squares_counts():
    # r_3(n) for small n
    assert rep_series_diag(DiagonalForm(1, 1, 1), 6).tolist() == [1, 6, 12, 8, 6, 24, 24]


@given(coef, coef, coef)
def test_diag_matches_triple_loop(a, b, c):
    assert rep_series_diag(DiagonalForm(a, b, c), 300).tolist() == diag_counts_brute(a, b, c, 300)


@given(st.permutations([1, 2, 5]))
def test_permutation_invariant(perm):
    assert rep_series_diag(DiagonalForm(*perm), 500) == rep_series_diag(DiagonalForm(1, 2, 5), 500)


def test_rule_membership():
    rule = ExclusionRule(DiagonalForm(1, 1, 1), (), ((4, 8, 7),))
    assert 7 in rule and 28 in rule and 112 in rule
    assert 0 not in rule and 14 not in rule and 4 not in rule
    assert rule_excluded(rule, -1) is False


def test_rule_json_roundtrip():
    rule = ExclusionRule(DiagonalForm(2, 3, 18), ((3, 1),), ((9, 9, 6),), "src", "n")
    again = ExclusionRule.from_json(json.loads(json.dumps(rule.to_json())))
    assert again == rule
    assert "9^s(9t+6)" in rule.describe()


def test_verify_dickson_reports_witness():
    wrong = ExclusionRule(DiagonalForm(1, 1, 1), ((8, 7),))
    chk = verify_dickson(wrong.form, wrong, 100)
    assert not chk.ok and chk.witness == 28 and chk.empirically_excluded


def test_shipped_rules_small_bound():
    rules = load_rules()
    assert len(rules) == 20
    assert len({r.form.canonical() for r in rules}) == 20
    for rule in rules:
        assert verify_dickson(rule.form, rule, 3000).ok, rule.describe()


@given(coef, coef, coef, st.integers(0, 400))
def test_unconstrained_search_matches_series(a, b, c, n):
    f = DiagonalForm(a, b, c)
    expected = rep_series_diag(f, n).coeff(n) > 0
    assert constrained_rep_exists(f, n, CongruenceConstraint.unconstrained()) == expected


def test_constraint_closure_under_negation():
    con = CongruenceConstraint.build([(6, {1}), (4, {1}), (1, {0})])
    assert con.residues[0] == frozenset({1, 5})
    assert con.allows(1, 3) and not con.allows(1, 2)


@pytest.mark.parametrize(
    "t", [(8, 6, 4, 2, 4, 2), (8, 2, 3, 1, 2, 0), (9, 5, 4, 2, 4, 2), (12, 8, 5, 3, 5, 1), (2, 0, 2, 0, 2, 0)]
)
def test_bridge_matches_values(t):
    res = reduction_bridge(TernaryTuple.of(t), 400)
    assert res.ok


def test_bridge_uncovered_for_three_squares():
    res = reduction_bridge(TernaryTuple.of(2, 0, 2, 0, 2, 0), 100)
    assert res.ok and res.uncovered[:3] == [7, 15, 23]


def test_binary_reps():
    assert sorted(binary_reps(28, 3)) == [(1, 3), (4, 2), (5, 1)]
    assert list(binary_reps(-1, 3)) == []


def test_lemma_checkers_outcomes():
    assert check_odd_pair_rerep(28) is LemmaOutcome.HOLDS
    assert check_odd_pair_rerep(5) is LemmaOutcome.HYPOTHESIS_NOT_MET
    assert check_coprime_six_rerep(28) is LemmaOutcome.HOLDS
    assert check_coprime_six_rerep(27) is LemmaOutcome.HYPOTHESIS_NOT_MET
    assert check_not_both_div3_rerep(9 * 11, 2) is LemmaOutcome.HOLDS
    assert check_not_both_div3_rerep(3, 7) is LemmaOutcome.HYPOTHESIS_NOT_MET
    assert check_nine_times_rerep(1, 1, 0) is LemmaOutcome.HOLDS
    assert check_nine_times_rerep(3, 0, 0) is LemmaOutcome.HYPOTHESIS_NOT_MET
    assert not LemmaOutcome.HYPOTHESIS_NOT_MET and LemmaOutcome.HOLDS


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30))
def test_nine_times_rerep_property(x, y, z):
    out = check_nine_times_rerep(x, y, z)
    assert out is not LemmaOutcome.FAILS


def test_tuple_and_form_counts_related():
    # 2x^2+2y^2+2z^2 over tuple (4,0,4,0,4,0) equals the diagonal form (2,2,2)
    t = TernaryTuple.of(4, 0, 4, 0, 4, 0)
    assert np.array_equal(rep_series(t, 300).coeffs, rep_series_diag(DiagonalForm(2, 2, 2), 300).coeffs)
