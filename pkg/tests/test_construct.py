"""Tests for stacking two field codes into one code over the two-idempotent ring."""

import numpy as np
import pytest

from fpvcodes import (
    BudgetExceeded,
    FpLinearCode,
    FpMatrix,
    PrimeModulus,
    RLinearCode,
    build_self_dual,
    build_self_dual_report,
    census_self_dual_fp,
    components,
    construct_from_pair,
    count_self_dual_r,
    count_self_dual_r_report,
    exists_self_dual,
    is_self_dual_r,
    rcode_word_array,
    seed_self_dual,
)
from conftest import make_rng, random_fp_matrix


def test_components_round_trip_fuzz():
    # the defining invariant: stacking then decomposing recovers the inputs
    rng = make_rng(40)
    for p in (2, 3, 5):
        pm = PrimeModulus(p)
        for _ in range(40):
            n = int(rng.integers(1, 8))
            g1 = random_fp_matrix(rng, p, int(rng.integers(0, n + 2)), n)
            g2 = random_fp_matrix(rng, p, int(rng.integers(0, n + 2)), n)
            rep = construct_from_pair(g1, g2)
            c1, c2 = components(rep.code)
            assert c1 == FpLinearCode(g1)
            assert c2 == FpLinearCode(g2)
            assert rep.code.size == c1.size * c2.size


def test_case_selection():
    pm = PrimeModulus(3)
    tall = FpMatrix.from_rows([[1, 0, 0], [0, 1, 0]], pm)
    short = FpMatrix.from_rows([[1, 1, 1]], pm)
    assert construct_from_pair(tall, short).case_taken == "l1_gt_l2"
    assert construct_from_pair(short, tall).case_taken == "l1_lt_l2"
    assert construct_from_pair(tall, tall).case_taken == "l1_eq_l2"
    assert construct_from_pair(short, short).case_taken == "l1_eq_l2"


def test_empty_generator_degenerate():
    pm = PrimeModulus(5)
    empty = FpMatrix.from_rows([], pm, ncols=3)
    g2 = FpMatrix.from_rows([[1, 2, 0]], pm)
    rep = construct_from_pair(empty, g2)
    assert rep.case_taken == "l1_lt_l2"
    c1, c2 = components(rep.code)
    assert c1.dim == 0
    assert c2 == FpLinearCode(g2)
    # both empty
    rep = construct_from_pair(empty, empty)
    assert rep.case_taken == "l1_eq_l2"
    assert rep.code.size == 1


def test_generator_rows_span_the_code():
    # the stacked generator's row count is max(l1, l2) and its span is exact
    rng = make_rng(41)
    pm = PrimeModulus(3)
    for _ in range(20):
        n = int(rng.integers(1, 5))
        l1 = int(rng.integers(0, n + 2))
        l2 = int(rng.integers(0, n + 2))
        g1 = random_fp_matrix(rng, 3, l1, n)
        g2 = random_fp_matrix(rng, 3, l2, n)
        rep = construct_from_pair(g1, g2)
        assert rep.generator_used.nrows == max(l1, l2)
        regenerated = RLinearCode.from_generator(rep.generator_used)
        assert regenerated == rep.code


def test_build_self_dual_returns_code():
    pm = PrimeModulus(5)
    g = seed_self_dual(PrimeModulus(5), 4).basis
    code = build_self_dual(g, g)
    assert isinstance(code, RLinearCode)
    assert is_self_dual_r(code)


def test_build_self_dual_from_distinct_components():
    pm = PrimeModulus(5)
    g1 = FpMatrix.from_rows([[1, 0, 3, 0], [2, 1, 1, 2]], pm)
    g2 = FpMatrix.from_rows([[0, 2, 0, 1], [3, 4, 1, 2]], pm)
    code = build_self_dual(g1, g2)
    assert is_self_dual_r(code)
    c1, c2 = components(code)
    assert c1 == FpLinearCode(g1)
    assert c2 == FpLinearCode(g2)
    rep = build_self_dual_report(g1, g2)
    assert rep.code == code


def test_build_self_dual_rejects_non_self_dual_inputs():
    pm = PrimeModulus(5)
    good = seed_self_dual(PrimeModulus(5), 2).basis
    bad = FpMatrix.from_rows([[1, 0]], pm)
    with pytest.raises(ValueError, match="first component"):
        build_self_dual(bad, good)
    with pytest.raises(ValueError, match="second component"):
        build_self_dual(good, bad)


def test_seed_components_survive_stacking():
    seed = seed_self_dual(PrimeModulus(5), 2)
    code = build_self_dual(seed, seed)
    c1, c2 = components(code)
    assert c1 == seed and c2 == seed


# ----------------------------------------------------------------------
# existence


def test_exists_self_dual_truth_table():
    # p = 2 and p = 1 mod 4: even length; p = 3 mod 4: length divisible by 4
    assert exists_self_dual(PrimeModulus(2), 2)
    assert exists_self_dual(PrimeModulus(2), 6)
    assert not exists_self_dual(PrimeModulus(2), 3)
    assert exists_self_dual(PrimeModulus(5), 2)
    assert exists_self_dual(PrimeModulus(13), 6)
    assert not exists_self_dual(PrimeModulus(3), 2)
    assert not exists_self_dual(PrimeModulus(3), 6)
    assert exists_self_dual(PrimeModulus(3), 4)
    assert exists_self_dual(PrimeModulus(3), 8)
    assert exists_self_dual(PrimeModulus(7), 8)
    assert not exists_self_dual(PrimeModulus(7), 2)
    assert not exists_self_dual(PrimeModulus(7), 3)


def test_exists_matches_seed_constructibility():
    for p in (2, 3, 5, 7, 13):
        pm = PrimeModulus(p)
        for n in range(1, 9):
            if exists_self_dual(pm, n):
                seed = seed_self_dual(pm, n)
                code = build_self_dual(seed, seed)
                assert is_self_dual_r(code), (p, n)
            else:
                with pytest.raises(ValueError):
                    seed_self_dual(pm, n)


# ----------------------------------------------------------------------
# counting


def test_count_golden_values():
    assert count_self_dual_r(PrimeModulus(2), 2) == 1
    assert count_self_dual_r(PrimeModulus(3), 2) == 0
    assert count_self_dual_r(PrimeModulus(5), 2) == 4
    assert count_self_dual_r(PrimeModulus(2), 4) == 9
    assert count_self_dual_r(PrimeModulus(3), 4) == 64
    assert count_self_dual_r(PrimeModulus(2), 6) == 225


def test_count_is_square_of_field_count():
    for p, n in ((2, 2), (2, 4), (2, 6), (3, 4), (5, 2), (5, 4)):
        field = len(census_self_dual_fp(PrimeModulus(p), n))
        assert count_self_dual_r(PrimeModulus(p), n) == field * field


def test_count_report_trail():
    rep = count_self_dual_r_report(PrimeModulus(2), 4)
    assert rep.count == 9
    assert rep.field_count == 3
    assert rep.pairs_verified is True
    assert "census-squared" in rep.paths
    assert "pair-verification" in rep.paths


def test_count_report_exhaustive_cross_check():
    # small enough to re-count by filtering every subspace pair
    rep = count_self_dual_r_report(PrimeModulus(2), 2)
    assert rep.count == 1
    assert rep.exhaustive_count == 1
    assert "exhaustive-pairs" in rep.paths


def test_count_budget_refusal():
    with pytest.raises(BudgetExceeded):
        count_self_dual_r(PrimeModulus(5), 6, budget=10**4)


def test_counted_codes_are_distinct():
    # the 9 self-dual codes at (2, 4) really are 9 distinct word sets
    pm = PrimeModulus(2)
    field_codes = census_self_dual_fp(PrimeModulus(2), 4)
    assert len(field_codes) == 3
    word_sets = set()
    for c1 in field_codes:
        for c2 in field_codes:
            code = build_self_dual(c1, c2)
            word_sets.add(frozenset(map(tuple, rcode_word_array(code))))
    assert len(word_sets) == 9
