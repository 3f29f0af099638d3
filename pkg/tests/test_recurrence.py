"""Constant-size recurrence engine vs explicit-table ground truth, and sequences."""

import random
from fractions import Fraction

import pytest

from rotsym.boolfn import rotate_bits
from rotsym.recurrence import (
    BASE_THRESHOLD,
    F3_weight_and_nonlinearity,
    F3_zero_value,
    check_sandwich_bounds,
    check_subfamily_quarter_bound,
    eval_F3_point,
    eval_restricted_sum,
    eval_subfunction_point,
)
from rotsym.rsbf import F3, SubFamily, realize, restricted_sum_oracle, subfunction_family
from rotsym.walsh import walsh_spectrum

ZERO_VALUES = {
    3: 6, 4: 8, 5: 20, 6: 28, 7: 56, 8: 96, 9: 168, 10: 304,
    11: 528, 12: 944, 13: 1664, 14: 2944, 15: 5216, 16: 9216,
    17: 16320, 18: 28864, 19: 51072, 20: 90368, 21: 159872, 22: 282880,
}


def test_subfunction_engine_exhaustive_small():
    for n in range(3, 10):
        fam = subfunction_family(n)
        for idx, anf in fam.items():
            spec = walsh_spectrum(realize(anf))
            for c in range(1 << n):
                assert eval_subfunction_point(idx, n, c) == spec[c]


def test_subfunction_engine_sampled_midsize():
    rng = random.Random(41)
    for n in (12, 16, 20):
        fam = subfunction_family(n)
        specs = {idx: walsh_spectrum(realize(anf)) for idx, anf in fam.items()}
        for _ in range(200):
            c = rng.randrange(1 << n)
            idx = rng.choice(list(SubFamily))
            assert eval_subfunction_point(idx, n, c) == specs[idx][c]


def test_subfunction_engine_errors():
    with pytest.raises(ValueError):
        eval_subfunction_point(SubFamily.F0, 2, 0)
    with pytest.raises(ValueError):
        eval_subfunction_point(SubFamily.F0, 5, 32)


def test_F3_point_exhaustive_against_tables():
    for n in (10, 11, 12):
        spec = walsh_spectrum(realize(F3(n)))
        for c in range(1 << n):
            assert eval_F3_point(n, c) == spec[c]


def test_F3_point_needs_enough_variables():
    with pytest.raises(ValueError):
        eval_F3_point(BASE_THRESHOLD + 1, 0)
    with pytest.raises(ValueError):
        eval_F3_point(10, 1 << 10)


def test_restricted_sum_engine_vs_oracle():
    for n in (9, 10, 11):
        top = 1 << (n - 1)
        for idx in SubFamily:
            for low in range(1 << (n - 1)):
                c = low | top
                assert eval_restricted_sum(idx, n, c) == restricted_sum_oracle(idx, n, c)


def test_restricted_sum_engine_errors():
    with pytest.raises(ValueError):
        eval_restricted_sum(SubFamily.F0, 8, 1 << 7)
    with pytest.raises(ValueError):
        eval_restricted_sum(SubFamily.F0, 9, 1)


def test_zero_values_match_fwht():
    for n, want in ZERO_VALUES.items():
        assert F3_zero_value(n) == want
    # spot check the golden range by explicit transform too
    for n in range(3, 13):
        assert walsh_spectrum(realize(F3(n)))[0] == ZERO_VALUES[n]


def test_zero_value_recurrence_shape():
    # primary recurrence continues the table
    for n in range(6, 4000, 397):
        assert F3_zero_value(n) == 2 * (F3_zero_value(n - 2) + F3_zero_value(n - 3))
    with pytest.raises(ValueError):
        F3_zero_value(2)


def test_alternate_zero_recurrence():
    for n in range(8, 200):
        w = F3_zero_value
        assert w(n) == w(n - 1) + 2 * w(n - 4) + 4 * w(n - 5)


def test_weight_identity_and_nonlinearity():
    for n in (3, 4, 6, 10, 12, 40):
        w, nl = F3_weight_and_nonlinearity(n)
        assert nl == w
        assert 2 * w == (1 << n) - F3_zero_value(n)
    assert F3_weight_and_nonlinearity(10) == (360, 360)
    assert F3_weight_and_nonlinearity(12) == (1576, 1576)


def test_weight_recurrence_with_additive_term():
    for n in range(6, 300):
        w = lambda m: F3_weight_and_nonlinearity(m)[0]
        assert w(n) == 2 * (w(n - 2) + w(n - 3)) + (1 << (n - 3))


def test_big_values_are_exact_integers():
    v = F3_zero_value(2000)
    assert isinstance(v, int)
    assert v % 2 == 0
    assert v > 1 << 500


def test_sandwich_bounds():
    rep = check_sandwich_bounds(500)
    assert rep.holds
    assert rep.failures == ()
    assert (7, "upper") in rep.tight_cases
    assert 2 * F3_zero_value(6) == F3_zero_value(7)
    with pytest.raises(ValueError):
        check_sandwich_bounds(6)


def test_quarter_bound_report_full_range():
    # the strict bound fails for the two smallest sizes; the report records
    # exactly those witnesses and nothing else
    rep = check_subfamily_quarter_bound(3, 12)
    assert not rep.holds
    assert rep.max_ratio == Fraction(6, 5)
    assert rep.attained_at == (3, SubFamily.F3, 7)
    assert rep.failures == (
        (3, SubFamily.F3, 7, 6, 20),
        (4, SubFamily.F1, 2, 8, 28),
        (4, SubFamily.F2, 4, 8, 28),
        (4, SubFamily.F3, 9, 8, 28),
    )
    per_n = dict((n, (m, b)) for n, m, b in rep.per_n)
    assert per_n[6] == (20, 96)  # max 20 against a quarter bound of 24


def test_quarter_bound_report_restricted_scope():
    rep = check_subfamily_quarter_bound(9, 12, restrict_c1=True)
    assert rep.holds
    assert rep.failures == ()
    assert rep.max_ratio == Fraction(26, 33)


def test_rotation_invariance_at_scale():
    rng = random.Random(42)
    n = 50
    c = rng.randrange(1, 1 << n)
    base = eval_F3_point(n, c)
    for k in range(n):
        assert eval_F3_point(n, rotate_bits(c, n, k)) == base
    assert eval_F3_point(n, 0) == F3_zero_value(n)


def test_engine_agrees_with_itself_across_sizes():
    # the composed top-level value must match the sequence value at the zero mask
    for n in (10, 23, 57, 128):
        assert eval_F3_point(n, 0) == F3_zero_value(n)
