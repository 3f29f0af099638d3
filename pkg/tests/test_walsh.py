"""Transform correctness: butterfly vs definitional sums, Parseval, nonlinearity."""

import random

import numpy as np
import pytest

from rotsym.boolfn import AnfForm, BooleanFunction, TableSizeError, anf_to_table, weight
from rotsym.walsh import (
    WalshSpectrum,
    fwht_inplace,
    nonlinearity,
    walsh_point,
    walsh_spectrum,
)


def dot(c, x):
    return (c & x).bit_count() & 1


def naive_spectrum(f):
    # direct double loop straight from the definition, independent of walsh.py
    return [
        sum((-1) ** (f(x) ^ dot(c, x)) for x in range(1 << f.n))
        for c in range(1 << f.n)
    ]


def random_function(n, rng):
    return BooleanFunction(n, [rng.randrange(2) for _ in range(1 << n)])


def test_fwht_is_scaled_involution():
    rng = random.Random(11)
    v = np.array([rng.randrange(-9, 10) for _ in range(64)], dtype=np.int64)
    w = v.copy()
    fwht_inplace(w)
    fwht_inplace(w)
    assert np.array_equal(w, 64 * v)
    with pytest.raises(ValueError):
        fwht_inplace(np.zeros(6, dtype=np.int64))


def test_spectrum_matches_naive_small():
    rng = random.Random(21)
    for n in (1, 2, 3, 4, 5, 6):
        for _ in range(4):
            f = random_function(n, rng)
            assert list(walsh_spectrum(f).values) == naive_spectrum(f)


def test_walsh_point_matches_naive():
    rng = random.Random(22)
    for n in (3, 5, 8):
        f = random_function(n, rng)
        ref = naive_spectrum(f)
        for c in range(1 << n):
            assert walsh_point(f, c) == ref[c]


def test_spectrum_zero_entry_is_weight_identity():
    rng = random.Random(23)
    for n in (2, 4, 7, 10):
        f = random_function(n, rng)
        assert walsh_spectrum(f)[0] == (1 << n) - 2 * weight(f)


def test_parseval():
    rng = random.Random(24)
    for n in (3, 6, 10):
        f = random_function(n, rng)
        vals = walsh_spectrum(f).values.astype(object)
        assert int(sum(v * v for v in vals)) == 4 ** n


def test_spectrum_getitem_and_cap():
    f = BooleanFunction(2, [0, 1, 1, 0])
    s = walsh_spectrum(f)
    assert s[0] == 0 and s[3] == 4
    with pytest.raises(ValueError):
        s[4]
    with pytest.raises(TableSizeError):
        walsh_spectrum(BooleanFunction(3, [0] * 8), max_vars=2)
    with pytest.raises(ValueError):
        WalshSpectrum(2, [0, 0, 0])


def test_nonlinearity_conventions():
    # x0*x1 ^ x2*x3 has flat spectrum |W| = 4; distance 6 to every affine fn
    bent = anf_to_table(AnfForm(4, [{0, 1}, {2, 3}]))
    rep = nonlinearity(walsh_spectrum(bent))
    assert rep.linear_nl == 6
    assert rep.affine_nl == 6
    assert rep.max_abs_coeff == 4
    assert rep.argmax_masks == tuple(range(16))


def test_nonlinearity_complemented_line():
    # x1 ^ 1 sits at distance 8 from every line but distance 0 from an affine fn
    f = anf_to_table(AnfForm(3, [{1}, ()]))
    rep = nonlinearity(walsh_spectrum(f))
    assert rep.max_abs_coeff == 8
    assert rep.affine_nl == 0
    assert rep.linear_nl == 4
    assert rep.argmax_masks == (2,)


def test_nonlinearity_respects_distance_definition():
    rng = random.Random(25)
    n = 4
    f = random_function(n, rng)
    rep = nonlinearity(walsh_spectrum(f))
    lin_dists = []
    aff_dists = []
    for c in range(1 << n):
        d = sum(f(x) ^ dot(c, x) for x in range(1 << n))
        lin_dists.append(d)
        aff_dists.extend((d, (1 << n) - d))
    assert rep.linear_nl == min(lin_dists)
    assert rep.affine_nl == min(aff_dists)
