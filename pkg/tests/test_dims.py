import pytest

from branchbox.dims import (PowerSeriesTruncated, dim_gl, dim_o, dim_so,
                            dim_sp, hilbert_check)
from branchbox.errors import StableRangeError, UsageError
from branchbox.partitions import enumerate_partitions
from branchbox.schur import eval_ones, schur_expand

from .oracles import ssyt_count


def test_dim_gl_examples():
    assert dim_gl((1,), 4) == 4
    assert dim_gl((2, 1), 2) == 2
    assert dim_gl((), 7) == 1
    assert dim_gl((1, 1, 1), 2) == 0


def test_dim_gl_matches_tableau_count():
    for lam in enumerate_partitions(6):
        for m in range(1, 6):
            assert dim_gl(lam, m) == ssyt_count(lam, m)
            assert dim_gl(lam, m) == eval_ones(schur_expand(lam, m))


def test_dim_so_examples():
    assert dim_so((1,), 5) == 5
    assert dim_so((1, 1), 5) == 10
    assert dim_so((2,), 5) == 14
    assert dim_so((1,), 4) == 4
    assert dim_so((1, 1), 7) == 21


def test_dim_sp_examples():
    assert dim_sp((1, 1), 2) == 5
    assert dim_sp((1,), 2) == 4
    assert dim_sp((2,), 2) == 10


def test_dim_length_bounds():
    with pytest.raises(UsageError):
        dim_so((1, 1, 1), 5)
    with pytest.raises(UsageError):
        dim_sp((1, 1, 1), 2)
    with pytest.raises(UsageError):
        dim_o((1, 1), 4)  # needs len < n/2
    assert dim_o((1, 1), 5) == 10


def test_power_series_arithmetic():
    a = PowerSeriesTruncated.from_list([1, 1], 4)       # 1 + q
    b = a.reciprocal()                                  # alternating signs
    assert b.coeffs == (1, -1, 1, -1, 1)
    assert (a * b).coeffs == (1, 0, 0, 0, 0)
    geom = PowerSeriesTruncated.binomial_inverse_power(1, 1, 4)
    assert geom.coeffs == (1, 1, 1, 1, 1)
    sq = PowerSeriesTruncated.binomial_inverse_power(2, 3, 6)
    assert sq.coeffs == (1, 0, 3, 0, 6, 0, 10)
    with pytest.raises(UsageError):
        PowerSeriesTruncated.from_list([2, 1], 3).reciprocal()
    with pytest.raises(UsageError):
        a * PowerSeriesTruncated.from_list([1], 2)


def test_hilbert_check_small_closed_form():
    ok, series = hilbert_check(5, 1, 4)
    assert ok
    assert series["harmonic"].coeffs == (1, 5, 14, 30, 55)
    from math import comb
    assert series["full"].coeffs == tuple(comb(d + 4, 4) for d in range(5))


def test_hilbert_check_acceptance_pairs():
    for n, m in ((5, 1), (5, 2), (6, 2), (7, 3)):
        ok, _ = hilbert_check(n, m, 8)
        assert ok, (n, m)


def test_hilbert_check_range_error():
    with pytest.raises(StableRangeError, match="n > 2"):
        hilbert_check(4, 2, 4)
