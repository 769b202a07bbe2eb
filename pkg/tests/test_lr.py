from hypothesis import given, settings
from hypothesis import strategies as st

from branchbox.lr import (cache_snapshot, clear_cache, lr_coefficient,
                          lr_multi, preload_cache)
from branchbox.partitions import conjugate, enumerate_partitions, partitions_of
from branchbox.schur import multiply_schur, schur_vector

small_partitions = st.lists(st.integers(1, 4), max_size=4).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


def test_lr_examples():
    assert lr_coefficient((3, 1), (3, 1), ()) == 1
    assert lr_coefficient((2, 2), (2,), (1, 1)) == 0
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2


def test_lr_degenerate_shapes():
    assert lr_coefficient((2,), (3,), ()) == 0  # size mismatch
    assert lr_coefficient((2, 2), (1, 1, 1), (1,)) == 0  # mu not inside lam
    assert lr_coefficient((), (), ()) == 1


@given(small_partitions, small_partitions)
@settings(max_examples=80, deadline=None)
def test_lr_symmetry_and_conjugation(mu, nu):
    for lam in partitions_of(sum(mu) + sum(nu), max_length=8):
        c = lr_coefficient(lam, mu, nu)
        assert c == lr_coefficient(lam, nu, mu)
        assert c == lr_coefficient(conjugate(lam), conjugate(mu), conjugate(nu))


def test_lr_matches_schur_product_small():
    m = 6
    for mu in enumerate_partitions(4, max_length=3):
        for nu in enumerate_partitions(4, max_length=3):
            prod = multiply_schur(schur_vector(m, {mu: 1}),
                                  schur_vector(m, {nu: 1}))
            for lam in partitions_of(sum(mu) + sum(nu), max_length=m):
                assert prod.coeffs.get(lam, 0) == lr_coefficient(lam, mu, nu)


def test_lr_multi_examples():
    assert lr_multi((3, 1), [(3, 1)]) == 1
    assert lr_multi((2,), [(1,), (1,)]) == 1
    assert lr_multi((2, 1), [(1,), (1,), (1,)]) == 2


def test_lr_multi_two_factors_equal_lr():
    for mu in enumerate_partitions(3):
        for nu in enumerate_partitions(3):
            for lam in partitions_of(sum(mu) + sum(nu)):
                assert lr_multi(lam, [mu, nu]) == lr_coefficient(lam, mu, nu)


@given(st.permutations([(2, 1), (1, 1), (2,)]))
@settings(max_examples=6, deadline=None)
def test_lr_multi_factor_permutation_invariance(factors):
    reference = sorted(
        (lam, lr_multi(lam, [(2, 1), (1, 1), (2,)]))
        for lam in partitions_of(7))
    got = sorted((lam, lr_multi(lam, list(factors))) for lam in partitions_of(7))
    assert got == reference


def test_lr_multi_empty_factor_list():
    assert lr_multi((), []) == 1
    assert lr_multi((1,), []) == 0


def test_cache_preload_and_snapshot():
    clear_cache()
    preload_cache({((2,), (1,), (1,)): 1})
    assert cache_snapshot()[((2,), (1,), (1,))] == 1
    # a wrong preloaded value is trusted: proves the memo is actually used
    clear_cache()
    preload_cache({((2,), (1,), (1,)): 99})
    assert lr_coefficient((2,), (1,), (1,)) == 99
    clear_cache()
    assert lr_coefficient((2,), (1,), (1,)) == 1


def test_preload_normalizes_factor_order():
    clear_cache()
    preload_cache({((2, 1), (1,), (2,)): 7})
    assert lr_coefficient((2, 1), (2,), (1,)) == 7
    clear_cache()
