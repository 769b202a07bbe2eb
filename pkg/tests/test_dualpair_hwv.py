import warnings

import pytest

from branchbox import branch
from branchbox.dims import dim_o, dim_sp
from branchbox.dualpair import (FULL, MOD_IDEAL, MatrixSpaceShape, ProductO,
                                harmonic_isotypic_dims, harmonic_report,
                                hwv_multiplicities, hwv_table)
from branchbox.errors import BudgetError, UsageError
from branchbox.lr import lr_coefficient
from branchbox.partitions import Signature, enumerate_partitions


def weights_table(entries):
    return {tuple(lab.weight for lab in e.labels): e.mult for e in entries}


def test_full_case_a_small_example():
    entries = hwv_multiplicities(MatrixSpaceShape("A", 5, 1), 2, FULL)
    assert weights_table(entries) == {
        ((), ()): 1,
        ((1,), (1,)): 1,
        ((), (2,)): 1,
        ((2,), (2,)): 1,
    }
    assert all(e.stable for e in entries)


def test_full_case_a_matches_branching_formula():
    entries = hwv_multiplicities(MatrixSpaceShape("A", 5, 2), 4, FULL)
    table = weights_table(entries)
    for lam in enumerate_partitions(4, max_length=2):
        for mu in enumerate_partitions(sum(lam), max_length=2):
            assert table.get((mu, lam), 0) == branch.gl_to_o(lam, mu, 5)


def test_full_case_a_multiplicity_free_in_gl_blocks():
    # each O_n label appears at most once inside a fixed GL_m constituent
    entries = hwv_multiplicities(MatrixSpaceShape("A", 5, 2), 5, FULL)
    assert all(e.mult == 1 for e in entries)
    mus = {e.labels[0].weight for e in entries}
    assert mus == {p for p in enumerate_partitions(5, max_length=2)}


def test_mod_ideal_two_block_tensor():
    shape = MatrixSpaceShape("A", 5, 1, 1, split_columns=True)
    entries = hwv_multiplicities(shape, 4, MOD_IDEAL)
    table = weights_table(entries)
    # closed form: E^(1) (x) E^(1) decomposition
    assert table[((2,), (1,), (1,))] == 1
    assert table[((1, 1), (1,), (1,))] == 1
    assert table[((), (1,), (1,))] == 1
    for (lam, mu, nu), mult in table.items():
        assert mult == branch.o_tensor_stable(mu, nu, lam, 5)


def test_product_o_restriction():
    entries = hwv_multiplicities(MatrixSpaceShape("A", 6, 1), 4, ProductO(3, 3))
    table = weights_table(entries)
    assert table[((), (), (2,))] == 1
    assert table[((1,), (1,), (2,))] == 1
    assert table[((1,), (), (1,))] == 1
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for (mu, nu, lam), mult in table.items():
            want = branch.o_restrict_stable(lam, mu, nu, 3, 3,
                                            policy=branch.WARN_AND_COMPUTE)
            assert mult == want


def test_product_o_requires_matching_block_sizes():
    with pytest.raises(UsageError):
        hwv_multiplicities(MatrixSpaceShape("A", 5, 1), 3, ProductO(3, 3))
    with pytest.raises(UsageError):
        hwv_multiplicities(MatrixSpaceShape("A", 6, 1, 1, split_columns=True),
                           3, ProductO(3, 3))


def test_stacked_case_c_matches_lr():
    shape = MatrixSpaceShape("C", 3, 2, 1, split_columns=True)
    entries = hwv_multiplicities(shape, 4, FULL)
    table = weights_table(entries)
    for (lam, mu, nu), mult in table.items():
        assert mult == lr_coefficient(lam, mu, nu)
    # and nothing missing: every nonzero LR triple in range appears
    for lam in enumerate_partitions(4, max_length=3):
        for mu in enumerate_partitions(sum(lam), max_length=2):
            nu_size = sum(lam) - sum(mu)
            for nu in enumerate_partitions(nu_size, max_length=1):
                if sum(nu) != nu_size:
                    continue
                c = lr_coefficient(lam, mu, nu)
                assert table.get((lam, mu, nu), 0) == c


def test_standard_case_c_rational_pairing():
    entries = hwv_multiplicities(MatrixSpaceShape("C", 3, 2, 1), 3, FULL)
    for e in entries:
        sig = e.labels[0].weight
        mu = e.labels[1].weight
        nu = e.labels[2].weight
        assert isinstance(sig, Signature)
        want = branch.gl_tensor_rational(Signature(mu, ()), Signature((), nu),
                                         sig, 3)
        assert e.mult == want


def test_case_c_without_y_block_pairs_diagonally():
    entries = hwv_multiplicities(MatrixSpaceShape("C", 3, 2, 0), 4, FULL)
    table = weights_table(entries)
    assert table == {(lam, lam): 1
                     for lam in enumerate_partitions(4, max_length=2)}


def test_hwv_table_keys():
    entries = hwv_multiplicities(MatrixSpaceShape("A", 5, 1), 2, FULL)
    table = hwv_table(entries)
    assert all(v == 1 for v in table.values())
    assert len(table) == 4


def test_budget_error():
    with pytest.raises(BudgetError):
        hwv_multiplicities(MatrixSpaceShape("A", 4, 2), 4, FULL, budget=1)


def test_harmonic_report_case_a_51():
    report = harmonic_report(MatrixSpaceShape("A", 5, 1), 3)
    assert report.full == (1, 5, 15, 35)
    assert report.harmonic == (1, 5, 14, 30)
    assert report.ideal == (0, 0, 1, 5)
    assert report.identity_ok
    assert report.separation_ok
    assert report.generator_count == 1


def test_harmonic_report_separation_only_in_stable_range():
    report = harmonic_report(MatrixSpaceShape("A", 3, 2), 3)
    assert report.identity_ok          # the exact-sequence identity always holds
    assert report.separation_ok is None  # no free-module claim outside n >= 2m


def test_harmonic_isotypic_dims_match_weyl_formula():
    iso = harmonic_isotypic_dims(MatrixSpaceShape("A", 5, 2), 3)
    for lam, got in iso.items():
        assert got == dim_o(lam, 5)
    assert (1,) in iso and (2,) in iso


def test_harmonic_isotypic_dims_case_b():
    iso = harmonic_isotypic_dims(MatrixSpaceShape("B", 3, 1), 3)
    for lam, got in iso.items():
        assert got == dim_sp(lam, 3)


def test_oracle_stability_between_two_ranks():
    t5 = weights_table(hwv_multiplicities(MatrixSpaceShape("A", 5, 2), 3, FULL))
    t6 = weights_table(hwv_multiplicities(MatrixSpaceShape("A", 6, 2), 3, FULL))
    assert t5 == t6
