import pytest

from qqschur.bitableaux import Bicomposition, bipartitions, shapes, standard_tableaux, typed_tableaux
from qqschur.coeff_ring import LaurentPoly, Specialization
from qqschur.weyl_specht import (gram, gram_rank, irreducible_dims, leading_term_report, specht_rank,
                                 specht_rank_via_hecke, weight_space_rank, weyl_basis, weyl_dimension,
                                 z_form, z_form_expected)

ONE_ONE = Bicomposition((1,), (1,))


@pytest.mark.parametrize("lam", [b for r in (1, 2, 3) for b in bipartitions(r)], ids=str)
def test_specht_rank_is_standard_count(lam):
    assert specht_rank(lam) == len(standard_tableaux(lam)) == specht_rank_via_hecke(lam)


def test_worked_dims():
    assert specht_rank(ONE_ONE) == 2
    assert weyl_dimension(ONE_ONE) == 6
    assert gram_rank(ONE_ONE) == 6


@pytest.mark.parametrize("lam", bipartitions(2), ids=str)
def test_weyl_basis_per_weight(lam):
    for mu in shapes(2, 2):
        n_ss = len(typed_tableaux(lam, mu, "semistandard"))
        rv, ri = weight_space_rank(lam, mu)
        assert rv == ri == n_ss
        for T, unit, above in leading_term_report(lam, mu):
            assert unit and above


@pytest.mark.parametrize("lam", [b for r in (1, 2, 3) for b in bipartitions(r)], ids=str)
def test_gram_identity(lam):
    assert z_form(lam) == z_form_expected(lam)


def test_gram_identity_example():
    assert z_form(ONE_ONE) == LaurentPoly.parse("Q*q")


def test_generic_irreducibles_equal_weyl_modules():
    for lam in bipartitions(2):
        assert gram_rank(lam) == weyl_dimension(lam)


@pytest.mark.parametrize("spec,expected", [
    (Specialization(-1, -1), [3, 2, 6, 3, 1]),
    (Specialization(-1, 1), [3, 1, 2, 3, 1]),
    (Specialization(2, 2, char=3), [3, 2, 6, 3, 1]),
], ids=lambda x: getattr(x, "name", ""))
def test_irreducible_dims_at_roots_of_unity(spec, expected):
    dims = irreducible_dims(2, spec)
    assert [dims[b] for b in bipartitions(2)] == expected
    assert [weyl_dimension(b) for b in bipartitions(2)] == [9, 3, 6, 4, 1]


def test_gram_is_symmetric_on_a_weight():
    labels, mat = gram(ONE_ONE)
    N = len(labels)
    for i in range(N):
        for j in range(N):
            if labels[i][0] == labels[j][0]:
                assert mat[i][j] == mat[j][i]


def test_weyl_basis_keys():
    wb = weyl_basis(ONE_ONE, 2)
    assert sum(len(v) for v in wb.values()) == weyl_dimension(ONE_ONE, 2)
