"""Places where a literal reading of a stated identity fails, pinned down as tests.

Each test records the counterexample itself, so the behaviour of the
library (which uses the corrected reading) stays documented.
"""

from qqschur.bitableaux import Bicomposition, alpha_map, is_positive, shapes, tableau_str
from qqschur.coeff_ring import GENERIC
from qqschur.perm_module import perm_module
from qqschur.schur import delta_cosets, phi_standard, standard_basis
from qqschur.weyl_group_b import admissible_triples, weyl_group

ONE_ONE = Bicomposition((1,), (1,))


def test_coset_label_can_be_non_positive():
    """c ↦ α{t^μ c} need not land in the positive tableaux: c = s_1 for λ = μ = ((1),(1))."""
    G = weyl_group(2)
    M = perm_module(ONE_ONE)
    c = G.s(1)
    assert c in delta_cosets(ONE_ONE, ONE_ONE)
    T = alpha_map(ONE_ONE, ONE_ONE, M.basis[M.pos_of_w[c]])
    assert tableau_str(T) == "([[3]];[[1]])"
    assert not is_positive(T, ONE_ONE.n)


def test_positive_coset_labels_are_the_positive_row_standard_tableaux():
    from qqschur.bitableaux import is_row_weak, typed_tableaux

    for lam in shapes(2, 2):
        for mu in shapes(2, 2):
            M = perm_module(mu)
            labels = []
            for c in delta_cosets(lam, mu):
                T = alpha_map(lam, mu, M.basis[M.pos_of_w[c]])
                if is_positive(T, mu.n):
                    labels.append(T)
            want = [T for T in typed_tableaux(lam, mu, "positive") if is_row_weak(T)]
            assert sorted(labels) == sorted(want)


def test_literal_phi_formula_fails_commutation():
    failures = [t for lam in shapes(2, 2) for mu in shapes(2, 2) for t in admissible_triples(lam, mu)
                if not phi_standard(t, GENERIC, variant="literal", check=False).is_well_defined()]
    assert failures
    # the full lift is always a homomorphism
    for lam2 in shapes(2, 2):
        for mu2 in shapes(2, 2):
            assert all(phi.is_well_defined() for _, phi in standard_basis(lam2, mu2))
