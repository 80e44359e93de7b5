import pytest

from qqschur.bitableaux import Bicomposition, shapes
from qqschur.coeff_ring import GENERIC, Specialization
from qqschur.schur import (compose, express_in_basis, hom_oracle, identity_map, phi_standard,
                           schur_dimension, standard_basis, star_adjoint, structure_constants)
from qqschur.weyl_group_b import admissible_triples

PAIRS2 = [(a, b) for a in shapes(2, 2) for b in shapes(2, 2)]
ONE_ONE = Bicomposition((1,), (1,))


def test_worked_dimension():
    assert len(admissible_triples(ONE_ONE, ONE_ONE)) == 3
    assert hom_oracle(ONE_ONE, ONE_ONE)[0] == 3


@pytest.mark.parametrize("lam,mu", PAIRS2, ids=str)
def test_standard_basis_against_commutant(lam, mu):
    basis = standard_basis(lam, mu)
    assert len(basis) == len(admissible_triples(lam, mu)) == hom_oracle(lam, mu)[0]
    for _, phi in basis:
        assert phi.is_well_defined()


@pytest.mark.parametrize("spec", [Specialization(-1, -1), Specialization(1, 1, char=2), Specialization(2, 2, char=3)],
                         ids=lambda s: s.name)
def test_commutant_dimension_is_parameter_free(spec):
    for lam, mu in PAIRS2:
        assert hom_oracle(lam, mu, spec)[0] == len(admissible_triples(lam, mu))


def test_identity_and_composition():
    for lam in shapes(2, 2):
        e = identity_map(lam)
        for mu in shapes(2, 2):
            for _, phi in standard_basis(lam, mu):
                assert compose(e, phi) == phi
                assert compose(phi, identity_map(mu)) == phi


def test_structure_constants_are_laurent():
    sc = structure_constants(ONE_ONE, ONE_ONE, ONE_ONE)
    assert len(sc) == 9
    # the identity of End(M^λ) is a single basis element
    coords = express_in_basis(identity_map(ONE_ONE))
    assert len(coords.terms) == 1


def test_adjoint_is_well_defined():
    for lam, mu in PAIRS2[::3]:
        for _, phi in standard_basis(lam, mu):
            adj = star_adjoint(phi)
            assert adj.is_well_defined()
            assert adj.lam == mu and adj.mu == lam


def test_schur_dimension_small():
    # Σ over pairs of the number of admissible triples
    assert schur_dimension(1, 1) == sum(len(admissible_triples(a, b)) for a in shapes(1, 1) for b in shapes(1, 1))
    assert schur_dimension(2, 2) == sum(len(admissible_triples(a, b)) for a, b in PAIRS2)


def test_literal_variant_is_sometimes_ill_defined():
    bad = 0
    for lam, mu in PAIRS2:
        for t in admissible_triples(lam, mu):
            if not phi_standard(t, GENERIC, variant="literal", check=False).is_well_defined():
                bad += 1
    assert bad > 0
