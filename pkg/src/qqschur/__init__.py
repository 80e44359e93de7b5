"""Exact computations for the (Q,q)-Schur algebra of type B.

Submodules:

- ``coeff_ring``: Laurent polynomials in q, Q and parameter specializations
- ``weyl_group_b``: signed permutations, parabolic subgroups, double cosets
- ``hecke_b``: the Hecke algebra of type B on the T_w basis
- ``bitableaux``: bicompositions, bitableaux, bitabloids and typed tableaux
- ``perm_module``: the permutation modules M^λ
- ``schur``: homomorphisms between permutation modules and the standard basis
- ``weyl_specht``: Specht and Weyl modules, semistandard bases, Gram matrices
- ``verify``: named verification suites
"""

from .bitableaux import Bicomposition, bipartitions, shapes
from .coeff_ring import GENERIC, LaurentPoly, Specialization
from .hecke_b import HeckeAlgebra, HeckeElt, hecke_algebra
from .perm_module import PermModule, perm_module
from .weyl_group_b import SignedPerm, weyl_group

__version__ = "0.1.0"

__all__ = [
    "Bicomposition",
    "bipartitions",
    "shapes",
    "GENERIC",
    "LaurentPoly",
    "Specialization",
    "HeckeAlgebra",
    "HeckeElt",
    "hecke_algebra",
    "PermModule",
    "perm_module",
    "SignedPerm",
    "weyl_group",
]
