"""Specht modules, Weyl modules and their semistandard bases, Gram matrices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .bitableaux import (Bicomposition, alpha_map, bipartitions, gamma_inverse, gamma_map,
                         is_positive, order_key, pi_hat_lambda, shapes,
                         t_lower_hat, typed_tableaux)
from .coeff_ring import GENERIC, LaurentPoly, matrix_rank, solve_exact
from .hecke_b import hecke_algebra
from .perm_module import perm_module
from .schur import coset_triple, delta_cosets, phi_standard, standard_basis

__all__ = [
    "WeylVector",
    "specht_rank",
    "weyl_tail",
    "weyl_vector",
    "weyl_basis",
    "weyl_dimension",
    "coset_of_tableau",
    "leading_term_report",
    "gram",
    "gram_matrix",
    "irreducible_dims",
    "z_form",
    "z_form_expected",
    "gram_rank",
    "weight_space_rank",
    "express_in_weyl_basis",
    "specht_rank_via_hecke",
    "weight_space_rank_group_case",
]


def _spec_arg(domain):
    return None if domain.is_generic else domain


@lru_cache(maxsize=None)
def _tail(lam: Bicomposition, domain):
    """h_{a,r-a}·u^-_{r-a}·T_{π̂_λ}·ŷ_λ, the right factor carrying φ(⟨t^λ⟩) to φ(z_λ)."""
    H = hecke_algebra(lam.size, domain)
    a = lam.a
    return H.product(H.h_elt(a), H.u_minus(lam.size - a), H.T(pi_hat_lambda(lam)),
                     H.y_elt(lam, hat=True))


def weyl_tail(lam: Bicomposition, domain=GENERIC):
    return _tail(lam, domain)


def specht_rank(lam: Bicomposition, domain=GENERIC) -> int:
    """Rank of {z_λ T_w : w ∈ W_r} inside M^λ."""
    if not lam.is_bipartition():
        raise ValueError(f"{lam} is not a bipartition")
    M = perm_module(lam, domain)
    z = M.act(M.generator(), _tail(lam, domain))
    prods = M.act_many(z, range(len(M.G)))
    rows = [M.dense(prods[w]) for w in range(len(M.G))]
    return matrix_rank(rows, _spec_arg(domain))


def specht_rank_via_hecke(lam: Bicomposition, domain=GENERIC) -> int:
    """Same rank computed inside ℋ from the product formula for z_λ."""
    H = hecke_algebra(lam.size, domain)
    z = H.z_lambda(lam)
    G = H.G
    prods = H.right_products(z.terms, range(len(G)))
    rows = [[prods[w].get(k, H.zero) for k in range(len(G))] for w in range(len(G))]
    return matrix_rank(rows, _spec_arg(domain))


def coset_of_tableau(lam: Bicomposition, mu: Bicomposition, T) -> int:
    """The c ∈ 𝒟^Δ_{I,J} with α{t^μ c} = T."""
    M = perm_module(mu)
    hits = []
    for c in delta_cosets(lam, mu):
        # t^μ c is row standard since c is distinguished
        t = M.basis[M.pos_of_w[c]] if c in M.pos_of_w else None
        if t is not None and alpha_map(lam, mu, t) == T:
            hits.append(c)
    if len(hits) != 1:
        raise ValueError("tableau does not come from a unique coset representative")
    return hits[0]


def _coset_tableau_map(lam, mu):
    M = perm_module(mu)
    out = {}
    for c in delta_cosets(lam, mu):
        if c in M.pos_of_w:
            out[alpha_map(lam, mu, M.basis[M.pos_of_w[c]])] = c
    return out


@dataclass(frozen=True)
class WeylVector:
    lam: Bicomposition
    mu: Bicomposition
    label: tuple
    coset: int
    value: Dict[int, object]

    def leading_position(self) -> int:
        return perm_module(self.mu).position(gamma_inverse(self.lam, self.mu, self.label))


def weyl_vector(lam: Bicomposition, mu: Bicomposition, T, domain=GENERIC) -> WeylVector:
    from .bitableaux import is_semistandard

    if not is_semistandard(T, mu.n):
        raise ValueError("tableau is not semistandard")
    c = _coset_tableau_map(lam, mu).get(T)
    if c is None:
        raise ValueError("no coset representative for this tableau")
    phi = phi_standard(coset_triple(lam, mu, c), domain)
    M = perm_module(mu, domain)
    val = M.act(phi.gen_image, _tail(lam, domain))
    return WeylVector(lam, mu, T, c, val)


def weyl_basis(lam: Bicomposition, n: Optional[int] = None, domain=GENERIC) -> Dict[Bicomposition, List[WeylVector]]:
    n = lam.size if n is None else n
    out = {}
    for mu in shapes(n, lam.size):
        out[mu] = [weyl_vector(lam, mu, T, domain) for T in typed_tableaux(lam, mu, "semistandard")]
    return out


def weyl_dimension(lam: Bicomposition, n: Optional[int] = None) -> int:
    n = lam.size if n is None else n
    return sum(len(typed_tableaux(lam, mu, "semistandard")) for mu in shapes(n, lam.size))


def weight_space_rank(lam: Bicomposition, mu: Bicomposition, domain=GENERIC) -> Tuple[int, int]:
    """(rank of the v-vectors, rank of all φ(z_λ) for φ in the standard basis)."""
    M = perm_module(mu, domain)
    spec = _spec_arg(domain)
    vs = [weyl_vector(lam, mu, T, domain).value for T in typed_tableaux(lam, mu, "semistandard")]
    tail = _tail(lam, domain)
    imgs = [M.act(phi.gen_image, tail) for _, phi in standard_basis(lam, mu, domain)]
    rv = matrix_rank([M.dense(v) for v in vs], spec) if vs else 0
    ri = matrix_rank([M.dense(v) for v in imgs], spec) if imgs else 0
    return rv, ri


def weight_space_rank_group_case(lam: Bicomposition, mu: Bicomposition, domain) -> int:
    """dim W^λ ∩ M^μ as the rank of {t}·z_λ over μ-bitabloids t (z_λ taken in ℋ)."""
    H = hecke_algebra(lam.size, domain)
    M = perm_module(mu, domain)
    z = H.z_lambda(lam)
    rows = [M.dense(M.act({k: M.one}, z)) for k in range(len(M))]
    return matrix_rank(rows, _spec_arg(domain))


def express_in_weyl_basis(lam, mu, target: Dict[int, object], domain=GENERIC):
    M = perm_module(mu, domain)
    vs = [weyl_vector(lam, mu, T, domain).value for T in typed_tableaux(lam, mu, "semistandard")]
    cols = [M.dense(v) for v in vs]
    return solve_exact(cols, M.dense(target), _spec_arg(domain))


def leading_term_report(lam: Bicomposition, mu: Bicomposition, domain=GENERIC):
    """For each semistandard T: (leading coefficient is a unit, residual terms are all above T).

    Residual terms are the bitabloids outside M^μ_- other than γ^{-1}(T);
    each must map under γ to a positive tableau strictly above T.
    """
    out = []
    M = perm_module(mu, domain)
    n = mu.n
    for T in typed_tableaux(lam, mu, "semistandard"):
        wv = weyl_vector(lam, mu, T, domain)
        lead = wv.leading_position()
        c = wv.value.get(lead)
        unit = bool(c) and (c.is_monomial() if isinstance(c, LaurentPoly) else True)
        if isinstance(c, LaurentPoly):
            unit = unit and abs(next(iter(c.terms.values()))) == 1
        above = True
        keyT = order_key(lam, T)
        for k, x in wv.value.items():
            if k == lead or M.minus[k]:
                continue
            T4 = gamma_map(lam, mu, M.basis[k])
            if not is_positive(T4, n) or not order_key(lam, T4) > keyT:
                above = False
        out.append((T, unit, above))
    return out


# ---------------------------------------------------------------------------
# contracted form
# ---------------------------------------------------------------------------

def z_form(lam: Bicomposition, domain=GENERIC):
    """⟨⟨z_λ, z_λ⟩⟩ = ⟨⟨t̂_λ⟩, z_λ⟩_λ."""
    M = perm_module(lam, domain)
    z = M.act(M.generator(), _tail(lam, domain))
    k = M.position(t_lower_hat(lam))
    return M.bilinear({k: M.one}, z)


def z_form_expected(lam: Bicomposition, domain=GENERIC):
    M = perm_module(lam, domain)
    r, a = lam.size, lam.a
    b = r - a
    k = M.position(t_lower_hat(lam))
    return domain.monomial(b * (b - 1) // 2, b) * M.form_weight(k)


def gram(lam: Bicomposition, n: Optional[int] = None, domain=GENERIC):
    """(labels, matrix): G[T, T'] = ⟨a_T, v_{T'}⟩ with a_T = φ^{c_T}(⟨t^λ⟩)·h·T_π̂."""
    n = lam.size if n is None else n
    H = hecke_algebra(lam.size, domain)
    head = H.h_elt(lam.a) * H.T(pi_hat_lambda(lam))
    labels, avecs, vvecs, mus = [], [], [], []
    for mu in shapes(n, lam.size):
        M = perm_module(mu, domain)
        for T in typed_tableaux(lam, mu, "semistandard"):
            wv = weyl_vector(lam, mu, T, domain)
            phi = phi_standard(coset_triple(lam, mu, wv.coset), domain)
            labels.append((mu, T))
            avecs.append(M.act(phi.gen_image, head))
            vvecs.append(wv.value)
            mus.append(mu)
    N = len(labels)
    mat = [[domain.zero] * N for _ in range(N)]
    for i in range(N):
        M = perm_module(mus[i], domain)
        for j in range(N):
            if mus[i] == mus[j]:
                mat[i][j] = M.bilinear(avecs[i], vvecs[j])
    return labels, mat


def gram_matrix(lam, n=None, domain=GENERIC):
    return gram(lam, n, domain)[1]


def gram_rank(lam: Bicomposition, n: Optional[int] = None, domain=GENERIC) -> int:
    labels, mat = gram(lam, n, domain)
    if not labels:
        return 0
    return matrix_rank(mat, _spec_arg(domain))


def irreducible_dims(r: int, domain=GENERIC, n: Optional[int] = None) -> Dict[Bicomposition, int]:
    return {lam: gram_rank(lam, n, domain) for lam in bipartitions(r)}
