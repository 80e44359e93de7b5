"""Hom spaces between the modules M^λ and the (Q,q)-Schur algebra.

A homomorphism M^λ -> M^μ is stored by the image of the cyclic generator
⟨t^λ⟩; the image of any bitabloid {t} = ⟨t^λ⟩T_w is then gen_image·T_w.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .bitableaux import Bicomposition, shapes
from .coeff_ring import GENERIC, SpanSolver, matrix_rank, nullspace
from .hecke_b import HeckeElt, hecke_algebra
from .perm_module import PermModule, perm_module
from .weyl_group_b import (AdmissibleTriple, admissible_triples, shape_subsets,
                           weyl_group)

__all__ = [
    "HomElt",
    "SchurElt",
    "phi_standard",
    "hom_oracle",
    "phi_by_coset",
    "coset_triple",
    "psi_parabolic",
    "double_coset_sum",
    "compose",
    "express_in_basis",
    "standard_basis",
    "weight_decompose",
    "star_adjoint",
    "identity_map",
    "hecke_to_omega_map",
    "structure_constants",
]

Vec = Dict[int, object]


def _domain_key(domain):
    return domain


class HomElt:
    """An ℋ-homomorphism M^λ -> M^μ, fixed by the image of ⟨t^λ⟩."""

    __slots__ = ("src", "tgt", "gen_image")

    def __init__(self, src: PermModule, tgt: PermModule, gen_image: Vec):
        self.src = src
        self.tgt = tgt
        self.gen_image = {k: c for k, c in gen_image.items() if c}

    @property
    def lam(self):
        return self.src.lam

    @property
    def mu(self):
        return self.tgt.lam

    @property
    def domain(self):
        return self.tgt.domain

    def image(self, vec: Vec) -> Vec:
        if not vec:
            return {}
        ws = {self.src.w_of[k] for k in vec}
        prods = self.tgt.act_many(self.gen_image, ws)
        out: Vec = {}
        zero = self.tgt.zero
        for k, c in vec.items():
            for j, v in prods[self.src.w_of[k]].items():
                out[j] = out.get(j, zero) + v * c
        return {k: c for k, c in out.items() if c}

    def columns(self) -> List[Vec]:
        """Images of all source basis vectors."""
        prods = self.tgt.act_many(self.gen_image, self.src.w_of)
        return [prods[w] for w in self.src.w_of]

    def matrix(self):
        """Dense matrix (rows: target basis, columns: source basis)."""
        cols = self.columns()
        n = len(self.tgt)
        zero = self.tgt.zero
        return [[cols[j].get(i, zero) for j in range(len(cols))] for i in range(n)]

    def commutation_defect(self) -> Optional[Tuple[int, int]]:
        """First (basis position, generator) where φ(b T_i) != φ(b) T_i, or None."""
        cols = self.columns()
        for i in range(self.src.r):
            table = self.src.gen_table(i)
            for k in range(len(self.src)):
                lhs: Vec = {}
                zero = self.tgt.zero
                for k2, e in table[k]:
                    for j, v in cols[k2].items():
                        lhs[j] = lhs.get(j, zero) + v * e
                lhs = {j: c for j, c in lhs.items() if c}
                if lhs != self.tgt.act_gen(cols[k], i):
                    return (k, i)
        return None

    def is_well_defined(self) -> bool:
        return self.commutation_defect() is None

    def __add__(self, other: "HomElt"):
        out = dict(self.gen_image)
        for k, c in other.gen_image.items():
            out[k] = out.get(k, self.tgt.zero) + c
        return HomElt(self.src, self.tgt, out)

    def __rmul__(self, c):
        c = self.domain.coerce(c)
        return HomElt(self.src, self.tgt, {k: c * v for k, v in self.gen_image.items()})

    def __eq__(self, other):
        return (isinstance(other, HomElt) and self.lam == other.lam and self.mu == other.mu
                and self.gen_image == other.gen_image)

    def __hash__(self):
        return hash((self.lam, self.mu, frozenset(self.gen_image.items())))

    def to_json(self):
        return {"lambda": self.lam.to_json(), "mu": self.mu.to_json(),
                "gen_image": self.tgt.vec_json(self.gen_image)}

    def __repr__(self):
        return f"HomElt({self.lam} -> {self.mu}: {self.tgt.elt(self.gen_image)!r})"


# ---------------------------------------------------------------------------
# the standard basis
# ---------------------------------------------------------------------------

def _check_triple(triple: AdmissibleTriple):
    ok = any(t.d == triple.d and t.v == triple.v and t.u == triple.u
             for t in admissible_triples(triple.lam, triple.mu))
    if not ok:
        raise ValueError(f"{triple} is not admissible for ({triple.lam}, {triple.mu})")


def _triple_data(triple: AdmissibleTriple):
    lam, mu = triple.lam, triple.mu
    G = weyl_group(lam.size)
    J, At, A = shape_subsets(lam)
    I, Bt, B = shape_subsets(mu)
    d, v, u = triple.d, triple.v, triple.u
    K = G.conjugate_meet(Bt, d, At)           # B~d ∩ A~
    K1 = G.conjugate_meet(B, d, A)            # Bd ∩ A
    S = K1 & G.transport(J, v)                # S(v)
    ud = G.mul(u, d)
    return G, J, At, A, I, K, K1, S, ud


def double_coset_sum(H, K, w: int, L) -> HeckeElt:
    G = H.G
    return H.elt((x, 1) for x in G.double_coset(K, w, L))


def _mackey_base(M: PermModule, G, I, S, ud) -> Vec:
    """⟨t^μ⟩·(Σ_{w ∈ W_I ud W_S} T_w) written as ⟨t^μ⟩·T_ud·Y."""
    L = G.transport(I, ud) & S
    ys = G.coset_reps(L, (), S)
    targets = []
    for y in ys:
        w = G.mul(ud, y)
        assert G.length[w] == G.length[ud] + G.length[y]
        targets.append(w)
    prods = M.act_many(M.generator(), targets)
    out: Vec = {}
    for w in targets:
        for k, c in prods[w].items():
            out[k] = out.get(k, M.zero) + c
    return {k: c for k, c in out.items() if c}


def phi_standard(triple: AdmissibleTriple, domain=GENERIC, variant: str = "full",
                 check: bool = False) -> HomElt:
    """The standard basis map φ^{(d,v,u)}_{μ,λ}.

    ``variant="full"`` evaluates the Frobenius lift over every coset
    representative f, rewriting u_a^+x_J T_{f^-1} inside the Mackey summand
    of v (s0 letters contribute Q).  ``variant="literal"`` keeps only the f
    with f^-1 in W_J v W_K, each weighted by q^{ℓ(g)}.
    """
    if check:
        _check_triple(triple)
    lam, mu = triple.lam, triple.mu
    Ml, Mm = perm_module(lam, domain), perm_module(mu, domain)
    H = hecke_algebra(lam.size, domain)
    G, J, At, A, I, K, K1, S, ud = _triple_data(triple)
    v = triple.v
    base = _mackey_base(Mm, G, I, S, ud)
    xJ = H.x_elt(lam)
    ysets = G.coset_reps(S, (), K1)
    total: Vec = {}
    zero = Mm.zero

    def add(vec, c):
        for k, x in vec.items():
            total[k] = total.get(k, zero) + x * c

    for f in G.coset_reps(K, (), At):
        scale = G.qlt_monomial(f, domain, inverse=True)
        if variant == "literal":
            finv = G.inv[f]
            x, dd, _ = G.decompose(finv, J, K)
            if dd != v:
                continue
            c = scale * domain.monomial(G.length[x], 0)
            add(Mm.act_many(base, [f])[f], c)
            continue
        word = G.reduced_word(G.inv[f])
        nb0 = sum(1 for i in word if i == 0)
        xh = xJ
        for i in word:
            if i:
                xh = H.right_gen(xh, i)
        targets = {}
        for y in ysets:
            c = xh.terms.get(G.mul(v, y))
            if c:
                yf = G.mul(y, f)
                targets[yf] = c
        if not targets:
            continue
        scale = scale * domain.monomial(0, nb0)
        prods = Mm.act_many(base, targets)
        for yf, c in targets.items():
            add(prods[yf], c * scale)
    lv = domain.monomial(G.length[v], 0)
    gen = {k: x * lv for k, x in total.items() if x}
    return HomElt(Ml, Mm, gen)


@lru_cache(maxsize=None)
def standard_basis(lam: Bicomposition, mu: Bicomposition, domain=GENERIC,
                   variant: str = "full") -> Tuple[Tuple[AdmissibleTriple, HomElt], ...]:
    return tuple((t, phi_standard(t, domain, variant)) for t in admissible_triples(lam, mu))


def identity_map(lam: Bicomposition, domain=GENERIC) -> HomElt:
    M = perm_module(lam, domain)
    return HomElt(M, M, M.generator())


def hecke_to_omega_map(lam: Bicomposition, domain=GENERIC) -> HomElt:
    """φ_{λ,ω}: ℋ = M^ω -> M^λ, premultiplication by u_a^+x_λ."""
    omega = Bicomposition((), (1,) * lam.size)
    return HomElt(perm_module(omega, domain), perm_module(lam, domain), {0: domain.one})


# ---------------------------------------------------------------------------
# brute-force commutant
# ---------------------------------------------------------------------------

class _UnionFind:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.p[max(a, b)] = min(a, b)


def _oracle_system(lam: Bicomposition, mu: Bicomposition, domain):
    """Linear conditions on m = φ(⟨t^λ⟩) making {t} -> m T_{w_t} ℋ-linear.

    Conditions: m T_{w_t}(T_i - c_i) = 0 whenever t s_i is not row standard.
    For t = t^λ these are eigenvector conditions, solved exactly by making m
    constant on the orbits they generate; the rest become matrix rows.
    """
    Ml, Mm = perm_module(lam, domain), perm_module(mu, domain)
    r = lam.size
    stuck = []  # (basis position, i) with t s_i not row standard
    for i in range(r):
        table = Ml.gen_table(i)
        for k in range(len(Ml)):
            if table[k] and table[k][0][0] == k and len(table[k]) == 1:
                stuck.append((k, i))
    eig = sorted({i for k, i in stuck if k == 0})
    uf = _UnionFind(len(Mm))
    for i in eig:
        for k, entry in enumerate(Mm.gen_table(i)):
            k2 = entry[0][0]
            if k2 != k:
                uf.union(k, k2)
    roots = sorted({uf.find(k) for k in range(len(Mm))})
    col = {rt: j for j, rt in enumerate(roots)}
    # an orbit is admissible only if every member satisfies the eigen condition
    unknowns = []
    members: Dict[int, List[int]] = {}
    for k in range(len(Mm)):
        members.setdefault(col[uf.find(k)], []).append(k)
    for j in range(len(roots)):
        vec = {k: Mm.one for k in members[j]}
        ok = True
        for i in eig:
            c_i = domain.Q if i == 0 else domain.q
            img = Mm.act_gen(vec, i)
            if img != {k: c_i * x for k, x in vec.items()}:
                ok = False
                break
        if ok:
            unknowns.append(vec)
    need = sorted({Ml.w_of[k] for k, i in stuck if k != 0})
    rows = []
    seen = set()
    for vec in unknowns:
        pass
    prods = [Mm.act_many(vec, need) for vec in unknowns]
    for k, i in stuck:
        if k == 0:
            continue
        w = Ml.w_of[k]
        c_i = domain.Q if i == 0 else domain.q
        imgs = []
        for p in prods:
            x = p[w]
            y = Mm.act_gen(x, i)
            for kk, val in x.items():
                y[kk] = y.get(kk, Mm.zero) - c_i * val
            imgs.append({kk: val for kk, val in y.items() if val})
        coords = sorted({kk for im in imgs for kk in im})
        for kk in coords:
            row = tuple(im.get(kk, Mm.zero) for im in imgs)
            key = tuple(str(x) for x in row)
            if key not in seen:
                seen.add(key)
                rows.append(list(row))
    return unknowns, rows


def hom_oracle(lam: Bicomposition, mu: Bicomposition, spec=None, *, want_basis: bool = False):
    """dim Hom_ℋ(M^λ, M^μ) by direct solution of the commutation equations.

    ``spec=None`` means generic parameters.  Returns ``(dim, basis)`` where
    basis is a list of gen-image vectors (empty unless ``want_basis``).
    """
    domain = GENERIC if spec is None else spec
    unknowns, rows = _oracle_system(lam, mu, domain)
    n = len(unknowns)
    if not rows:
        dim, coeffs = n, [[domain.one if a == b else domain.zero for a in range(n)] for b in range(n)]
    elif not want_basis:
        rank = matrix_rank(rows, None if spec is None else spec)
        return n - rank, []
    else:
        dim, coeffs = nullspace(rows, None if spec is None else spec)
    if not want_basis:
        return dim, []
    zero = domain.zero
    basis = []
    for cvec in coeffs:
        g: Vec = {}
        for c, vec in zip(cvec, unknowns):
            if c:
                for k, x in vec.items():
                    g[k] = g.get(k, zero) + c * x
        basis.append({k: x for k, x in g.items() if x})
    return dim, basis


# ---------------------------------------------------------------------------
# maps labelled by double cosets, parabolic maps
# ---------------------------------------------------------------------------

def coset_triple(lam, mu, c: int) -> AdmissibleTriple:
    """The admissible triple (d,v,u) with d in the type-A part and u d v^-1 = c."""
    G = weyl_group(lam.size)
    hits = [t for t in admissible_triples(lam, mu) if t.in_delta and t.c == c]
    if len(hits) != 1:
        raise ValueError(f"{G.elt(c)} does not label a unique standard map")
    return hits[0]


def delta_cosets(lam, mu) -> List[int]:
    """𝒟^Δ_{I,J}: distinguished double coset representatives in the symmetric group."""
    G = weyl_group(lam.size)
    J, _, _ = shape_subsets(lam)
    I, _, _ = shape_subsets(mu)
    return G.coset_reps(I, J, range(1, lam.size))


def phi_by_coset(lam, mu, c: int, domain=GENERIC) -> HomElt:
    G = weyl_group(lam.size)
    if c not in delta_cosets(lam, mu):
        raise ValueError(f"{G.elt(c)} is not a type-A distinguished double coset representative")
    return phi_standard(coset_triple(lam, mu, c), domain)


def psi_parabolic(I: Iterable[int], J: Iterable[int], d: int, r: int, domain=GENERIC) -> HeckeElt:
    """Image of x_J under ψ^d_{I,J}: x_J ℋ -> x_I ℋ, namely Σ_{w ∈ W_I d W_J} T_w."""
    G = weyl_group(r)
    I, J = frozenset(I), frozenset(J)
    if G.minimal_in_double_coset(I, d, J) != d:
        raise ValueError("d is not a distinguished double coset representative")
    return double_coset_sum(hecke_algebra(r, domain), I, d, J)


def psi_is_well_defined(I, J, d: int, r: int, domain=GENERIC) -> bool:
    """X = ψ(x_J) must satisfy T_s X = c X for s in I (so X ∈ x_Iℋ) and X T_s = c X for s in J."""
    H = hecke_algebra(r, domain)
    X = psi_parabolic(I, J, d, r, domain)
    for s in I:
        if H.left_gen(s, X) != X * (domain.Q if s == 0 else domain.q):
            return False
    for s in J:
        if H.right_gen(X, s) != X * (domain.Q if s == 0 else domain.q):
            return False
    return True


# ---------------------------------------------------------------------------
# algebra structure
# ---------------------------------------------------------------------------

def compose(f: HomElt, g: HomElt) -> HomElt:
    """g ∘ f for f: M^λ -> M^μ and g: M^μ -> M^ν."""
    if f.mu != g.lam:
        raise ValueError("maps are not composable")
    return HomElt(f.src, g.tgt, g.image(f.gen_image))


@dataclass(frozen=True)
class SchurElt:
    """Coordinates in the standard basis: records (μ, λ, triple, coefficient)."""

    terms: Tuple[Tuple[Bicomposition, Bicomposition, AdmissibleTriple, object], ...]

    def to_json(self):
        out = []
        for mu, lam, t, c in self.terms:
            d, v, u = t.windows()
            out.append({"mu": mu.to_json(), "lambda": lam.to_json(), "d": list(d.window),
                        "v": list(v.window), "u": list(u.window), "coeff": str(c)})
        return out


@lru_cache(maxsize=None)
def _basis_solver(lam, mu, domain, variant):
    basis = standard_basis(lam, mu, domain, variant)
    n = len(perm_module(mu, domain))
    zero = domain.zero
    cols = [[phi.gen_image.get(i, zero) for i in range(n)] for _, phi in basis]
    return SpanSolver(cols, None if domain.is_generic else domain)


def express_in_basis(h: HomElt, variant: str = "full") -> SchurElt:
    """Exact coordinates of h in the standard basis of Hom(M^λ, M^μ)."""
    domain = h.domain
    basis = standard_basis(h.lam, h.mu, domain, variant)
    zero = domain.zero
    target = [h.gen_image.get(i, zero) for i in range(len(h.tgt))]
    x = _basis_solver(h.lam, h.mu, domain, variant).solve(target)
    return SchurElt(tuple((h.mu, h.lam, t, c) for (t, _), c in zip(basis, x) if c))


def structure_constants(lam, mu, nu, domain=GENERIC, variant: str = "full"):
    """φ_b ∘ φ_a in coordinates, for all a: λ->μ and b: μ->ν standard maps."""
    A = standard_basis(lam, mu, domain, variant)
    Bb = standard_basis(mu, nu, domain, variant)
    out = {}
    for ta, fa in A:
        for tb, fb in Bb:
            out[(ta, tb)] = express_in_basis(compose(fa, fb), variant)
    return out


def weight_decompose(vectors: Sequence[Dict[Bicomposition, Vec]]):
    """Split tensor-space vectors (dicts shape -> vector) by weight."""
    out: Dict[Bicomposition, list] = {}
    for vec in vectors:
        for lam, comp in vec.items():
            if comp:
                out.setdefault(lam, []).append(comp)
    return out


def star_adjoint(h: HomElt) -> HomElt:
    """The form adjoint M^μ -> M^λ: ⟨h x, y⟩_μ = ⟨x, h* y⟩_λ."""
    src, tgt = h.src, h.tgt
    G = src.G
    col0 = {}
    # h*(⟨t^μ⟩) = Σ_k ⟨h(b_k), ⟨t^μ⟩⟩_μ / ⟨b_k, b_k⟩_λ · b_k
    cols = h.columns()
    for k, img in enumerate(cols):
        c = img.get(0)
        if c:
            w = src.w_of[k]
            col0[k] = c * tgt.form_weight(0) * G.qlt_monomial(w, src.domain, inverse=True)
    return HomElt(tgt, src, col0)


def schur_dimension(n: int, r: int) -> int:
    return sum(len(admissible_triples(lam, mu)) for lam in shapes(n, r) for mu in shapes(n, r))
