"""The right ℋ-module M^λ = u_a^+ x_λ ℋ on its bitabloid basis.

Vectors are dicts ``basis position -> coefficient``; :class:`ModuleElt` is a
thin immutable wrapper used at the public surface.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, List, Optional

from .bitableaux import (Bicomposition, act_tableau, bitabloids, canonical, is_row_standard,
                         tableau_json, tableau_parse, t_upper)
from .coeff_ring import GENERIC, LaurentPoly
from .hecke_b import HeckeElt, hecke_algebra
from .weyl_group_b import weyl_group

__all__ = ["PermModule", "ModuleElt", "perm_module"]

Vec = Dict[int, object]


def _axpy(out: Vec, vec: Vec, c, zero):
    for k, v in vec.items():
        out[k] = out.get(k, zero) + v * c


def _clean(vec: Vec) -> Vec:
    return {k: v for k, v in vec.items() if v}


class PermModule:
    def __init__(self, lam: Bicomposition, domain=GENERIC):
        self.lam = lam
        self.domain = domain
        self.r = lam.size
        self.a = lam.a
        self.G = weyl_group(self.r)
        self.H = hecke_algebra(self.r, domain)
        self.zero = domain.zero
        self.one = domain.one
        self.basis: List = bitabloids(lam)
        self.index = {t: k for k, t in enumerate(self.basis)}
        base = t_upper(lam)
        self.w_of: List[int] = []
        G = self.G
        for t in self.basis:
            # t^λ fixes positions, so w is read off entry by entry
            self.w_of.append(G.idx(_perm_from(base, t)))
        self.pos_of_w = {w: k for k, w in enumerate(self.w_of)}
        self.minus = [any(x < 0 for row in t[1] for x in row) for t in self.basis]
        self._gens = [self._build_gen(i) for i in range(self.r)]

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return f"PermModule({self.lam}, {self.domain!r})"

    # generator action -----------------------------------------------------
    def _build_gen(self, i: int):
        G = self.G
        d = self.domain
        c_i = d.Q if i == 0 else d.q
        s = G.elt(G.s(i))
        table = []
        for k, t in enumerate(self.basis):
            ts = act_tableau(t, s)
            if is_row_standard(ts):
                k2 = self.index[ts]
                w = self.w_of[k]
                if G.rdes[w] >> i & 1:
                    entry = [(k2, c_i)]
                    if c_i - self.one:
                        entry.append((k, c_i - self.one))
                else:
                    entry = [(k2, self.one)]
            else:
                # i and i+1 (or 1, for s0) sit together in a row
                entry = [(k, c_i)]
            table.append(entry)
        return table

    def gen_table(self, i: int):
        return self._gens[i]

    def act_gen(self, vec: Vec, i: int) -> Vec:
        table = self._gens[i]
        out: Vec = {}
        for k, c in vec.items():
            for k2, e in table[k]:
                out[k2] = out.get(k2, self.zero) + c * e
        return _clean(out)

    def act_word(self, vec: Vec, word: Iterable[int]) -> Vec:
        for i in word:
            vec = self.act_gen(vec, i)
        return vec

    def act_many(self, vec: Vec, ws: Iterable[int]) -> Dict[int, Vec]:
        """vec*T_w for every requested group index w (prefix sharing)."""
        G = self.G
        memo: Dict[int, Vec] = {G.identity: dict(vec)}

        def get(w):
            hit = memo.get(w)
            if hit is None:
                p, i = G.parent[w]
                hit = self.act_gen(get(p), i)
                memo[w] = hit
            return hit

        return {w: get(w) for w in ws}

    def act(self, vec: Vec, h: HeckeElt) -> Vec:
        prods = self.act_many(vec, h.terms)
        out: Vec = {}
        for w, c in h.terms.items():
            _axpy(out, prods[w], c, self.zero)
        return _clean(out)

    # structure -------------------------------------------------------------
    def generator(self) -> Vec:
        return {0: self.one}

    def basis_vector(self, k: int) -> Vec:
        return {k: self.one}

    def position(self, t) -> int:
        return self.index[canonical(t)]

    def embed(self, vec: Vec) -> HeckeElt:
        """Image in ℋ under {t} -> u_a^+ x_λ T_w."""
        H = self.H
        gen = H.u_plus(self.a) * H.x_elt(self.lam)
        tw = H.elt((self.w_of[k], c) for k, c in vec.items())
        return gen * tw

    def is_minus(self, k: int) -> bool:
        return self.minus[k]

    def minus_part(self, vec: Vec) -> Vec:
        return {k: c for k, c in vec.items() if self.minus[k]}

    def plus_part(self, vec: Vec) -> Vec:
        return {k: c for k, c in vec.items() if not self.minus[k]}

    def form_weight(self, k: int):
        return self.G.qlt_monomial(self.w_of[k], self.domain)

    def bilinear(self, v1: Vec, v2: Vec):
        out = self.zero
        for k, c in v1.items():
            c2 = v2.get(k)
            if c2:
                out = out + c * c2 * self.form_weight(k)
        return out

    def dense(self, vec: Vec) -> list:
        return [vec.get(k, self.zero) for k in range(len(self.basis))]

    def elt(self, vec: Vec) -> "ModuleElt":
        return ModuleElt(self, vec)

    def vec_json(self, vec: Vec):
        return [[tableau_json(self.basis[k]), str(c)] for k, c in sorted(vec.items())]

    def vec_from_json(self, data) -> Vec:
        out: Vec = {}
        for t, c in data:
            k = self.position(tableau_parse(t))
            out[k] = out.get(k, self.zero) + self.domain(LaurentPoly.parse(c))
        return _clean(out)


def _perm_from(base, t):
    from .bitableaux import perm_between

    return perm_between(base, t)


class ModuleElt:
    __slots__ = ("module", "coeffs")

    def __init__(self, module: PermModule, coeffs: Optional[Vec] = None):
        self.module = module
        self.coeffs = _clean(dict(coeffs or {}))

    @property
    def shape(self):
        return self.module.lam

    def __add__(self, other: "ModuleElt"):
        out = dict(self.coeffs)
        _axpy(out, other.coeffs, self.module.one, self.module.zero)
        return ModuleElt(self.module, out)

    def __neg__(self):
        return ModuleElt(self.module, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return ModuleElt(self.module, self.module.act(self.coeffs, other))
        c = self.module.domain.coerce(other)
        return ModuleElt(self.module, {k: v * c for k, v in self.coeffs.items()})

    def __rmul__(self, other):
        c = self.module.domain.coerce(other)
        return ModuleElt(self.module, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, ModuleElt):
            return NotImplemented
        return self.module.lam == other.module.lam and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.module.lam, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def terms(self):
        return [(self.module.basis[k], c) for k, c in sorted(self.coeffs.items())]

    def minus_part(self):
        return ModuleElt(self.module, self.module.minus_part(self.coeffs))

    def plus_part(self):
        return ModuleElt(self.module, self.module.plus_part(self.coeffs))

    def to_json(self):
        return self.module.vec_json(self.coeffs)

    def __repr__(self):
        parts = []
        for t, c in self.terms():
            cs = c.pretty() if isinstance(c, LaurentPoly) else str(c)
            parts.append(f"({cs})*{{{tableau_json(t)}}}")
        return " + ".join(parts) or "0"


@lru_cache(maxsize=None)
def perm_module(lam: Bicomposition, domain=GENERIC) -> PermModule:
    return PermModule(lam, domain)
