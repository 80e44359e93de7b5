"""The Hecke algebra of type B_r on its T_w basis.

Coefficients live in a *domain*: :data:`~qqschur.coeff_ring.GENERIC` (Laurent
polynomials in q, Q) or a :class:`~qqschur.coeff_ring.Specialization`.
Elements are dicts ``group index -> coefficient`` with no zero values.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Optional

from .coeff_ring import GENERIC, LaurentPoly
from .weyl_group_b import weyl_group

__all__ = ["HeckeAlgebra", "HeckeElt", "hecke_algebra"]


class HeckeElt:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: "HeckeAlgebra", terms: Optional[Dict[int, object]] = None):
        self.alg = alg
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    # arithmetic -----------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, HeckeElt):
            return None
        if other.alg is not self.alg:
            if other.alg.r != self.alg.r:
                raise ValueError("Hecke elements of different rank")
            if other.alg.domain != self.alg.domain:
                raise ValueError("Hecke elements over different coefficient domains")
        return other

    def __add__(self, other):
        other = self._check(other) if isinstance(other, HeckeElt) else self.alg.scalar(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, self.alg.zero) + c
        return HeckeElt(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElt(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, HeckeElt) else -self.alg.domain.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            self._check(other)
            return self.alg.mul(self, other)
        c = self.alg.domain.coerce(other)
        return HeckeElt(self.alg, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, other):
        c = self.alg.domain.coerce(other)
        return HeckeElt(self.alg, {k: c * v for k, v in self.terms.items()})

    def __pow__(self, e: int):
        out = self.alg.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, HeckeElt):
            return self.alg.r == other.alg.r and self.terms == other.terms
        return self == self.alg.scalar(other)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, w) -> object:
        return self.terms.get(self.alg.G.idx(w), self.alg.zero)

    def star(self) -> "HeckeElt":
        inv = self.alg.G.inv
        return HeckeElt(self.alg, {inv[k]: c for k, c in self.terms.items()})

    def support(self):
        return sorted(self.terms)

    def items_by_window(self):
        G = self.alg.G
        return sorted(((G.windows[k], c) for k, c in self.terms.items()))

    def to_json(self):
        return [[list(w), str(c)] for w, c in self.items_by_window()]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items_by_window():
            cs = c.pretty() if isinstance(c, LaurentPoly) else str(c)
            parts.append(f"({cs})*T{list(w)}")
        return " + ".join(parts)


class HeckeAlgebra:
    """ℋ(W_r) with parameters q, Q taken from ``domain``."""

    def __init__(self, r: int, domain=GENERIC):
        self.r = r
        self.domain = domain
        self.G = weyl_group(r)
        self.zero = domain.zero
        self._one = domain.one
        self._qq = [domain.Q] + [domain.q] * max(r - 1, 0)
        self._qm1 = [x - self._one for x in self._qq]

    def __repr__(self):
        return f"HeckeAlgebra({self.r}, {self.domain!r})"

    # constructors ---------------------------------------------------------
    def one(self) -> HeckeElt:
        return HeckeElt(self, {self.G.identity: self._one})

    def scalar(self, c) -> HeckeElt:
        return HeckeElt(self, {self.G.identity: self.domain.coerce(c)})

    def T(self, w) -> HeckeElt:
        return HeckeElt(self, {self.G.idx(w): self._one})

    def T_gen(self, i: int) -> HeckeElt:
        return HeckeElt(self, {self.G.s(i): self._one})

    def T_word(self, word: Iterable[int]) -> HeckeElt:
        x = self.one()
        for i in word:
            x = self.right_gen(x, i)
        return x

    def T_ij(self, i: int, j: int) -> HeckeElt:
        return self.T(self.G.s_ij(i, j))

    def elt(self, pairs) -> HeckeElt:
        """From (window-or-index, coefficient) pairs."""
        out = {}
        for w, c in pairs:
            k = self.G.idx(w)
            out[k] = out.get(k, self.zero) + self.domain.coerce(c)
        return HeckeElt(self, out)

    def from_json(self, data) -> HeckeElt:
        return self.elt((tuple(w), self.domain(LaurentPoly.parse(c))) for w, c in data)

    # multiplication -------------------------------------------------------
    def _rgen_terms(self, terms: Dict[int, object], i: int) -> Dict[int, object]:
        G = self.G
        out: Dict[int, object] = {}
        qi, qm1 = self._qq[i], self._qm1[i]
        bit = 1 << i
        for k, c in terms.items():
            k2 = G.rmul[k][i]
            if G.rdes[k] & bit:
                out[k2] = out.get(k2, self.zero) + qi * c
                if qm1:
                    out[k] = out.get(k, self.zero) + qm1 * c
            else:
                out[k2] = out.get(k2, self.zero) + c
        return {k: c for k, c in out.items() if c}

    def _lgen_terms(self, terms: Dict[int, object], i: int) -> Dict[int, object]:
        G = self.G
        out: Dict[int, object] = {}
        qi, qm1 = self._qq[i], self._qm1[i]
        bit = 1 << i
        for k, c in terms.items():
            k2 = G.lmul[k][i]
            if G.ldes[k] & bit:
                out[k2] = out.get(k2, self.zero) + qi * c
                if qm1:
                    out[k] = out.get(k, self.zero) + qm1 * c
            else:
                out[k2] = out.get(k2, self.zero) + c
        return {k: c for k, c in out.items() if c}

    def right_gen(self, x: HeckeElt, i: int) -> HeckeElt:
        return HeckeElt(self, self._rgen_terms(x.terms, i))

    def left_gen(self, i: int, x: HeckeElt) -> HeckeElt:
        return HeckeElt(self, self._lgen_terms(x.terms, i))

    def right_products(self, terms: Dict[int, object], ws: Iterable[int]) -> Dict[int, Dict[int, object]]:
        """x*T_w for each requested w, sharing reduced-word prefixes."""
        G = self.G
        memo: Dict[int, Dict[int, object]] = {G.identity: dict(terms)}

        def get(w):
            hit = memo.get(w)
            if hit is None:
                p, i = G.parent[w]
                hit = self._rgen_terms(get(p), i)
                memo[w] = hit
            return hit

        return {w: get(w) for w in ws}

    def mul(self, x: HeckeElt, y: HeckeElt) -> HeckeElt:
        if not x.terms or not y.terms:
            return HeckeElt(self)
        prods = self.right_products(x.terms, y.terms)
        out: Dict[int, object] = {}
        for w, c in y.terms.items():
            for k, v in prods[w].items():
                out[k] = out.get(k, self.zero) + v * c
        return HeckeElt(self, out)

    def product(self, *factors: HeckeElt) -> HeckeElt:
        out = self.one()
        for f in factors:
            out = out * f
        return out

    # structural elements --------------------------------------------------
    def _cross(self, i: int) -> HeckeElt:
        """T_{i,1} T_0 T_{1,i}."""
        G = self.G
        return self.T(G.from_word(list(range(i - 1, 0, -1)) + [0] + list(range(1, i))))

    def u_plus(self, a: int) -> HeckeElt:
        return self._u(a, +1)

    def u_minus(self, a: int) -> HeckeElt:
        return self._u(a, -1)

    def _u(self, a: int, sign: int) -> HeckeElt:
        if not 0 <= a <= self.r:
            raise ValueError(f"a={a} out of range for r={self.r}")
        d = self.domain
        out = self.one()
        for i in range(1, a + 1):
            if sign > 0:
                f = self.scalar(d.monomial(i - 1, 0)) + self._cross(i)
            else:
                f = self.scalar(d.monomial(i - 1, 1)) - self._cross(i)
            out = out * f
        return out

    def parabolic_sum(self, K: Iterable[int], signed: bool = False) -> HeckeElt:
        """Σ T_w over W_K, or Σ (-q)^{-ℓ(w)} T_w if signed."""
        G, d = self.G, self.domain
        out = {}
        for k in G.parabolic(K):
            if signed:
                l = G.length[k]
                c = d.monomial(-l, 0)
                out[k] = -c if l % 2 else c
            else:
                out[k] = self._one
        return HeckeElt(self, out)

    def x_elt(self, lam, hat: bool = False) -> HeckeElt:
        return self.parabolic_sum(_row_subset(lam.hat() if hat else lam))

    def y_elt(self, lam, hat: bool = False) -> HeckeElt:
        return self.parabolic_sum(_column_subset(lam.hat() if hat else lam), signed=True)

    def h_elt(self, a: int) -> HeckeElt:
        return self.T(self.G.w_block(a))

    def z_lambda(self, lam, form: int = 0) -> HeckeElt:
        """z_λ; ``form`` 1..3 give the alternative factorizations."""
        from .bitableaux import pi_hat_lambda, pi_lambda

        if not lam.is_bipartition():
            raise ValueError(f"{lam} is not a bipartition")
        r, a = self.r, lam.a
        if lam.size != r:
            raise ValueError("shape size does not match rank")
        up, um = self.u_plus(a), self.u_minus(r - a)
        x, xh, yh = self.x_elt(lam), self.x_elt(lam, hat=True), self.y_elt(lam, hat=True)
        h = self.h_elt(a)
        tph = self.T(pi_hat_lambda(lam))
        if form == 0:
            return self.product(up, x, h, tph, um, yh)
        if form == 1:
            return self.product(up, x, self.T(pi_lambda(lam)), h, um, yh)
        if form == 2:
            return self.product(up, h, um, xh, tph, yh)
        if form == 3:
            return self.product(up, x, h, um, tph, yh)
        raise ValueError("form must be 0..3")


def _row_subset(lam):
    return lam.row_subset()


def _column_subset(lam):
    from .bitableaux import t_lower

    if not lam.stripped().is_bipartition():
        raise ValueError(f"column subgroup needs a bipartition, got {lam}")
    J = set()
    for rows in t_lower(lam):
        for i in range(len(rows) - 1):
            for j in range(len(rows[i + 1])):
                J.add(rows[i][j])
    return frozenset(J)


@lru_cache(maxsize=None)
def hecke_algebra(r: int, domain=GENERIC) -> HeckeAlgebra:
    return HeckeAlgebra(r, domain)
