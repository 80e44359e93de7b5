"""Signed permutations: the Weyl group of type B_r.

Conventions used throughout the package:

* an element is stored by its window ``(w(1), ..., w(r))`` and acts on the
  *right*: ``i.w`` is written ``w(i)`` in code;
* products read left to right, ``(v * w)(i) = w(v(i))``;
* ``s0`` negates 1, ``s_i`` (1 <= i < r) swaps i and i+1 (and their negatives);
* the simple roots are ``e_1`` (index 0) and ``e_{i+1} - e_i`` (index i);
  a root ``x`` is moved to ``x.w`` with ``e_k.w = sign(w(k)) e_|w(k)|``.

Whole-group tables are built once per rank by :func:`weyl_group`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .coeff_ring import GENERIC

__all__ = [
    "SignedPerm",
    "WeylGroupB",
    "weyl_group",
    "AdmissibleTriple",
    "admissible_triples",
    "alpha0_transport",
    "subset_str",
    "parse_subset",
]

SimpleSubset = FrozenSet[int]


@dataclass(frozen=True, order=True)
class SignedPerm:
    window: Tuple[int, ...]

    def __post_init__(self):
        r = len(self.window)
        if sorted(abs(x) for x in self.window) != list(range(1, r + 1)):
            raise ValueError(f"{list(self.window)} is not a signed permutation window")

    @property
    def rank(self) -> int:
        return len(self.window)

    @classmethod
    def identity(cls, r: int) -> "SignedPerm":
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def generator(cls, r: int, i: int) -> "SignedPerm":
        w = list(range(1, r + 1))
        if i == 0:
            w[0] = -1
        elif 1 <= i < r:
            w[i - 1], w[i] = w[i], w[i - 1]
        else:
            raise ValueError(f"no generator s_{i} in W_{r}")
        return cls(tuple(w))

    def __call__(self, i: int) -> int:
        return self.window[i - 1] if i > 0 else -self.window[-i - 1]

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        # apply self first, then other
        return SignedPerm(tuple(other(x) for x in self.window))

    def inverse(self) -> "SignedPerm":
        out = [0] * self.rank
        for k, x in enumerate(self.window, start=1):
            out[abs(x) - 1] = k if x > 0 else -k
        return SignedPerm(tuple(out))

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.rank + 1))

    def n_negative(self) -> int:
        return sum(1 for x in self.window if x < 0)

    def length(self) -> int:
        return _length(self.window)

    def __str__(self):
        return "[" + ",".join(str(x) for x in self.window) + "]"

    @classmethod
    def parse(cls, text: str) -> "SignedPerm":
        body = text.strip().strip("[]()")
        return cls(tuple(int(x) for x in body.split(",") if x.strip()))


def _apply_root(root: Tuple[int, ...], window: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(root)
    for k, c in enumerate(root):
        if c:
            wk = window[k]
            out[abs(wk) - 1] += c if wk > 0 else -c
    return tuple(out)


def _is_positive(root: Sequence[int]) -> bool:
    for c in reversed(root):
        if c:
            return c > 0
    raise ValueError("zero vector is not a root")


@lru_cache(maxsize=None)
def positive_roots(r: int) -> Tuple[Tuple[int, ...], ...]:
    out = []
    for i in range(r):
        e = [0] * r
        e[i] = 1
        out.append(tuple(e))
    for i in range(r):
        for j in range(i + 1, r):
            e = [0] * r
            e[i], e[j] = 1, 1
            out.append(tuple(e))
            e = [0] * r
            e[i], e[j] = -1, 1
            out.append(tuple(e))
    return tuple(out)


def _length(window: Sequence[int]) -> int:
    return sum(1 for a in positive_roots(len(window)) if not _is_positive(_apply_root(a, window)))


@lru_cache(maxsize=None)
def simple_roots(r: int) -> Tuple[Tuple[int, ...], ...]:
    out = []
    for i in range(r):
        e = [0] * r
        if i == 0:
            e[0] = 1
        else:
            e[i], e[i - 1] = 1, -1
        out.append(tuple(e))
    return tuple(out)


def subset_str(K: Iterable[int]) -> str:
    return "[" + ",".join(str(k) for k in sorted(K)) + "]"


def parse_subset(text: str) -> SimpleSubset:
    body = text.strip().strip("[]")
    return frozenset(int(x) for x in body.split(",") if x.strip())


def _mask(K: Iterable[int]) -> int:
    m = 0
    for k in K:
        m |= 1 << k
    return m


class WeylGroupB:
    """All of W_r with multiplication / descent / length tables (indices into ``elements``)."""

    def __init__(self, r: int):
        if r < 0:
            raise ValueError("r must be non-negative")
        self.r = r
        elems = []
        for perm in permutations(range(1, r + 1)):
            for signs in product((1, -1), repeat=r):
                elems.append(tuple(s * p for s, p in zip(signs, perm)))
        lens = {w: _length(w) for w in elems}
        elems.sort(key=lambda w: (lens[w], w))
        self.windows: List[Tuple[int, ...]] = elems
        self.elements: List[SignedPerm] = [SignedPerm(w) for w in elems]
        self.index: Dict[Tuple[int, ...], int] = {w: k for k, w in enumerate(elems)}
        self.length: List[int] = [lens[w] for w in elems]
        self.n_neg: List[int] = [sum(1 for x in w if x < 0) for w in elems]
        self.identity = self.index[tuple(range(1, r + 1))]
        self.gens = [self.index[SignedPerm.generator(r, i).window] for i in range(r)] if r else []
        # right multiplication by generators: w -> w s_i
        self.rmul: List[List[int]] = []
        self.lmul: List[List[int]] = []
        for w in elems:
            row_r, row_l = [], []
            for i in range(r):
                row_r.append(self.index[tuple(_gen_value(r, i, x) for x in w)])
                row_l.append(self.index[_left_gen(w, i)])
            self.rmul.append(row_r)
            self.lmul.append(row_l)
        self.rdes = [sum(1 << i for i in range(r) if self.length[self.rmul[k][i]] < self.length[k])
                     for k in range(len(elems))]
        self.ldes = [sum(1 << i for i in range(r) if self.length[self.lmul[k][i]] < self.length[k])
                     for k in range(len(elems))]
        self.inv = [self.index[SignedPerm(w).inverse().window] for w in elems]
        # parent for reduced words: strip the smallest right descent
        self.parent: List[Optional[Tuple[int, int]]] = []
        for k in range(len(elems)):
            if k == self.identity:
                self.parent.append(None)
            else:
                d = self.rdes[k]
                i = (d & -d).bit_length() - 1
                self.parent.append((self.rmul[k][i], i))
        self._words: Dict[int, Tuple[int, ...]] = {}
        self._parabolic: Dict[int, FrozenSet[int]] = {}

    def __len__(self):
        return len(self.windows)

    # element helpers
    def idx(self, w) -> int:
        if isinstance(w, int):
            return w
        if isinstance(w, SignedPerm):
            return self.index[w.window]
        return self.index[tuple(w)]

    def elt(self, k: int) -> SignedPerm:
        return self.elements[k]

    def mul(self, x: int, y: int) -> int:
        wx, wy = self.windows[x], self.windows[y]
        return self.index[tuple(wy[v - 1] if v > 0 else -wy[-v - 1] for v in wx)]

    def reduced_word(self, k: int) -> Tuple[int, ...]:
        k = self.idx(k)
        w = self._words.get(k)
        if w is None:
            p = self.parent[k]
            w = () if p is None else self.reduced_word(p[0]) + (p[1],)
            self._words[k] = w
        return w

    def from_word(self, word: Iterable[int]) -> int:
        k = self.identity
        for i in word:
            k = self.rmul[k][i]
        return k

    def qlt_exponents(self, k: int) -> Tuple[int, int]:
        """(a, b) with q~(w) = q^a Q^b, b = number of negative window entries."""
        k = self.idx(k)
        b = self.n_neg[k]
        return self.length[k] - b, b

    def qlt_monomial(self, k, domain=GENERIC, inverse: bool = False):
        a, b = self.qlt_exponents(k)
        return domain.monomial(-a, -b) if inverse else domain.monomial(a, b)

    # special elements
    def s(self, i: int) -> int:
        return self.gens[i]

    def s_ij(self, i: int, j: int) -> int:
        if not (1 <= i <= self.r and 1 <= j <= self.r):
            raise ValueError("indices out of range")
        if i <= j:
            return self.from_word(range(i, j))
        return self.from_word(range(i - 1, j - 1, -1))

    def w_block(self, a: int) -> int:
        """The element (s_{1,r})^a that cycles the first a letters behind the rest."""
        if not 0 <= a <= self.r:
            raise ValueError("a out of range")
        if self.r == 0:
            return self.identity
        c = self.s_ij(1, self.r)
        k = self.identity
        for _ in range(a):
            k = self.mul(k, c)
        return k

    # roots and subsets
    def root_image(self, root: Tuple[int, ...], k: int) -> Tuple[int, ...]:
        return _apply_root(root, self.windows[k])

    def simple_index(self, root: Tuple[int, ...]) -> Optional[int]:
        try:
            return simple_roots(self.r).index(root)
        except ValueError:
            return None

    def transport(self, K: Iterable[int], k: int) -> FrozenSet[int]:
        """Simple roots lying in K.w (the other images are not simple)."""
        out = set()
        roots = simple_roots(self.r)
        for i in K:
            j = self.simple_index(_apply_root(roots[i], self.windows[k]))
            if j is not None:
                out.add(j)
        return frozenset(out)

    def conjugate_meet(self, K: Iterable[int], k: int, L: Iterable[int]) -> FrozenSet[int]:
        """K.w intersected with L."""
        return self.transport(K, k) & frozenset(L)

    def full_subset(self) -> FrozenSet[int]:
        return frozenset(range(self.r))

    def parabolic(self, K: Iterable[int]) -> FrozenSet[int]:
        m = _mask(K)
        hit = self._parabolic.get(m)
        if hit is None:
            gens = [i for i in range(self.r) if m >> i & 1]
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                new = []
                for x in frontier:
                    for i in gens:
                        y = self.rmul[x][i]
                        if y not in seen:
                            seen.add(y)
                            new.append(y)
                frontier = new
            hit = frozenset(seen)
            self._parabolic[m] = hit
        return hit

    def coset_reps(self, K: Iterable[int] = (), L: Iterable[int] = (), M: Optional[Iterable[int]] = None):
        """Distinguished representatives D_K cap D_L^{-1} (cap W_M), sorted by index."""
        km, lm = _mask(K), _mask(L)
        pool = range(len(self)) if M is None else sorted(self.parabolic(M))
        return [k for k in pool if not (self.ldes[k] & km) and not (self.rdes[k] & lm)]

    def double_coset(self, K, d: int, L) -> List[int]:
        WK, WL = self.parabolic(K), self.parabolic(L)
        return sorted({self.mul(self.mul(x, d), y) for x in WK for y in WL})

    def minimal_in_double_coset(self, K, k: int, L) -> int:
        km, lm = _mask(K), _mask(L)
        while True:
            dl = self.ldes[k] & km
            if dl:
                k = self.lmul[k][(dl & -dl).bit_length() - 1]
                continue
            dr = self.rdes[k] & lm
            if dr:
                k = self.rmul[k][(dr & -dr).bit_length() - 1]
                continue
            return k

    def decompose(self, k: int, K, L) -> Tuple[int, int, int]:
        """Unique w = x d y with d in D_{K,L}, x^{-1} in D^K_{K cap L d^{-1}}, y in W_L."""
        d = self.minimal_in_double_coset(K, k, L)
        inner = self.conjugate_meet(L, self.inv[d], K)
        xs = [x for x in self.parabolic(K) if not (self.rdes[x] & _mask(inner))]
        WL = self.parabolic(L)
        found = []
        dinv = self.inv[d]
        for x in xs:
            y = self.mul(dinv, self.mul(self.inv[x], k))
            if y in WL:
                found.append((x, d, y))
        if len(found) != 1:
            raise AssertionError("double coset factorization is not unique")
        return found[0]

    def has_additive_length(self, *ks: int) -> bool:
        prod_k = self.identity
        for k in ks:
            prod_k = self.mul(prod_k, k)
        return self.length[prod_k] == sum(self.length[k] for k in ks)


def _gen_value(r: int, i: int, x: int) -> int:
    if i == 0:
        return -x if abs(x) == 1 else x
    a = abs(x)
    if a == i:
        return (i + 1) if x > 0 else -(i + 1)
    if a == i + 1:
        return i if x > 0 else -i
    return x


def _left_gen(w: Tuple[int, ...], i: int) -> Tuple[int, ...]:
    # (s_i w)(k) = w(s_i(k))
    w = list(w)
    if i == 0:
        w[0] = -w[0]
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


@lru_cache(maxsize=None)
def weyl_group(r: int) -> WeylGroupB:
    return WeylGroupB(r)


def alpha0_transport(w: SignedPerm, J: Iterable[int]) -> bool:
    """Whether e_1 lies in J.w; cross-checked against the commuting/length criterion."""
    G = weyl_group(w.rank)
    k = G.idx(w)
    J = frozenset(J)
    answer = 0 in G.transport(J, k)
    if G.r:
        s0 = G.s(0)
        other = (0 in J and G.mul(s0, k) == G.mul(k, s0)
                 and G.length[G.mul(s0, k)] == G.length[k] + 1)
        assert answer == other
    return answer


# ---------------------------------------------------------------------------
# admissible triples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AdmissibleTriple:
    lam: object
    mu: object
    d: int
    v: int
    u: int

    @property
    def group(self) -> WeylGroupB:
        return weyl_group(self.lam.size)

    @property
    def c(self) -> int:
        G = self.group
        return G.mul(G.mul(self.u, self.d), G.inv[self.v])

    @property
    def in_delta(self) -> bool:
        """d lies in the type A part, i.e. in D^Delta_{B,A}."""
        return self.d in self.group.parabolic(range(1, self.lam.size))

    def windows(self):
        G = self.group
        return tuple(G.elt(k) for k in (self.d, self.v, self.u))

    def __str__(self):
        d, v, u = self.windows()
        return f"(d={d}, v={v}, u={u})"


def shape_subsets(lam) -> Tuple[FrozenSet[int], FrozenSet[int], FrozenSet[int]]:
    """(row subset J, A-tilde, A) attached to a bicomposition."""
    r, a = lam.size, lam.a
    J = lam.row_subset()
    full = frozenset(range(r))
    At = full if a == r else full - {a}
    A = At - {0}
    return J, At, A


def admissible_triples(lam, mu) -> List[AdmissibleTriple]:
    if lam.size != mu.size:
        raise ValueError("shapes of different sizes")
    G = weyl_group(lam.size)
    J, At, A = shape_subsets(lam)
    I, Bt, B = shape_subsets(mu)
    out = []
    for d in G.coset_reps(Bt, At):
        BdA = G.conjugate_meet(B, d, A)
        for v in G.coset_reps(J, BdA, A):
            vdinv = G.mul(v, G.inv[d])
            BJ = G.conjugate_meet(J, vdinv, B)
            for u in G.coset_reps(I, BJ, B):
                out.append(AdmissibleTriple(lam, mu, d, v, u))
    return out
