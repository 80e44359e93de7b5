"""Exact arithmetic over Z[q, q^-1, Q, Q^-1] plus elimination helpers.

Everything downstream is written against a small *coefficient domain*
interface (``zero``, ``one``, ``q``, ``Q``, ``monomial``, ``coerce``).
Two kinds of domains exist:

* :data:`GENERIC` -- elements are :class:`LaurentPoly`;
* :class:`Specialization` -- elements are ints/Fractions (rationals) or
  :class:`ModP` (prime field), with q and Q sent to chosen nonzero values.

Rank and kernel computations over the fraction field Q(q, Q) are done
fraction-free (Bareiss / fraction-free Gauss-Jordan); nothing ever stores a
rational function.

>>> q, Q = LaurentPoly.q(), LaurentPoly.Q()
>>> str((Q - 1) * (Q + 1))
'1*q^0*Q^2 - 1*q^0*Q^0'
>>> (q**-1 * q) == 1
True
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

try:  # fast multivariate polynomial arithmetic for big generic eliminations
    import flint as _flint
except ImportError:  # pragma: no cover - flint is a declared dependency
    _flint = None

__all__ = [
    "LaurentPoly",
    "ModP",
    "Specialization",
    "GENERIC",
    "GenericDomain",
    "specialize",
    "matrix_rank",
    "nullspace",
    "solve_exact",
    "SpanSolver",
    "NotLaurent",
]

Exp = Tuple[int, int]


class NotLaurent(ArithmeticError):
    """Raised when an exact division leaves the Laurent ring."""


class LaurentPoly:
    """Sparse element of Z[q^+-1, Q^+-1]; ``terms`` maps (i, j) -> c for c*q^i*Q^j."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self.terms: Dict[Exp, int] = {}
        elif isinstance(terms, dict):
            self.terms = {k: v for k, v in terms.items() if v}
        else:
            t: Dict[Exp, int] = {}
            for k, v in terms:
                t[k] = t.get(k, 0) + v
            self.terms = {k: v for k, v in t.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exp, int]) -> "LaurentPoly":
        # caller guarantees there are no zero coefficients
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, c: int = 1) -> "LaurentPoly":
        return cls._raw({(i, j): c} if c else {})

    @classmethod
    def q(cls) -> "LaurentPoly":
        return cls.monomial(1, 0)

    @classmethod
    def Q(cls) -> "LaurentPoly":
        return cls.monomial(0, 1)

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, 0, c)

    # arithmetic
    @staticmethod
    def _lift(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        t = dict(self.terms)
        for k, v in other.terms.items():
            s = t.get(k, 0) + v
            if s:
                t[k] = s
            else:
                del t[k]
        return LaurentPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly._raw({})
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            ((ea, ca),) = a.items()
            i0, j0 = ea
            return LaurentPoly._raw({(i0 + i, j0 + j): ca * c for (i, j), c in b.items()})
        t: Dict[Exp, int] = {}
        for (i1, j1), c1 in a.items():
            for (i2, j2), c2 in b.items():
                k = (i1 + i2, j1 + j2)
                t[k] = t.get(k, 0) + c1 * c2
        return LaurentPoly._raw({k: v for k, v in t.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """Units of the Laurent ring are exactly +-q^i Q^j."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise NotLaurent(f"{self} is not a unit")
        ((i, j), c), = self.terms.items()
        return LaurentPoly._raw({(-i, -j): c})

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self/other in the Laurent ring, or raise NotLaurent."""
        other = self._lift(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero LaurentPoly")
        if other.is_monomial():
            ((i, j), c), = other.terms.items()
            t = {}
            for (a, b), v in self.terms.items():
                qv, rv = divmod(v, c)
                if rv:
                    raise NotLaurent("coefficient not divisible")
                t[(a - i, b - j)] = qv
            return LaurentPoly._raw(t)
        num, (ni, nj) = self.normalized()
        den, (di, dj) = other.normalized()
        quo = _poly_divexact(num.terms, den.terms)
        return LaurentPoly._raw(quo) * LaurentPoly.monomial(ni - di, nj - dj)

    def normalized(self) -> Tuple["LaurentPoly", Exp]:
        """Return (p, (i, j)) with self = p * q^i Q^j and p a polynomial coprime to q, Q."""
        if not self.terms:
            return self, (0, 0)
        i0 = min(i for i, _ in self.terms)
        j0 = min(j for _, j in self.terms)
        if i0 == 0 and j0 == 0:
            return self, (0, 0)
        return LaurentPoly._raw({(i - i0, j - j0): c for (i, j), c in self.terms.items()}), (i0, j0)

    # comparisons
    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            return self.terms == {(0, 0): other}
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def evaluate(self, qv, Qv):
        """Substitute field values (ints, Fractions, ModP ...)."""
        out = 0
        for (i, j), c in self.terms.items():
            out = out + c * _power(qv, i) * _power(Qv, j)
        return out

    def degree_bounds(self):
        if not self.terms:
            return (0, 0, 0, 0)
        iis = [i for i, _ in self.terms]
        jjs = [j for _, j in self.terms]
        return min(iis), max(iis), min(jjs), max(jjs)

    # text forms
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for n, ((i, j), c) in enumerate(self.sorted_terms()):
            mono = f"{abs(c)}*q^{i}*Q^{j}"
            if n == 0:
                parts.append(mono if c > 0 else "-" + mono)
            else:
                parts.append(("+ " if c > 0 else "- ") + mono)
        return " ".join(parts)

    def pretty(self) -> str:
        """Human oriented form, e.g. ``Q*q - q^-1 + 2``."""
        if not self.terms:
            return "0"
        out = []
        for n, ((i, j), c) in enumerate(self.sorted_terms()):
            fac = []
            if j:
                fac.append("Q" if j == 1 else f"Q^{j}")
            if i:
                fac.append("q" if i == 1 else f"q^{i}")
            body = "*".join(fac)
            a = abs(c)
            if not body:
                body = str(a)
            elif a != 1:
                body = f"{a}*{body}"
            sign = "-" if c < 0 else "+"
            out.append((("-" if c < 0 else "") + body) if n == 0 else f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"LaurentPoly({self.pretty()!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the canonical form or friendlier input like ``'Q*q - q^-1 + 2'``."""
        s = text.replace(" ", "").replace("**", "^")
        if s in ("", "0"):
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        # split on +/- that are not part of an exponent
        chunks = re.findall(r"([+-])((?:[^+\-^]|\^-?\d+)+)", s)
        if "".join(sg + body for sg, body in chunks) != s:
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        out = cls()
        for sign, body in chunks:
            c, i, j = 1, 0, 0
            for fac in body.split("*"):
                m = re.fullmatch(r"([qQ])(?:\^(-?\d+))?", fac)
                if m:
                    e = int(m.group(2)) if m.group(2) is not None else 1
                    if m.group(1) == "q":
                        i += e
                    else:
                        j += e
                elif re.fullmatch(r"\d+", fac):
                    c *= int(fac)
                else:
                    raise ValueError(f"bad factor {fac!r} in {text!r}")
            out = out + cls.monomial(i, j, -c if sign == "-" else c)
        return out


def _power(x, e: int):
    if e >= 0:
        return x**e
    if isinstance(x, int):
        return Fraction(1, x) ** (-e)
    return (1 / x) ** (-e)


def _poly_divexact(num: Dict[Exp, int], den: Dict[Exp, int]) -> Dict[Exp, int]:
    """Exact division in Z[q, Q] by lex leading terms; raises NotLaurent otherwise."""
    rem = dict(num)
    lead = max(den)
    lc = den[lead]
    quo: Dict[Exp, int] = {}
    while rem:
        top = max(rem)
        di, dj = top[0] - lead[0], top[1] - lead[1]
        if di < 0 or dj < 0:
            raise NotLaurent("not divisible")
        c, r = divmod(rem[top], lc)
        if r:
            raise NotLaurent("not divisible")
        quo[(di, dj)] = c
        for (i, j), v in den.items():
            k = (i + di, j + dj)
            s = rem.get(k, 0) - c * v
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return quo


class ModP:
    """Element of the prime field GF(p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.p = p
        self.v = v % p

    def _c(self, o):
        if isinstance(o, ModP):
            return o.v
        if isinstance(o, int):
            return o
        if isinstance(o, Fraction):
            return o.numerator * pow(o.denominator, -1, self.p)
        return None

    def __add__(self, o):
        x = self._c(o)
        return NotImplemented if x is None else ModP(self.v + x, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        x = self._c(o)
        return NotImplemented if x is None else ModP(self.v - x, self.p)

    def __rsub__(self, o):
        x = self._c(o)
        return NotImplemented if x is None else ModP(x - self.v, self.p)

    def __mul__(self, o):
        x = self._c(o)
        return NotImplemented if x is None else ModP(self.v * x, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __truediv__(self, o):
        x = self._c(o)
        if x is None:
            return NotImplemented
        return ModP(self.v * pow(x, -1, self.p), self.p)

    def __rtruediv__(self, o):
        x = self._c(o)
        return NotImplemented if x is None else ModP(x * pow(self.v, -1, self.p), self.p)

    def __pow__(self, e: int):
        if e < 0:
            return ModP(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return ModP(pow(self.v, e, self.p), self.p)

    def __eq__(self, o):
        x = self._c(o)
        return NotImplemented if x is None else (self.v - x) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} (mod {self.p})"


class GenericDomain:
    """Coefficient domain Z[q^+-1, Q^+-1] itself."""

    is_generic = True
    name = "generic"

    def __init__(self):
        self.zero = LaurentPoly()
        self.one = LaurentPoly.const(1)
        self.q = LaurentPoly.q()
        self.Q = LaurentPoly.Q()

    def monomial(self, i: int, j: int):
        return LaurentPoly.monomial(i, j)

    def coerce(self, c):
        return c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)

    def __call__(self, a):
        return self.coerce(a)

    def unit_inverse(self, a):
        return a.inverse()

    def describe(self) -> dict:
        return {"kind": "generic"}

    def __repr__(self):
        return "GENERIC"


GENERIC = GenericDomain()


@dataclass(frozen=True)
class Specialization:
    """A ring map Z[q^+-1, Q^+-1] -> K with K = Q (``char == 0``) or GF(char).

    >>> s = Specialization(3, 5, char=7)
    >>> specialize(LaurentPoly.parse('Q*q'), s)
    1 (mod 7)
    """

    q_value: object = 1
    Q_value: object = 1
    char: int = 0
    is_generic: bool = field(default=False, init=False)

    def __post_init__(self):
        if self.char:
            if not _is_prime(self.char):
                raise ValueError(f"characteristic {self.char} is not prime")
            object.__setattr__(self, "q_value", int(self.q_value) % self.char)
            object.__setattr__(self, "Q_value", int(self.Q_value) % self.char)
        else:
            object.__setattr__(self, "q_value", _to_rational(self.q_value))
            object.__setattr__(self, "Q_value", _to_rational(self.Q_value))
        if self.q_value == 0 or self.Q_value == 0:
            raise ValueError("q and Q must be invertible")

    @property
    def name(self) -> str:
        f = f"GF({self.char})" if self.char else "QQ"
        return f"{f}[q={self.q_value},Q={self.Q_value}]"

    def _elt(self, x):
        if self.char:
            if isinstance(x, Fraction):
                return ModP(x.numerator, self.char) / x.denominator
            return ModP(int(x), self.char)
        return x

    @property
    def zero(self):
        return self._elt(0)

    @property
    def one(self):
        return self._elt(1)

    @property
    def q(self):
        return self._elt(self.q_value)

    @property
    def Q(self):
        return self._elt(self.Q_value)

    def monomial(self, i: int, j: int):
        return _power(self.q, i) * _power(self.Q, j)

    def coerce(self, c):
        if isinstance(c, LaurentPoly):
            return self(c)
        return self._elt(c)

    def __call__(self, a):
        if isinstance(a, LaurentPoly):
            out = self.zero
            for (i, j), c in a.terms.items():
                out = out + c * self.monomial(i, j)
            return out
        return self._elt(a)

    def unit_inverse(self, a):
        return 1 / a if not isinstance(a, int) else Fraction(1, a)

    def describe(self) -> dict:
        return {"kind": "prime" if self.char else "rational", "char": self.char,
                "q": str(self.q_value), "Q": str(self.Q_value)}


def _to_rational(x):
    if isinstance(x, str):
        x = Fraction(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def specialize(a: LaurentPoly, s: Specialization):
    """Image of ``a`` under the specialization ``s``."""
    return s(a)


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

_BIG_PRIME = (1 << 61) - 1


def _mod_value(a, qv, Qv, qi, Qi, p=_BIG_PRIME):
    if isinstance(a, int):
        return a % p
    t = 0
    for (i, j), c in a.terms.items():
        t += c * pow(qv if i >= 0 else qi, abs(i), p) * pow(Qv if j >= 0 else Qi, abs(j), p)
    return t % p


def _modp_echelon(rows: List[List[int]], p: int):
    """Gaussian elimination mod p; returns (rank, pivot rows, pivot cols) in pivot order."""
    m = [list(r) for r in rows]
    piv_rows, piv_cols = [], []
    ncols = len(m[0]) if m else 0
    active = list(range(len(m)))
    for c in range(ncols):
        pr = None
        for i in active:
            if m[i][c] % p:
                pr = i
                break
        if pr is None:
            continue
        active.remove(pr)
        inv = pow(m[pr][c], -1, p)
        row = [(x * inv) % p for x in m[pr]]
        m[pr] = row
        for i in active:
            f = m[i][c] % p
            if f:
                mi = m[i]
                for j in range(c, ncols):
                    if row[j]:
                        mi[j] = (mi[j] - f * row[j]) % p
        piv_rows.append(pr)
        piv_cols.append(c)
    return len(piv_rows), piv_rows, piv_cols


def _rank_mod(rows, p):
    if _flint is not None and p < 2 ** 63:
        return _flint.nmod_mat([[x % p for x in r] for r in rows], p).rank()
    return _modp_echelon(rows, p)[0]


def _rank_rational(rows: List[List[Fraction]]) -> int:
    # clear denominators row by row then integer Bareiss
    irows = []
    for r in rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
        irows.append([int(x * den) for x in r])
    if _flint is not None:
        return _flint.fmpz_mat(irows).rank()
    return _bareiss(irows, _IntOps)[0]


class _IntOps:
    @staticmethod
    def divexact(a, b):
        qv, r = divmod(a, b)
        assert r == 0
        return qv

    zero = 0


class _LaurentOps:
    @staticmethod
    def divexact(a, b):
        return a.divexact(b)

    zero = LaurentPoly()


class _FlintOps:
    zero = None

    @staticmethod
    def divexact(a, b):
        qv, r = divmod(a, b)
        if not r.is_zero():
            raise NotLaurent("inexact polynomial division")
        return qv


_FLINT_CTX = _flint.fmpz_mpoly_ctx.get(("q", "Q"), "lex") if _flint is not None else None
if _flint is not None:
    _FlintOps.zero = _FLINT_CTX.from_dict({})


def _bareiss(m, ops, pivot_order=None, jordan=False):
    """Fraction-free elimination in place.

    Returns (rank, pivot positions [(row, col)], matrix).  With
    ``jordan=True`` rows above each pivot are cleared too and every pivot
    entry ends up equal to the last pivot value.
    """
    ncols = len(m[0]) if m else 0
    prev = None
    used_rows = []
    pivots = []
    order = list(pivot_order or [])
    remaining = list(range(len(m)))
    while remaining:
        choice = None
        while order:
            r0, c0 = order.pop(0)
            if r0 in remaining and m[r0][c0]:
                choice = (r0, c0)
                break
        if choice is None:
            for cc in range(ncols):
                rr = next((i for i in remaining if m[i][cc]), None)
                if rr is not None:
                    choice = (rr, cc)
                    break
            if choice is None:
                break
        pr, pc = choice
        piv = m[pr][pc]
        remaining.remove(pr)
        prow = m[pr]
        for i in remaining + (used_rows if jordan else []):
            row = m[i]
            f = row[pc]
            for j in range(ncols):
                x = row[j]
                if f and prow[j]:
                    val = piv * x - f * prow[j]
                elif x:
                    val = piv * x
                else:
                    continue
                row[j] = val if prev is None else ops.divexact(val, prev)
        used_rows.append(pr)
        pivots.append((pr, pc))
        prev = piv
    return len(pivots), pivots, m


def _laurent_rows_to_poly(rows):
    """Scale each row by a monomial so that all entries become polynomials."""
    out = []
    for r in rows:
        r = [x if isinstance(x, LaurentPoly) else LaurentPoly.const(x) for x in r]
        nz = [x for x in r if x]
        if not nz:
            out.append(r)
            continue
        i0 = min(i for x in nz for (i, _) in x.terms)
        j0 = min(j for x in nz for (_, j) in x.terms)
        sh = LaurentPoly.monomial(-i0, -j0)
        out.append([x * sh if x else x for x in r])
    return out


def _to_backend(prow):
    if _flint is not None:
        return [_FLINT_CTX.from_dict(dict(x.terms)) for x in prow], _FlintOps
    return [x for x in prow], _LaurentOps


def _from_backend(x):
    if _flint is not None and not isinstance(x, LaurentPoly):
        return LaurentPoly({tuple(k): int(v) for k, v in x.to_dict().items()})
    return x


def _modular_guide(rows, rng):
    qv = rng.randrange(2, _BIG_PRIME - 1)
    Qv = rng.randrange(2, _BIG_PRIME - 1)
    qi, Qi = pow(qv, -1, _BIG_PRIME), pow(Qv, -1, _BIG_PRIME)
    mrows = [[_mod_value(x, qv, Qv, qi, Qi) for x in r] for r in rows]
    return _modp_echelon(mrows, _BIG_PRIME)


def _is_field_elt(x):
    return isinstance(x, (Fraction, ModP)) or isinstance(x, int)


def matrix_rank(M: Sequence[Sequence], spec: Optional[Specialization] = None, *, seed: int = 0,
                backend: str = "auto") -> int:
    """Exact rank.

    ``spec=None`` with LaurentPoly entries means rank over Q(q, Q).  With a
    specialization, entries are mapped first.  Plain int / Fraction / ModP
    matrices are handled over their own field.

    >>> q = LaurentPoly.q()
    >>> matrix_rank([[q, q**2], [LaurentPoly.const(1), q]])
    1
    """
    rows = [list(r) for r in M]
    if not rows or not rows[0]:
        return 0
    if spec is not None and not spec.is_generic:
        rows = [[spec(x) if isinstance(x, LaurentPoly) else spec.coerce(x) for x in r] for r in rows]
        return _field_rank(rows)
    if not any(isinstance(x, LaurentPoly) for r in rows for x in r):
        return _field_rank(rows)
    return _generic_rank(rows, seed=seed, backend=backend)


def _field_rank(rows):
    sample = next((x for r in rows for x in r if isinstance(x, ModP)), None)
    if sample is not None:
        p = sample.p
        return _rank_mod([[int(x) if isinstance(x, ModP) else ModP(x, p).v for x in r] for r in rows], p)
    return _rank_rational(rows)


def _generic_rank(rows, seed=0, backend="auto"):
    nrows, ncols = len(rows), len(rows[0])
    rng = random.Random(seed * 7919 + nrows * 31 + ncols)
    rk, prow, pcol = _modular_guide(rows, rng)
    if rk == min(nrows, ncols):
        # a nonzero minor modulo p is a nonzero minor generically
        return rk
    prows = _laurent_rows_to_poly(rows)
    order = list(zip(prow, pcol))
    if backend == "pure" or _flint is None:
        m = [list(r) for r in prows]
        return _bareiss(m, _LaurentOps, order)[0]
    m = [_to_backend(r)[0] for r in prows]
    return _bareiss(m, _FlintOps, order)[0]


def nullspace(M: Sequence[Sequence], spec: Optional[Specialization] = None, *, seed: int = 0):
    """Basis of {x : M x = 0}.

    Generic case: vectors with LaurentPoly (in fact polynomial) entries,
    obtained by fraction-free Gauss-Jordan.  Specialized case: field
    vectors.  Returns (dimension, basis).
    """
    rows = [list(r) for r in M]
    if not rows:
        return 0, []
    ncols = len(rows[0])
    if spec is not None and not spec.is_generic:
        rows = [[spec(x) if isinstance(x, LaurentPoly) else spec.coerce(x) for x in r] for r in rows]
        return _field_nullspace(rows, ncols)
    if not any(isinstance(x, LaurentPoly) for r in rows for x in r):
        return _field_nullspace(rows, ncols)
    rng = random.Random(seed * 104729 + len(rows))
    rk, prow, pcol = _modular_guide(rows, rng)
    prows = _laurent_rows_to_poly(rows)
    if _flint is not None:
        m = [_to_backend(r)[0] for r in prows]
        ops = _FlintOps
    else:
        m = [list(r) for r in prows]
        ops = _LaurentOps
    rank, pivots, m = _bareiss(m, ops, list(zip(prow, pcol)), jordan=True)
    pcols = {c: r for r, c in pivots}
    basis = []
    if pivots:
        d = m[pivots[-1][0]][pivots[-1][1]]
    for f in range(ncols):
        if f in pcols:
            continue
        vec = [LaurentPoly() for _ in range(ncols)]
        if not pivots:
            vec[f] = LaurentPoly.const(1)
        else:
            vec[f] = _from_backend(d)
            for c, r in pcols.items():
                x = m[r][f]
                if x:
                    vec[c] = -_from_backend(x)
        basis.append(_primitive(vec))
    return ncols - rank, basis


def _primitive(vec):
    """Divide out the content (integer gcd and common monomial) of a polynomial vector."""
    g = 0
    for x in vec:
        for c in x.terms.values():
            g = gcd(g, c)
    if g > 1:
        vec = [LaurentPoly._raw({k: v // g for k, v in x.terms.items()}) for x in vec]
    nz = [x for x in vec if x]
    if nz:
        i0 = min(i for x in nz for (i, _) in x.terms)
        j0 = min(j for x in nz for (_, j) in x.terms)
        if i0 or j0:
            sh = LaurentPoly.monomial(-i0, -j0)
            vec = [x * sh for x in vec]
    return vec


def _field_nullspace(rows, ncols):
    sample = next((x for r in rows for x in r if isinstance(x, ModP)), None)
    if sample is not None:
        one = ModP(1, sample.p)
        rows = [[x if isinstance(x, ModP) else one * x for x in r] for r in rows]
        zero = ModP(0, sample.p)
    else:
        rows = [[Fraction(x) for x in r] for r in rows]
        one, zero = Fraction(1), Fraction(0)
    m = rows
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [zero] * ncols
        v[f] = one
        for i, c in enumerate(pivots):
            v[c] = -m[i][f]
        basis.append(v)
    return ncols - len(pivots), basis


def solve_exact(columns: Sequence[Sequence[LaurentPoly]], target: Sequence[LaurentPoly],
                spec: Optional[Specialization] = None, *, seed: int = 0):
    """Coefficients x with sum_k x_k * columns[k] == target.

    Columns must be linearly independent.  Generically the answer must lie in
    the Laurent ring (NotLaurent is raised otherwise); with a specialization
    it lies in the field.  Every row is re-verified exactly.  Raises
    ValueError if target is outside the span.
    """
    k = len(columns)
    n = len(target)
    if k == 0:
        if any(target):
            raise ValueError("target not in span of empty family")
        return []
    generic = spec is None or spec.is_generic
    if not generic:
        cols = [[spec(x) if isinstance(x, LaurentPoly) else spec.coerce(x) for x in c] for c in columns]
        tgt = [spec(x) if isinstance(x, LaurentPoly) else spec.coerce(x) for x in target]
        rows = [[cols[j][i] for j in range(k)] + [-tgt[i]] for i in range(n)]
        dim, basis = _field_nullspace(rows, k + 1)
        sol = [v for v in basis if v[k]]
        if not sol:
            raise ValueError("target not in span")
        v = sol[0]
        x = [vi / v[k] for vi in v[:k]]
        for i in range(n):
            s = tgt[i] - sum((x[j] * cols[j][i] for j in range(k)), spec.zero)
            if s:
                raise ValueError("target not in span")
        return x
    lift = lambda x: x if isinstance(x, LaurentPoly) else LaurentPoly.const(x)
    A = [[lift(columns[j][i]) for j in range(k)] for i in range(n)]
    rng = random.Random(seed + 17 * n + k)
    rk, prow, pcol = _modular_guide(A, rng)
    if rk < k:
        # fall back to an exact rank to be sure
        rk = _generic_rank(A, seed=seed + 1)
        if rk < k:
            raise ValueError("columns are dependent")
        prow = _independent_rows_exact(A, k)
    sel = prow[:k]
    # Cramer via fraction-free Gauss-Jordan on the chosen k x (k+1) system
    sub = [[A[i][j] for j in range(k)] + [lift(target[i])] for i in sel]
    sub = _laurent_rows_to_poly(sub)
    m = [list(r) for r in sub]
    rank, piv, m = _bareiss(m, _LaurentOps, [(t, t) for t in range(k)], jordan=True)
    if rank < k or any(c >= k for _, c in piv):
        raise ValueError("target not in span")
    x = [None] * k
    for r, c in piv:
        x[c] = m[r][k].divexact(m[r][c])
    for i in range(n):
        s = lift(target[i])
        for j in range(k):
            if A[i][j] and x[j]:
                s = s - x[j] * A[i][j]
        if s:
            raise ValueError("target not in span")
    return x


def _independent_rows_exact(A, k):
    chosen = []
    for i in range(len(A)):
        trial = [A[t] for t in chosen + [i]]
        if _generic_rank(trial) == len(chosen) + 1:
            chosen.append(i)
            if len(chosen) == k:
                break
    return chosen


class SpanSolver:
    """Repeated exact solves against one fixed family of independent columns.

    The pivot minor is eliminated once (with an identity block recording the
    row operations); each :meth:`solve` is then a back-substitution followed
    by an exact check of every row.
    """

    def __init__(self, columns: Sequence[Sequence], spec: Optional[Specialization] = None, *, seed: int = 0):
        self.k = k = len(columns)
        self.n = n = len(columns[0]) if columns else 0
        self.generic = spec is None or spec.is_generic
        self.spec = spec
        self.cols = [[self._conv(x) for x in c] for c in columns]
        self.sparse = [[(i, x) for i, x in enumerate(c) if x] for c in self.cols]
        self.sel: List[int] = []
        self.rows: List[Tuple[int, object, list]] = []
        if k == 0:
            return
        A = [[self.cols[j][i] for j in range(k)] for i in range(n)]
        if self.generic:
            rng = random.Random(seed + 17 * n + k)
            rk, prow, _ = _modular_guide(A, rng)
            if rk == k:
                sel = prow[:k]
            else:
                if _generic_rank(A, seed=seed + 1) < k:
                    raise ValueError("columns are dependent")
                sel = _independent_rows_exact(A, k)
            one, zero = LaurentPoly.const(1), LaurentPoly()
            aug = [A[i] + [one if t == s else zero for t in range(k)] for s, i in enumerate(sel)]
            aug = _laurent_rows_to_poly(aug)
            rank, piv, m = _bareiss(aug, _LaurentOps, [(t, t) for t in range(k)], jordan=True)
        else:
            sel, piv, m = self._field_setup(A)
            rank = len(piv)
        if rank < k or any(c >= k for _, c in piv):
            raise ValueError("columns are dependent")
        self.sel = sel
        self.rows = [(c, m[r][c], m[r][k:]) for r, c in piv]

    def _conv(self, x):
        if self.generic:
            return x if isinstance(x, LaurentPoly) else LaurentPoly.const(x)
        return self.spec(x) if isinstance(x, LaurentPoly) else self.spec.coerce(x)

    def _field_setup(self, A):
        k = self.k
        zero, one = self.spec.zero, self.spec.one
        # greedy independent rows, then Gauss-Jordan on [sub | I]
        sel, basis = [], []
        for i, row in enumerate(A):
            trial = basis + [row]
            if _field_rank(trial) == len(trial):
                sel.append(i)
                basis = trial
                if len(sel) == k:
                    break
        if len(sel) < k:
            raise ValueError("columns are dependent")
        m = [list(A[i]) + [one if t == s else zero for t in range(k)] for s, i in enumerate(sel)]
        piv = []
        for c in range(k):
            pr = next(i for i in range(c, k) if m[i][c])
            m[c], m[pr] = m[pr], m[c]
            inv = one / m[c][c]
            m[c] = [x * inv for x in m[c]]
            for i in range(k):
                if i != c and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
            piv.append((c, c))
        return sel, piv, m

    def solve(self, target: Sequence) -> list:
        """Coefficients x with Σ x_j·columns[j] == target; ValueError if outside the span."""
        b = [self._conv(x) for x in target]
        if len(b) != self.n:
            raise ValueError("target has the wrong length")
        zero = LaurentPoly() if self.generic else self.spec.zero
        x = [zero] * self.k
        bs = [b[i] for i in self.sel]
        for c, p, y in self.rows:
            acc = zero
            for yt, bt in zip(y, bs):
                if yt and bt:
                    acc = acc + yt * bt
            x[c] = acc.divexact(p) if self.generic else acc
        acc = [zero] * self.n
        for j, col in enumerate(self.sparse):
            if x[j]:
                for i, a in col:
                    acc[i] = acc[i] + x[j] * a
        if any(acc[i] != b[i] for i in range(self.n)):
            raise ValueError("target not in span")
        return x
