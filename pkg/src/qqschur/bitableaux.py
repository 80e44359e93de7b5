"""Shapes and tableaux.

A bitableau is stored as a pair ``(first, second)`` of tuples of rows, each
row a tuple of ints.  The same container is used for bitabloids (canonical
row-standard representative) and for tableaux "of a type", whose entries are
the row labels ``1..n`` and ``+-(n+1)..+-(2n)``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Dict, List, Optional, Tuple

from .weyl_group_b import SignedPerm, weyl_group

__all__ = [
    "Bicomposition",
    "shapes",
    "bipartitions",
    "lex_key",
    "associated",
    "t_upper",
    "t_upper_hat",
    "t_lower",
    "t_lower_hat",
    "pi_lambda",
    "pi_hat_lambda",
    "act_tableau",
    "perm_between",
    "is_row_standard",
    "is_standard",
    "canonical",
    "bitabloids",
    "standard_tableaux",
    "bitabloid_count",
    "typed_tableaux",
    "typed_tableaux_direct",
    "is_positive",
    "is_of_type",
    "is_semistandard",
    "row_equivalent",
    "reading_word",
    "order_key",
    "total_order_less",
    "alpha_map",
    "beta_map",
    "gamma_map",
    "alpha_inverse",
    "beta_inverse",
    "gamma_inverse",
    "epsilon",
    "sigma_map",
    "e_tableau",
    "flatten_shape",
    "flatten_tableau",
    "tableau_json",
]

Rows = Tuple[Tuple[int, ...], ...]
Tab = Tuple[Rows, Rows]


@dataclass(frozen=True)
class Bicomposition:
    first: Tuple[int, ...]
    second: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "first", tuple(int(x) for x in self.first))
        object.__setattr__(self, "second", tuple(int(x) for x in self.second))
        if any(x < 0 for x in self.first + self.second):
            raise ValueError("negative part")

    @property
    def a(self) -> int:
        return sum(self.first)

    @property
    def size(self) -> int:
        return sum(self.first) + sum(self.second)

    @property
    def n(self) -> int:
        return len(self.first) + len(self.second)

    def is_bipartition(self) -> bool:
        f, s = self.first, self.second
        return all(f[i] >= f[i + 1] for i in range(len(f) - 1)) and all(
            s[i] >= s[i + 1] for i in range(len(s) - 1))

    def hat(self) -> "Bicomposition":
        return Bicomposition(self.second, self.first)

    def stripped(self) -> "Bicomposition":
        return Bicomposition(tuple(x for x in self.first if x), tuple(x for x in self.second if x))

    def padded(self, n: int) -> "Bicomposition":
        """Zero parts appended to the second component until there are n parts."""
        s = self.stripped()
        if s.n > n:
            raise ValueError(f"{self} has more than {n} nonzero parts")
        return Bicomposition(s.first, s.second + (0,) * (n - s.n))

    def cells(self):
        """(component, row, column) for every box, rows and columns from 0."""
        out = []
        for comp, parts in enumerate((self.first, self.second)):
            for i, p in enumerate(parts):
                for j in range(p):
                    out.append((comp, i, j))
        return out

    def row_subset(self):
        """Simple root indices i with i, i+1 in one row of the row-reading tableau."""
        t = t_upper(self)
        J = set()
        for rows in t:
            for row in rows:
                for x, y in zip(row, row[1:]):
                    J.add(x)
        return frozenset(J)

    def column_lengths(self, comp: int) -> List[int]:
        parts = self.first if comp == 0 else self.second
        width = max(parts, default=0)
        return [sum(1 for p in parts if p > j) for j in range(width)]

    def __str__(self):
        return "((" + ",".join(map(str, self.first)) + "),(" + ",".join(map(str, self.second)) + "))"

    def to_json(self):
        return {"first": list(self.first), "second": list(self.second)}

    @classmethod
    def parse(cls, text) -> "Bicomposition":
        if isinstance(text, Bicomposition):
            return text
        if isinstance(text, dict):
            return cls(tuple(text["first"]), tuple(text["second"]))
        s = text.replace(" ", "").replace("−", "-")
        m = re.fullmatch(r"\(\(([-\d,^]*)\),\(([-\d,^]*)\)\)", s)
        if not m:
            raise ValueError(f"cannot parse bicomposition {text!r}")

        def comp(body):
            if body in ("", "-"):
                return ()
            out = []
            for tok in body.split(","):
                if "^" in tok:
                    base, e = tok.split("^")
                    out.extend([int(base)] * int(e))
                else:
                    out.append(int(tok))
            return tuple(out)

        return cls(comp(m.group(1)), comp(m.group(2)))


def _weak_compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for x in range(total, -1, -1):
        for rest in _weak_compositions(total - x, parts - 1):
            yield (x,) + rest


def shapes(n: int, r: int) -> List[Bicomposition]:
    """All bicompositions of r with n parts in total (zero parts allowed)."""
    out = []
    for a in range(r, -1, -1):
        for k in range(n, -1, -1):
            for f in _weak_compositions(a, k):
                for s in _weak_compositions(r - a, n - k):
                    out.append(Bicomposition(f, s))
    return out


def _partitions(m: int, maxpart: Optional[int] = None):
    if maxpart is None:
        maxpart = m
    if m == 0:
        yield ()
        return
    for x in range(min(m, maxpart), 0, -1):
        for rest in _partitions(m - x, x):
            yield (x,) + rest


def lex_key(lam: Bicomposition):
    """Sort key realizing the ordering of bipartitions: larger a first, then
    lexicographically decreasing components."""
    s = lam.stripped()
    return (-s.a, tuple(-x for x in s.first) + (1,), tuple(-x for x in s.second) + (1,))


def bipartitions(r: int, n: Optional[int] = None) -> List[Bicomposition]:
    """Bipartitions of r (zero parts stripped, or padded to n parts if n given)."""
    out = []
    for a in range(r, -1, -1):
        for f in _partitions(a):
            for s in _partitions(r - a):
                lam = Bicomposition(f, s)
                if n is not None:
                    if lam.n > n:
                        continue
                    lam = lam.padded(n)
                out.append(lam)
    out.sort(key=lex_key)
    return out


def associated(lam: Bicomposition, mu: Bicomposition) -> bool:
    return sorted(lam.first) == sorted(mu.first) and sorted(lam.second) == sorted(mu.second)


# ---------------------------------------------------------------------------
# the four special tableaux
# ---------------------------------------------------------------------------

def _fill_rows(parts, start):
    rows, k = [], start
    for p in parts:
        rows.append(tuple(range(k, k + p)))
        k += p
    return tuple(rows), k


def _fill_cols(parts, start):
    grid = [[0] * p for p in parts]
    k = start
    for j in range(max(parts, default=0)):
        for i, p in enumerate(parts):
            if p > j:
                grid[i][j] = k
                k += 1
    return tuple(tuple(r) for r in grid), k


def t_upper(lam: Bicomposition) -> Tab:
    f, k = _fill_rows(lam.first, 1)
    s, _ = _fill_rows(lam.second, k)
    return (f, s)


def t_upper_hat(lam: Bicomposition) -> Tab:
    s, k = _fill_rows(lam.second, 1)
    f, _ = _fill_rows(lam.first, k)
    return (f, s)


def t_lower(lam: Bicomposition) -> Tab:
    f, k = _fill_cols(lam.first, 1)
    s, _ = _fill_cols(lam.second, k)
    return (f, s)


def t_lower_hat(lam: Bicomposition) -> Tab:
    s, k = _fill_cols(lam.second, 1)
    f, _ = _fill_cols(lam.first, k)
    return (f, s)


def _entries(t: Tab):
    for comp, rows in enumerate(t):
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                yield (comp, i, j), x


def perm_between(t1: Tab, t2: Tab) -> SignedPerm:
    """The w with t1.w = t2 (both bitableaux of one shape)."""
    pos2 = dict(_entries(t2))
    r = sum(1 for _ in _entries(t1))
    win = [0] * r
    for p, x in _entries(t1):
        y = pos2[p]
        if x > 0:
            win[x - 1] = y
        else:
            win[-x - 1] = -y
    return SignedPerm(tuple(win))


def pi_lambda(lam: Bicomposition) -> SignedPerm:
    return perm_between(t_upper(lam), t_lower(lam))


def pi_hat_lambda(lam: Bicomposition) -> SignedPerm:
    return perm_between(t_upper_hat(lam), t_lower_hat(lam))


def act_tableau(t: Tab, w: SignedPerm) -> Tab:
    return tuple(tuple(tuple(w(x) for x in row) for row in rows) for rows in t)


def is_row_standard(t: Tab) -> bool:
    first, second = t
    for row in first:
        if any(x <= 0 for x in row):
            return False
    for rows in t:
        for row in rows:
            if any(x >= y for x, y in zip(row, row[1:])):
                return False
    return True


def is_standard(t: Tab) -> bool:
    if not is_row_standard(t):
        return False
    if any(x < 0 for _, x in _entries(t)):
        return False
    for rows in t:
        for i in range(len(rows) - 1):
            for j in range(len(rows[i + 1])):
                if j < len(rows[i]) and rows[i][j] >= rows[i + 1][j]:
                    return False
                if j >= len(rows[i]):
                    return False
    return True


def canonical(t: Tab) -> Tab:
    """Row-standard representative of the bitabloid containing t."""
    first, second = t
    return (tuple(tuple(sorted(abs(x) for x in row)) for row in first),
            tuple(tuple(sorted(row)) for row in second))


@lru_cache(maxsize=None)
def _bitabloid_data(lam: Bicomposition):
    G = weyl_group(lam.size)
    base = t_upper(lam)
    seen = {}
    for k in range(len(G)):
        t = act_tableau(base, G.elt(k))
        if is_row_standard(t):
            seen[t] = k
    items = sorted(seen.items(), key=lambda kv: kv[1])
    return tuple(t for t, _ in items), tuple(k for _, k in items)


def bitabloids(lam: Bicomposition) -> List[Tab]:
    """Row-standard representatives, ordered by the length order of their w."""
    return list(_bitabloid_data(lam)[0])


def bitabloid_count(lam: Bicomposition) -> int:
    r, a = lam.size, lam.a
    den = 1
    for p in lam.first + lam.second:
        den *= factorial(p)
    return 2 ** (r - a) * factorial(r) // den


def standard_tableaux(lam: Bicomposition) -> List[Tab]:
    G = weyl_group(lam.size)
    base = t_upper(lam)
    out = set()
    for k in range(len(G)):
        if G.n_neg[k]:
            continue
        t = act_tableau(base, G.elt(k))
        if is_standard(t):
            out.add(t)
    return sorted(out)


def row_index(t: Tab, n: int) -> Dict[int, int]:
    """|entry| -> row label (j for row j of the first part, n+j for the second)."""
    out = {}
    for comp, rows in enumerate(t):
        for i, row in enumerate(rows):
            for x in row:
                out[abs(x)] = (i + 1) if comp == 0 else n + i + 1
    return out


# ---------------------------------------------------------------------------
# tableaux of a given type
# ---------------------------------------------------------------------------

def _relabel(base: Tab, t: Tab, n: int) -> Tab:
    where = {}
    for comp, rows in enumerate(t):
        for i, row in enumerate(rows):
            for x in row:
                if comp == 0:
                    where[abs(x)] = i + 1
                else:
                    where[abs(x)] = (n + i + 1) if x > 0 else -(n + i + 1)
    return tuple(tuple(tuple(where[x] for x in row) for row in rows) for rows in base)


def _unlabel(base: Tab, T: Tab, mu: Bicomposition, n: int) -> Tab:
    first = [[] for _ in mu.first]
    second = [[] for _ in mu.second]
    for (comp, i, j), x in _entries(base):
        v = T[comp][i][j]
        if 0 < v <= n:
            first[v - 1].append(x)
        elif v > n:
            second[v - n - 1].append(x)
        else:
            second[-v - n - 1].append(-x)
    t = (tuple(tuple(r) for r in first), tuple(tuple(r) for r in second))
    return canonical(t)


def _n_of(mu: Bicomposition, n: Optional[int]) -> int:
    return mu.n if n is None else n


def alpha_map(lam, mu, t, n=None) -> Tab:
    return _relabel(t_upper(lam), t, _n_of(mu, n))


def beta_map(lam, mu, t, n=None) -> Tab:
    return _relabel(t_upper_hat(lam), t, _n_of(mu, n))


def gamma_map(lam, mu, t, n=None) -> Tab:
    return _relabel(t_lower_hat(lam), t, _n_of(mu, n))


def alpha_inverse(lam, mu, T, n=None) -> Tab:
    return _unlabel(t_upper(lam), T, mu, _n_of(mu, n))


def beta_inverse(lam, mu, T, n=None) -> Tab:
    return _unlabel(t_upper_hat(lam), T, mu, _n_of(mu, n))


def gamma_inverse(lam, mu, T, n=None) -> Tab:
    return _unlabel(t_lower_hat(lam), T, mu, _n_of(mu, n))


def typed_tableaux(lam: Bicomposition, mu: Bicomposition, kind: str = "all", n=None) -> List[Tab]:
    """Tableaux of shape lam and type mu: ``all``, ``positive`` or ``semistandard``."""
    nn = _n_of(mu, n)
    allT = sorted({alpha_map(lam, mu, t, nn) for t in bitabloids(mu)}) if lam.size == mu.size else []
    if kind == "all":
        return allT
    if kind == "positive":
        return [T for T in allT if is_positive(T, nn)]
    if kind == "semistandard":
        return [T for T in allT if is_semistandard(T, nn)]
    raise ValueError(f"unknown kind {kind!r}")


def typed_tableaux_direct(lam: Bicomposition, mu: Bicomposition, n=None) -> List[Tab]:
    """Independent enumeration of all tableaux of a type (multiset fillings plus signs)."""
    nn = _n_of(mu, n)
    letters = []
    for i, m in enumerate(mu.first):
        letters += [i + 1] * m
    for i, m in enumerate(mu.second):
        letters += [nn + i + 1] * m
    cells = lam.cells()
    if len(cells) != len(letters):
        return []
    out = set()
    for arr in set(permutations(letters)):
        big = [k for k, x in enumerate(arr) if x > nn]
        for signs in product((1, -1), repeat=len(big)):
            vals = list(arr)
            for k, s in zip(big, signs):
                vals[k] *= s
            out.add(_from_cells(lam, cells, vals))
    return sorted(out)


def _from_cells(lam, cells, vals) -> Tab:
    first = [[0] * p for p in lam.first]
    second = [[0] * p for p in lam.second]
    for (comp, i, j), v in zip(cells, vals):
        (first if comp == 0 else second)[i][j] = v
    return (tuple(tuple(r) for r in first), tuple(tuple(r) for r in second))


def is_of_type(lam: Bicomposition, mu: Bicomposition, T: Tab, n: Optional[int] = None) -> bool:
    """Membership in the set of λ-bitableaux of type μ, tested entry by entry."""
    nn = _n_of(mu, n)
    lam = lam.stripped()
    if tuple(len(row) for row in T[0]) != lam.first or tuple(len(row) for row in T[1]) != lam.second:
        return False
    want = Counter()
    for i, m in enumerate(mu.first):
        if m:
            want[i + 1] = m
    for i, m in enumerate(mu.second):
        if m:
            want[nn + i + 1] = m
    got = Counter()
    for rows in T:
        for row in rows:
            for x in row:
                if x == 0 or (x < 0 and -x <= nn):
                    return False
                got[abs(x)] += 1
    return got == want


def is_positive(T: Tab, n: int) -> bool:
    first, second = T
    return all(x > 0 for row in first for x in row) and all(x > n for row in second for x in row)


def is_semistandard(T: Tab, n: int) -> bool:
    if not is_positive(T, n):
        return False
    for rows in T:
        for row in rows:
            if any(x > y for x, y in zip(row, row[1:])):
                return False
        for i in range(len(rows) - 1):
            for j in range(len(rows[i + 1])):
                if rows[i][j] >= rows[i + 1][j]:
                    return False
    return True


def is_row_weak(T: Tab) -> bool:
    return all(x <= y for rows in T for row in rows for x, y in zip(row, row[1:]))


def row_equivalent(A: Tab, B: Tab) -> bool:
    return all(sorted(ra) == sorted(rb) for ca, cb in zip(A, B) for ra, rb in zip(ca, cb))


# ---------------------------------------------------------------------------
# the total order on positive tableaux of a type
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _reading_positions(lam: Bicomposition):
    """Position of i in the column-reading hat tableau, for i = 1..r, plus columns."""
    th = t_lower_hat(lam)
    pos = {}
    for p, x in _entries(th):
        pos[x] = p
    r = lam.size
    colkey = {}
    for i in range(1, r + 1):
        comp, _, j = pos[i]
        colkey.setdefault((comp, j), i)
    # columns ordered by their smallest entry (second component first)
    cols = sorted(colkey, key=colkey.get)
    colrank = {c: k for k, c in enumerate(cols)}
    return tuple(pos[i] for i in range(1, r + 1)), tuple(colrank[(pos[i][0], pos[i][2])] for i in range(1, r + 1))


def reading_word(lam: Bicomposition, T: Tab) -> Tuple[int, ...]:
    """(T(1), ..., T(r)): the entry of T sitting where i sits in the column-reading hat tableau."""
    pos, _ = _reading_positions(lam)
    return tuple(T[c][i][j] for (c, i, j) in pos)


def order_key(lam: Bicomposition, T: Tab):
    w = reading_word(lam, T)
    _, col = _reading_positions(lam)
    r, a = lam.size, lam.a
    head = sum(w[: r - a])
    ncols = max(col, default=-1) + 1
    vals = sorted(set(w))
    dom = 0
    for jv in vals:
        for k in range(ncols):
            dom += sum(1 for i in range(r) if w[i] <= jv and col[i] <= k)
    return (head, -dom, w)


def total_order_less(lam: Bicomposition, A: Tab, B: Tab) -> bool:
    return order_key(lam, A) < order_key(lam, B)


def column_content(lam: Bicomposition, T: Tab):
    w = reading_word(lam, T)
    _, col = _reading_positions(lam)
    return Counter(zip(w, col))


def dominance_geq(lam: Bicomposition, A: Tab, B: Tab) -> bool:
    """Clause (iii) comparison: the counts for A dominate those for B everywhere."""
    wa, wb = reading_word(lam, A), reading_word(lam, B)
    _, col = _reading_positions(lam)
    ncols = max(col, default=-1) + 1
    r = lam.size
    for jv in sorted(set(wa) | set(wb)):
        for k in range(ncols):
            na = sum(1 for i in range(r) if wa[i] <= jv and col[i] <= k)
            nb = sum(1 for i in range(r) if wb[i] <= jv and col[i] <= k)
            if na < nb:
                return False
    return True


# ---------------------------------------------------------------------------
# sigma and E_T  (formal sums are dicts tableau -> int)
# ---------------------------------------------------------------------------

def epsilon(T: Tab) -> int:
    neg = sum(1 for row in T[1] for x in row if x < 0)
    return -1 if neg % 2 else 1


def sigma_map(T, n: int) -> Dict[Tab, int]:
    """Signed sum over all sign changes of entries greater than n."""
    cells = [(c, i, j) for (c, i, j), x in _entries(T) if x > n]
    out: Dict[Tab, int] = {}
    for signs in product((1, -1), repeat=len(cells)):
        arr = [[list(row) for row in rows] for rows in T]
        for (c, i, j), s in zip(cells, signs):
            arr[c][i][j] *= s
        T2 = tuple(tuple(tuple(row) for row in rows) for rows in arr)
        out[T2] = out.get(T2, 0) + epsilon(T2)
    return {k: v for k, v in out.items() if v}


def sigma_of_sum(vec: Dict[Tab, int], n: int) -> Dict[Tab, int]:
    out: Dict[Tab, int] = {}
    for T, c in vec.items():
        for T2, e in sigma_map(T, n).items():
            out[T2] = out.get(T2, 0) + c * e
    return {k: v for k, v in out.items() if v}


def _row_arrangements(T: Tab):
    """All distinct arrays row equivalent to T."""
    rows = [row for rows in T for row in rows]
    opts = [sorted(set(permutations(row))) for row in rows]
    nf = len(T[0])
    for choice in product(*opts):
        yield (tuple(choice[:nf]), tuple(choice[nf:]))


def _column_perms(T: Tab):
    """(signed) place permutations stabilizing every column, as lists of cell moves."""
    cols = []
    for comp, rows in enumerate(T):
        width = max((len(r) for r in rows), default=0)
        for j in range(width):
            cells = [(comp, i, j) for i in range(len(rows)) if len(rows[i]) > j]
            cols.append(cells)
    per_col = []
    for cells in cols:
        opts = []
        for p in permutations(range(len(cells))):
            inv = sum(1 for x in range(len(p)) for y in range(x + 1, len(p)) if p[x] > p[y])
            opts.append(([(cells[k], cells[p[k]]) for k in range(len(cells))], -1 if inv % 2 else 1))
        per_col.append(opts)
    for combo in product(*per_col):
        moves, sign = [], 1
        for mv, s in combo:
            moves += mv
            sign *= s
        yield moves, sign


def e_tableau(T: Tab) -> Dict[Tab, int]:
    """Sum of the row class of T, then the signed column antisymmetrizer."""
    out: Dict[Tab, int] = {}
    perms = list(_column_perms(T))
    for T1 in _row_arrangements(T):
        for moves, sign in perms:
            arr = [[list(row) for row in rows] for rows in T1]
            for (src, dst) in moves:
                c, i, j = dst
                sc, si, sj = src
                arr[c][i][j] = T1[sc][si][sj]
            T2 = tuple(tuple(tuple(row) for row in rows) for rows in arr)
            out[T2] = out.get(T2, 0) + sign
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# flattening to one-component compositions of length 2n
# ---------------------------------------------------------------------------

def flatten_shape(lam: Bicomposition, n: int) -> Tuple[int, ...]:
    out = [0] * (2 * n)
    for i, p in enumerate(lam.first):
        out[i] = p
    for i, p in enumerate(lam.second):
        out[n + i] = p
    return tuple(out)


def flatten_tableau(lam: Bicomposition, T: Tab, n: int) -> Tuple[Tuple[int, ...], ...]:
    rows = [()] * (2 * n)
    for i, row in enumerate(T[0]):
        rows[i] = tuple(row)
    for i, row in enumerate(T[1]):
        rows[n + i] = tuple(row)
    return tuple(rows)


def tableau_json(t: Tab):
    return [[list(row) for row in rows] for rows in t]


def tableau_str(t: Tab) -> str:
    def comp(rows):
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in rows) + "]"
    return "(" + comp(t[0]) + ";" + comp(t[1]) + ")"


def tableau_parse(obj) -> Tab:
    if isinstance(obj, str):
        import json
        text = obj.strip()
        if text.startswith("(") and ";" in text:
            # the tableau_str form "([[1,2]];[[3]])"
            text = "[" + text[1:-1].replace(";", ",") + "]"
        obj = json.loads(text)
    return tuple(tuple(tuple(int(x) for x in row) for row in rows) for rows in obj)
