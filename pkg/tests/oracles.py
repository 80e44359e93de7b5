"""Brute-force reference implementations, independent of the library tables."""

from collections import deque
from fractions import Fraction
from itertools import permutations, product


def signed_perms(r):
    for p in permutations(range(1, r + 1)):
        for s in product((1, -1), repeat=r):
            yield tuple(a * b for a, b in zip(s, p))


def apply_gen_right(w, i):
    """w·s_i where the product applies w first: s_i acts on the values of the window.

    s_0 swaps the values 1 and -1; s_i swaps i and i+1 (and -i, -(i+1)).
    """

    def s(x):
        a = abs(x)
        if i == 0:
            return -x if a == 1 else x
        if a == i:
            return x // a * (i + 1)
        if a == i + 1:
            return x // a * i
        return x

    return tuple(s(x) for x in w)


def bfs_lengths(r):
    start = tuple(range(1, r + 1))
    dist = {start: 0}
    todo = deque([start])
    while todo:
        w = todo.popleft()
        for i in range(r):
            v = apply_gen_right(w, i)
            if v not in dist:
                dist[v] = dist[w] + 1
                todo.append(v)
    return dist


def inversion_length(w):
    """Type B length from the window: inversions plus negative-sum pairs plus negatives."""
    r = len(w)
    inv = sum(1 for i in range(r) for j in range(i + 1, r) if w[i] > w[j])
    nsum = sum(1 for i in range(r) for j in range(i + 1, r) if w[i] + w[j] < 0)
    neg = sum(1 for x in w if x < 0)
    return inv + nsum + neg


class NaiveHecke:
    """T_w products over a dict of windows, via generator-by-generator right multiplication.

    Coefficients are evaluated at numeric q, Q so any exact number type works.
    """

    def __init__(self, r, q, Q):
        self.r, self.q, self.Q = r, q, Q
        self.len = bfs_lengths(r)
        self.word = self._words()

    def _words(self):
        start = tuple(range(1, self.r + 1))
        word = {start: ()}
        todo = deque([start])
        while todo:
            w = todo.popleft()
            for i in range(self.r):
                v = apply_gen_right(w, i)
                if v not in word:
                    word[v] = word[w] + (i,)
                    todo.append(v)
        return word

    def times_gen(self, x, i):
        c = self.Q if i == 0 else self.q
        out = {}
        for w, a in x.items():
            v = apply_gen_right(w, i)
            if self.len[v] > self.len[w]:
                out[v] = out.get(v, 0) + a
            else:
                out[v] = out.get(v, 0) + c * a
                out[w] = out.get(w, 0) + (c - 1) * a
        return {k: v for k, v in out.items() if v}

    def mul(self, x, y):
        out = {}
        for w, b in y.items():
            part = dict(x)
            for i in self.word[w]:
                part = self.times_gen(part, i)
            for k, v in part.items():
                out[k] = out.get(k, 0) + b * v
        return {k: v for k, v in out.items() if v}


def rank_fraction(rows):
    """Gaussian elimination over Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def brute_bitabloids(lam):
    """Row-standard fillings of λ by one of ±i per i, enumerated from scratch."""
    r = lam.size
    first_cells = sum(lam.first)
    out = set()
    for w in signed_perms(r):
        vals = list(w)
        if any(x < 0 for x in vals[:first_cells]):
            # signs in the first component are identified
            vals[:first_cells] = [abs(x) for x in vals[:first_cells]]
        rows, k = [], 0
        for p in lam.first:
            rows.append(tuple(sorted(vals[k:k + p])))
            k += p
        rows2 = []
        for p in lam.second:
            rows2.append(tuple(sorted(vals[k:k + p])))
            k += p
        out.add((tuple(rows), tuple(rows2)))
    return out


def brute_semistandard(lam, mu, n):
    """Semistandard λ-bitableaux of type μ by exhaustive filling."""
    labels = []
    for i, p in enumerate(mu.first):
        labels += [i + 1] * p
    for i, p in enumerate(mu.second):
        labels += [n + i + 1] * p
    cells = [(0, i, j) for i, p in enumerate(lam.first) for j in range(p)]
    cells += [(1, i, j) for i, p in enumerate(lam.second) for j in range(p)]
    found = set()
    for perm in set(permutations(labels)):
        comp = [[[None] * p for p in lam.first], [[None] * p for p in lam.second]]
        for (c, i, j), x in zip(cells, perm):
            comp[c][i][j] = x
        ok = True
        for c in (0, 1):
            rows = comp[c]
            for row in rows:
                if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                    ok = False
            for i in range(len(rows) - 1):
                for j in range(len(rows[i + 1])):
                    if rows[i][j] >= rows[i + 1][j]:
                        ok = False
        # positivity: the second component takes only labels above n
        if any(x <= n for row in comp[1] for x in row):
            ok = False
        if ok:
            found.add((tuple(tuple(r) for r in comp[0]), tuple(tuple(r) for r in comp[1])))
    return found
