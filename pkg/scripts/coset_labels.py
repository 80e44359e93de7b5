"""Which type A coset representatives c give a positive tableau α{t^μ c}?

For every pair of shapes in Λ(r, r), counts pairs where some label is not
positive, split by how the first-component sizes compare, and checks that
the positive labels are exactly the positive row-weak tableaux.
"""

import argparse
from collections import Counter

from qqschur.bitableaux import alpha_map, is_positive, is_row_weak, shapes, typed_tableaux
from qqschur.perm_module import perm_module
from qqschur.schur import delta_cosets


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=3)
    args = ap.parse_args()
    stats = Counter()
    pairs = bijective = 0
    for rr in range(1, args.r + 1):
        for lam in shapes(rr, rr):
            for mu in shapes(rr, rr):
                M = perm_module(mu)
                labels = [alpha_map(lam, mu, M.basis[M.pos_of_w[c]]) for c in delta_cosets(lam, mu)]
                pos = sorted(T for T in labels if is_positive(T, mu.n))
                want = sorted(T for T in typed_tableaux(lam, mu, "positive") if is_row_weak(T))
                pairs += 1
                bijective += pos == want
                if len(pos) < len(labels):
                    rel = "a<b" if lam.a < mu.a else "a=b" if lam.a == mu.a else "a>b"
                    stats[rel] += 1
    print(f"pairs: {pairs}")
    print(f"pairs with a non-positive label: {sum(stats.values())} ({dict(sorted(stats.items()))})")
    print(f"pairs where positive labels = positive row-weak tableaux: {bijective}")


if __name__ == "__main__":
    main()
