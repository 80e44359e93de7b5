"""Dimensions of M^λ, S^λ, W^λ and F^λ for every bipartition of r at several parameter points."""

import argparse

from qqschur.bitableaux import bipartitions, bitabloid_count
from qqschur.coeff_ring import GENERIC, Specialization
from qqschur.weyl_specht import gram_rank, specht_rank, weyl_dimension

POINTS = [GENERIC, Specialization(1, 1), Specialization(-1, 1), Specialization(-1, -1),
          Specialization(2, 2, char=3), Specialization(1, 1, char=2)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=2)
    args = ap.parse_args()
    names = ["generic" if d.is_generic else d.name for d in POINTS]
    print("| shape | dim M | dim W | " + " | ".join(f"S, F at {n}" for n in names) + " |")
    print("|" + "---|" * (3 + len(POINTS)))
    for lam in bipartitions(args.r):
        cells = [str(lam), str(bitabloid_count(lam)), str(weyl_dimension(lam))]
        for d in POINTS:
            cells.append(f"{specht_rank(lam, d)}, {gram_rank(lam, None, d)}")
        print("| " + " | ".join(cells) + " |")


if __name__ == "__main__":
    main()
