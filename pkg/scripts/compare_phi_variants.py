"""How often is the one-term (literal) formula for the standard maps a homomorphism?

Prints, per r, the number of admissible triples, how many literal maps
commute with the generators, and confirms every fully lifted map does.
"""

import argparse

from qqschur.bitableaux import shapes
from qqschur.coeff_ring import GENERIC
from qqschur.schur import phi_standard
from qqschur.weyl_group_b import admissible_triples


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=2)
    args = ap.parse_args()
    print("r,triples,literal_well_defined,full_well_defined")
    for rr in range(1, args.r + 1):
        total = lit = full = 0
        for lam in shapes(rr, rr):
            for mu in shapes(rr, rr):
                for t in admissible_triples(lam, mu):
                    total += 1
                    lit += phi_standard(t, GENERIC, variant="literal", check=False).is_well_defined()
                    full += phi_standard(t, GENERIC, variant="full", check=False).is_well_defined()
        print(f"{rr},{total},{lit},{full}")


if __name__ == "__main__":
    main()
