"""At q = Q = 1, compare the image of the generator with two double-coset readings.

Reading A: Σ over W_μ c W_λ.  Reading B: Σ over W_λ c W_μ.
"""

import argparse

from qqschur.bitableaux import act_tableau, canonical, shapes, t_upper
from qqschur.coeff_ring import Specialization
from qqschur.schur import phi_standard
from qqschur.weyl_group_b import admissible_triples, weyl_group

GROUP = Specialization(1, 1)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=3)
    args = ap.parse_args()
    print("r,triples,matches_W_mu_c_W_lambda,matches_W_lambda_c_W_mu")
    for rr in range(1, args.r + 1):
        G = weyl_group(rr)
        S = shapes(rr, rr)
        # the row stabilizer of t^λ, found by brute force
        stab = {lam: [k for k in range(len(G)) if canonical(act_tableau(t_upper(lam), G.elt(k))) == t_upper(lam)]
                for lam in S}
        total = a = b = 0
        for lam in S:
            for mu in S:
                for t in admissible_triples(lam, mu):
                    phi = phi_standard(t, GROUP)
                    got = phi.tgt.embed(phi.gen_image).terms
                    ra = {G.mul(G.mul(x, t.c), y): 1 for x in stab[mu] for y in stab[lam]}
                    rb = {G.mul(G.mul(x, t.c), y): 1 for x in stab[lam] for y in stab[mu]}
                    total += 1
                    a += got == ra
                    b += got == rb
        print(f"{rr},{total},{a},{b}")


if __name__ == "__main__":
    main()
