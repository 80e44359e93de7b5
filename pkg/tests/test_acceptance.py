"""Acceptance criteria 1-9, one verification suite per criterion.

Each test prints (and logs for the terminal summary) a line
``criterion N: PASS|FAIL ...``.  Run with ``pytest tests/test_acceptance.py -v -s``
to see the lines inline.
"""

import pytest

from qqschur.verify import SUITES, run_suite

CRITERIA = {
    1: ("Hecke presentation for r <= 4 and the group case at q = Q = 1", 60),
    2: ("bitabloid counts and generator-action relations for all of Λ(r,r), r <= 4", 60),
    3: ("u^+ x T_w u^- ŷ is a multiple of z_λ != 0; the four forms of z_λ agree (r <= 3)", 120),
    4: ("#admissible triples = commutant dimension, generic and 3 rational points (r <= 3)", 600),
    5: ("congruences mod M^μ_- for every c in the type A cosets; inner coset-sum identity (r <= 3)", 300),
    6: ("semistandard basis ranks, leading terms and Laurent round trips (r <= 3; r <= 4 at q = Q = 1)", 900),
    7: ("<<z_λ, z_λ>> = Q^b q^(b(b-1)/2) q~(w) for every bipartition of r <= 4", 60),
    8: ("generic structure constants specialize to native ones at 3 points incl. a prime field (r <= 2)", 300),
    9: ("worked examples reproduced as exact strings", 60),
}

SUITE_OF = {s.criterion: name for name, s in SUITES.items() if s.criterion is not None}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, acceptance_log):
    what, budget = CRITERIA[n]
    name = SUITE_OF[n]
    res = run_suite(name)
    in_budget = res.seconds <= budget
    ok = res.passed and in_budget
    line = (f"criterion {n}: {'PASS' if ok else 'FAIL'} [{name}] {what} "
            f"({res.checks} checks, {res.seconds:.1f}s of {budget}s budget)")
    if not res.passed:
        line += f" first counterexample: {res.counterexample}"
    elif not in_budget:
        line += " over time budget"
    print(line)
    acceptance_log.append(line)
    assert res.passed, res.counterexample
    assert in_budget, f"{res.seconds:.1f}s exceeds the {budget}s budget"


def test_every_criterion_has_a_suite():
    assert sorted(SUITE_OF) == sorted(CRITERIA)
