import random
from math import factorial, prod

import pytest

from qqschur.bitableaux import Bicomposition, shapes, t_upper
from qqschur.coeff_ring import LaurentPoly, Specialization
from qqschur.perm_module import perm_module

SHAPES = [s for r in (1, 2, 3) for s in shapes(r, r)]


@pytest.mark.parametrize("lam", SHAPES[::2], ids=str)
def test_dimension_and_generator(lam):
    M = perm_module(lam)
    b = sum(lam.second)
    assert len(M) == 2 ** b * factorial(lam.size) // prod(factorial(p) for p in lam.first + lam.second)
    assert M.basis[0] == t_upper(lam)


@pytest.mark.parametrize("lam", SHAPES[::3], ids=str)
def test_action_is_a_module_action(lam):
    """(v·x)·y == v·(x y) for random Hecke elements x, y."""
    M = perm_module(lam)
    H = M.H
    rng = random.Random(str(lam))
    G = H.G
    for _ in range(4):
        x = H.elt((rng.randrange(len(G)), LaurentPoly.monomial(rng.randint(-1, 1), 0, rng.choice([1, -2]))) for _ in range(2))
        y = H.elt((rng.randrange(len(G)), LaurentPoly.monomial(0, rng.randint(-1, 1), 1)) for _ in range(2))
        v = {rng.randrange(len(M)): LaurentPoly.const(1), rng.randrange(len(M)): LaurentPoly.q()}
        v = {k: c for k, c in v.items() if c}
        assert M.act(M.act(v, x), y) == M.act(v, x * y)


@pytest.mark.parametrize("lam", [Bicomposition((1,), (1,)), Bicomposition((1,), (2,)), Bicomposition((2,), (1,))], ids=str)
def test_embedding_into_hecke_algebra(lam):
    """{t}·h corresponds to u^+ x T_w h inside ℋ."""
    M = perm_module(lam)
    H = M.H
    for k in range(len(M)):
        for i in range(lam.size):
            assert M.embed(M.act_gen({k: M.one}, i)) == M.embed({k: M.one}) * H.T_gen(i)


def test_first_component_absorbs_t0():
    lam = Bicomposition((1,), (2,))
    M = perm_module(lam)
    # the entry 1 sits in the first component: T_0 acts by Q
    assert M.act_gen(M.generator(), 0) == {0: LaurentPoly.Q()}


def test_naive_engine_in_group_case():
    """At q = Q = 1 the module is the permutation representation on bitabloids."""
    lam = Bicomposition((1,), (1, 1))
    spec = Specialization(1, 1)
    M = perm_module(lam, spec)
    for k in range(len(M)):
        for i in range(3):
            out = M.act_gen({k: M.one}, i)
            assert len(out) == 1 and list(out.values()) == [1]


def test_json_round_trip():
    lam = Bicomposition((1,), (1,))
    M = perm_module(lam)
    v = M.act(M.generator(), M.H.u_minus(1) * M.H.T_gen(0))
    assert M.vec_from_json(M.vec_json(v)) == v
