import pytest
from hypothesis import given, strategies as st

from qqschur.weyl_group_b import SignedPerm, admissible_triples, shape_subsets, weyl_group
from qqschur.bitableaux import shapes

from oracles import bfs_lengths, inversion_length, signed_perms


@pytest.mark.parametrize("r", [0, 1, 2, 3, 4])
def test_order_and_lengths(r):
    G = weyl_group(r)
    assert len(G) == 2 ** r * __import__("math").factorial(r)
    dist = bfs_lengths(r)
    for k, w in enumerate(G.windows):
        assert G.length[k] == dist[w] == inversion_length(w)
        assert len(G.reduced_word(k)) == G.length[k]
        assert G.from_word(G.reduced_word(k)) == k
    assert G.identity == 0


@pytest.mark.parametrize("r", [2, 3])
def test_multiplication_table(r):
    G = weyl_group(r)
    for x in range(len(G)):
        assert G.mul(x, G.inv[x]) == G.identity
        for i in range(r):
            assert G.rmul[x][i] == G.mul(x, G.s(i))
            assert G.lmul[x][i] == G.mul(G.s(i), x)


windows4 = st.sampled_from(sorted(signed_perms(4))).map(SignedPerm)


@given(windows4, windows4, windows4)
def test_signed_perm_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    # self is applied first
    assert all((a * b)(i) == b(a(i)) for i in range(1, 5))


def test_parse_and_generators():
    w = SignedPerm.parse("[-2,1,3]")
    assert str(w) == "[-2,1,3]"
    assert SignedPerm.generator(3, 0).window == (-1, 2, 3)
    with pytest.raises(ValueError):
        SignedPerm((1, 1))


@pytest.mark.parametrize("K,L", [((0,), (1,)), ((1,), (1, 2)), ((0, 2), (0, 1)), ((), (0, 1, 2))])
def test_double_cosets_partition_the_group(K, L):
    G = weyl_group(3)
    reps = G.coset_reps(K, L)
    seen = set()
    for d in reps:
        dc = G.double_coset(K, d, L)
        assert min(dc, key=lambda k: G.length[k]) == d
        assert not seen & set(dc)
        seen |= set(dc)
        for w in dc:
            x, dd, y = G.decompose(w, K, L)
            assert dd == d and G.mul(G.mul(x, d), y) == w
            assert G.minimal_in_double_coset(K, w, L) == d
    assert seen == set(range(len(G)))


def test_parabolic_sizes():
    G = weyl_group(3)
    assert len(G.parabolic([0, 1, 2])) == 48
    assert len(G.parabolic([1, 2])) == 6
    assert len(G.parabolic([0])) == 2
    assert len(G.parabolic([0, 2])) == 4


def test_admissible_triples_structure():
    for lam in shapes(2, 2):
        J, At, A = shape_subsets(lam)
        assert A <= At
        for mu in shapes(2, 2):
            for t in admissible_triples(lam, mu):
                d, v, u = t.windows()
                assert (u * d * v.inverse()).window == t.group.elt(t.c).window


def test_alpha0_transport():
    from itertools import combinations

    from qqschur.weyl_group_b import alpha0_transport

    assert alpha0_transport(SignedPerm.identity(2), [0])
    # s_0 sends α_0 to -α_0
    assert not alpha0_transport(SignedPerm.generator(2, 0), [0])
    G = weyl_group(3)
    s0 = G.s(0)
    for k in range(len(G)):
        w = G.elt(k)
        for size in range(4):
            for J in combinations(range(3), size):
                clauses = 0 in J and G.mul(s0, k) == G.mul(k, s0) and G.length[G.mul(s0, k)] == G.length[k] + 1
                assert alpha0_transport(w, J) == clauses
