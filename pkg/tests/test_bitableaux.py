from math import factorial, prod

import pytest
from hypothesis import given, strategies as st

from qqschur.bitableaux import (Bicomposition, alpha_inverse, alpha_map, beta_inverse, beta_map,
                                bipartitions, bitabloid_count, bitabloids, canonical, dominance_geq,
                                gamma_inverse, gamma_map, is_of_type, is_positive, is_semistandard,
                                order_key, reading_word, shapes, standard_tableaux, t_lower, t_lower_hat, t_upper,
                                t_upper_hat, tableau_parse, tableau_str, typed_tableaux,
                                typed_tableaux_direct)

from oracles import brute_bitabloids, brute_semistandard

SMALL = [s for r in range(1, 4) for s in shapes(r, r)]


def test_shape_counts():
    from math import comb

    # a weak composition of r into n parts, cut at any of n + 1 places
    for n, r in [(1, 3), (2, 2), (3, 3), (2, 4)]:
        assert len(shapes(n, r)) == (n + 1) * comb(r + n - 1, n - 1)
    assert [str(b) for b in bipartitions(2)] == ["((2),())", "((1,1),())", "((1),(1))", "((),(2))", "((),(1,1))"]


@given(st.sampled_from(SMALL))
def test_parse_round_trip(lam):
    assert Bicomposition.parse(str(lam)) == lam
    assert Bicomposition.parse(lam.to_json()) == lam


@pytest.mark.parametrize("lam", SMALL, ids=str)
def test_bitabloids_match_brute_force(lam):
    got = set(bitabloids(lam))
    assert got == brute_bitabloids(lam)
    b = sum(lam.second)
    assert bitabloid_count(lam) == len(got) == 2 ** b * factorial(lam.size) // prod(factorial(p) for p in lam.first + lam.second)


@pytest.mark.parametrize("lam", [Bicomposition((2, 1), (1,)), Bicomposition((1,), (2, 1)), Bicomposition((), (1, 1, 1))], ids=str)
def test_special_tableaux(lam):
    for t in (t_upper(lam), t_upper_hat(lam), t_lower(lam), t_lower_hat(lam)):
        assert sorted(x for rows in t for row in rows for x in row) == list(range(1, 5 if lam.size == 4 else lam.size + 1))
    assert t_upper(lam) in standard_tableaux(lam) or not lam.is_bipartition()
    assert canonical(t_upper(lam)) == t_upper(lam)


def test_example_shape():
    lam = Bicomposition((2, 1), (1,))
    assert tableau_str(t_upper(lam)) == "([[1,2],[3]];[[4]])"
    assert tableau_str(t_upper_hat(lam)) == "([[2,3],[4]];[[1]])"
    assert tableau_str(t_lower(lam)) == "([[1,3],[2]];[[4]])"
    assert tableau_str(t_lower_hat(lam)) == "([[2,4],[3]];[[1]])"


@given(st.sampled_from(SMALL))
def test_tableau_string_round_trip(lam):
    for t in bitabloids(lam)[:20]:
        assert tableau_parse(tableau_str(t)) == t


PAIRS = [(lam, mu) for r in (2, 3) for lam in bipartitions(r) for mu in shapes(r, r)]


@pytest.mark.parametrize("lam,mu", PAIRS[::3], ids=lambda s: str(s))
def test_semistandard_against_brute_force(lam, mu):
    n = mu.n
    got = set(typed_tableaux(lam, mu, "semistandard"))
    assert got == brute_semistandard(lam, mu, n)
    assert all(is_of_type(lam, mu, T) and is_semistandard(T, n) for T in got)


@pytest.mark.parametrize("lam,mu", PAIRS[::4], ids=lambda s: str(s))
def test_typed_tableaux_bijections(lam, mu):
    assert typed_tableaux(lam, mu) == typed_tableaux_direct(lam, mu)
    for fwd, back in ((alpha_map, alpha_inverse), (beta_map, beta_inverse), (gamma_map, gamma_inverse)):
        images = {fwd(lam, mu, t) for t in bitabloids(mu)}
        assert len(images) == len(bitabloids(mu))
        for t in bitabloids(mu):
            assert canonical(back(lam, mu, fwd(lam, mu, t))) == t


@pytest.mark.parametrize("lam,mu", PAIRS[::5], ids=lambda s: str(s))
def test_order_is_total_and_refines_dominance(lam, mu):
    Ts = typed_tableaux(lam, mu, "positive")
    keys = [order_key(lam, T) for T in Ts]
    assert len(set(keys)) == len(keys)
    a = lam.a
    for A in Ts:
        head_a = sum(reading_word(lam, A)[: lam.size - a])
        for B in Ts:
            head_b = sum(reading_word(lam, B)[: lam.size - a])
            if head_a < head_b:
                assert order_key(lam, A) < order_key(lam, B)
            elif head_a == head_b and dominance_geq(lam, A, B) and not dominance_geq(lam, B, A):
                assert order_key(lam, A) < order_key(lam, B)


def test_positivity():
    lam, mu = Bicomposition((1,), (1,)), Bicomposition((1,), (1,))
    Ts = typed_tableaux(lam, mu)
    assert tableau_parse("([[1]];[[3]])") in Ts
    assert tableau_parse("([[1]];[[-3]])") in Ts
    assert [tableau_str(T) for T in Ts if is_positive(T, 2)] == ["([[1]];[[3]])"]
    assert not is_positive(tableau_parse("([[1]];[[-3]])"), 2)
