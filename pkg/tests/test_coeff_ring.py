from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qqschur.coeff_ring import (LaurentPoly, ModP, NotLaurent, Specialization, matrix_rank,
                                nullspace, solve_exact, specialize)

from oracles import rank_fraction

exps = st.integers(-3, 3)
laurent = st.dictionaries(st.tuples(exps, exps), st.integers(-4, 4), max_size=4).map(LaurentPoly)
points = st.tuples(st.sampled_from([Fraction(2), Fraction(-3, 2), Fraction(5, 7)]),
                   st.sampled_from([Fraction(3), Fraction(-2, 5), Fraction(7, 3)]))


@given(laurent, laurent, points)
def test_arithmetic_is_evaluation_compatible(a, b, pt):
    x, y = pt
    assert (a + b).evaluate(x, y) == a.evaluate(x, y) + b.evaluate(x, y)
    assert (a * b).evaluate(x, y) == a.evaluate(x, y) * b.evaluate(x, y)
    assert (a - b).evaluate(x, y) == a.evaluate(x, y) - b.evaluate(x, y)


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == LaurentPoly()


@given(laurent)
def test_string_round_trip(a):
    assert LaurentPoly.parse(str(a)) == a
    assert LaurentPoly.parse(a.pretty()) == a


def test_canonical_string_form():
    a = LaurentPoly.parse("Q*q - q^-1 + 2")
    assert str(a) == "1*q^1*Q^1 + 2*q^0*Q^0 - 1*q^-1*Q^0"
    assert str(LaurentPoly()) == "0"


@given(laurent.filter(bool), laurent)
def test_divexact_inverts_multiplication(b, a):
    assert (a * b).divexact(b) == a


def test_units():
    m = LaurentPoly.monomial(2, -1, -1)
    assert m.is_unit() and m * m.inverse() == LaurentPoly.const(1)
    assert not LaurentPoly.monomial(1, 0, 2).is_unit()
    with pytest.raises((NotLaurent, ArithmeticError, ValueError)):
        (LaurentPoly.q() + 1).inverse()


def test_specialization_is_a_ring_map():
    s = Specialization(3, 5, char=7)
    a = LaurentPoly.parse("Q*q + q^-1")
    assert specialize(a, s) == ModP(3 * 5 + 5, 7)
    r = Specialization(Fraction(1, 2), 3)
    assert r(a) == Fraction(3, 2) + 2
    with pytest.raises(ValueError):
        Specialization(2, 7, char=7)
    with pytest.raises(ValueError):
        Specialization(1, 1, char=6)


def test_modp_field():
    x = ModP(3, 7)
    assert x * (1 / x) == ModP(1, 7)
    assert x ** 6 == ModP(1, 7)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(0, 2**16))
def test_generic_rank_against_evaluation(k, seed):
    """A (4 x k)(k x 4) product of Laurent matrices has generic rank equal to the evaluated rank."""
    import random

    rng = random.Random(seed)

    def rnd():
        return LaurentPoly({(rng.randint(-1, 1), rng.randint(-1, 1)): rng.randint(-2, 2) for _ in range(2)})

    A = [[rnd() for _ in range(k)] for _ in range(4)]
    B = [[rnd() for _ in range(4)] for _ in range(k)]
    M = [[sum((A[i][t] * B[t][j] for t in range(k)), LaurentPoly()) for j in range(4)] for i in range(4)]
    evals = []
    for x, y in [(Fraction(2), Fraction(3)), (Fraction(-5, 3), Fraction(7, 2)), (Fraction(11), Fraction(-13, 4))]:
        evals.append(rank_fraction([[c.evaluate(x, y) for c in row] for row in M]))
    # the generic rank is attained at all but finitely many points
    assert matrix_rank(M) == max(evals)
    assert matrix_rank(M, backend="pure") == matrix_rank(M)


def test_rank_at_specializations():
    q, Q = LaurentPoly.q(), LaurentPoly.Q()
    one = LaurentPoly.const(1)
    M = [[q, one], [q * q, q]]
    assert matrix_rank(M) == 1
    N = [[q + one, one], [one, one]]
    assert matrix_rank(N) == 2
    assert matrix_rank(N, Specialization(1, 1)) == 2
    # det P = (q+1)(Q-1)
    P = [[(q + one) * Q, one], [(q + one), one]]
    assert matrix_rank(P) == 2
    assert matrix_rank(P, Specialization(-1, 1)) == 1
    assert matrix_rank(P, Specialization(2, 1, char=3)) == 1


def test_nullspace_and_solve():
    q, Q = LaurentPoly.q(), LaurentPoly.Q()
    one = LaurentPoly.const(1)
    M = [[one, q, Q], [q, q * q, q * Q]]
    dim, basis = nullspace(M)
    assert dim == 2
    for v in basis:
        assert all(not sum((row[j] * v[j] for j in range(3)), LaurentPoly()) for row in M)
    cols = [[one, q, Q], [q * q + one, q, one]]
    coeffs = [q.inverse() - Q, LaurentPoly.const(3)]
    target = [coeffs[0] * cols[0][i] + coeffs[1] * cols[1][i] for i in range(3)]
    assert solve_exact(cols, target) == coeffs
    at = Specialization(2, 3)
    assert solve_exact(cols, target, at) == [at(c) for c in coeffs]
    with pytest.raises(NotLaurent):
        # 1/(q+1) is not a Laurent polynomial
        solve_exact([[q + one]], [one])
    with pytest.raises(ValueError):
        solve_exact([[one, q]], [one, one])
