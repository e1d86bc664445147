from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvlaguerre.matrices import (MatLaurent, MatPoly, MatQ,
                                 SingularMatrixError, build_A, build_J,
                                 build_K, build_K_inverse, commutator,
                                 exp_nilpotent, matexp_nilpotent)

small_rats = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def rand_matrix(n):
    return st.lists(st.lists(small_rats, min_size=n, max_size=n),
                    min_size=n, max_size=n).map(MatQ)


def test_matq_basics():
    m = MatQ([[1, 2], [3, 4]])
    assert m.transpose() == MatQ([[1, 3], [2, 4]])
    assert m.det() == -2
    assert (m * m.inverse()) == MatQ.identity(2)
    assert MatQ.diag([1, 2]).leading_minors() == [1, 2]
    with pytest.raises(SingularMatrixError):
        MatQ([[1, 2], [2, 4]]).inverse()


@given(rand_matrix(3))
@settings(max_examples=40)
def test_inverse_roundtrip(m):
    if m.det() == 0:
        with pytest.raises(SingularMatrixError):
            m.inverse()
    else:
        assert m * m.inverse() == MatQ.identity(3)
        assert m.inverse() * m == MatQ.identity(3)


def test_positive_definiteness_by_minors():
    assert MatQ([[2, 6], [6, 30]]).is_positive_definite()
    assert not MatQ([[1, 3], [3, 1]]).is_positive_definite()
    assert not MatQ([[1, 2], [3, 4]]).is_positive_definite()


def test_build_A_J_commutator():
    for n, a in [(1, ()), (2, (F(3, 2),)), (4, (1, -2, F(1, 3)))]:
        A, J = build_A(a, n), build_J(n)
        assert commutator(J, A) == A
    with pytest.raises(ValueError):
        build_A((1, 2), 2)


def test_exp_nilpotent_identities():
    a = build_A((F(1, 2), -3), 3)
    j = build_J(3)
    pos, neg = exp_nilpotent(a, +1), exp_nilpotent(a, -1)
    assert pos * neg == MatPoly.const(MatQ.identity(3))
    # e^{xA} J e^{-xA} = J - Ax
    lhs = pos * MatPoly.const(j) * neg
    assert lhs == MatPoly.const(j) - MatPoly.monomial(1, a)
    # entry formula: coefficient of x^{i-r} at (i, r) is (A^{i-r})_{i,r}/(i-r)!
    assert pos.coeff(2)[2, 0] == a[1, 0] * a[2, 1] / 2
    assert exp_nilpotent(MatQ.zero(1), 1) == MatPoly.const(MatQ.identity(1))
    with pytest.raises(ValueError):
        exp_nilpotent(MatQ([[0, 1], [0, 0]]), 1)


@given(st.integers(0, 6))
@settings(max_examples=10)
def test_build_K_conjugates_to_diagonal(n):
    nu, a, N = F(5, 2), (F(2), F(-1, 2), F(3)), 4
    k = build_K(n, nu, a, N)
    A, J = build_A(a, N), build_J(N)
    i = MatQ.identity(N)
    gamma = A * (i * (n + nu + 1) + J) - i * n - J
    lam = MatQ.diag([-(n + r) for r in range(1, N + 1)])
    assert k * lam * k.inverse() == gamma
    assert all(k[r, r] == 1 for r in range(N))
    assert build_K_inverse(n, nu, a, N) == k.inverse()


def test_build_K_subdiagonal_entry():
    # the conjugation property forces +a_1 (n+nu+2); the printed closed form
    # carries (-1)^{i-j}, which describes the inverse matrix instead
    n, nu, a = 3, F(1, 2), (F(7),)
    k = build_K(n, nu, a, 2)
    assert k[1, 0] == a[0] * (n + nu + 2)
    assert build_K_inverse(n, nu, a, 2)[1, 0] == -a[0] * (n + nu + 2)


def test_matexp_nilpotent_matches_poly_at_one():
    a = build_A((2, 3), 3)
    assert matexp_nilpotent(a) == exp_nilpotent(a, +1)(1)


@given(st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=20)
def test_matpoly_product_rule(d1, d2):
    import random

    rng = random.Random(d1 * 7 + d2)

    def rand_poly(deg):
        return MatPoly([
            MatQ([[F(rng.randint(-3, 3)) for _ in range(2)] for _ in range(2)])
            for _ in range(deg + 1)], 2)

    p, q = rand_poly(d1), rand_poly(d2)
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


def test_matpoly_transpose_involution_and_eval():
    p = MatPoly([MatQ([[1, 2], [3, 4]]), MatQ([[0, 1], [-1, 0]])], 2)
    assert p.transpose().transpose() == p
    assert p(F(1, 2)) == MatQ([[1, F(5, 2)], [F(5, 2), 4]])
    assert p.entry(0, 1) .coeffs == (2, 1)


def test_matlaurent_roundtrip():
    p = MatPoly([MatQ([[1]]), MatQ([[2]])], 1)
    l = MatLaurent.from_poly(p)
    assert l.shift(-1).coeff(-1) == MatQ([[1]])
    assert l.derivative() == MatLaurent({0: MatQ([[2]])}, 1)
    assert (l - l).is_zero()
    assert (l * l).coeff(2) == MatQ([[4]])
