from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mvlaguerre.scalar import (DomainError, RPoly, dual_hahn,
                               dual_hahn_recurrence_step,
                               dual_hahn_via_recurrence, lambda_lattice,
                               laguerre_derivative, laguerre_poly, parse_phi,
                               pochhammer, rat, rat_str)

small_rats = st.fractions(min_value=-4, max_value=4, max_denominator=6)


def test_pochhammer_base_cases():
    assert pochhammer(F(7, 3), 0) == 1
    assert pochhammer(2, 3) == 24
    assert pochhammer(F(5, 2), 1) == F(5, 2)


@given(small_rats, st.integers(0, 10), st.integers(0, 10))
def test_pochhammer_splits_additively(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


def test_rat_rejects_floats_and_formats():
    with pytest.raises(TypeError):
        rat(0.5)
    assert rat_str(F(3, 4)) == "3/4"
    assert rat_str(F(8, 4)) == "2"


def test_laguerre_small_cases():
    assert laguerre_poly(F(1, 2), 0) == RPoly.one()
    assert laguerre_poly(0, 1) == RPoly((1, -1))
    # brute-force series at alpha = 0, n = 2: 1 - 2x + x^2/2
    assert laguerre_poly(0, 2) == RPoly((1, -2, F(1, 2)))


@pytest.mark.parametrize("alpha", [F(0), F(1, 2), F(7, 3)])
@pytest.mark.parametrize("n", [0, 1, 3, 7, 12])
def test_laguerre_value_at_zero(alpha, n):
    from mvlaguerre.scalar import factorial

    assert laguerre_poly(alpha, n)(0) == pochhammer(alpha + 1, n) / factorial(n)


@pytest.mark.parametrize("alpha", [F(0), F(1, 2), F(5, 2), F(9, 2)])
@pytest.mark.parametrize("n", [1, 2, 5, 12])
def test_laguerre_derivative_matches_coefficientwise(alpha, n):
    closed = laguerre_derivative(alpha, n)
    assert closed == laguerre_poly(alpha, n).derivative()
    assert laguerre_derivative(alpha, 0).is_zero()


def test_laguerre_derivative_degree_one():
    assert laguerre_derivative(F(3, 2), 1) == RPoly((-1,))


def test_dual_hahn_trivial_and_domain():
    assert dual_hahn(0, F(7, 5), F(1, 2), F(3), 4) == 1
    with pytest.raises(DomainError):
        dual_hahn(5, 1, F(1, 2), 0, 4)


def test_dual_hahn_recurrence_seed():
    gamma, M = F(1, 2), 3
    s1 = dual_hahn_recurrence_step(F(1), F(0), 0, gamma, F(2), M, F(9))
    assert s1 == 9 + (gamma + 1) * (-M)


@pytest.mark.parametrize("gamma", [F(0), F(1, 2), F(2)])
@pytest.mark.parametrize("delta", [F(-1), F(0), F(3, 2)])
def test_dual_hahn_sum_equals_recurrence(gamma, delta):
    for M in range(1, 7):
        for k in range(M + 1):
            for x in (F(0), F(1), F(5, 2), F(-2, 3)):
                assert dual_hahn(k, x, gamma, delta, M) == \
                    dual_hahn_via_recurrence(k, x, gamma, delta, M)


def test_lambda_lattice():
    assert lambda_lattice(2, F(1), F(1)) == 2 * (2 + 3)


def test_rpoly_arithmetic():
    p = RPoly((1, 2, 3))
    q = RPoly((0, -1))
    assert (p * q).coeffs == (0, -1, -2, -3)
    assert p.derivative() == RPoly((2, 6))
    assert p(F(1, 2)) == 1 + 1 + F(3, 4)
    assert (p - p).is_zero() and RPoly.zero().degree == -1


def test_parse_phi():
    assert parse_phi("x^3+x^2") == RPoly((0, 0, 1, 1))
    assert parse_phi("1/2x^2 - 3x + 1") == RPoly((1, -3, F(1, 2)))
    assert parse_phi("2*x") == RPoly((0, 2))
    assert parse_phi("-x^4 + x") == RPoly((0, 1, 0, 0, -1))
    for bad in ("", "x^", "y+1", "x**2", "1/0x"):
        with pytest.raises((DomainError, ZeroDivisionError)):
            parse_phi(bad)
