from fractions import Fraction as F

import pytest

from mvlaguerre.engine import (compute_monic_ops, scalar_laguerre_monic,
                               verify_orthogonality, verify_three_term)
from mvlaguerre.matrices import MatPoly, MatQ
from mvlaguerre.operators import apply_L_poly, make_named_operators, verify_L_poly
from mvlaguerre.scalar import RPoly
from mvlaguerre.weights import WeightSpec

SPEC2 = WeightSpec(2, F(1), (F(1),), (F(1), F(1)))


def _ok(checks):
    bad = [c for c in checks if not c["pass"]]
    assert not bad, bad


def test_monic_and_low_degree_data():
    seq = compute_monic_ops(SPEC2, 3)
    for n, p in enumerate(seq.P):
        assert p.degree == n
        assert p.coeff(n) == MatQ.identity(2)
    assert seq.H[0] == MatQ([[2, 6], [6, 30]])
    assert seq.H[1] == MatQ([[3, 12], [12, 120]])
    assert seq.X[1] == MatQ([["-3/2", "-1/2"], [6, -6]])
    assert seq.X[2] == MatQ([["-16/3", "-2/3"], ["40/3", "-40/3"]])
    assert seq.Y[2] == MatQ([[4, "8/3"], [-40, "100/3"]])
    assert seq.C[1] == MatQ([["3/4", "1/4"], [-15, 7]])


def test_orthogonality_and_three_term():
    seq = compute_monic_ops(SPEC2, 5)
    _ok(verify_orthogonality(seq))
    _ok(verify_three_term(seq))


def test_uniqueness_under_permuted_projection_order():
    seq = compute_monic_ops(SPEC2, 4)
    permuted = compute_monic_ops(SPEC2, 4,
                                 projection_order=lambda d: list(range(d))[::-1])
    assert all(a == b for a, b in zip(seq.P, permuted.P))


def test_scalar_reduction_matches_classical_recurrence():
    nu = F(1, 2)
    spec = WeightSpec(1, nu, (), (F(1),))
    seq = compute_monic_ops(spec, 6)
    p_ref, b_ref, c_ref = scalar_laguerre_monic(nu + 1, 6)
    for n in range(7):
        assert seq.P[n].entry(0, 0) == p_ref[n]
    assert seq.P[1].entry(0, 0) == RPoly((-(nu + 2), 1))
    for n in range(1, 7):
        assert seq.C[n][0, 0] == n * (n + nu + 1) == c_ref[n]
    for n in range(6):
        assert seq.B[n][0, 0] == b_ref[n]


def test_apply_L_poly_identity_and_square():
    seq = compute_monic_ops(SPEC2, 6)
    ops = make_named_operators(seq)
    vl = apply_L_poly(RPoly.x(), seq)
    interior = range(1, 5)
    assert vl.agrees_with(ops["L"], interior)
    _ok(verify_L_poly(RPoly((0, 0, 1)), seq))
    const = apply_L_poly(RPoly((F(7, 2),)), seq)
    assert const.act(seq.P, 2) == MatPoly.const(MatQ.identity(2) * F(7, 2)) * seq.P[2]


def test_singular_weight_reported():
    # delta must be positive; the constructor rejects it before H can go bad
    with pytest.raises(ValueError):
        WeightSpec(2, F(1), (F(1),), (F(0), F(1)))
