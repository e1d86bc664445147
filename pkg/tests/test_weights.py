from fractions import Fraction as F

import pytest

from mvlaguerre.matrices import MatPoly, MatQ
from mvlaguerre.scalar import RPoly
from mvlaguerre.weights import (MomentTable, UnsupportedWeightError,
                                WeightSpec, h0_as_displayed,
                                h0_index_corrected, inner_product, moment,
                                moment_via_expansion)

SPEC2 = WeightSpec(2, F(1), (F(1),), (F(1), F(1)))
SPECS = [
    WeightSpec(1, F(1, 2), (), (F(1),)),
    SPEC2,
    WeightSpec(2, F(5, 2), (F(-1),), (F(1), F(2))),
    WeightSpec(3, F(1), (F(2), F(-1, 2)), (F(1), F(1, 2), F(3))),
]


def test_spec_validation():
    with pytest.raises(ValueError):
        WeightSpec(2, F(-1), (F(1),), (F(1), F(1)))
    with pytest.raises(ValueError):
        WeightSpec(2, F(1), (F(0),), (F(1), F(1)))
    with pytest.raises(ValueError):
        WeightSpec(2, F(1), (F(1),), (F(1), F(-1)))
    with pytest.raises(UnsupportedWeightError):
        moment(WeightSpec(2, F(1), (F(1),), (F(1), F(1)), RPoly((0, 0, 1))), 0)


def test_moment_scalar_case():
    spec = WeightSpec(1, F(1, 2), (), (F(3),))
    # integral of e^{-x} x^{nu+1} / Gamma(nu+1) = nu+1
    assert moment(spec, 0) == MatQ([[3 * (F(1, 2) + 1)]])


def test_moment_frozen_values():
    assert moment(SPEC2, 0) == MatQ([[2, 6], [6, 30]])
    assert moment(SPEC2, 1) == MatQ([[6, 24], [24, 144]])
    assert moment(SPEC2, 2) == MatQ([[24, 120], [120, 840]])


@pytest.mark.parametrize("spec", SPECS)
def test_moment_closed_form_equals_expansion_path(spec):
    for s in range(6):
        m = moment(spec, s)
        assert m == moment_via_expansion(spec, s)
        assert m.is_symmetric()


@pytest.mark.parametrize("spec", SPECS)
def test_moment_zero_positive_definite(spec):
    assert moment(spec, 0).is_positive_definite()


def _random_poly(rng, n, deg):
    return MatPoly([
        MatQ([[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)])
        for _ in range(deg + 1)], n)


def test_inner_product_bilinearity_and_symmetry():
    import random

    rng = random.Random(7)
    table = MomentTable(SPEC2, 8)
    for _ in range(10):
        p = _random_poly(rng, 2, 3)
        q = _random_poly(rng, 2, 3)
        t = MatQ([[F(rng.randint(-3, 3)) for _ in range(2)] for _ in range(2)])
        assert inner_product(MatPoly.const(t) * p, q, table) == \
            t * inner_product(p, q, table)
        assert inner_product(p, q, table).transpose() == inner_product(q, p, table)


def test_inner_product_definite_on_random_inputs():
    import random

    rng = random.Random(11)
    table = MomentTable(SPEC2, 8)
    for _ in range(10):
        p = _random_poly(rng, 2, 3)
        gram = inner_product(p, p, table)
        if p.is_zero():
            assert gram.is_zero()
        else:
            assert not gram.is_zero()
            assert all(d >= 0 for d in gram.leading_minors())
    zero = MatPoly.zero(2)
    assert inner_product(zero, zero, table).is_zero()


def test_table_depth_guard():
    table = MomentTable(SPEC2, 2)
    p = MatPoly.monomial(2, MatQ.identity(2))
    with pytest.raises(IndexError):
        inner_product(p, p, table)


@pytest.mark.parametrize("spec", SPECS)
def test_h0_pochhammer_index_probe(spec):
    oracle = moment_via_expansion(spec, 0)
    assert h0_index_corrected(spec) == oracle
    assert h0_as_displayed(spec) != oracle
