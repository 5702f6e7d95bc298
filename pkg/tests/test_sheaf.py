from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nodal_coherent import sheaf as sh
from nodal_coherent.curve import NodalCurve, Polarization
from nodal_coherent.errors import PreconditionError, ValidationError
from nodal_coherent.sheaf import DepthOneNumerics


def test_w_rank(c22, half, skewed):
    assert sh.w_rank(DepthOneNumerics((1, 1), (1,), 0), skewed) == 1
    assert sh.w_rank(DepthOneNumerics((1, 0), (0,), 0), half) == F(1, 2)
    assert sh.w_rank(DepthOneNumerics((2, 3), (0,), 0), skewed) == F(11, 4)


def test_w_degree_and_slope(c22, half):
    o = DepthOneNumerics.structure_sheaf(c22)
    assert sh.w_degree(o, c22, half) == 0
    assert sh.w_slope(o, c22, half) == 0
    one_zero = DepthOneNumerics((1, 0), (0,), 0)
    assert sh.w_degree(one_zero, c22, half) == F(3, 2)
    assert sh.w_slope(one_zero, c22, half) == 3
    for e in (-5, 0, 4):
        assert sh.w_degree(DepthOneNumerics((1, 1), (1,), e), c22, half) == e + 3


def test_delta_w(c22, half):
    assert sh.delta_w(DepthOneNumerics.locally_free(c22, 3, 7), c22, half) == 0
    assert sh.delta_w(DepthOneNumerics((1, 1), (0,), 0), c22, half) == 1
    e = DepthOneNumerics((2, 1), (1,), 5)
    assert sh.delta_w(e.scaled(2), c22, half) == 2 * sh.delta_w(e, c22, half)


def test_delta_w_bounds(c22, half, skewed):
    assert sh.delta_w_lower_bound(DepthOneNumerics.locally_free(c22, 2, 0), c22, half)[0] == 0
    assert sh.delta_w_lower_bound(DepthOneNumerics((1, 0), (0,), 0), c22, skewed) == (
        F(-9, 4),
        F(-9, 4),
    )


def test_sum_component_degrees(c22, half):
    assert sh.sum_component_degrees(DepthOneNumerics.structure_sheaf(c22), c22, half) == 0
    e = DepthOneNumerics((1, 1), (0,), -2)
    assert sh.w_degree(e, c22, half) == 1
    assert sh.delta_w(e, c22, half) == 1
    assert sh.sum_component_degrees(e, c22, half) == 0
    assert sh.sum_component_degrees(DepthOneNumerics((1, 1), (1,), 4), c22, half) == 7


@pytest.mark.parametrize(
    "numerics, code",
    [
        (DepthOneNumerics((0, 0), (0,), 0), sh.ZERO_SHEAF),
        (DepthOneNumerics((-1, 2), (0,), 0), sh.NEGATIVE_RANK),
        (DepthOneNumerics((1, 2), (2,), 0), sh.FREE_RANK_RANGE),
        (DepthOneNumerics((1, 2), (), 0), "length_mismatch"),
    ],
)
def test_numerics_validation(c22, numerics, code):
    with pytest.raises(ValidationError) as info:
        sh.validate_numerics(numerics, c22)
    assert info.value.code == code


def test_slope_of_zero_rank_is_a_precondition_error(c22, half):
    with pytest.raises(PreconditionError):
        sh.w_slope(DepthOneNumerics((0, 0), (0,), 1), c22, half)


ranks = st.tuples(st.integers(0, 6), st.integers(0, 6)).filter(any)


@settings(max_examples=200)
@given(ranks, st.integers(-30, 30), st.integers(1, 11), st.data())
def test_invariants_on_the_one_node_curve(rk, chi, w, data):
    c22 = NodalCurve((2, 2), ((0, 1),))
    pol = Polarization((F(w, 12), F(12 - w, 12)))
    s = data.draw(st.integers(0, min(rk)))
    e = DepthOneNumerics(rk, (s,), chi)
    sh.validate_numerics(e, c22)
    delta = sh.delta_w(e, c22, pol)
    first, second = sh.delta_w_lower_bound(e, c22, pol)
    assert delta >= first >= second
    assert sh.sum_component_degrees(e, c22, pol) == sh.w_degree(e, c22, pol) - delta
    assert sh.delta_w(DepthOneNumerics(rk, (s,), chi + 3), c22, pol) == delta
