from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nodal_coherent.errors import DocumentError
from nodal_coherent.exact import (
    bareiss_determinant,
    ceil_frac,
    floor_frac,
    format_rational,
    parse_rational,
)


@pytest.mark.parametrize(
    "text, value",
    [("3", F(3)), ("-7/2", F(-7, 2)), ("4/6", F(2, 3)), (" 1 / 3 ", F(1, 3)), ("+5", F(5))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1.5", "1/0", "a/b", "1//2", "1e3", "--1"])
def test_parse_rational_rejects(text):
    with pytest.raises(DocumentError):
        parse_rational(text)


def test_parse_rational_rejects_bool_and_float():
    with pytest.raises(DocumentError):
        parse_rational(True)
    with pytest.raises(DocumentError):
        parse_rational(0.5)


def test_format_is_canonical():
    assert format_rational(F(4, -6)) == "-2/3"
    assert format_rational(F(6, 3)) == "2"
    assert format_rational(0) == "0"


@given(st.fractions())
def test_format_parse_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


@given(st.fractions())
def test_floor_ceil(x):
    assert floor_frac(x) <= x <= ceil_frac(x)
    assert ceil_frac(x) - floor_frac(x) == (0 if x.denominator == 1 else 1)


def _det_cofactor(m):
    if not m:
        return 1
    return sum(
        (-1) ** j * m[0][j] * _det_cofactor([row[:j] + row[j + 1:] for row in m[1:]])
        for j in range(len(m))
    )


@given(st.integers(0, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)
))
def test_bareiss_matches_cofactor_expansion(m):
    assert bareiss_determinant(m) == _det_cofactor(m)


def test_bareiss_needs_row_swap():
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[0, 0], [1, 2]]) == 0
