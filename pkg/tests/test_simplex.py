from fractions import Fraction as F

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from nodal_coherent.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, linprog


def test_small_program():
    # max x + y s.t. x + 2y <= 4, 3x + y <= 6
    res = linprog([-1, -1], [[1, 2], [3, 1]], [4, 6])
    assert res.status == OPTIMAL
    assert res.x == (F(8, 5), F(6, 5))
    assert res.value == F(-14, 5)


def test_equality_and_negative_rhs():
    res = linprog([1, 2], [[-1, -1]], [-1], [[1, -1]], [F(1, 3)])
    assert res.status == OPTIMAL
    assert res.x == (F(2, 3), F(1, 3))


def test_infeasible_and_unbounded():
    assert linprog([1], [[1]], [-1]).status == INFEASIBLE
    assert linprog([-1, 0], [[0, 1]], [1]).status == UNBOUNDED


def test_redundant_equalities():
    res = linprog([1, 1], A_eq=[[1, 1], [2, 2]], b_eq=[1, 2])
    assert res.status == OPTIMAL and res.value == 1


def _vertex_min(c, A, b):
    """Minimum over the box-free polytope {x >= 0, Ax <= b} by vertex enumeration (2 vars)."""
    lines = [(row, rhs) for row, rhs in zip(A, b)] + [((1, 0), 0), ((0, 1), 0)]
    best = None
    for (a1, b1), (a2, b2) in itertools.combinations(lines, 2):
        det = a1[0] * a2[1] - a1[1] * a2[0]
        if det == 0:
            continue
        x = F(b1 * a2[1] - b2 * a1[1], det)
        y = F(a1[0] * b2 - a2[0] * b1, det)
        if x < 0 or y < 0 or any(r[0] * x + r[1] * y > rhs for r, rhs in zip(A, b)):
            continue
        v = c[0] * x + c[1] * y
        best = v if best is None else min(best, v)
    return best


coef = st.integers(-5, 5)


@settings(max_examples=150)
@given(st.tuples(coef, coef), st.lists(st.tuples(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10)), min_size=1, max_size=4))
def test_bounded_random_programs_match_vertex_enumeration(c, rows):
    A = [r[:2] for r in rows]
    b = [r[2] for r in rows]
    res = linprog(c, A, b)
    assert res.status == OPTIMAL
    assert res.value == _vertex_min(c, A, b)
