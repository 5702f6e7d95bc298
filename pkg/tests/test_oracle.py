from fractions import Fraction as F

import random

import pytest

from nodal_coherent import oracle
from nodal_coherent.bounds import SystemType
from nodal_coherent.census import brill_noether_number
from nodal_coherent.curve import NodalCurve, Polarization


def test_goodness_bruteforce(c22, half, skewed):
    res = oracle.goodness_bruteforce(c22, half, 6)
    assert res.minimum == 0 and res.verdict == oracle.GOOD_CANDIDATE
    res = oracle.goodness_bruteforce(c22, skewed, 6)
    assert res.minimum == F(-3, 2) and res.ray == (6, 0)
    assert res.verdict == oracle.NOT_GOOD
    with pytest.raises(ValueError):
        oracle.goodness_bruteforce(c22, half, 1)


def test_critical_values_bruteforce(c22, half):
    assert oracle.critical_values_bruteforce(c22, half, SystemType(2, 1, 1), 1) == []
    assert oracle.critical_values_bruteforce(c22, half, SystemType(2, 2, 1), 2) == [1, F(4, 3)]
    assert oracle.critical_values_bruteforce(c22, half, SystemType(2, 2, 1), F(1, 2)) == []


def test_spanning_trees_bruteforce(c23):
    assert oracle.spanning_trees_bruteforce(c23) == 3
    k4 = NodalCurve((2,) * 4, tuple((i, j) for i in range(4) for j in range(i + 1, 4)))
    assert oracle.spanning_trees_bruteforce(k4) == 16


def test_curve_grid_is_connected_and_bounded():
    grid = oracle.curve_grid(3, 4)
    assert len(grid) == len(set(grid))
    for curve in grid:
        assert curve.n_components <= 3 and curve.n_nodes <= 4
        assert oracle._connected(curve.n_components, curve.nodes)
        assert set(curve.genera) <= {2, 3}


def test_random_polarization_sums_to_one():
    rng = random.Random(3)
    for n in range(1, 5):
        assert sum(oracle.random_polarization(n, rng).weights) == 1


def test_identity_suite():
    rep = oracle.identity_suite(0, 2000)
    assert rep.passed and rep.checks["beta"] == 2000
    with pytest.raises(ValueError):
        oracle.identity_suite(0, 0)


def test_identity_suite_catches_a_sign_error():
    def broken(curve, stype):
        r, d, k = stype
        return brill_noether_number(curve, (r, d, k)) - 2 * k * d

    rep = oracle.identity_suite(0, 100, beta=broken)
    assert not rep.passed and "beta" in rep.counterexample


def test_oracle_range_parse():
    cfg = oracle.OracleRange.parse("R_max=5, r_max=3,pols=2")
    assert (cfg.R_max, cfg.r_max, cfg.pols, cfg.d_max) == (5, 3, 2, 6)
    for bad in ("bogus=1", "R_max", "R_max=x"):
        with pytest.raises(ValueError):
            oracle.OracleRange.parse(bad)


def test_verify_suite_on_one_curve(c22, half):
    cfg = oracle.OracleRange(r_max=3, d_max=3)
    rep = oracle.verify_suite(cfg, c22, half)
    assert rep.passed
    assert [c.name for c in rep.checks] == ["goodness", "critical_values", "spanning_trees"]


def test_half_integer_types():
    types = list(oracle.half_integer_types(2, 1))
    assert SystemType(F(3, 2), F(-1, 2), 1) in types
    assert all(1 <= t.k < t.r <= 2 and abs(t.d) <= 1 for t in types)
