"""Goodness of a polarization, the penalty constant, and the O_C subcurve test.

For a depth-one sheaf the defect is linear in the ranks and node free
ranks::

    delta_w = sum_i c_i r_i - sum_p s_p,    c_i = 1 - g_i + w_i (p_a - 1)

and is smallest when every ``s_p`` takes its maximum ``min(r_i, r_j)``.
Goodness therefore reduces to the sign of a convex piecewise-linear
function on the simplex ``sum r_i = 1``, which is an exact LP.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .curve import (
    NodalCurve,
    Polarization,
    arithmetic_genus,
    chi_structure_sheaf,
    crossing_nodes,
    internal_nodes,
)
from .simplex import OPTIMAL, linprog

GOOD = "good"
NOT_GOOD = "not_good"

STABLE = "stable"
STRICTLY_SEMISTABLE = "semistable"
UNSTABLE = "unstable"


@dataclass(frozen=True)
class GoodnessReport:
    verdict: str
    minimum: Fraction
    witness: tuple[Fraction, ...]
    uniform_only: bool

    @property
    def good(self) -> bool:
        return self.verdict == GOOD


@dataclass(frozen=True)
class SubcurveSlopeRecord:
    subcurve: tuple[int, ...]
    kernel_w_slope: Fraction


def goodness_objective_coefficients(
    curve: NodalCurve, pol: Polarization
) -> tuple[Fraction, ...]:
    pa1 = arithmetic_genus(curve) - 1
    coeffs = tuple(1 - g + w * pa1 for g, w in zip(curve.genera, pol.weights))
    assert sum(coeffs) == curve.n_nodes
    return coeffs


def _goodness_program(curve: NodalCurve, pol: Polarization):
    n, m = curve.n_components, curve.n_nodes
    coeffs = goodness_objective_coefficients(curve, pol)
    objective = list(coeffs) + [Fraction(-1)] * m
    a_ub = []
    for p, (i, j) in enumerate(curve.nodes):
        for end in (i, j):
            row = [0] * (n + m)
            row[n + p] = 1
            row[end] = -1
            a_ub.append(row)
    a_eq = [[1] * n + [0] * m]
    return objective, a_ub, [0] * len(a_ub), a_eq, [1]


def is_good(curve: NodalCurve, pol: Polarization) -> GoodnessReport:
    """Decide goodness by minimising the normalised defect over the simplex.

    When the minimum is 0, the optimal face is probed by maximising each
    ``r_i`` over it: the face is the single uniform point iff every such
    maximum equals ``1/gamma``.
    """
    n = curve.n_components
    objective, a_ub, b_ub, a_eq, b_eq = _goodness_program(curve, pol)
    res = linprog(objective, a_ub, b_ub, a_eq, b_eq)
    assert res.status == OPTIMAL, res.status
    minimum = res.value
    witness = res.x[:n]
    uniform = Fraction(1, n)
    if minimum < 0:
        return GoodnessReport(NOT_GOOD, minimum, witness, False)
    # The uniform point always scores 0, so the minimum is never positive.
    assert minimum == 0

    face_ub = a_ub + [objective]
    face_b = b_ub + [0]
    for i in range(n):
        probe = [0] * len(objective)
        probe[i] = -1
        top = linprog(probe, face_ub, face_b, a_eq, b_eq)
        assert top.status == OPTIMAL, top.status
        if -top.value > uniform:
            return GoodnessReport(NOT_GOOD, minimum, top.x[:n], False)
    return GoodnessReport(GOOD, minimum, (uniform,) * n, True)


def lambda_w(curve: NodalCurve, pol: Polarization, report: GoodnessReport | None = None) -> Fraction:
    if report is None:
        report = is_good(curve, pol)
    if report.good:
        return Fraction(0)
    return (1 / pol.min_weight - 1) * (arithmetic_genus(curve) - 1)


def subcurve_kernel_slope(curve: NodalCurve, pol: Polarization, subset) -> Fraction:
    """w-slope of the kernel of ``O_C -> O_{complement of subset}``."""
    chi_o = chi_structure_sheaf(curve)
    members = set(subset)
    chi = (
        sum(1 - curve.genera[i] for i in members)
        - internal_nodes(curve, members)
        - crossing_nodes(curve, members)
    )
    rank = sum((pol.weights[i] for i in members), Fraction(0))
    return (chi - rank * chi_o) / rank


def structure_sheaf_stability(
    curve: NodalCurve, pol: Polarization
) -> tuple[str, list[SubcurveSlopeRecord]]:
    n = curve.n_components
    records = []
    for size in range(1, n):
        for subset in combinations(range(n), size):
            records.append(
                SubcurveSlopeRecord(subset, subcurve_kernel_slope(curve, pol, subset))
            )
    if not records:
        return STABLE, records
    top = max(rec.kernel_w_slope for rec in records)
    if top < 0:
        verdict = STABLE
    elif top == 0:
        verdict = STRICTLY_SEMISTABLE
    else:
        verdict = UNSTABLE
    return verdict, records


@dataclass(frozen=True)
class PolarizationSummary:
    goodness: GoodnessReport
    lambda_w: Fraction
    structure_sheaf: str
    subcurves: tuple[SubcurveSlopeRecord, ...]


def analyze_polarization(curve: NodalCurve, pol: Polarization) -> PolarizationSummary:
    """Goodness, penalty constant and O_C test together.

    Good polarizations make O_C stable; a violation is a bug, not a result,
    and raises AssertionError.
    """
    report = is_good(curve, pol)
    verdict, records = structure_sheaf_stability(curve, pol)
    if report.good and verdict != STABLE:
        raise AssertionError(
            f"good polarization {pol.weights} but O_C is {verdict}"
        )
    return PolarizationSummary(report, lambda_w(curve, pol, report), verdict, tuple(records))
