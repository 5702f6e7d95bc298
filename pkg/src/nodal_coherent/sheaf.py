"""Numerical shadows of depth-one sheaves and their polarized invariants.

A depth-one sheaf ``E`` is represented only by its multirank ``(r_i)``, the
free rank ``s_p`` of its stalk at each node, and its Euler characteristic.
Every quantity here is a polynomial in those integers and the weights, so
all results are exact Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import (
    LENGTH_MISMATCH,
    NodalCurve,
    Polarization,
    arithmetic_genus,
    chi_structure_sheaf,
)
from .errors import PreconditionError, ValidationError

ZERO_SHEAF = "zero_sheaf"
NEGATIVE_RANK = "negative_rank"
FREE_RANK_RANGE = "free_rank_range"


@dataclass(frozen=True)
class DepthOneNumerics:
    multirank: tuple[int, ...]
    node_free_ranks: tuple[int, ...]
    euler_char: int

    def __post_init__(self):
        object.__setattr__(self, "multirank", tuple(int(r) for r in self.multirank))
        object.__setattr__(
            self, "node_free_ranks", tuple(int(s) for s in self.node_free_ranks)
        )
        object.__setattr__(self, "euler_char", int(self.euler_char))

    @classmethod
    def locally_free(cls, curve: NodalCurve, rank: int, euler_char: int):
        return cls((rank,) * curve.n_components, (rank,) * curve.n_nodes, euler_char)

    @classmethod
    def structure_sheaf(cls, curve: NodalCurve):
        return cls.locally_free(curve, 1, chi_structure_sheaf(curve))

    def scaled(self, t: int) -> "DepthOneNumerics":
        return DepthOneNumerics(
            tuple(t * r for r in self.multirank),
            tuple(t * s for s in self.node_free_ranks),
            t * self.euler_char,
        )


def validate_numerics(sheaf: DepthOneNumerics, curve: NodalCurve) -> None:
    if len(sheaf.multirank) != curve.n_components:
        raise ValidationError(LENGTH_MISMATCH, "multirank length differs from component count")
    if len(sheaf.node_free_ranks) != curve.n_nodes:
        raise ValidationError(LENGTH_MISMATCH, "one free rank per node is required")
    if any(r < 0 for r in sheaf.multirank):
        raise ValidationError(NEGATIVE_RANK, "ranks must be nonnegative")
    if not any(sheaf.multirank):
        raise ValidationError(ZERO_SHEAF, "multirank is identically zero")
    for (i, j), s in zip(curve.nodes, sheaf.node_free_ranks):
        if not 0 <= s <= min(sheaf.multirank[i], sheaf.multirank[j]):
            raise ValidationError(
                FREE_RANK_RANGE,
                f"free rank {s} at node ({i},{j}) exceeds min(r_{i}, r_{j})",
            )


def w_rank(sheaf: DepthOneNumerics, pol: Polarization) -> Fraction:
    if len(sheaf.multirank) != len(pol.weights):
        raise ValidationError(LENGTH_MISMATCH, "multirank and weights differ in length")
    return sum((w * r for w, r in zip(pol.weights, sheaf.multirank)), Fraction(0))


def w_degree(sheaf: DepthOneNumerics, curve: NodalCurve, pol: Polarization) -> Fraction:
    return sheaf.euler_char - w_rank(sheaf, pol) * chi_structure_sheaf(curve)


def w_slope(sheaf: DepthOneNumerics, curve: NodalCurve, pol: Polarization) -> Fraction:
    rank = w_rank(sheaf, pol)
    if rank == 0:
        raise PreconditionError("w-slope undefined for zero w-rank")
    return w_degree(sheaf, curve, pol) / rank


def delta_w(sheaf: DepthOneNumerics, curve: NodalCurve, pol: Polarization) -> Fraction:
    """Defect ``wdeg(E) - sum deg(E_i)`` computed from ranks and node free ranks.

    Independent of the Euler characteristic.
    """
    chi_o = chi_structure_sheaf(curve)
    total = Fraction(0)
    for r, g, w in zip(sheaf.multirank, curve.genera, pol.weights):
        total += r * (1 - g - w * chi_o)
    return total - sum(sheaf.node_free_ranks)


def delta_w_lower_bound(
    sheaf: DepthOneNumerics, curve: NodalCurve, pol: Polarization
) -> tuple[Fraction, Fraction]:
    """The two lower bounds for ``delta_w``; the first dominates the second."""
    pa1 = arithmetic_genus(curve) - 1
    rank = w_rank(sheaf, pol)
    r_max = max(sheaf.multirank)
    first = -(r_max - rank) * pa1
    second = -(1 / pol.min_weight - 1) * rank * pa1
    return Fraction(first), Fraction(second)


def sum_component_degrees(
    sheaf: DepthOneNumerics, curve: NodalCurve, pol: Polarization
) -> Fraction:
    return w_degree(sheaf, curve, pol) - delta_w(sheaf, curve, pol)
