"""Nodal curves with smooth components, modelled by their dual multigraph.

A curve is a list of component genera plus a list of nodes, each node an
unordered pair of distinct component indices (parallel nodes allowed).
A polarization assigns an exact rational weight to every component.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ValidationError
from .exact import bareiss_determinant

# Validation error codes.
NO_COMPONENTS = "no_components"
GENUS_TOO_SMALL = "genus_too_small"
SELF_NODE = "self_node"
BAD_NODE_INDEX = "bad_node_index"
DISCONNECTED = "disconnected"
WEIGHT_OUT_OF_RANGE = "weight_out_of_range"
WEIGHT_SUM = "weight_sum"
LENGTH_MISMATCH = "length_mismatch"


@dataclass(frozen=True)
class NodalCurve:
    genera: tuple[int, ...]
    nodes: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "genera", tuple(int(g) for g in self.genera))
        object.__setattr__(
            self, "nodes", tuple((int(i), int(j)) for i, j in self.nodes)
        )

    @classmethod
    def from_edges(cls, genera: Sequence[int], edges: Iterable[tuple[int, int]]):
        return cls(tuple(genera), tuple(edges))

    @property
    def n_components(self) -> int:
        return len(self.genera)

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class Polarization:
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))

    @classmethod
    def uniform(cls, n: int) -> "Polarization":
        return cls((Fraction(1, n),) * n)

    @property
    def min_weight(self) -> Fraction:
        return min(self.weights)


def _components_connected(n: int, nodes) -> bool:
    if n == 0:
        return False
    adj = [[] for _ in range(n)]
    for i, j in nodes:
        adj[i].append(j)
        adj[j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def validate_curve(curve: NodalCurve) -> None:
    n = curve.n_components
    if n == 0:
        raise ValidationError(NO_COMPONENTS, "a curve needs at least one component")
    for idx, g in enumerate(curve.genera):
        if g < 2:
            raise ValidationError(
                GENUS_TOO_SMALL, f"component {idx} has genus {g}; genus >= 2 required"
            )
    for i, j in curve.nodes:
        if not (0 <= i < n and 0 <= j < n):
            raise ValidationError(
                BAD_NODE_INDEX, f"node ({i},{j}) references a missing component"
            )
        if i == j:
            raise ValidationError(SELF_NODE, f"node ({i},{j}) joins a component to itself")
    if not _components_connected(n, curve.nodes):
        raise ValidationError(DISCONNECTED, "the dual graph is not connected")


def validate_polarization(curve: NodalCurve, pol: Polarization) -> None:
    if len(pol.weights) != curve.n_components:
        raise ValidationError(
            LENGTH_MISMATCH,
            f"{len(pol.weights)} weights for {curve.n_components} components",
        )
    if curve.n_components == 1:
        # The smooth case: the only polarization is (1).
        if pol.weights[0] != 1:
            raise ValidationError(WEIGHT_SUM, "a single component must have weight 1")
        return
    for idx, w in enumerate(pol.weights):
        if not 0 < w < 1:
            raise ValidationError(
                WEIGHT_OUT_OF_RANGE, f"weight {w} of component {idx} is not in (0,1)"
            )
    total = sum(pol.weights, Fraction(0))
    if total != 1:
        raise ValidationError(WEIGHT_SUM, f"weights sum to {total}, not 1")


def validate(curve: NodalCurve, pol: Polarization) -> None:
    """Raise :class:`ValidationError` unless ``(curve, pol)`` is admissible."""
    validate_curve(curve)
    validate_polarization(curve, pol)


def arithmetic_genus(curve: NodalCurve) -> int:
    return sum(curve.genera) + curve.n_nodes - curve.n_components + 1


def chi_structure_sheaf(curve: NodalCurve) -> int:
    """Euler characteristic of the structure sheaf, ``1 - p_a``."""
    chi = sum(1 - g for g in curve.genera) - curve.n_nodes
    assert chi == 1 - arithmetic_genus(curve)
    return chi


def node_degrees(curve: NodalCurve) -> tuple[int, ...]:
    deg = [0] * curve.n_components
    for i, j in curve.nodes:
        deg[i] += 1
        deg[j] += 1
    return tuple(deg)


def is_compact_type(curve: NodalCurve) -> bool:
    # Validated curves are connected, so a tree is exactly delta == gamma - 1.
    return curve.n_nodes == curve.n_components - 1


def laplacian(curve: NodalCurve) -> list[list[int]]:
    n = curve.n_components
    lap = [[0] * n for _ in range(n)]
    for i, j in curve.nodes:
        lap[i][i] += 1
        lap[j][j] += 1
        lap[i][j] -= 1
        lap[j][i] -= 1
    return lap


def spanning_tree_count(curve: NodalCurve) -> int:
    """Number of spanning trees of the dual multigraph (matrix-tree theorem)."""
    lap = laplacian(curve)
    reduced = [row[1:] for row in lap[1:]]
    return bareiss_determinant(reduced)


def internal_nodes(curve: NodalCurve, subset) -> int:
    s = set(subset)
    return sum(1 for i, j in curve.nodes if i in s and j in s)


def crossing_nodes(curve: NodalCurve, subset) -> int:
    s = set(subset)
    return sum(1 for i, j in curve.nodes if (i in s) != (j in s))
