"""Census of the terminal moduli space of coherent systems of multirank r(1,...,1).

All inputs are integers here: with equal component ranks both the w-rank
and the w-degree are integral, and results are stated only in that case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bounds import SystemType
from .curve import NodalCurve, Polarization, arithmetic_genus, spanning_tree_count
from .errors import PreconditionError


def _integer_type(stype) -> tuple[int, int, int]:
    if isinstance(stype, SystemType):
        r, d, k = stype.r, stype.d, stype.k
    else:
        r, d, k = stype
    r, d, k = Fraction(r), Fraction(d), Fraction(k)
    if any(x.denominator != 1 for x in (r, d, k)):
        raise PreconditionError(f"census needs an integer type, got ({r}, {d}, {k})")
    return int(r), int(d), int(k)


def _checked_type(stype) -> tuple[int, int, int]:
    r, d, k = _integer_type(stype)
    if not 0 < k < r:
        raise PreconditionError(f"need 0 < k < r, got r={r}, k={k}")
    if d <= 0:
        raise PreconditionError(f"need d > 0, got d={d}")
    return r, d, k


def extension_space_dim(curve: NodalCurve, stype) -> int:
    """``h^0(F (x) omega_C) = d + (r - k)(p_a - 1)`` for the BGN quotient ``F``."""
    r, d, k = _checked_type(stype)
    return d + (r - k) * (arithmetic_genus(curve) - 1)


def is_nonempty(curve: NodalCurve, stype) -> bool:
    r, d, k = _checked_type(stype)
    pa = arithmetic_genus(curve)
    verdict = k * pa <= d + r * (pa - 1)
    assert verdict == (k <= extension_space_dim(curve, stype))
    return verdict


def brill_noether_number(curve: NodalCurve, stype) -> int:
    r, d, k = _integer_type(stype)
    pa1 = arithmetic_genus(curve) - 1
    return r * r * pa1 + 1 - k * (k - d + r * pa1)


def bgn_fiber_dimension(curve: NodalCurve, stype) -> tuple[int, int]:
    """``(N, dim Gr(k, N))`` for the Grassmannian of BGN extensions."""
    r, d, k = _checked_type(stype)
    n = extension_space_dim(curve, stype)
    if k > n:
        raise PreconditionError(f"Gr({k}, {n}) is empty: k exceeds N")
    return n, k * (n - k)


def component_count(curve: NodalCurve, pol: Polarization, stype) -> int:
    """Number of components for a general polarization: ``h s^(gamma - 1)``.

    Whether ``pol`` is general is not checked.
    """
    r, d, k = _integer_type(stype)
    s = r - k
    if s < 1:
        raise PreconditionError(f"need r - k >= 1, got {s}")
    return spanning_tree_count(curve) * s ** (curve.n_components - 1)


def component_dimensions(curve: NodalCurve, stype) -> tuple[int, int]:
    r, d, k = _checked_type(stype)
    s = r - k
    u_dim = 1 + s * s * (arithmetic_genus(curve) - 1)
    y_dim = brill_noether_number(curve, stype)
    n = extension_space_dim(curve, stype)
    assert y_dim == u_dim + k * (n - k)
    return u_dim, y_dim


def restriction_criterion(curve: NodalCurve, stype, label: Sequence[int]) -> tuple[bool, ...]:
    r, d, k = _integer_type(stype)
    label = tuple(int(x) for x in label)
    if len(label) != curve.n_components:
        raise PreconditionError("label needs one degree per component")
    if sum(label) != d:
        raise PreconditionError(f"label degrees sum to {sum(label)}, not d = {d}")
    return tuple(
        di > 0 and k <= di + (r - k) * (g - 1) for di, g in zip(label, curve.genera)
    )


@dataclass(frozen=True)
class ComponentLabel:
    degrees: tuple[int, ...]
    restricts: tuple[bool, ...]


@dataclass(frozen=True)
class LabelEnumeration:
    labels: tuple[ComponentLabel, ...]
    component_count: int
    count_mismatch: bool


def _compositions(total: int, bounds: Sequence[tuple[int, int]]):
    if not bounds:
        if total == 0:
            yield ()
        return
    lo, hi = bounds[0]
    rest_lo = sum(b[0] for b in bounds[1:])
    rest_hi = sum(b[1] for b in bounds[1:])
    for x in range(max(lo, total - rest_hi), min(hi, total - rest_lo) + 1):
        for tail in _compositions(total - x, bounds[1:]):
            yield (x,) + tail


def enumerate_component_labels(
    curve: NodalCurve,
    pol: Polarization,
    stype,
    bounds: Sequence[tuple[int, int]] | None = None,
) -> LabelEnumeration:
    """Candidate degree tuples ``(d_1, ..., d_gamma)`` summing to ``d``.

    Which tuples really label components is not determined here; the
    default box ``0 <= d_i <= d`` is a heuristic and ``count_mismatch``
    records any disagreement with the component count.
    """
    r, d, k = _integer_type(stype)
    if bounds is None:
        if d < 0:
            raise PreconditionError("default label bounds need d >= 0; pass explicit bounds")
        bounds = [(0, d)] * curve.n_components
    bounds = [(int(lo), int(hi)) for lo, hi in bounds]
    if len(bounds) != curve.n_components:
        raise PreconditionError("one degree interval per component is required")
    labels = tuple(
        ComponentLabel(t, restriction_criterion(curve, (r, d, k), t))
        for t in _compositions(d, bounds)
    )
    count = component_count(curve, pol, (r, d, k))
    return LabelEnumeration(labels, count, len(labels) != count)


@dataclass(frozen=True)
class CensusReport:
    stype: tuple[int, int, int]
    nonempty: bool
    N: int
    beta: int
    fiber_dim: int | None
    component_dim: int | None
    u_component_dim: int
    component_count: int
    general_polarization_assumed: bool = True
    count_mismatch: bool = False
    labels: tuple[ComponentLabel, ...] = field(default=())


def census(curve: NodalCurve, pol: Polarization, stype) -> CensusReport:
    r, d, k = _checked_type(stype)
    n = extension_space_dim(curve, (r, d, k))
    beta = brill_noether_number(curve, (r, d, k))
    u_dim = 1 + (r - k) ** 2 * (arithmetic_genus(curve) - 1)
    nonempty = is_nonempty(curve, (r, d, k))
    if not nonempty:
        return CensusReport((r, d, k), False, n, beta, None, None, u_dim, 0)
    _, fiber = bgn_fiber_dimension(curve, (r, d, k))
    u_dim, y_dim = component_dimensions(curve, (r, d, k))
    assert beta == u_dim + fiber
    labels = enumerate_component_labels(curve, pol, (r, d, k))
    return CensusReport(
        (r, d, k),
        True,
        n,
        beta,
        fiber,
        y_dim,
        u_dim,
        labels.component_count,
        True,
        labels.count_mismatch,
        labels.labels,
    )
