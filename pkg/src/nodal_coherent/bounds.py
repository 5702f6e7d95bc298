"""Critical values of the stability parameter and the large-alpha thresholds.

For a coherent system of type ``(r, d, k)`` with ``0 < k < r`` the walls are
the values

    alpha = (r d' - r' d) / (r' k - r k')

over numerically possible subsystems of type ``(r', d', k')``: ``k'`` in
``0..k``, ``r'`` a weighted sum of integer component ranks bounded by
``r / w_m``, and ``d' + r' chi(O_C)`` an integer.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .curve import NodalCurve, Polarization, chi_structure_sheaf
from .errors import PreconditionError
from .exact import ceil_frac, floor_frac, parse_rational
from .polarization import GoodnessReport, is_good, lambda_w


@dataclass(frozen=True)
class SystemType:
    r: Fraction
    d: Fraction
    k: int

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "d", Fraction(self.d))
        if Fraction(self.k).denominator != 1:
            raise PreconditionError(f"k must be an integer, got {self.k}")
        object.__setattr__(self, "k", int(self.k))

    @classmethod
    def parse(cls, text: str) -> "SystemType":
        parts = [p for p in text.split(",")]
        if len(parts) != 3:
            raise PreconditionError(f"type must be 'r,d,k', got {text!r}")
        r, d, k = (parse_rational(p) for p in parts)
        if k.denominator != 1:
            raise PreconditionError(f"k must be an integer, got {k}")
        return cls(r, d, int(k))

    @property
    def quotient_rank(self) -> Fraction:
        return self.r - self.k

    @property
    def terminal_slope(self) -> Fraction:
        """``d / (r - k)``, the right end of every alpha range for good w."""
        return self.d / (self.r - self.k)


@dataclass(frozen=True)
class CriticalValue:
    alpha: Fraction
    witnesses: tuple[tuple[int, tuple[int, ...], int], ...]

    def witness_alpha(self, witness, stype: SystemType, pol: Polarization, chi_o: int):
        k_sub, multirank, chi_sub = witness
        r_sub = sum((w * x for w, x in zip(pol.weights, multirank)), Fraction(0))
        d_sub = chi_sub - r_sub * chi_o
        return (stype.r * d_sub - r_sub * stype.d) / (r_sub * stype.k - stype.r * k_sub)


def _require_type(stype: SystemType) -> None:
    if not 0 < stype.k < stype.r:
        raise PreconditionError(f"need 0 < k < r, got r={stype.r}, k={stype.k}")


def _require_good(curve, pol, report: GoodnessReport | None = None) -> GoodnessReport:
    if report is None:
        report = is_good(curve, pol)
    if not report.good:
        raise PreconditionError(
            "polarization is not good; the large-alpha thresholds are not established for it"
        )
    return report


def _require_positive_degree(stype: SystemType) -> None:
    if stype.d <= 0:
        raise PreconditionError(
            f"d = {stype.d} <= 0: the moduli spaces are empty for every alpha > 0"
        )


def subsheaf_ranks(
    pol: Polarization, cap: int, limit: Fraction | None
) -> dict[Fraction, list[tuple[int, ...]]]:
    """Group integer multiranks in ``[0, cap]^gamma`` by their positive w-rank.

    With ``limit`` set, only w-ranks ``<= limit`` are kept; partial sums are
    pruned against it.
    """
    weights = pol.weights
    n = len(weights)
    groups: dict[Fraction, list[tuple[int, ...]]] = defaultdict(list)
    prefix: list[int] = []

    def extend(i: int, acc: Fraction):
        if i == n:
            if acc > 0:
                groups[acc].append(tuple(prefix))
            return
        for x in range(cap + 1):
            nxt = acc + weights[i] * x
            if limit is not None and nxt > limit:
                break
            prefix.append(x)
            extend(i + 1, nxt)
            prefix.pop()

    extend(0, Fraction(0))
    return dict(groups)


def enumerate_critical_values(
    curve: NodalCurve,
    pol: Polarization,
    stype: SystemType,
    M,
    permissive: bool = False,
) -> list[CriticalValue]:
    """All critical values in the open interval ``(0, M)``, sorted, with witnesses.

    ``permissive=True`` drops the ``r' <= r`` restriction and keeps only the
    component-rank cap ``r'_i <= r / w_m``.
    """
    _require_type(stype)
    M = Fraction(M)
    if M <= 0:
        raise PreconditionError(f"window bound M must be positive, got {M}")
    r, d, k = stype.r, stype.d, stype.k
    chi_o = chi_structure_sheaf(curve)
    cap = floor_frac(r / pol.min_weight)
    groups = subsheaf_ranks(pol, cap, None if permissive else r)

    found: dict[Fraction, list] = defaultdict(list)
    for r_sub, multiranks in groups.items():
        shift = r * r_sub * chi_o + r_sub * d
        for k_sub in range(k + 1):
            denom = r_sub * k - r * k_sub
            if denom == 0:
                continue
            # alpha * denom == r * chi' - shift, with alpha strictly inside (0, M).
            ends = (shift / r, (shift + M * denom) / r)
            lo, hi = min(ends), max(ends)
            for chi_sub in range(floor_frac(lo) + 1, ceil_frac(hi)):
                d_sub = chi_sub - r_sub * chi_o
                alpha = (r * d_sub - r_sub * d) / denom
                assert 0 < alpha < M
                for mr in multiranks:
                    found[alpha].append((k_sub, mr, chi_sub))
    return [CriticalValue(a, tuple(sorted(found[a]))) for a in sorted(found)]


def alpha_range_bound(
    curve: NodalCurve, pol: Polarization, stype: SystemType, report: GoodnessReport | None = None
) -> Fraction:
    _require_type(stype)
    lam = lambda_w(curve, pol, report)
    return (stype.d + stype.r * lam) / (stype.r - stype.k)


def alpha_injectivity_threshold(
    curve: NodalCurve, pol: Polarization, stype: SystemType, report: GoodnessReport | None = None
) -> Fraction:
    _require_type(stype)
    _require_good(curve, pol, report)
    _require_positive_degree(stype)
    r, d, k = stype.r, stype.d, stype.k
    wm = pol.min_weight
    value = (k - wm) * d / (k * (r - k + wm))
    # On a smooth curve w_m = 1, and k = 1 gives 0.
    assert (0 < value if wm < 1 else 0 <= value) and value < stype.terminal_slope
    return value


def alpha_torsion_candidate(stype: SystemType) -> Fraction:
    r, k = stype.r, stype.k
    return stype.terminal_slope - r / (k * (r - k))


def alpha_torsion_threshold(
    curve: NodalCurve, pol: Polarization, stype: SystemType, report: GoodnessReport | None = None
) -> Fraction:
    a_i = alpha_injectivity_threshold(curve, pol, stype, report)
    return max(a_i, alpha_torsion_candidate(stype))


def _quotient_rank_steps(pol: Polarization, stype: SystemType):
    s = stype.quotient_rank
    wm = pol.min_weight
    if s <= wm:
        raise PreconditionError(
            f"r - k = {s} <= w_m = {wm}: no proper saturated subsheaf of the quotient"
        )
    cap = floor_frac(s / wm)
    return [x for x in subsheaf_ranks(pol, cap, s) if wm <= x < s]


def slope_gap_q(
    curve: NodalCurve, pol: Polarization, stype: SystemType, report: GoodnessReport | None = None
) -> Fraction:
    """Smallest positive slope gap ``mu(F') - mu(F)`` not exceeding 1 (else 1)."""
    _require_type(stype)
    _require_good(curve, pol, report)
    _require_positive_degree(stype)
    chi_o = chi_structure_sheaf(curve)
    mu = stype.terminal_slope
    best = Fraction(1)
    for s_sub in _quotient_rank_steps(pol, stype):
        # gap(chi') = (chi' - s' chi_o) / s' - mu, increasing in chi' with step 1/s'
        chi_sub = floor_frac(s_sub * (mu + chi_o)) + 1
        gap = (chi_sub - s_sub * chi_o) / s_sub - mu
        assert gap > 0
        best = min(best, gap)
    return best


def alpha_bgn_threshold(
    curve: NodalCurve, pol: Polarization, stype: SystemType, report: GoodnessReport | None = None
) -> Fraction:
    """Above this value every semistable system is a BGN extension with semistable quotient.

    When ``r - k <= w_m`` the quotient has no proper saturated subsheaf and
    the threshold collapses to the torsion threshold.
    """
    report = _require_good(curve, pol, report)
    a_t = alpha_torsion_threshold(curve, pol, stype, report)
    wm = pol.min_weight
    if stype.quotient_rank <= wm:
        return a_t
    q = slope_gap_q(curve, pol, stype, report)
    raw = bgn_raw_value(pol, stype, q)
    return max(a_t, raw)


def bgn_raw_value(pol: Polarization, stype: SystemType, q: Fraction) -> Fraction:
    r, k = stype.r, stype.k
    wm = pol.min_weight
    return stype.terminal_slope - q * r * wm / (k * (r - k - wm))


def terminal_window(
    curve: NodalCurve,
    pol: Polarization,
    stype: SystemType,
    report: GoodnessReport | None = None,
    critical: list[CriticalValue] | None = None,
) -> tuple[Fraction, Fraction]:
    _require_type(stype)
    _require_good(curve, pol, report)
    _require_positive_degree(stype)
    right = stype.terminal_slope
    if critical is None:
        critical = enumerate_critical_values(curve, pol, stype, right)
    left = critical[-1].alpha if critical else Fraction(0)
    return left, right


@dataclass(frozen=True)
class BoundsReport:
    stype: SystemType
    alpha_range_bound: Fraction
    alpha_I: Fraction
    alpha_T_tilde: Fraction
    alpha_T: Fraction
    q: Fraction | None
    alpha_S: Fraction
    alpha_L: Fraction
    window: tuple[Fraction, Fraction]
    critical_values: tuple[CriticalValue, ...] = field(default=())


def bounds_report(curve: NodalCurve, pol: Polarization, stype: SystemType) -> BoundsReport:
    _require_type(stype)
    report = _require_good(curve, pol)
    _require_positive_degree(stype)
    critical = enumerate_critical_values(curve, pol, stype, stype.terminal_slope)
    window = terminal_window(curve, pol, stype, report, critical)
    q = None
    if stype.quotient_rank > pol.min_weight:
        q = slope_gap_q(curve, pol, stype, report)
    return BoundsReport(
        stype=stype,
        alpha_range_bound=alpha_range_bound(curve, pol, stype, report),
        alpha_I=alpha_injectivity_threshold(curve, pol, stype, report),
        alpha_T_tilde=alpha_torsion_candidate(stype),
        alpha_T=alpha_torsion_threshold(curve, pol, stype, report),
        q=q,
        alpha_S=alpha_bgn_threshold(curve, pol, stype, report),
        alpha_L=window[0],
        window=window,
        critical_values=tuple(critical),
    )
