"""Brute-force validators for the main implementations.

Nothing here calls the LP, the window arithmetic of the critical-value
enumeration, or the matrix-tree determinant; the oracles use naive loops
over the raw definitions, scaled to integers where that is cheaper.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import curve as cm
from . import sheaf as sh
from .census import brill_noether_number
from .curve import NodalCurve, Polarization

GOOD_CANDIDATE = "good"
NOT_GOOD = "not_good"


def _pa(curve: NodalCurve) -> int:
    # Recomputed here rather than imported so the oracle stays self-contained.
    return sum(curve.genera) + len(curve.nodes) - len(curve.genera) + 1


# --------------------------------------------------------------------------
# goodness


@dataclass(frozen=True)
class BruteGoodness:
    minimum: Fraction
    ray: tuple[int, ...]
    verdict: str


def goodness_bruteforce(curve: NodalCurve, pol: Polarization, R_max: int = 6) -> BruteGoodness:
    """Minimise the defect over integer multiranks in ``[0, R_max]^gamma``.

    Node free ranks are taken maximal, ``s_p = min(r_i, r_j)``, which is
    where the defect is smallest for fixed ranks.
    """
    if R_max < 2:
        raise ValueError("R_max must be at least 2")
    n = len(curve.genera)
    pa1 = _pa(curve) - 1
    scale = math.lcm(*(w.denominator for w in pol.weights))
    # scaled coefficient: scale * (1 - g_i + w_i (p_a - 1))
    coeff = [scale * (1 - g) + int(w * scale) * pa1 for g, w in zip(curve.genera, pol.weights)]
    best = None
    zero_off_uniform = False
    for ranks in itertools.product(range(R_max + 1), repeat=n):
        if not any(ranks):
            continue
        value = sum(c * r for c, r in zip(coeff, ranks))
        value -= scale * sum(min(ranks[i], ranks[j]) for i, j in curve.nodes)
        if best is None or value < best[0]:
            best = (value, ranks)
        if value == 0 and len(set(ranks)) > 1:
            zero_off_uniform = True
    minimum = Fraction(best[0], scale)
    good = minimum >= 0 and not zero_off_uniform
    return BruteGoodness(minimum, best[1], GOOD_CANDIDATE if good else NOT_GOOD)


# --------------------------------------------------------------------------
# critical values


def critical_values_bruteforce(
    curve: NodalCurve,
    pol: Polarization,
    stype,
    M,
    permissive: bool = False,
) -> list[Fraction]:
    """Naive scan over ``k'``, every component-rank tuple and a wide ``chi'`` window."""
    r, d, k = Fraction(stype.r), Fraction(stype.d), int(stype.k)
    M = Fraction(M)
    if not 0 < k < r:
        raise ValueError("need 0 < k < r")
    if M <= 0:
        raise ValueError("M must be positive")
    n = len(curve.genera)
    chi_o = sum(1 - g for g in curve.genera) - len(curve.nodes)
    wm = min(pol.weights)
    cap = math.floor(r / wm)
    scale = math.lcm(r.denominator, d.denominator, *(w.denominator for w in pol.weights))
    R, Dg = int(r * scale), int(d * scale)
    W = [int(w * scale) for w in pol.weights]
    Mn, Md = M.numerator, M.denominator
    found = set()
    for k_sub in range(k + 1):
        for ranks in itertools.product(range(cap + 1), repeat=n):
            Rs = sum(w * x for w, x in zip(W, ranks))  # scale * r'
            if Rs <= 0 or (not permissive and Rs > R):
                continue
            den = Rs * k - R * k_sub  # scale * (r'k - rk')
            if den == 0:
                continue
            # alpha = (R*scale*chi' - R*Rs*chi_o - Rs*Dg) / (scale * den)
            r_sub = Fraction(Rs, scale)
            bound = (M * abs(Fraction(den, scale)) + r * r_sub * abs(chi_o) + r_sub * abs(d)) / r
            B = math.ceil(bound) + 1
            for chi_sub in range(-B, B + 1):
                num = R * scale * chi_sub - R * Rs * chi_o - Rs * Dg
                den_full = scale * den
                if den_full < 0:
                    num, den_full = -num, -den_full
                if num > 0 and num * Md < Mn * den_full:
                    found.add(Fraction(num, den_full))
    return sorted(found)


# --------------------------------------------------------------------------
# spanning trees


def spanning_trees_bruteforce(curve: NodalCurve) -> int:
    """Count (gamma - 1)-subsets of nodes that form a spanning tree."""
    n = len(curve.genera)
    count = 0
    for subset in itertools.combinations(range(len(curve.nodes)), n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for e in subset:
            a, b = (find(v) for v in curve.nodes[e])
            if a == b:
                ok = False
                break
            parent[a] = b
        count += ok
    return count


# --------------------------------------------------------------------------
# test grids and random inputs


def curve_grid(gamma_max: int = 3, delta_max: int = 4, genera: Sequence[int] = (2, 3)) -> list[NodalCurve]:
    """Every connected loopless multigraph on ``<= gamma_max`` labelled vertices
    with ``<= delta_max`` edges, for every assignment of genera."""
    curves = []
    for n in range(1, gamma_max + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mult in itertools.product(range(delta_max + 1), repeat=len(pairs)):
            if sum(mult) > delta_max:
                continue
            nodes = tuple(p for p, m in zip(pairs, mult) for _ in range(m))
            if not _connected(n, nodes):
                continue
            for gs in itertools.product(genera, repeat=n):
                curves.append(NodalCurve(gs, nodes))
    return curves


def _connected(n: int, nodes) -> bool:
    seen = {0}
    changed = True
    while changed:
        changed = False
        for i, j in nodes:
            if (i in seen) != (j in seen):
                seen.update((i, j))
                changed = True
    return len(seen) == n


def random_polarization(n: int, rng: random.Random, max_part: int = 12) -> Polarization:
    if n == 1:
        return Polarization((Fraction(1),))
    parts = [rng.randint(1, max_part) for _ in range(n)]
    total = sum(parts)
    return Polarization(tuple(Fraction(p, total) for p in parts))


def random_curve(rng: random.Random, gamma_max: int = 4, genus_max: int = 6, extra_max: int = 3) -> NodalCurve:
    n = rng.randint(1, gamma_max)
    genera = tuple(rng.randint(2, genus_max) for _ in range(n))
    nodes = [(rng.randrange(i), i) for i in range(1, n)]
    if n > 1:
        for _ in range(rng.randint(0, extra_max)):
            i, j = rng.sample(range(n), 2)
            nodes.append((i, j))
    return NodalCurve(genera, tuple(nodes))


def random_numerics(curve: NodalCurve, rng: random.Random, rank_max: int = 6):
    n = len(curve.genera)
    ranks = [rng.randint(0, rank_max) for _ in range(n)]
    if not any(ranks):
        ranks[rng.randrange(n)] = 1
    free = [rng.randint(0, min(ranks[i], ranks[j])) for i, j in curve.nodes]
    return sh.DepthOneNumerics(tuple(ranks), tuple(free), rng.randint(-20, 20))


# --------------------------------------------------------------------------
# algebraic identities


@dataclass
class IdentityReport:
    trials: int
    passed: bool
    counterexample: str | None = None
    checks: dict[str, int] = field(default_factory=dict)


def identity_suite(
    seed: int = 0,
    trials: int = 10_000,
    beta: Callable | None = None,
) -> IdentityReport:
    """Randomised checks of the closed-form identities; stops at the first failure.

    ``beta`` replaces the Brill-Noether number under test (mutation testing).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    beta = beta or brill_noether_number
    rng = random.Random(seed)
    checks = {"beta": 0, "chi_pa": 0, "delta_linear": 0, "delta_bounds": 0}

    def fail(msg):
        return IdentityReport(trials, False, msg, checks)

    for _ in range(trials):
        pa = rng.randint(2, 50)
        r = rng.randint(2, 20)
        k = rng.randint(1, r - 1)
        d = rng.randint(1, 100)
        n_ext = d + (r - k) * (pa - 1)
        # a single smooth component of genus p_a carries the same numbers
        got = beta(NodalCurve((pa,)), (r, d, k))
        want = 1 + (r - k) ** 2 * (pa - 1) + k * (n_ext - k)
        if got != want:
            return fail(f"beta(p_a={pa}, r={r}, d={d}, k={k}) = {got}, expected {want}")
        checks["beta"] += 1

        curve = random_curve(rng)
        pol = random_polarization(curve.n_components, rng)
        if cm.chi_structure_sheaf(curve) != 1 - cm.arithmetic_genus(curve):
            return fail(f"chi(O_C) != 1 - p_a on {curve}")
        checks["chi_pa"] += 1

        a = random_numerics(curve, rng)
        b = random_numerics(curve, rng)
        total = sh.DepthOneNumerics(
            tuple(x + y for x, y in zip(a.multirank, b.multirank)),
            tuple(x + y for x, y in zip(a.node_free_ranks, b.node_free_ranks)),
            a.euler_char + b.euler_char,
        )
        shifted = sh.DepthOneNumerics(a.multirank, a.node_free_ranks, a.euler_char + 7)
        da = sh.delta_w(a, curve, pol)
        if sh.delta_w(total, curve, pol) != da + sh.delta_w(b, curve, pol):
            return fail(f"delta_w not additive on {a}, {b}")
        if sh.delta_w(shifted, curve, pol) != da:
            return fail(f"delta_w depends on chi for {a}")
        checks["delta_linear"] += 1

        first, second = sh.delta_w_lower_bound(a, curve, pol)
        if not da >= first >= second:
            return fail(f"bounds violated: delta={da}, bounds=({first}, {second}) for {a} on {curve}")
        checks["delta_bounds"] += 1
    return IdentityReport(trials, True, None, checks)


# --------------------------------------------------------------------------
# the verify suite


@dataclass(frozen=True)
class OracleRange:
    """Bounds of the exhaustive checks; ``parse`` reads ``key=value,...``."""

    R_max: int = 6
    r_max: int = 4
    d_max: int = 6
    gamma_max: int = 3
    delta_max: int = 4
    pols: int = 50
    trials: int = 10_000
    seed: int = 0

    @classmethod
    def parse(cls, text: str) -> "OracleRange":
        values = {}
        names = set(cls.__dataclass_fields__)
        for item in filter(None, (p.strip() for p in text.split(","))):
            key, sep, value = item.partition("=")
            key = key.strip()
            if not sep or key not in names:
                raise ValueError(f"bad oracle range entry {item!r}; keys are {sorted(names)}")
            try:
                values[key] = int(value)
            except ValueError:
                raise ValueError(f"oracle range {key} needs an integer, got {value!r}") from None
        return cls(**values)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def half_integer_types(r_max: int, d_max: int):
    """Types with ``r, d`` in half-integer steps, ``r <= r_max``, ``|d| <= d_max``, ``1 <= k < r``."""
    from .bounds import SystemType

    for r2 in range(3, 2 * r_max + 1):
        r = Fraction(r2, 2)
        for d2 in range(-2 * d_max, 2 * d_max + 1):
            for k in range(1, math.ceil(r)):
                yield SystemType(r, Fraction(d2, 2), k)


def check_goodness(curves, rng: random.Random, cfg: OracleRange, fixed=None) -> CheckResult:
    from .polarization import is_good

    count = 0
    for curve in curves:
        pols = [fixed] if fixed is not None else [
            random_polarization(curve.n_components, rng) for _ in range(cfg.pols)
        ]
        for pol in pols:
            lp = is_good(curve, pol).verdict
            brute = goodness_bruteforce(curve, pol, cfg.R_max).verdict
            count += 1
            if lp != brute:
                return CheckResult("goodness", False, f"{curve} {pol.weights}: LP {lp}, brute force {brute}")
    return CheckResult("goodness", True, f"{count} instances agree")


def check_critical_values(cases, cfg: OracleRange) -> CheckResult:
    from .bounds import alpha_range_bound, enumerate_critical_values

    count = 0
    for curve, pol in cases:
        for stype in half_integer_types(cfg.r_max, cfg.d_max):
            windows = {Fraction(cfg.d_max)}
            bound = alpha_range_bound(curve, pol, stype)
            if bound > 0:
                windows.add(bound)
            for M in sorted(windows):
                main = [cv.alpha for cv in enumerate_critical_values(curve, pol, stype, M)]
                brute = critical_values_bruteforce(curve, pol, stype, M)
                count += 1
                if main != brute:
                    return CheckResult(
                        "critical_values", False,
                        f"{curve} {pol.weights} type ({stype.r}, {stype.d}, {stype.k}) M={M}: "
                        f"{len(main)} vs {len(brute)} values",
                    )
    return CheckResult("critical_values", True, f"{count} windows agree")


def check_spanning_trees(curves) -> CheckResult:
    for curve in curves:
        if cm.spanning_tree_count(curve) != spanning_trees_bruteforce(curve):
            return CheckResult("spanning_trees", False, f"mismatch on {curve}")
    return CheckResult("spanning_trees", True, f"{len(curves)} curves agree")


def check_identities(cfg: OracleRange) -> CheckResult:
    rep = identity_suite(cfg.seed, cfg.trials)
    if rep.passed:
        return CheckResult("identities", True, f"{rep.trials} trials")
    return CheckResult("identities", False, rep.counterexample)


DEFAULT_CURVES = (
    (NodalCurve((2, 2), ((0, 1),)), Polarization((Fraction(1, 2), Fraction(1, 2)))),
    (NodalCurve((2, 3), ((0, 1),) * 3), Polarization((Fraction(1, 2), Fraction(1, 2)))),
    (NodalCurve((3, 2), ((0, 1),) * 2), Polarization((Fraction(1, 3), Fraction(2, 3)))),
)


def verify_suite(cfg: OracleRange = OracleRange(), curve=None, pol=None) -> VerifyReport:
    """Run every oracle comparison; with a curve given, only on that curve."""
    rng = random.Random(cfg.seed)
    if curve is not None:
        checks = [
            check_goodness([curve], rng, cfg, fixed=pol),
            check_critical_values([(curve, pol)], cfg),
            check_spanning_trees([curve]),
        ]
    else:
        grid = curve_grid(cfg.gamma_max, cfg.delta_max)
        checks = [
            check_identities(cfg),
            check_goodness(grid, rng, cfg),
            check_critical_values(DEFAULT_CURVES, cfg),
            check_spanning_trees(grid),
        ]
    return VerifyReport(tuple(checks))
