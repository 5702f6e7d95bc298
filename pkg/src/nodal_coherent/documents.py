"""Structured-text documents: curve and sheaf inputs, and every report.

Documents are JSON. Rationals are always strings ``"p/q"`` in lowest terms
(``"p"`` when integral); integer-valued fields are JSON integers. Reports
carry a ``kind`` tag and parse back into the same typed objects, so
``dumps(parse_report(dumps(x)))`` is byte-identical to ``dumps(x)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from . import curve as cm
from .bounds import BoundsReport, CriticalValue, SystemType
from .census import CensusReport, ComponentLabel
from .curve import NodalCurve, Polarization
from .errors import DocumentError
from .exact import format_rational, parse_rational
from .oracle import CheckResult, VerifyReport
from .polarization import GoodnessReport, PolarizationSummary, SubcurveSlopeRecord
from .sheaf import DepthOneNumerics


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None


def _field(doc: dict, name: str):
    if not isinstance(doc, dict):
        raise DocumentError("expected a JSON object")
    if name not in doc:
        raise DocumentError(f"missing field {name!r}")
    return doc[name]


def _int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"field {name!r} must be an integer, got {value!r}")
    return value


def _opt(fn, value):
    return None if value is None else fn(value)


def _q(x) -> str:
    return format_rational(x)


# --------------------------------------------------------------------------
# inputs


def curve_to_doc(curve: NodalCurve, pol: Polarization) -> dict:
    return {
        "components": [{"genus": g} for g in curve.genera],
        "nodes": [[i, j] for i, j in curve.nodes],
        "weights": [_q(w) for w in pol.weights],
    }


def curve_from_doc(doc: dict) -> tuple[NodalCurve, Polarization]:
    comps = _field(doc, "components")
    nodes = _field(doc, "nodes")
    weights = _field(doc, "weights")
    if not isinstance(comps, list) or not isinstance(nodes, list) or not isinstance(weights, list):
        raise DocumentError("components, nodes and weights must be lists")
    genera = tuple(_int(_field(c, "genus"), "genus") for c in comps)
    pairs = []
    for node in nodes:
        if not isinstance(node, list) or len(node) != 2:
            raise DocumentError(f"node {node!r} is not a pair of indices")
        pairs.append((_int(node[0], "nodes"), _int(node[1], "nodes")))
    if not all(isinstance(w, str) for w in weights):
        raise DocumentError('weights must be rational strings such as "1/2"')
    return NodalCurve(genera, tuple(pairs)), Polarization(tuple(parse_rational(w) for w in weights))


def load_curve(text: str) -> tuple[NodalCurve, Polarization]:
    return curve_from_doc(_loads(text))


def sheaf_to_doc(sheaf: DepthOneNumerics) -> dict:
    return {
        "multirank": list(sheaf.multirank),
        "node_free_ranks": list(sheaf.node_free_ranks),
        "chi": sheaf.euler_char,
    }


def sheaf_from_doc(doc: dict) -> DepthOneNumerics:
    ranks = _field(doc, "multirank")
    free = _field(doc, "node_free_ranks")
    if not isinstance(ranks, list) or not isinstance(free, list):
        raise DocumentError("multirank and node_free_ranks must be lists")
    return DepthOneNumerics(
        tuple(_int(x, "multirank") for x in ranks),
        tuple(_int(x, "node_free_ranks") for x in free),
        _int(_field(doc, "chi"), "chi"),
    )


def load_sheaf(text: str) -> DepthOneNumerics:
    return sheaf_from_doc(_loads(text))


# --------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class SheafSummary:
    numerics: DepthOneNumerics
    w_rank: Fraction
    w_degree: Fraction
    w_slope: Fraction
    delta_w: Fraction
    delta_w_bounds: tuple[Fraction, Fraction]
    sum_component_degrees: Fraction


@dataclass(frozen=True)
class CurveSummary:
    curve: NodalCurve
    pol: Polarization
    arithmetic_genus: int
    chi_structure_sheaf: int
    node_degrees: tuple[int, ...]
    compact_type: bool
    spanning_trees: int
    sheaf: SheafSummary | None = None


def summarize_curve(curve: NodalCurve, pol: Polarization, sheaf: DepthOneNumerics | None = None) -> CurveSummary:
    from . import sheaf as sh

    sheaf_summary = None
    if sheaf is not None:
        sh.validate_numerics(sheaf, curve)
        sheaf_summary = SheafSummary(
            sheaf,
            sh.w_rank(sheaf, pol),
            sh.w_degree(sheaf, curve, pol),
            sh.w_slope(sheaf, curve, pol),
            sh.delta_w(sheaf, curve, pol),
            sh.delta_w_lower_bound(sheaf, curve, pol),
            sh.sum_component_degrees(sheaf, curve, pol),
        )
    return CurveSummary(
        curve,
        pol,
        cm.arithmetic_genus(curve),
        cm.chi_structure_sheaf(curve),
        cm.node_degrees(curve),
        cm.is_compact_type(curve),
        cm.spanning_tree_count(curve),
        sheaf_summary,
    )


@dataclass(frozen=True)
class CriticalValuesReport:
    stype: SystemType
    M: Fraction
    permissive: bool
    critical_values: tuple[CriticalValue, ...]


@dataclass(frozen=True)
class Unavailable:
    kind: str
    reason: str


@dataclass(frozen=True)
class FullReport:
    sections: tuple[Any, ...]


def _type_to_doc(stype: SystemType) -> dict:
    return {"r": _q(stype.r), "d": _q(stype.d), "k": stype.k}


def _type_from_doc(doc) -> SystemType:
    return SystemType(
        parse_rational(_field(doc, "r")),
        parse_rational(_field(doc, "d")),
        _int(_field(doc, "k"), "k"),
    )


def _critical_to_doc(cv: CriticalValue) -> dict:
    return {
        "alpha": _q(cv.alpha),
        "witnesses": [
            {"k": k, "multirank": list(mr), "chi": chi} for k, mr, chi in cv.witnesses
        ],
    }


def _critical_from_doc(doc) -> CriticalValue:
    return CriticalValue(
        parse_rational(_field(doc, "alpha")),
        tuple(
            (_int(w["k"], "k"), tuple(w["multirank"]), _int(w["chi"], "chi"))
            for w in _field(doc, "witnesses")
        ),
    )


def to_doc(obj) -> dict:
    """Typed report -> JSON-ready dict."""
    if isinstance(obj, CurveSummary):
        doc = {
            "kind": "validate",
            "valid": True,
            "curve": curve_to_doc(obj.curve, obj.pol),
            "arithmetic_genus": obj.arithmetic_genus,
            "chi_structure_sheaf": obj.chi_structure_sheaf,
            "node_degrees": list(obj.node_degrees),
            "compact_type": obj.compact_type,
            "spanning_trees": obj.spanning_trees,
        }
        if obj.sheaf is not None:
            s = obj.sheaf
            doc["sheaf"] = {
                "numerics": sheaf_to_doc(s.numerics),
                "w_rank": _q(s.w_rank),
                "w_degree": _q(s.w_degree),
                "w_slope": _q(s.w_slope),
                "delta_w": _q(s.delta_w),
                "delta_w_bounds": [_q(x) for x in s.delta_w_bounds],
                "sum_component_degrees": _q(s.sum_component_degrees),
            }
        return doc
    if isinstance(obj, PolarizationSummary):
        g = obj.goodness
        return {
            "kind": "goodness",
            "verdict": g.verdict,
            "minimum": _q(g.minimum),
            "witness": [_q(x) for x in g.witness],
            "uniform_only": g.uniform_only,
            "lambda_w": _q(obj.lambda_w),
            "structure_sheaf": obj.structure_sheaf,
            "subcurves": [
                {"subcurve": list(rec.subcurve), "kernel_w_slope": _q(rec.kernel_w_slope)}
                for rec in obj.subcurves
            ],
        }
    if isinstance(obj, BoundsReport):
        return {
            "kind": "bounds",
            "type": _type_to_doc(obj.stype),
            "alpha_range_bound": _q(obj.alpha_range_bound),
            "alpha_I": _q(obj.alpha_I),
            "alpha_T_tilde": _q(obj.alpha_T_tilde),
            "alpha_T": _q(obj.alpha_T),
            "q": _opt(_q, obj.q),
            "alpha_S": _q(obj.alpha_S),
            "alpha_L": _q(obj.alpha_L),
            "window": [_q(x) for x in obj.window],
            "critical_values": [_critical_to_doc(cv) for cv in obj.critical_values],
        }
    if isinstance(obj, CriticalValuesReport):
        return {
            "kind": "critical_values",
            "type": _type_to_doc(obj.stype),
            "M": _q(obj.M),
            "permissive": obj.permissive,
            "critical_values": [_critical_to_doc(cv) for cv in obj.critical_values],
        }
    if isinstance(obj, CensusReport):
        return {
            "kind": "census",
            "type": list(obj.stype),
            "nonempty": obj.nonempty,
            "N": obj.N,
            "beta": obj.beta,
            "fiber_dim": obj.fiber_dim,
            "component_dim": obj.component_dim,
            "u_component_dim": obj.u_component_dim,
            "component_count": obj.component_count,
            "general_polarization_assumed": obj.general_polarization_assumed,
            "count_mismatch": obj.count_mismatch,
            "labels": [
                {"degrees": list(lab.degrees), "restricts": list(lab.restricts)}
                for lab in obj.labels
            ],
        }
    if isinstance(obj, VerifyReport):
        return {
            "kind": "verify",
            "passed": obj.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in obj.checks
            ],
        }
    if isinstance(obj, Unavailable):
        return {"kind": obj.kind, "unavailable": obj.reason}
    if isinstance(obj, FullReport):
        return {"kind": "report", "sections": [to_doc(s) for s in obj.sections]}
    raise TypeError(f"no document form for {type(obj).__name__}")


def from_doc(doc: dict):
    """JSON dict -> typed report (inverse of :func:`to_doc`)."""
    kind = _field(doc, "kind")
    if "unavailable" in doc:
        return Unavailable(kind, doc["unavailable"])
    if kind == "validate":
        curve, pol = curve_from_doc(_field(doc, "curve"))
        sheaf = None
        if "sheaf" in doc:
            s = doc["sheaf"]
            sheaf = SheafSummary(
                sheaf_from_doc(_field(s, "numerics")),
                parse_rational(s["w_rank"]),
                parse_rational(s["w_degree"]),
                parse_rational(s["w_slope"]),
                parse_rational(s["delta_w"]),
                tuple(parse_rational(x) for x in s["delta_w_bounds"]),
                parse_rational(s["sum_component_degrees"]),
            )
        return CurveSummary(
            curve,
            pol,
            doc["arithmetic_genus"],
            doc["chi_structure_sheaf"],
            tuple(doc["node_degrees"]),
            doc["compact_type"],
            doc["spanning_trees"],
            sheaf,
        )
    if kind == "goodness":
        return PolarizationSummary(
            GoodnessReport(
                doc["verdict"],
                parse_rational(doc["minimum"]),
                tuple(parse_rational(x) for x in doc["witness"]),
                doc["uniform_only"],
            ),
            parse_rational(doc["lambda_w"]),
            doc["structure_sheaf"],
            tuple(
                SubcurveSlopeRecord(tuple(rec["subcurve"]), parse_rational(rec["kernel_w_slope"]))
                for rec in doc["subcurves"]
            ),
        )
    if kind == "bounds":
        return BoundsReport(
            stype=_type_from_doc(doc["type"]),
            alpha_range_bound=parse_rational(doc["alpha_range_bound"]),
            alpha_I=parse_rational(doc["alpha_I"]),
            alpha_T_tilde=parse_rational(doc["alpha_T_tilde"]),
            alpha_T=parse_rational(doc["alpha_T"]),
            q=_opt(parse_rational, doc["q"]),
            alpha_S=parse_rational(doc["alpha_S"]),
            alpha_L=parse_rational(doc["alpha_L"]),
            window=tuple(parse_rational(x) for x in doc["window"]),
            critical_values=tuple(_critical_from_doc(cv) for cv in doc["critical_values"]),
        )
    if kind == "critical_values":
        return CriticalValuesReport(
            _type_from_doc(doc["type"]),
            parse_rational(doc["M"]),
            doc["permissive"],
            tuple(_critical_from_doc(cv) for cv in doc["critical_values"]),
        )
    if kind == "census":
        return CensusReport(
            tuple(doc["type"]),
            doc["nonempty"],
            doc["N"],
            doc["beta"],
            doc["fiber_dim"],
            doc["component_dim"],
            doc["u_component_dim"],
            doc["component_count"],
            doc["general_polarization_assumed"],
            doc["count_mismatch"],
            tuple(
                ComponentLabel(tuple(lab["degrees"]), tuple(lab["restricts"]))
                for lab in doc["labels"]
            ),
        )
    if kind == "verify":
        return VerifyReport(
            tuple(CheckResult(c["name"], c["passed"], c["detail"]) for c in doc["checks"])
        )
    if kind == "report":
        return FullReport(tuple(from_doc(s) for s in doc["sections"]))
    raise DocumentError(f"unknown report kind {kind!r}")


def parse_report(text: str):
    doc = _loads(text)
    try:
        return from_doc(doc)
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed report: {exc!r}") from None


def reemit(text: str) -> str:
    return dumps(to_doc(parse_report(text)))
