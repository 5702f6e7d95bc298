from fractions import Fraction as F

import json

import pytest

from nodal_coherent import documents as docs
from nodal_coherent.bounds import SystemType, bounds_report, enumerate_critical_values
from nodal_coherent.census import census
from nodal_coherent.errors import DocumentError
from nodal_coherent.oracle import verify_suite, OracleRange
from nodal_coherent.polarization import analyze_polarization
from nodal_coherent.sheaf import DepthOneNumerics


def test_load_curve(data_dir, c22, half):
    curve, pol = docs.load_curve((data_dir / "two_genus2_one_node.json").read_text())
    assert curve == c22 and pol == half


def test_curve_document_roundtrip(c23, half):
    doc = docs.curve_to_doc(c23, half)
    assert doc["weights"] == ["1/2", "1/2"]
    assert docs.curve_from_doc(json.loads(docs.dumps(doc))) == (c23, half)


@pytest.mark.parametrize(
    "text",
    [
        '{"components": [{"genus": 2}], "nodes": []}',
        '{"components": [{"genus": 2}], "nodes": [], "weights": ["0.5"]}',
        '{"components": [{"genus": "2"}], "nodes": [], "weights": ["1"]}',
        '{"components": [{"genus": 2}], "nodes": [[0]], "weights": ["1"]}',
        '{"components": [{"genus": 2}], "nodes": [], "weights": [1]}',
        "not json",
        "[]",
    ],
)
def test_bad_curve_documents(text):
    with pytest.raises(DocumentError):
        docs.load_curve(text)


def test_sheaf_document(data_dir):
    sheaf = docs.load_sheaf((data_dir / "sheaf_one_zero.json").read_text())
    assert sheaf == DepthOneNumerics((1, 0), (0,), 0)
    assert docs.sheaf_from_doc(docs.sheaf_to_doc(sheaf)) == sheaf


def _reports(c22, half, skewed):
    stype = SystemType(2, 2, 1)
    yield docs.summarize_curve(c22, half, DepthOneNumerics((1, 0), (0,), 0))
    yield docs.summarize_curve(c22, skewed)
    yield analyze_polarization(c22, half)
    yield analyze_polarization(c22, skewed)
    yield bounds_report(c22, half, stype)
    yield bounds_report(c22, half, SystemType(F(3, 2), 2, 1))
    yield docs.CriticalValuesReport(
        stype, F(2), False, tuple(enumerate_critical_values(c22, half, stype, 2))
    )
    yield census(c22, half, (3, 2, 1))
    yield census(c22, half, (10, 1, 9))
    yield verify_suite(OracleRange(r_max=2, d_max=2), c22, half)
    yield docs.FullReport((analyze_polarization(c22, half), docs.Unavailable("bounds", "not good")))


def test_reports_roundtrip(c22, half, skewed):
    for report in _reports(c22, half, skewed):
        text = docs.dumps(docs.to_doc(report))
        assert docs.parse_report(text) == report
        assert docs.reemit(text) == text


def test_rationals_are_strings_and_integers_are_ints(c22, half):
    doc = docs.to_doc(bounds_report(c22, half, SystemType(2, 2, 1)))
    assert doc["alpha_I"] == "2/3" and doc["window"] == ["4/3", "2"]
    assert doc["type"]["k"] == 1
    assert doc["critical_values"][0]["witnesses"][0]["chi"] == -3


def test_unknown_report_kind():
    with pytest.raises(DocumentError):
        docs.parse_report('{"kind": "mystery"}')
    with pytest.raises(DocumentError):
        docs.parse_report('{"kind": "goodness"}')
