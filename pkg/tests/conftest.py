from fractions import Fraction as F
from pathlib import Path

import pytest

from nodal_coherent.curve import NodalCurve, Polarization

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def c22():
    return NodalCurve((2, 2), ((0, 1),))


@pytest.fixture
def c23():
    return NodalCurve((2, 3), ((0, 1),) * 3)


@pytest.fixture
def half():
    return Polarization((F(1, 2), F(1, 2)))


@pytest.fixture
def skewed():
    return Polarization((F(1, 4), F(3, 4)))


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, in criterion order."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when == "call":
                name = nodeid.split("::")[-1][len("test_criterion_"):]
                number, _, title = name.partition("_")
                lines.append((int(number), f"criterion {number} ({title.replace('_', ' ')}): {outcome.upper()}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
