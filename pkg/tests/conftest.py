"""Shared fixtures plus the acceptance summary block.

Acceptance tests are named test_criterion_<n>_*; their outcomes are
collected here and printed as one PASS/FAIL line per criterion at the
end of the run, so the certification status is readable at a glance.
"""

import re
from fractions import Fraction

import pytest

from superbialg.scalars import GScalar, GradedDims


CRITERION_LABELS = {
    1: "catalog soundness",
    2: "algebra battery, symbolic parameters",
    3: "automorphism families",
    4: "solver reproduction",
    5: "solver completeness on the rational grid",
    6: "isomorphism witnesses",
    7: "equivalence split walkthrough",
    8: "supermatrix kernel",
    9: "parser round-trip and diagnostics",
}

_outcomes = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    failed = report.outcome != "passed"
    _outcomes[n] = _outcomes.get(n, False) or failed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERION_LABELS):
        if n not in _outcomes:
            continue
        status = "FAIL" if _outcomes[n] else "PASS"
        terminalreporter.write_line(
            f"[criterion {n}] {CRITERION_LABELS[n]}: {status}")


@pytest.fixture
def fr():
    return Fraction


def re_(v):
    return GScalar(Fraction(v), 0)


def im_(v):
    return GScalar(0, Fraction(v))


@pytest.fixture
def gs():
    """GScalar constructors: gs.re(v), gs.im(v)."""
    class _G:
        re = staticmethod(re_)
        im = staticmethod(im_)
    return _G


@pytest.fixture
def dims11():
    return GradedDims(1, 1)


@pytest.fixture
def dims21():
    return GradedDims(2, 1)


@pytest.fixture
def dims12():
    return GradedDims(1, 2)
