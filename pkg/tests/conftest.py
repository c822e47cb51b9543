import pytest

from kicat.parser import parse_term
from kicat.rattree import Machine, compile
from kicat.equiv import equal
from kicat.syntax import Plus, Signature, desugar


@pytest.fixture
def sig():
    return Signature.default()


def build(text, sig, machine=None):
    """Parse, desugar and compile one term."""
    return compile(desugar(parse_term(text, sig), sig), sig, machine)


def build_pair(lhs, rhs, sig):
    joint = parse_term(f"({lhs}) + ({rhs})", sig)
    assert isinstance(joint, Plus)
    M = Machine(sig)
    return (compile(desugar(joint.left, sig), sig, M),
            compile(desugar(joint.right, sig), sig, M))


def same(lhs, rhs, sig):
    p, q = build_pair(lhs, rhs, sig)
    return equal(p, q)


# -- acceptance reporting ---------------------------------------------------------------

import time

SUITE_BUDGET = 300.0
_started = time.perf_counter()
_lines: list = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""
    def record(number, ok, detail):
        _lines.append(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _lines:
        return
    elapsed = time.perf_counter() - _started
    terminalreporter.section("acceptance criteria")
    for line in _lines:
        terminalreporter.write_line(line)
    if _suite_ran(terminalreporter):
        ok = elapsed < SUITE_BUDGET
        terminalreporter.write_line(
            f"{'PASS' if ok else 'FAIL'} criterion 14 (suite): full run {elapsed:.1f} s "
            f"< {SUITE_BUDGET:.0f} s")


def _suite_ran(reporter):
    return len(reporter.stats.get("passed", [])) + len(reporter.stats.get("failed", [])) > 100


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _started
    if exitstatus == 0 and _lines and elapsed > SUITE_BUDGET:
        session.exitstatus = 1
