import time

import pytest
from hypothesis import strategies as st

from polyconv.grid import IntGrid, Polyomino

_acceptance = []


def small_grids(max_cells=12, span=4, values=(-5, 5), min_cells=0):
    cell = st.tuples(st.integers(-span, span), st.integers(-span, span))
    val = st.integers(*values).filter(bool)
    return st.dictionaries(cell, val, min_size=min_cells, max_size=max_cells).map(IntGrid)


def small_polyominoes(max_cells=10, span=4, min_cells=1):
    cell = st.tuples(st.integers(-span, span), st.integers(-span, span))
    return st.sets(cell, min_size=min_cells, max_size=max_cells).map(Polyomino)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.module.__name__.endswith("test_acceptance"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance.append((item.name, doc, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, doc, outcome, duration in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {doc}  ({duration:.2f}s)")
