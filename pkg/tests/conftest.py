from __future__ import annotations

import mpmath
import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(autouse=True, scope="session")
def _mp_precision():
    mpmath.mp.dps = 30
    yield


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def full_run():
    """One default-configuration run of every case, with its wall time."""
    import time

    from rrq.verify import RunConfig, make_report, run_all

    t0 = time.perf_counter()
    results = run_all(RunConfig())
    elapsed = time.perf_counter() - t0
    return make_report(results, RunConfig().describe()), elapsed
