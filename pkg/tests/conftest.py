import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

import acceptance_log  # noqa: E402
from weylcircles import classical_moments, orthonormal_system  # noqa: E402

SUITE_BUDGET = 60.0
_START = {}


def pytest_sessionstart(session):
    _START["t"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    results = acceptance_log.RESULTS
    if not results:
        return
    elapsed = time.perf_counter() - _START.get("t", time.perf_counter())
    if 8 in results:
        ok, detail = results[8]
        within = elapsed < SUITE_BUDGET
        results[8] = (ok and within, f"{detail}; suite runtime {elapsed:.1f} s (budget {SUITE_BUDGET:.0f} s)")
    terminalreporter.section("acceptance")
    for k in sorted(results):
        terminalreporter.write_line(acceptance_log.line(k))

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def gaussian():
    """Standard normal moments s_0..s_20, system to order 10."""
    return orthonormal_system(classical_moments("gaussian", 21), 10)


@pytest.fixture(scope="session")
def two_point():
    """1/2 delta_{-2} + 1/2 delta_{2}: s = (1, 0, 4, 0, 16)."""
    return orthonormal_system(classical_moments("two_point", 5, -2, 0.5, 2, 0.5), 1)


@pytest.fixture(scope="session")
def lognormal():
    """Standard lognormal moments, system at the largest certified order."""
    s = classical_moments("lognormal", 37)
    for n in range(18, 0, -1):
        try:
            return orthonormal_system(s, n)
        except Exception:
            continue
    raise RuntimeError("lognormal not certifiable")


@pytest.fixture
def rng():
    return np.random.default_rng(20240613)
