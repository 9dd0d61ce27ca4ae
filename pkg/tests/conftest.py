"""Shared fixtures: cached optima (they dominate the runtime) and the
acceptance PASS/FAIL report printed at the end of the session."""

from __future__ import annotations

import time
from functools import lru_cache

import pytest

from bqst.asymptotic import maximize_u_infinity
from bqst.optimizer import optimize

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def cached_optimum(n: int, mode: str = "two_param", fix_y: float | None = None):
    """``(report, wall seconds)`` for one optimisation, computed once per session."""
    start = time.perf_counter()
    report = optimize(n, mode, fix_y=fix_y)
    return report, time.perf_counter() - start


@lru_cache(maxsize=None)
def cached_asymptotic_optimum():
    return maximize_u_infinity()


@pytest.fixture(scope="session")
def optimum():
    return cached_optimum


@pytest.fixture(scope="session")
def asymptotic_optimum():
    return cached_asymptotic_optimum()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
