"""Shared fixtures plus per-criterion pass/fail reporting.

Tests marked ``@pytest.mark.criterion(n, "slug")`` are the acceptance
criteria; after the run a summary section prints one PASS/FAIL line per
criterion.
"""
import math

import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("deterministic", derandomize=True)
settings.load_profile("deterministic")

_criterion_results = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(num, slug): acceptance criterion with its number and name"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        _criterion_results[(marker.args[0], marker.args[1])] = rep.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criterion_results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, slug), passed in sorted(_criterion_results.items()):
        terminalreporter.write_line(f"criterion {num:02d} {slug}: {'PASS' if passed else 'FAIL'}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def sample_disc(rng, n, r_max=0.9):
    r = r_max * np.sqrt(rng.uniform(size=n))
    a = rng.uniform(0.0, 2.0 * math.pi, size=n)
    return np.column_stack([r * np.cos(a), r * np.sin(a)])


@pytest.fixture
def disc_sampler():
    return sample_disc
