import sys

import pytest

from lapoints.characters import character


@pytest.fixture(scope="session")
def apoint_cache(tmp_path_factory):
    """One a-point cache per test session so repeated scans are warm."""
    return tmp_path_factory.mktemp("apoints")


@pytest.fixture(autouse=True)
def _cache_env(monkeypatch, apoint_cache):
    monkeypatch.setenv("APOINT_CACHE_DIR", str(apoint_cache))


@pytest.fixture
def chi4():
    return character(4, 1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
