from pathlib import Path

import pytest

from reslat.census import enumerate_algebras
from reslat.formats import load_algebra

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURES / name


@pytest.fixture(scope="session")
def load():
    cache = {}

    def _load(name):
        if name not in cache:
            cache[name] = load_algebra(fixture_path(name))
        return cache[name]

    return _load


@pytest.fixture(scope="session")
def small_algebras():
    """Every algebra with 1 to 6 elements (166 in total)."""
    return [A for n in range(1, 7) for A in enumerate_algebras(n)]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
