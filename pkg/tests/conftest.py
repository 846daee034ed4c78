import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from aqedst import build, build_aq  # noqa: E402


@lru_cache(maxsize=None)
def cached_build(n):
    return build(n)


@lru_cache(maxsize=None)
def cached_aq(n):
    return build_aq(n)


def b(s: str) -> int:
    return int(s, 2)


def e(s: str) -> tuple[int, int]:
    x, y = (int(p, 2) for p in s.split("-"))
    return (min(x, y), max(x, y))


@pytest.fixture
def aq3():
    return cached_aq(3)


@pytest.fixture
def base():
    return cached_build(3)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[key])
