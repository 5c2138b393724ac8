from pathlib import Path

import numpy as np
import pytest

DATA = Path(__file__).parent / "data"
LENA = DATA / "lena512.pgm"

_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def lena_path():
    return LENA


@pytest.fixture(scope="session")
def lena():
    from saltpepper import read_pgm

    return read_pgm(LENA)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def criterion(request):
    """``criterion(label, ok, detail)`` records a PASS/FAIL line, then asserts."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def check(label, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        lines.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
