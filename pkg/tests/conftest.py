import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from rectw.foundation import Instance  # noqa: E402
from rectw.wconstruct import WAlgebra  # noqa: E402

_CACHE = {}


def walgebra(m, n, l, c_zero=False):
    key = (m, n, l, c_zero)
    if key not in _CACHE:
        _CACHE[key] = WAlgebra(Instance(m, n, l), c_zero=c_zero)
    return _CACHE[key]


@pytest.fixture(scope="session")
def wa212():
    return walgebra(2, 1, 2)


@pytest.fixture(scope="session")
def wa302():
    return walgebra(3, 0, 2)


@pytest.fixture(scope="session")
def wa213():
    return walgebra(2, 1, 3)


@pytest.fixture(scope="session")
def wa303():
    return walgebra(3, 0, 3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    rows = getattr(mod, "RESULTS", None)
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(rows):
        terminalreporter.write_line(rows[k])
