import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from orbitsep import QQ, Field, MatTuple  # noqa: E402
from orbitsep import _kernels  # noqa: E402

GF101 = Field(101)
FIELDS = [QQ, Field(2), Field(3), Field(5), GF101]


def tup(F, *mats, n=None):
    return MatTuple.of(F, [F.array(M) for M in mats], n=n)


def from_lists(F, mats, n=None):
    return MatTuple.of(F, [F.array(M) for M in mats], n=n)


def scalars(X):
    """The tuple as nested lists of canonical Python scalars, for the oracles."""
    F = X.field
    return [[[F.scalar(x) for x in row] for row in M] for M in X]


@pytest.fixture(scope="session", autouse=True)
def _compiled_kernels():
    _kernels.warmup()


@pytest.fixture(params=FIELDS, ids=str)
def field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
