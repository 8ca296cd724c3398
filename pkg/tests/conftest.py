import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from bracekit.constructions import b4, trivial_cyclic, trivial_s3  # noqa: E402
from oracles import FROZEN  # noqa: E402


@pytest.fixture(scope="session")
def frozen():
    with open(FROZEN) as fh:
        return json.load(fh)


@pytest.fixture
def B4():
    return b4()


@pytest.fixture
def S3():
    return trivial_s3()


@pytest.fixture
def Z2():
    return trivial_cyclic(2)


@pytest.fixture
def Z4():
    return trivial_cyclic(4)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(test_acceptance.RESULTS, key=lambda k: (int(str(k).rstrip("b")), str(k))):
            terminalreporter.write_line(test_acceptance.RESULTS[key])
