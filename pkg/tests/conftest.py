import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from brickwork import io
from brickwork.fields import GF, QQ

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def F(a, b=1):
    return Fraction(a, b)


@pytest.fixture(scope="session")
def kronecker():
    return io.load_algebra(io.load_fixture("kronecker.algebra.json"))


@pytest.fixture(scope="session")
def example25():
    return io.load_algebra(io.load_fixture("example25.algebra.json"))


@pytest.fixture(scope="session")
def kronecker_realization(kronecker):
    return io.load_realization(kronecker, io.load_fixture("kronecker.realization.json"))


@pytest.fixture(scope="session")
def jordan_realization(kronecker):
    return io.load_realization(kronecker, io.load_fixture("jordan.realization.json"))


@pytest.fixture(params=["Q", "F7"], ids=["QQ", "GF7"])
def field(request):
    return QQ if request.param == "Q" else GF(7)


ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, title, detail = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}  [{detail}]")
