import math

import pytest
from hypothesis import settings

from spheregreen import QuadratureConfig, make_context

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")


@pytest.fixture
def qc():
    return QuadratureConfig(tol=1e-10)


@pytest.fixture(params=[2, 3, 4])
def ctx(request):
    return make_context(request.param)


def n2_poisson_exact(theta):
    """Closed-form mean-free Green function on S^2: 1 + ln((1 - cos theta)/2)."""
    return 1.0 + math.log((1.0 - math.cos(theta)) / 2.0)


ACCEPTANCE_LINES: dict[int, str] = {}


def report(ident: int, name: str, passed: bool, worst: float, tol: float) -> None:
    status = "PASS" if passed else "FAIL"
    line = f"[{status}] criterion {ident} {name}: worst={worst:.3e} tol={tol:.0e}"
    ACCEPTANCE_LINES[ident] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for ident in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[ident])
