from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=30,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# kappa triples used across modules; odd m uses kappa1 = kappam
KAPPA_EVEN = (Fraction(1, 3), Fraction(1, 4), Fraction(1, 5))
KAPPA_ODD = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 3))


def kappa_for(m: int):
    return KAPPA_ODD if m % 2 else KAPPA_EVEN


@pytest.fixture
def kappa():
    return kappa_for


# acceptance criteria register one line each here; printed after the run
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
