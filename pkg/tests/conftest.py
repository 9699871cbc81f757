import sympy
import pytest

from mhpoly.poly import Polynomial

X_SYM = sympy.Symbol("x")

_acceptance: dict[str, str] = {}


def from_sympy(expr) -> Polynomial:
    """Independent route: expand with sympy and read off coefficients."""
    poly = sympy.Poly(sympy.expand(expr), X_SYM)
    coeffs = [sympy.Rational(c) for c in reversed(poly.all_coeffs())]
    return Polynomial(f"{c.p}/{c.q}" for c in coeffs)


@pytest.fixture
def x():
    return X_SYM


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        terminalreporter.write_line(f"{_acceptance[name]}  {name}")
