import pytest

from bqft.biquandle import fox3, make_alexander, make_constant_action, trivial, x1, x2
from bqft.gauss import parse_gauss_code

TREFOIL = "O1+U2+O3+U1+O2+U3+"
FIGURE_EIGHT = "U1-O2-U3+O4+U2-O1-U4+O3+"
VIRTUAL_TREFOIL = "O1+U2+U1+O2+"
VIRTUAL_HOPF = "U1+;O1+"
HOPF = "O1+U2+;U1+O2+"


def small_biquandles():
    """Every biquandle with at most three elements used across the tests."""
    return {
        "trivial1": trivial(1),
        "X1": x1(),
        "X2": x2(),
        "fox3": fox3(),
        "alexander3": make_alexander(3, 1, 2),
        "cycle3": make_constant_action([2, 3, 1]),
    }


@pytest.fixture(scope="session")
def biquandles():
    return small_biquandles()


@pytest.fixture
def trefoil():
    return parse_gauss_code(TREFOIL)


@pytest.fixture
def virtual_trefoil():
    return parse_gauss_code(VIRTUAL_TREFOIL)


# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[number])
