from fractions import Fraction

import pytest

from subdreg.laurent import LaurentPoly, SymmetricMask

QUINTIC_DD = [Fraction(c, 256) for c in (3, 0, -25, 0, 150, 256, 150, 0, -25, 0, 3)]


@pytest.fixture
def quintic_symbol():
    return LaurentPoly(QUINTIC_DD, -5)


@pytest.fixture
def quintic_mask():
    return SymmetricMask([Fraction(38, 8), Fraction(-18, 8), Fraction(3, 8)])


@pytest.fixture
def eight_point_mask():
    return SymmetricMask([Fraction(c, 16) for c in (208, -131, 40, -5)])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.verdict_line(n))
