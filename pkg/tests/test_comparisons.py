import math
from fractions import Fraction

import pytest

from subdreg.comparisons import (
    STATEMENTS,
    compare,
    gamma_table,
    gap_bound,
    match_statement,
    min_ratio_constant,
    statement_pair,
    theorem_constants,
    verify_theorems,
)
from subdreg.errors import InputError, MethodInapplicable
from subdreg.families import FamilyId, Kind, b_spoly
from subdreg.trig import SPoly

F = Fraction
P, D = Kind.PRIMAL, Kind.DUAL


def sampled_sup(num: SPoly, den: SPoly, n: int = 100_000) -> float:
    nc = [float(c) for c in num.coeffs]
    dc = [float(c) for c in den.coeffs]

    def ev(cs, s):
        acc = 0.0
        for c in reversed(cs):
            acc = acc * s + c
        return acc

    return max(ev(nc, i / n) / ev(dc, i / n) for i in range(n + 1))


@pytest.fixture(scope="module")
def table():
    return gamma_table(8)


def test_ratio_identity():
    q = SPoly([1, 3, 6])
    sup = min_ratio_constant(q, q)
    assert sup.exact == 1


def test_ratio_ten_thirds():
    num, den = SPoly([1, 3, 6]), SPoly([1, 2])
    sup = min_ratio_constant(num, den)
    assert abs(sup.value - 10 / 3) <= 1e-9
    assert sup.lower <= F(10, 3) <= sup.upper
    assert abs(sampled_sup(num, den) - 10 / 3) <= 1e-9
    assert theorem_constants("T5iii", 2) == F(10, 3)


def test_ratio_interior_maximum():
    # (1 + 4s - 4s^2) / 1 peaks at s = 1/2 with value 2
    sup = min_ratio_constant(SPoly([1, 4, -4]), SPoly([1]))
    assert sup.lower <= 2 <= sup.upper
    assert sup.radius <= 1e-9


def test_ratio_dropping_top_term():
    for m in range(2, 7):
        for l in range(1, m):
            sup = min_ratio_constant(b_spoly(FamilyId(P, m, l - 1)), b_spoly(FamilyId(P, m, l)))
            assert sup.exact == 1


def test_ratio_needs_positive_den():
    with pytest.raises(MethodInapplicable):
        min_ratio_constant(SPoly([1]), SPoly([1, -1]))


@pytest.mark.parametrize("which", STATEMENTS)
def test_constants_bound_sampled_sup(which):
    for m in range(1, 6):
        for l in range(0, m):
            try:
                first, second = statement_pair(which, m, l)
                c = theorem_constants(which, m, l)
            except InputError:
                continue
            s = sampled_sup(b_spoly(second), b_spoly(first), 2000)
            sup = min_ratio_constant(b_spoly(second), b_spoly(first))
            assert s <= sup.upper * (1 + 1e-12)
            assert sup.lower <= c + 1e-9


def test_gap_bound_examples():
    assert gap_bound(1, 3, 3) == 0
    assert gap_bound(4, 3, 5) == 0
    assert abs(gap_bound(F(10, 3), 3, 5) - 0.26303) <= 5e-6
    with pytest.raises(InputError):
        gap_bound(F(1, 2), 1, 1)


def test_theorem_constant_examples():
    assert theorem_constants("T5i", 3, 2) == F(5, 2)
    assert theorem_constants("T5iii", 2) == F(10, 3)
    assert theorem_constants("T7a", 3, 0) == 1
    assert theorem_constants("T7b", 3, 0) == 1
    assert theorem_constants("T7a", 2, 1) == F(5, 4)
    assert theorem_constants("T6iii", 1) == F(5, 2) * F(7, 2) / F(5, 2)
    with pytest.raises(InputError):
        theorem_constants("T5i", 3, 0)
    with pytest.raises(InputError):
        theorem_constants("T9", 3, 1)


def test_match_statement():
    assert match_statement(FamilyId(P, 2, 1), FamilyId(P, 3, 2)) == ("T5iii", 2, 1)
    assert match_statement(FamilyId(P, 4, 3), FamilyId(D, 4, 3)) == ("T7a", 4, 3)
    assert match_statement(FamilyId(P, 3, 0), FamilyId(P, 3, 1)) == ("T5i", 3, 1)
    assert match_statement(FamilyId(P, 3, 1), FamilyId(D, 5, 1)) is None


def test_compare_quintic_from_cubic():
    res = compare(FamilyId(P, 2, 1), FamilyId(P, 3, 2))
    assert res.statement == "T5iii"
    assert res.c_theorem == F(10, 3)
    assert abs(res.gap_bound - (2 - math.log2(10 / 3))) <= 1e-9


def test_table_examples(table):
    g31, g32 = table[FamilyId(P, 3, 1)], table[FamilyId(P, 3, 2)]
    assert round(g31, 5) == 3.67807 and round(g32, 5) == 2.83007
    assert g31 - math.log2(F(5, 2)) <= g32 <= g31
    # dual over primal at (2, 1)
    assert table[FamilyId(D, 2, 1)] >= table[FamilyId(P, 2, 1)] + math.log2(F(8, 5))
    for m in range(2, 8):
        assert table[FamilyId(D, m + 1, m)] > table[FamilyId(D, m, m - 1)]


def test_verify_theorems(table):
    report = verify_theorems(8, table)
    assert report.ok, report.violations
    assert {c.statement for c in report.checks} == set(STATEMENTS)


def test_verify_reports_violations(table):
    broken = dict(table)
    broken[FamilyId(P, 3, 2)] += 1.0
    report = verify_theorems(8, broken)
    assert not report.ok
    assert all(FamilyId(P, 3, 2) in statement_pair(v.statement, v.m, v.l) for v in report.violations)
