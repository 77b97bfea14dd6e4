from fractions import Fraction

import pytest

from subdreg.errors import InputError
from subdreg.families import (
    FamilyId,
    Kind,
    b_spoly,
    delta,
    dual_symbol,
    gbinom,
    members,
    primal_symbol,
    sigma,
)
from subdreg.laurent import LaurentPoly, center_symmetric, evaluate, extract_one_plus_z
from subdreg.trig import SPoly, to_s_poly


def conv(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def cpow(p, n):
    out = [Fraction(1)]
    for _ in range(n):
        out = conv(out, p)
    return out


def same_up_to_shift(p: LaurentPoly, coeffs) -> bool:
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    return list(p.coeffs) == coeffs


def test_sigma_delta():
    assert evaluate(sigma(), 1) == 1 and evaluate(delta(), 1) == 0
    assert evaluate(sigma(), -1) == 0 and evaluate(delta(), -1) == 1
    assert sigma() + delta() == LaurentPoly([1])


def test_gbinom():
    assert gbinom(Fraction(5, 2), 1) == Fraction(5, 2)
    assert gbinom(Fraction(7, 2), 2) == Fraction(7, 2) * Fraction(5, 2) / 2
    assert gbinom(5, 2) == 10


def test_primal_quintic_dd():
    expected = [Fraction(c, 256) for c in (3, 0, -25, 0, 150, 256, 150, 0, -25, 0, 3)]
    assert same_up_to_shift(primal_symbol(3, 2), expected)


def test_primal_cubic_bspline():
    assert same_up_to_shift(primal_symbol(2, 0), [Fraction(c, 8) for c in (1, 4, 6, 4, 1)])


def test_primal_2_1_against_expansion():
    # 2 sigma^2 (1 + 2 delta), all multiplied through by z^3
    z_sigma = [Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)]
    z_delta = [Fraction(-1, 4), Fraction(1, 2), Fraction(-1, 4)]
    one_plus_2d = [2 * c for c in z_delta]
    one_plus_2d[1] += 1
    oracle = [2 * c for c in conv(cpow(z_sigma, 2), one_plus_2d)]
    assert same_up_to_shift(primal_symbol(2, 1), oracle)
    assert same_up_to_shift(primal_symbol(2, 1), [Fraction(c, 16) for c in (-1, 0, 9, 16, 9, 0, -1)])


def test_dual_chaikin():
    assert same_up_to_shift(dual_symbol(1, 0), [Fraction(c, 4) for c in (1, 3, 3, 1)])


def test_dual_2_1_against_expansion():
    # (1+z)^5 (-5 + 18z - 5z^2) / (128 z^4), from 1 + (5/2) delta
    oracle = [c / 128 for c in conv(cpow([Fraction(1), Fraction(1)], 5), [-5, 18, -5])]
    a = dual_symbol(2, 1)
    assert same_up_to_shift(a, oracle)
    assert a.low == -4
    assert evaluate(a, 1) == 2 and evaluate(a, -1) == 0


def test_b_spoly_examples():
    assert b_spoly(FamilyId(Kind.PRIMAL, 3, 2)) == SPoly([1, 3, 6])
    assert b_spoly(FamilyId(Kind.PRIMAL, 5, 0)) == SPoly([1])
    assert b_spoly(FamilyId(Kind.DUAL, 2, 1)) == SPoly([1, Fraction(5, 2)])


def test_family_id_validation():
    with pytest.raises(InputError):
        FamilyId(Kind.PRIMAL, 2, 2)
    with pytest.raises(InputError):
        FamilyId(Kind.DUAL, 0, 0)
    with pytest.raises(InputError):
        primal_symbol(3, -1)
    fid = FamilyId.parse("dual:4,3")
    assert fid == FamilyId(Kind.DUAL, 4, 3)
    assert str(fid) == "dual:4,3"


def test_members_count():
    assert len(list(members(Kind.PRIMAL, 8))) == 28
    assert len(list(members(Kind.DUAL, 8, include_bspline=True))) == 36


@pytest.mark.parametrize("kind", list(Kind))
def test_pipeline_consistency(kind):
    for fid in members(kind, 8, include_bspline=True):
        a = fid.symbol()
        assert evaluate(a, 1) == 2 and evaluate(a, -1) == 0
        mu, q = extract_one_plus_z(a)
        assert mu == (2 * fid.m if kind is Kind.PRIMAL else 2 * fid.m + 1)
        assert fid.r == mu - 1
        b = center_symmetric(q * Fraction(2 ** fid.r))
        assert to_s_poly(b) == b_spoly(fid)


def test_primal_top_members_interpolatory():
    for m in range(1, 9):
        a = primal_symbol(m, m - 1)
        # centered symbol: even-indexed coefficients are the delta sequence
        even = {k: v for k, v in a.items() if k % 2 == 0 and v != 0}
        assert even == {0: 1}
