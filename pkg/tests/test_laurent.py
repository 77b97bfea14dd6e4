from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subdreg.errors import NotSymmetric, OddCenter, ZeroPolynomial
from subdreg.laurent import (
    LaurentPoly,
    SymmetricMask,
    center_symmetric,
    evaluate,
    extract_one_plus_z,
    mul,
    symmetry_center,
    upsample,
)

ONE_PLUS_Z = LaurentPoly([1, 1])

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)
laurents = st.builds(
    LaurentPoly,
    st.lists(small_fracs, min_size=0, max_size=6),
    st.integers(min_value=-4, max_value=4),
)


def test_add_inverse_is_zero():
    assert LaurentPoly([1, 1]) + LaurentPoly([-1, -1]) == LaurentPoly()
    assert LaurentPoly().coeffs == ()


def test_add_keeps_interior_zero():
    p = LaurentPoly([1], -1) + LaurentPoly([1], 1)
    assert p.low == -1
    assert p.coeffs == (1, 0, 1)


def test_add_halves():
    assert LaurentPoly([Fraction(1, 2), 1]) + LaurentPoly([Fraction(1, 2)]) == LaurentPoly([1, 1])


def test_trimmed_on_construction():
    p = LaurentPoly([0, 0, 3, 0], 2)
    assert p.low == 4 and p.coeffs == (3,)


def test_mul_square():
    assert ONE_PLUS_Z * ONE_PLUS_Z == LaurentPoly([1, 2, 1])
    assert ONE_PLUS_Z * LaurentPoly() == LaurentPoly()


def test_mul_builds_quintic_dd(quintic_symbol):
    q = LaurentPoly([3, -18, 38, -18, 3], -2) * Fraction(1, 8)
    a = ONE_PLUS_Z ** 6 * Fraction(1, 32) * q
    # symbols agree up to a shift by a power of z
    assert a.coeffs == quintic_symbol.coeffs
    assert a.shift(-3) == quintic_symbol


def test_eval_quintic(quintic_symbol):
    assert evaluate(quintic_symbol, 1) == 2
    assert evaluate(quintic_symbol, -1) == 0
    assert evaluate(LaurentPoly([1, 2, 1]), 1) == 4


def test_eval_zero_base_negative_exponent():
    with pytest.raises(ZeroDivisionError):
        evaluate(LaurentPoly([1, 1], -1), 0)
    assert evaluate(LaurentPoly([5, 1]), 0) == 5


def test_upsample():
    assert upsample(ONE_PLUS_Z) == LaurentPoly([1, 0, 1])
    assert upsample(LaurentPoly([1, 0, 1], -1)) == LaurentPoly([1, 0, 0, 0, 1], -2)


@given(laurents, laurents)
def test_upsample_is_multiplicative(p, q):
    assert upsample(mul(p, q)) == mul(upsample(p), upsample(q))


@given(laurents, laurents, st.sampled_from([1, -1, 2, -2, Fraction(1, 3)]))
def test_eval_is_multiplicative(p, q, x):
    assert evaluate(mul(p, q), x) == evaluate(p, x) * evaluate(q, x)


def test_extract_examples(quintic_symbol):
    assert extract_one_plus_z(LaurentPoly([1, 2, 1])) == (2, LaurentPoly([1]))
    assert extract_one_plus_z(LaurentPoly([1, 2])) == (0, LaurentPoly([1, 2]))
    mu, q = extract_one_plus_z(quintic_symbol)
    assert mu == 6
    expected = LaurentPoly([3, -18, 38, -18, 3]) * Fraction(1, 8 * 32)
    assert q.coeffs == expected.coeffs


def test_extract_zero():
    with pytest.raises(ZeroPolynomial):
        extract_one_plus_z(LaurentPoly())


@given(laurents.filter(lambda p: not p.is_zero()), st.integers(0, 4))
def test_extract_reconstructs(p, k):
    a = ONE_PLUS_Z ** k * p
    mu, q = extract_one_plus_z(a)
    assert mu >= k
    assert ONE_PLUS_Z ** mu * q == a
    assert len(q.coeffs) == 1 or evaluate(q, -1) != 0


def test_center_symmetric_examples():
    b = center_symmetric(LaurentPoly([Fraction(c, 8) for c in (3, -18, 38, -18, 3)]))
    assert b.p == 2
    assert b.half == (Fraction(38, 8), Fraction(-18, 8), Fraction(3, 8))
    assert center_symmetric(LaurentPoly([1])) == SymmetricMask([1])
    with pytest.raises(NotSymmetric):
        center_symmetric(LaurentPoly([1, 2]))
    with pytest.raises(OddCenter):
        center_symmetric(LaurentPoly([1, 3, 3, 1]))


@given(st.lists(small_fracs, min_size=1, max_size=5).filter(lambda h: h[-1] != 0 or len(h) == 1),
       st.integers(-6, 6))
def test_center_symmetric_round_trip(half, shift):
    if len(half) == 1 and half[0] == 0:
        return
    mask = SymmetricMask(half)
    shifted = mask.to_laurent().shift(shift)
    assert symmetry_center(shifted) == shift
    assert center_symmetric(shifted) == mask
