from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from subdreg import polyq

F = Fraction
polys = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), max_size=5).map(polyq.make)


def test_make_trims():
    assert polyq.make([1, 0, 0]) == (1,)
    assert polyq.make([0]) == ()
    assert polyq.degree(()) == -1


def test_mul_and_power():
    assert polyq.power((1, 1), 3) == (1, 3, 3, 1)
    assert polyq.mul((F(1, 2), 1), (F(-1, 2), 1)) == (F(-1, 4), 0, 1)


@given(polys, polys.filter(bool))
def test_divmod_reconstructs(p, q):
    quo, rem = polyq.divmod_poly(p, q)
    assert polyq.add(polyq.mul(quo, q), rem) == p
    assert polyq.degree(rem) < polyq.degree(q)


def test_gcd():
    p = polyq.mul((-1, 1), (2, 1))
    q = polyq.mul((-1, 1), (3, 1))
    assert polyq.gcd(p, q) == (-1, 1)


def test_yun_multiplicities():
    # 3 (x - 1) (x + 2)^2 x^3
    p = polyq.scale(polyq.mul(polyq.mul((-1, 1), polyq.power((2, 1), 2)), (0, 0, 0, 1)), 3)
    lc, parts = polyq.yun(p)
    assert lc == 3
    assert parts == [(-1, 1), (2, 1), (0, 1)]
    assert polyq.monic(polyq.squarefree(p)) == polyq.monic(polyq.mul(polyq.mul((-1, 1), (2, 1)), (0, 1)))


@given(polys.filter(lambda p: polyq.degree(p) >= 1))
def test_yun_product(p):
    lc, parts = polyq.yun(p)
    out = (lc,)
    for i, f in enumerate(parts, start=1):
        out = polyq.mul(out, polyq.power(f, i))
    assert out == p


def test_to_str():
    assert polyq.to_str((1, 3, 6), "s") == "1 + 3*s + 6*s^2"
