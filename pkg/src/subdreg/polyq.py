"""Dense univariate polynomials over Q.

A polynomial is a tuple of :class:`~fractions.Fraction` in ascending order
of degree, trimmed so the last entry is nonzero.  The zero polynomial is
the empty tuple.  These helpers back the s-polynomials, characteristic
polynomials and Sturm machinery; they are deliberately minimal.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Tuple

Poly = Tuple[Fraction, ...]


def make(coeffs: Iterable) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    zero = Fraction(0)
    return make((p[i] if i < len(p) else zero) + (q[i] if i < len(q) else zero) for i in range(n))


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def scale(p: Poly, c) -> Poly:
    c = Fraction(c)
    return make(c * x for x in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    # integer convolution on a common denominator is much faster than Fraction products
    dp = lcm(*(c.denominator for c in p))
    dq = lcm(*(c.denominator for c in q))
    ip = [int(c * dp) for c in p]
    iq = [int(c * dq) for c in q]
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(ip):
        if a:
            for j, b in enumerate(iq):
                out[i + j] += a * b
    d = dp * dq
    return make(Fraction(c, d) for c in out)


def power(p: Poly, k: int) -> Poly:
    out: Poly = (Fraction(1),)
    for _ in range(k):
        out = mul(out, p)
    return out


def derivative(p: Poly) -> Poly:
    return make(i * p[i] for i in range(1, len(p)))


def evaluate(p: Sequence, x):
    """Horner evaluation; exact when ``x`` is a Fraction or int."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def divmod_poly(p: Poly, q: Poly) -> Tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        c = rem[-1] / lead
        quot[shift] = c
        for i, qc in enumerate(q):
            rem[shift + i] -= c * qc
        rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
    return make(quot), make(rem)


def monic(p: Poly) -> Poly:
    if not p:
        return p
    return scale(p, 1 / p[-1])


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (Euclid over Q)."""
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def squarefree(p: Poly) -> Poly:
    """p divided by gcd(p, p'); same distinct roots, all simple."""
    if len(p) <= 2:
        return p
    g = gcd(p, derivative(p))
    return divmod_poly(p, g)[0]


def yun(p: Poly) -> Tuple[Fraction, list]:
    """Square-free factorization ``p = lc * prod(f_i ** i)``.

    Returns ``(lc, [f_1, f_2, ...])`` with monic, pairwise coprime,
    square-free ``f_i`` (some may be the constant 1).
    """
    if not p:
        raise ValueError("zero polynomial has no square-free factorization")
    lc = p[-1]
    f = monic(p)
    factors = []
    if len(f) == 1:
        return lc, factors
    a = gcd(f, derivative(f))
    b = divmod_poly(f, a)[0]
    c = divmod_poly(derivative(f), a)[0]
    d = sub(c, derivative(b))
    while len(b) > 1:
        g = gcd(b, d)
        factors.append(g)
        b = divmod_poly(b, g)[0]
        c = divmod_poly(d, g)[0]
        d = sub(c, derivative(b))
    return lc, factors


def to_str(p: Poly, var: str = "x") -> str:
    if not p:
        return "0"
    terms = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        if i == 0:
            mono = ""
        elif i == 1:
            mono = var
        else:
            mono = f"{var}^{i}"
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{'*' + mono if mono else ''}"
        terms.append(("-" if c < 0 else "+", body))
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
