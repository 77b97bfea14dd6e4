"""Exact Laurent polynomials with rational coefficients.

Masks and symbols of subdivision schemes live here.  A
:class:`LaurentPoly` stores the exponent of its first coefficient and a
trimmed coefficient tuple, so two equal polynomials compare equal
structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from . import polyq
from .errors import NotSymmetric, OddCenter, ZeroPolynomial


@dataclass(frozen=True, init=False)
class LaurentPoly:
    """``sum(coeffs[i] * z**(low + i))``; the zero polynomial has no coefficients."""

    low: int
    coeffs: Tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = (), low: int = 0):
        c = [Fraction(x) for x in coeffs]
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        end = len(c)
        while end > start and c[end - 1] == 0:
            end -= 1
        c = c[start:end]
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "low", int(low) + start if c else 0)

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentPoly":
        return cls([c], k)

    @classmethod
    def from_dict(cls, terms: dict) -> "LaurentPoly":
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, 0) for k in range(lo, hi + 1)], lo)

    @property
    def high(self) -> int:
        """Exponent of the last stored coefficient (``low - 1`` for zero)."""
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def items(self):
        for i, c in enumerate(self.coeffs):
            yield self.low + i, c

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other):
        return add(self, -_coerce(other))

    def __rsub__(self, other):
        return add(_coerce(other), -self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        out = LaurentPoly([1])
        for _ in range(k):
            out = mul(out, self)
        return out

    def __call__(self, x):
        return evaluate(self, x)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by z**k."""
        return LaurentPoly(self.coeffs, self.low + k)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.items():
            if c:
                parts.append(f"({c})z^{k}" if k else f"({c})")
        return " + ".join(parts)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly([x])


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return q
    if q.is_zero():
        return p
    lo = min(p.low, q.low)
    hi = max(p.high, q.high)
    return LaurentPoly([p[k] + q[k] for k in range(lo, hi + 1)], lo)


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if p.is_zero() or q.is_zero():
        return LaurentPoly()
    return LaurentPoly(polyq.mul(p.coeffs, q.coeffs), p.low + q.low)


def evaluate(p: LaurentPoly, x) -> Fraction:
    """Exact value of ``p`` at a rational point."""
    x = Fraction(x)
    if x == 0:
        if p.low < 0:
            raise ZeroDivisionError(f"cannot evaluate at 0: lowest exponent is {p.low}")
        return p[0]
    return polyq.evaluate(p.coeffs, x) * x ** p.low


def upsample(p: LaurentPoly) -> LaurentPoly:
    """p(z**2)."""
    if p.is_zero():
        return p
    out = [Fraction(0)] * (2 * len(p.coeffs) - 1)
    out[::2] = p.coeffs
    return LaurentPoly(out, 2 * p.low)


def divide_one_plus_z(p: LaurentPoly) -> Tuple[LaurentPoly, Fraction]:
    """Synthetic division by (1 + z): returns ``(quotient, remainder)``."""
    if p.is_zero():
        return p, Fraction(0)
    # synthetic division of z**(-low) p(z) at the root z = -1
    c = p.coeffs
    b = list(c)
    for i in range(len(c) - 2, -1, -1):
        b[i] = c[i] - b[i + 1]
    return LaurentPoly(b[1:], p.low), b[0]


def extract_one_plus_z(p: LaurentPoly) -> Tuple[int, LaurentPoly]:
    """Maximal ``mu`` and quotient with ``p = (1 + z)**mu * quotient``."""
    if p.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    mu = 0
    while len(p.coeffs) > 1:
        q, rem = divide_one_plus_z(p)
        if rem != 0:
            break
        p = q
        mu += 1
    return mu, p


@dataclass(frozen=True, init=False)
class SymmetricMask:
    """Palindromic mask ``(b_p, ..., b_1, b_0, b_1, ..., b_p)`` given by its half."""

    half: Tuple[Fraction, ...]

    def __init__(self, half: Iterable):
        h = tuple(Fraction(x) for x in half)
        if not h:
            raise ValueError("a symmetric mask needs at least b_0")
        if len(h) > 1 and h[-1] == 0:
            raise ValueError("b_p must be nonzero when p >= 1")
        object.__setattr__(self, "half", h)

    @property
    def p(self) -> int:
        return len(self.half) - 1

    def __getitem__(self, k: int) -> Fraction:
        k = abs(k)
        return self.half[k] if k < len(self.half) else Fraction(0)

    def to_laurent(self) -> LaurentPoly:
        """The mask centered at exponent 0."""
        return LaurentPoly(tuple(reversed(self.half[1:])) + self.half, -self.p)

    def full(self) -> Tuple[Fraction, ...]:
        return self.to_laurent().coeffs

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.full()) + ")"


def symmetry_center(p: LaurentPoly) -> Fraction:
    """Center exponent of a palindromic polynomial (possibly half-integer)."""
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no center")
    if p.coeffs != tuple(reversed(p.coeffs)):
        raise NotSymmetric(f"coefficients {tuple(str(c) for c in p.coeffs)} are not palindromic")
    return Fraction(p.low + p.high, 2)


def center_symmetric(p: LaurentPoly) -> SymmetricMask:
    c = symmetry_center(p)
    if c.denominator != 1:
        raise OddCenter(f"symmetry center z^{c} is not an integer exponent")
    n = len(p.coeffs)
    return SymmetricMask(p.coeffs[(n - 1) // 2:])
