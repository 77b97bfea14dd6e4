"""The cosine polynomial B as an ordinary polynomial in s = sin^2(xi/2).

For a symmetric mask b, ``B(xi) = b_0 + 2 sum_k b_k cos(k xi)``.  With
``cos(k xi) = T_k(1 - 2s)`` this becomes a polynomial of degree p in s, and
nonnegativity of B on [-pi, pi] is nonnegativity of that polynomial on
[0, 1].  Positivity is decided exactly with Sturm sequences.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from . import polyq
from .errors import ZeroPolynomial
from .laurent import SymmetricMask

_WITNESS_WIDTH = Fraction(1, 1024)

__all__ = [
    "SPoly",
    "SymmetricMask",
    "Positivity",
    "PositivityVerdict",
    "to_s_poly",
    "positivity",
    "sturm_root_count",
    "sturm_chain",
    "isolate_roots",
]


@dataclass(frozen=True, init=False)
class SPoly:
    """Polynomial in s, ascending monomial coefficients."""

    coeffs: Tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", polyq.make(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, s):
        return polyq.evaluate(self.coeffs, s)

    def at_xi(self, xi: float) -> float:
        """Float value at s = sin^2(xi/2)."""
        # exact evaluation at the rounded s avoids cancellation in high degree
        s = Fraction(math.sin(xi / 2) ** 2)
        return float(polyq.evaluate(self.coeffs, s))

    def __str__(self):
        return polyq.to_str(self.coeffs, "s")


def to_s_poly(b: SymmetricMask) -> SPoly:
    x = (Fraction(1), Fraction(-2))  # 1 - 2s
    t_prev: polyq.Poly = (Fraction(1),)
    t_cur: polyq.Poly = x
    acc: polyq.Poly = (b.half[0],)
    for k in range(1, b.p + 1):
        acc = polyq.add(acc, polyq.scale(t_cur, 2 * b.half[k]))
        t_prev, t_cur = t_cur, polyq.sub(polyq.scale(polyq.mul(x, t_cur), 2), t_prev)
    return SPoly(acc)


class Positivity(enum.Enum):
    STRICTLY_POSITIVE = "StrictlyPositive"
    NONNEGATIVE_WITH_ZERO = "NonnegativeWithZero"
    INDEFINITE = "Indefinite"


@dataclass(frozen=True)
class PositivityVerdict:
    """Outcome of the exact sign analysis of q on [0, 1].

    ``witness`` is a closed rational interval ``(lo, hi)``.  For
    NonnegativeWithZero it isolates a zero of q; for Indefinite it isolates
    a sign change of q, or, when q is negative on all of [0, 1] and has no
    zero there, it is a single point where q < 0.
    """

    kind: Positivity
    witness: Optional[Tuple[Fraction, Fraction]] = None

    @property
    def strictly_positive(self) -> bool:
        return self.kind is Positivity.STRICTLY_POSITIVE

    @property
    def nonnegative(self) -> bool:
        return self.kind is not Positivity.INDEFINITE


def sturm_chain(p: polyq.Poly) -> List[polyq.Poly]:
    chain = [p, polyq.derivative(p)]
    while chain[-1]:
        r = polyq.divmod_poly(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append(polyq.neg(r))
    if not chain[-1]:
        chain.pop()
    return chain


def _variations(chain, x: Fraction) -> int:
    signs = []
    for f in chain:
        v = polyq.evaluate(f, x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count(chain, lo: Fraction, hi: Fraction) -> int:
    return _variations(chain, lo) - _variations(chain, hi)


def sturm_root_count(q, lo, hi) -> int:
    """Number of distinct real roots of q in the half-open interval (lo, hi].

    The chain is built on the square-free part, where dropping zero signs
    makes V(x) equal V(x+) at every point, so endpoints that are roots
    need no perturbation.
    """
    coeffs = q.coeffs if isinstance(q, SPoly) else polyq.make(q)
    if not coeffs:
        raise ZeroPolynomial("root count of the zero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError("need lo < hi")
    if len(coeffs) == 1:
        return 0
    return _count(sturm_chain(polyq.squarefree(coeffs)), lo, hi)


def isolate_roots(coeffs: polyq.Poly, lo, hi, width=None) -> List[Tuple[Fraction, Fraction]]:
    """Disjoint closed intervals, one per distinct root in (lo, hi].

    Each interval is either a degenerate exact root ``(r, r)`` or an
    interval ``(a, b)`` with no root at either end.  With ``width`` the
    intervals are bisected down to that size.
    """
    sf = polyq.squarefree(polyq.make(coeffs))
    if len(sf) <= 1:
        return []
    chain = sturm_chain(sf)
    lo, hi = Fraction(lo), Fraction(hi)

    def is_root(x):
        return polyq.evaluate(sf, x) == 0

    out = []
    if is_root(hi):
        out.append((hi, hi))
    # stack entries count roots in the open interval (a, b)
    stack = [(lo, hi, _count(chain, lo, hi) - is_root(hi))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1 and not is_root(a) and not is_root(b) and (width is None or b - a <= width):
            out.append((a, b))
            continue
        mid = (a + b) / 2
        at_mid = is_root(mid)
        if at_mid:
            out.append((mid, mid))
        left = _count(chain, a, mid) - at_mid
        stack.append((a, mid, left))
        stack.append((mid, b, n - left - at_mid))
    out.sort()
    return out


def positivity(q: SPoly) -> PositivityVerdict:
    coeffs = q.coeffs
    if not coeffs:
        raise ZeroPolynomial("positivity of the zero polynomial is undefined")
    zero, one = Fraction(0), Fraction(1)
    lc, factors = polyq.yun(coeffs)
    # sign changes happen only at roots of odd multiplicity
    odd: polyq.Poly = (lc,)
    for i, f in enumerate(factors, start=1):
        if i % 2 == 1:
            odd = polyq.mul(odd, f)
    crossings = [iv for iv in isolate_roots(odd, zero, one, _WITNESS_WIDTH) if iv[0] < one]
    if crossings:
        return PositivityVerdict(Positivity.INDEFINITE, crossings[0])
    if polyq.evaluate(odd, Fraction(1, 2)) < 0:
        roots = isolate_roots(coeffs, zero, one, _WITNESS_WIDTH)
        if polyq.evaluate(coeffs, zero) == 0:
            roots.insert(0, (zero, zero))
        half = Fraction(1, 2)
        return PositivityVerdict(Positivity.INDEFINITE, roots[0] if roots else (half, half))
    if polyq.evaluate(coeffs, zero) == 0:
        return PositivityVerdict(Positivity.NONNEGATIVE_WITH_ZERO, (zero, zero))
    roots = isolate_roots(coeffs, zero, one, _WITNESS_WIDTH)
    if roots:
        return PositivityVerdict(Positivity.NONNEGATIVE_WITH_ZERO, roots[0])
    return PositivityVerdict(Positivity.STRICTLY_POSITIVE)
