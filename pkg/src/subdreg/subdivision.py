"""Exact execution of subdivision schemes and their difference schemes.

These routines are the empirical side of the library: they iterate the
refinement rules directly, and the results are compared against the
algebraic pipeline in :mod:`subdreg.regularity`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .errors import NotDivisible
from .laurent import LaurentPoly, SymmetricMask, divide_one_plus_z, upsample
from .regularity import build_matrix_folded


@dataclass(frozen=True)
class DyadicSequence:
    """Values attached to the points 2**-level * (low + i)."""

    level: int
    low: int
    values: Tuple[Fraction, ...]

    @classmethod
    def from_laurent(cls, level: int, poly: LaurentPoly) -> "DyadicSequence":
        return cls(level, poly.low, poly.coeffs)

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly(self.values, self.low)

    @property
    def high(self) -> int:
        return self.low + len(self.values) - 1

    def __getitem__(self, k: int) -> Fraction:
        i = k - self.low
        if 0 <= i < len(self.values):
            return self.values[i]
        return Fraction(0)

    def points(self) -> List[Fraction]:
        return [Fraction(self.low + i, 2 ** self.level) for i in range(len(self.values))]


@dataclass(frozen=True)
class DividedDiffSequence:
    order: int
    inner: DyadicSequence


def delta_sequence(level: int = 0) -> DyadicSequence:
    return DyadicSequence(level, 0, (Fraction(1),))


def subdivide(a: LaurentPoly, f: DyadicSequence, steps: int) -> DyadicSequence:
    """Apply f_{j+1,k} = sum_l a_{k-2l} f_{j,l} ``steps`` times."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    g = LaurentPoly(f.values, f.low)
    for _ in range(steps):
        g = a * upsample(g)
    if g.is_zero():
        return DyadicSequence(f.level + steps, 0, ())
    return DyadicSequence(f.level + steps, g.low, g.coeffs)


def derived_mask(a: LaurentPoly, s: int) -> LaurentPoly:
    """2**s a(z) / (1+z)**s."""
    if s < 0:
        raise ValueError("s must be >= 0")
    q = a
    for i in range(s):
        q, rem = divide_one_plus_z(q)
        if rem != 0:
            raise NotDivisible(f"(1+z)^{i + 1} does not divide the symbol")
    return q * Fraction(2) ** s


def divided_differences(f: DyadicSequence, s: int, finite_support: bool = False) -> DividedDiffSequence:
    """Order-s divided differences f^{[s]}_{j,k} of the level-j data.

    By default only differences whose stencil lies inside the stored
    window are formed, so the result is ``s`` entries shorter.  With
    ``finite_support`` the data are taken to vanish outside the window and
    the result is ``s`` entries longer.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    if not finite_support and len(f.values) <= s:
        raise ValueError(f"need more than {s} values for order-{s} differences")
    vals = list(f.values)
    low = f.low
    scale = Fraction(2) ** f.level
    for order in range(1, s + 1):
        if finite_support:
            padded = [Fraction(0)] + vals + [Fraction(0)]
            vals = [scale / order * (padded[i + 1] - padded[i]) for i in range(len(padded) - 1)]
        else:
            vals = [scale / order * (vals[i + 1] - vals[i]) for i in range(len(vals) - 1)]
            low += 1
    return DividedDiffSequence(s, DyadicSequence(f.level, low, tuple(vals)))


def b_iterates(b: SymmetricMask, j: int) -> DyadicSequence:
    """Coefficients b_{j,k} of b(z) b(z^2) ... b(z^(2^(j-1)))."""
    if j < 0:
        raise ValueError("j must be >= 0")
    return subdivide(b.to_laurent(), delta_sequence(), j)


def central_sequence(b: SymmetricMask, jmax: int) -> List[Fraction]:
    """(b_{0,0}, ..., b_{jmax,0}) from powers of the folded matrix."""
    if jmax < 0:
        raise ValueError("jmax must be >= 0")
    if b.p == 0:
        return [b.half[0] ** j for j in range(jmax + 1)]
    m = build_matrix_folded(b)
    v = (Fraction(1),) + (Fraction(0),) * (b.p - 1)
    out = [v[0]]
    for _ in range(jmax):
        v = m.matvec(v)
        out.append(v[0])
    return out


def empirical_rho(b: SymmetricMask, jmax: int, method: str = "ratio") -> float:
    """Estimate of rho from central coefficients.

    ``ratio`` returns b_{jmax,0} / b_{jmax-1,0}; ``root`` returns
    b_{jmax,0} ** (1/jmax), which converges much more slowly.
    """
    if jmax < 2:
        raise ValueError("jmax must be >= 2")
    seq = central_sequence(b, jmax)
    if method == "ratio":
        if seq[-2] == 0:
            raise ZeroDivisionError(f"b_{{{jmax - 1},0}} = 0")
        return float(seq[-1] / seq[-2])
    if method == "root":
        if seq[-1] <= 0:
            raise ValueError(f"b_{{{jmax},0}} = {seq[-1]} is not positive")
        num, den = seq[-1].numerator, seq[-1].denominator
        return 2 ** ((math.log2(num) - math.log2(den)) / jmax)
    raise ValueError(f"unknown method {method!r}")


def max_center_check(b: SymmetricMask, jmax: int) -> bool:
    """True iff max_k |b_{j,k}| = b_{j,0} for every j <= jmax."""
    seq = LaurentPoly([1])
    bl = b.to_laurent()
    for j in range(jmax + 1):
        if j:
            seq = bl * upsample(seq)
        center = seq[0]
        if any(abs(c) > center for c in seq.coeffs):
            return False
    return True


def cardinal_samples(a: LaurentPoly, levels: int) -> DyadicSequence:
    """Level-``levels`` refinement of the delta sequence.

    These are grid values of the refinement, not values of the limit
    function, unless the scheme is interpolatory.
    """
    if levels < 0:
        raise ValueError("levels must be >= 0")
    return subdivide(a, delta_sequence(), levels)
