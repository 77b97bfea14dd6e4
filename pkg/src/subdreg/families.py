"""Primal and dual pseudo-spline symbols.

Primal::

    a_{m,l}(z) = 2 sigma(z)^m  sum_{k=0}^{l} C(m-1+k, k)   delta(z)^k

Dual::

    a~_{m,l}(z) = (1+z)/z sigma(z)^m  sum_{k=0}^{l} C(m-1/2+k, k) delta(z)^k

with sigma = (1+z)^2/(4z) and delta = -(1-z)^2/(4z).  l = 0 gives the
B-splines of degree 2m-1 (primal) and 2m (dual); l = m-1 gives the
2m-point Dubuc-Deslauriers scheme and its dual.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .laurent import LaurentPoly
from .trig import SPoly


class Kind(enum.Enum):
    PRIMAL = "primal"
    DUAL = "dual"


@dataclass(frozen=True)
class FamilyId:
    kind: Kind
    m: int
    l: int

    def __post_init__(self):
        if not isinstance(self.kind, Kind):
            object.__setattr__(self, "kind", Kind(self.kind))
        if self.m < 1 or not 0 <= self.l <= self.m - 1:
            raise InputError(f"need m >= 1 and 0 <= l <= m-1, got m={self.m}, l={self.l}")

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        """Parse ``primal:3,2`` / ``dual:4,3``."""
        match = re.fullmatch(r"\s*(primal|dual)\s*:\s*(\d+)\s*,\s*(\d+)\s*", text)
        if not match:
            raise InputError(f"family spec {text!r} is not of the form 'primal:m,l' or 'dual:m,l'")
        return cls(Kind(match.group(1)), int(match.group(2)), int(match.group(3)))

    @property
    def r(self) -> int:
        """Power of (1 + z) in the symbol, minus one."""
        return 2 * self.m - 1 if self.kind is Kind.PRIMAL else 2 * self.m

    def symbol(self) -> LaurentPoly:
        if self.kind is Kind.PRIMAL:
            return primal_symbol(self.m, self.l)
        return dual_symbol(self.m, self.l)

    def __str__(self):
        return f"{self.kind.value}:{self.m},{self.l}"


def sigma() -> LaurentPoly:
    return LaurentPoly([Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)], -1)


def delta() -> LaurentPoly:
    return LaurentPoly([Fraction(-1, 4), Fraction(1, 2), Fraction(-1, 4)], -1)


def gbinom(top, k: int) -> Fraction:
    """Binomial coefficient C(top, k) for rational ``top`` as an exact product."""
    top = Fraction(top)
    out = Fraction(1)
    for i in range(k):
        out = out * (top - i) / (i + 1)
    return out


def _weights(kind: Kind, m: int, l: int):
    base = Fraction(m - 1) if kind is Kind.PRIMAL else Fraction(2 * m - 1, 2)
    return [gbinom(base + k, k) for k in range(l + 1)]


def _check(m: int, l: int):
    if m < 1 or not 0 <= l <= m - 1:
        raise InputError(f"need m >= 1 and 0 <= l <= m-1, got m={m}, l={l}")


def _delta_series(weights) -> LaurentPoly:
    d = delta()
    out = LaurentPoly()
    power = LaurentPoly([1])
    for w in weights:
        out = out + power * w
        power = power * d
    return out


def primal_symbol(m: int, l: int) -> LaurentPoly:
    _check(m, l)
    return 2 * sigma() ** m * _delta_series(_weights(Kind.PRIMAL, m, l))


def dual_symbol(m: int, l: int) -> LaurentPoly:
    _check(m, l)
    one_plus_z_over_z = LaurentPoly([1, 1], -1)
    return one_plus_z_over_z * sigma() ** m * _delta_series(_weights(Kind.DUAL, m, l))


def b_spoly(fid: FamilyId) -> SPoly:
    """B_{m,l} (or its dual) written in s = sin^2(xi/2)."""
    return SPoly(_weights(fid.kind, fid.m, fid.l))


def members(kind: Kind, m_max: int, include_bspline: bool = False):
    lo = 0 if include_bspline else 1
    for m in range(1, m_max + 1):
        for l in range(lo, m):
            yield FamilyId(kind, m, l)
