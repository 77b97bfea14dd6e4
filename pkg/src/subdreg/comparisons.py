"""Regularity comparisons from pointwise bounds between B-polynomials.

If ``B~ <= C B`` on [0, 1] for the s-polynomials of two schemes with
(1+z)-exponents r+1 and r~+1, then ``gamma~ >= gamma + r~ - r - log2 C``.
:func:`min_ratio_constant` finds the smallest such C exactly, and
:func:`verify_theorems` checks the closed-form constants for the
pseudo-spline families against computed tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import polyq
from .errors import InputError, MethodInapplicable
from .families import FamilyId, Kind, b_spoly
from .regularity import regularity_table
from .trig import SPoly, isolate_roots, positivity

SLACK = 1e-9
_ROOT_WIDTH = Fraction(1, 2 ** 80)

STATEMENTS = ("T5i", "T5ii", "T5iii", "T6i", "T6ii", "T6iii", "T7a", "T7b")


@dataclass(frozen=True)
class RatioSup:
    """sup of num/den over [0, 1], enclosed in [lower, upper]."""

    lower: Fraction
    upper: Fraction
    argmax: Tuple[Fraction, Fraction]

    @property
    def value(self) -> float:
        return float((self.lower + self.upper) / 2)

    @property
    def radius(self) -> float:
        return float((self.upper - self.lower) / 2)

    @property
    def exact(self) -> Optional[Fraction]:
        return self.lower if self.lower == self.upper else None


@dataclass(frozen=True)
class ComparisonResult:
    c_star: RatioSup
    c_theorem: Optional[Fraction]
    gap_bound: float
    r: int
    r_tilde: int
    statement: Optional[str] = None


def _interval_eval(p, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    if lo == hi:
        v = polyq.evaluate(p, lo)
        return v, v
    acc = (Fraction(0), Fraction(0))
    for c in reversed(p):
        prods = (acc[0] * lo, acc[0] * hi, acc[1] * lo, acc[1] * hi)
        acc = (min(prods) + c, max(prods) + c)
    return acc


def min_ratio_constant(num: SPoly, den: SPoly) -> RatioSup:
    """Smallest C with num(s) <= C den(s) on [0, 1].

    The sup is attained at an endpoint or at a root of
    num' den - num den'; those roots are isolated with Sturm sequences
    and the ratio is enclosed by exact interval evaluation.
    """
    if not positivity(den).strictly_positive:
        raise MethodInapplicable("denominator must be strictly positive on [0, 1]")
    n, d = num.coeffs, den.coeffs
    cross = polyq.sub(polyq.mul(polyq.derivative(n), d), polyq.mul(n, polyq.derivative(d)))
    candidates = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(1))]
    if cross:
        candidates += [iv for iv in isolate_roots(cross, 0, 1, _ROOT_WIDTH) if iv[1] < 1]
    encs = []
    for lo, hi in candidates:
        nlo, nhi = _interval_eval(n, lo, hi)
        dlo, dhi = _interval_eval(d, lo, hi)
        if dlo <= 0:
            raise MethodInapplicable("denominator enclosure touches zero")
        quotients = (nlo / dlo, nlo / dhi, nhi / dlo, nhi / dhi)
        encs.append((min(quotients), max(quotients), (lo, hi)))
    best = max(encs, key=lambda e: e[0])
    return RatioSup(best[0], max(e[1] for e in encs), best[2])


def gap_bound(c, r: int, r_tilde: int) -> float:
    """r~ - r - log2(c): the additive bound gamma~ - gamma >= gap_bound."""
    c = float(c)
    if c < 1:
        raise InputError(f"comparison constant must be >= 1, got {c}")
    return r_tilde - r - math.log2(c)


def _prod(factors) -> Fraction:
    out = Fraction(1)
    for f in factors:
        out *= f
    return out


def theorem_constants(which: str, m: int, l: int = 0) -> Fraction:
    """Closed-form comparison constant C for each statement.

    T5*/T6* bound primal/dual neighbours, T7a bounds dual(m,l) by
    primal(m,l), T7b bounds primal(m+1,l) by dual(m,l).
    """
    half = Fraction(1, 2)
    if m < 1:
        raise InputError("m must be >= 1")
    if which in ("T5i", "T6i"):
        if not 1 <= l <= m - 1:
            raise InputError(f"{which} needs 1 <= l <= m-1")
    elif which in ("T5ii", "T6ii", "T7a", "T7b"):
        if not 0 <= l <= m - 1:
            raise InputError(f"{which} needs 0 <= l <= m-1")
    elif which not in ("T5iii", "T6iii"):
        raise InputError(f"unknown statement {which!r}")
    if which == "T5i":
        return Fraction(m + l, l)
    if which == "T5ii":
        return Fraction(m + l, m)
    if which == "T5iii":
        return Fraction(2 * (2 * m + 1), m + 1)
    if which == "T6i":
        return (m + l + half) / l
    if which == "T6ii":
        return (m + l + half) / (m + half)
    if which == "T6iii":
        return (2 * m + half) * (2 * m + 3 * half) / (m * (m + 3 * half))
    if which == "T7a":
        return _prod((m + half + n) / (m + n) for n in range(l))
    return _prod((m + 1 + n) / (m + half + n) for n in range(l))


def statement_pair(which: str, m: int, l: int) -> Tuple[FamilyId, FamilyId]:
    """(lower-regularity scheme, higher-index scheme) as used by each statement.

    The constant bounds B of the second by C times B of the first.
    """
    P, D = Kind.PRIMAL, Kind.DUAL
    if which in ("T5i", "T6i"):
        k = P if which == "T5i" else D
        return FamilyId(k, m, l - 1), FamilyId(k, m, l)
    if which in ("T5ii", "T6ii"):
        k = P if which == "T5ii" else D
        return FamilyId(k, m, l), FamilyId(k, m + 1, l)
    if which in ("T5iii", "T6iii"):
        k = P if which == "T5iii" else D
        return FamilyId(k, m, m - 1), FamilyId(k, m + 1, m)
    if which == "T7a":
        return FamilyId(P, m, l), FamilyId(D, m, l)
    if which == "T7b":
        return FamilyId(D, m, l), FamilyId(P, m + 1, l)
    raise InputError(f"unknown statement {which!r}")


def match_statement(a: FamilyId, b: FamilyId) -> Optional[Tuple[str, int, int]]:
    """Which statement (if any) compares B_b <= C B_a for this ordered pair."""
    for which in STATEMENTS:
        if which in ("T5iii", "T6iii"):
            trial = [(a.m, a.m - 1)]
        elif which in ("T5i", "T6i"):
            trial = [(a.m, a.l + 1)]
        else:
            trial = [(a.m, a.l)]
        for m, l in trial:
            try:
                if statement_pair(which, m, l) == (a, b):
                    theorem_constants(which, m, l)
                    return which, m, l
            except InputError:
                continue
    return None


def compare(a: FamilyId, b: FamilyId) -> ComparisonResult:
    """Bound gamma(b) from below using gamma(a) and sup B_b / B_a."""
    c_star = min_ratio_constant(b_spoly(b), b_spoly(a))
    hit = match_statement(a, b)
    c_thm = theorem_constants(*hit) if hit else None
    c = max(c_star.lower, Fraction(1))
    return ComparisonResult(c_star, c_thm, gap_bound(c, a.r, b.r), a.r, b.r, hit[0] if hit else None)


@dataclass
class TheoremCheck:
    statement: str
    m: int
    l: int
    lower_bound: float
    value: float
    upper_bound: float
    c_theorem: Fraction
    c_star: float
    ok_lower: bool
    ok_upper: bool
    ok_constant: bool
    ok_lemma: bool

    @property
    def ok(self) -> bool:
        return self.ok_lower and self.ok_upper and self.ok_constant and self.ok_lemma


@dataclass
class TheoremReport:
    m_max: int
    checks: List[TheoremCheck] = field(default_factory=list)

    @property
    def violations(self) -> List[TheoremCheck]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.violations


def _admissible(which: str, m_max: int):
    for m in range(1, m_max + 1):
        needs_next = which not in ("T5i", "T6i", "T7a")
        if needs_next and m + 1 > m_max:
            continue
        if which in ("T5iii", "T6iii"):
            yield m, m - 1
        elif which in ("T5i", "T6i"):
            yield from ((m, l) for l in range(1, m))
        else:
            yield from ((m, l) for l in range(m))


def gamma_table(m_max: int) -> Dict[FamilyId, float]:
    out = {}
    for kind in Kind:
        for (m, l), rep in regularity_table(kind, m_max, include_bspline=True).items():
            out[FamilyId(kind, m, l)] = rep.gamma
    return out


def verify_theorems(m_max: int, table: Optional[Dict[FamilyId, float]] = None) -> TheoremReport:
    """Check every two-sided comparison inequality on computed regularities.

    Each check compares gamma of the second scheme of the statement's pair
    with ``gamma_first + (r~ - r) - log2 C`` from below and
    ``gamma_first + (r~ - r)`` from above, both with slack 1e-9; it also
    confirms the exact sup of the B-ratio does not exceed the closed-form C
    and that the bound with that sup holds.
    """
    if table is None:
        table = gamma_table(m_max)
    report = TheoremReport(m_max)
    for which in STATEMENTS:
        for m, l in _admissible(which, m_max):
            first, second = statement_pair(which, m, l)
            c_thm = theorem_constants(which, m, l)
            g1, g2 = table[first], table[second]
            dr = second.r - first.r
            lower = g1 + gap_bound(c_thm, first.r, second.r)
            upper = g1 + dr
            if which in ("T5i", "T6i"):
                # decreasing in l: first has the larger regularity
                upper = g1
            sup = min_ratio_constant(b_spoly(second), b_spoly(first))
            c_sharp = max(sup.upper, Fraction(1))
            report.checks.append(
                TheoremCheck(
                    statement=which,
                    m=m,
                    l=l,
                    lower_bound=lower,
                    value=g2,
                    upper_bound=upper,
                    c_theorem=c_thm,
                    c_star=sup.value,
                    ok_lower=g2 >= lower - SLACK,
                    ok_upper=g2 <= upper + SLACK,
                    ok_constant=sup.lower <= c_thm + Fraction(SLACK),
                    ok_lemma=g2 >= g1 + gap_bound(c_sharp, first.r, second.r) - SLACK,
                )
            )
    return report
