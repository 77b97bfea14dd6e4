"""Hoelder regularity from the spectral radius of one transition matrix.

Pipeline for a symbol a(z) with a(1) = 2, a(-1) = 0:

1. factor ``a(z) = 2**-r (1+z)**(r+1) b(z)`` with b symmetric about 0;
2. write B(xi) as a polynomial in s = sin^2(xi/2) and decide its sign on
   [0, 1] exactly;
3. build the folded p x p matrix, take its exact characteristic polynomial
   and enclose the spectral radius rho rigorously;
4. gamma = r - log2(rho) is a lower bound for the regularity, and the exact
   regularity when B > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from . import polyq
from .errors import (
    ConvergenceConditionError,
    DegenerateBSpline,
    EnclosureTooWide,
    InputError,
    OutOfTheoremRange,
    ReductionWindowExceeded,
)
from .families import FamilyId, Kind, members
from .laurent import LaurentPoly, SymmetricMask, center_symmetric, extract_one_plus_z
from .trig import Positivity, PositivityVerdict, SPoly, positivity, to_s_poly

RHO_RTOL = 1e-10


@dataclass(frozen=True)
class RationalMatrix:
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.entries)))

    def matvec(self, v: Sequence) -> Tuple[Fraction, ...]:
        return tuple(sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in self.entries)

    def scaled(self, c) -> "RationalMatrix":
        c = Fraction(c)
        return RationalMatrix(tuple(tuple(c * x for x in row) for row in self.entries))

    def __str__(self):
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.entries) + "]"


def _require_p(b: SymmetricMask):
    if b.p == 0:
        raise DegenerateBSpline("p = 0: the scheme is a B-spline and rho = 1")


def build_matrix_large(b: SymmetricMask) -> RationalMatrix:
    """(b_{k-2l}) for k, l = -p+1, ..., p-1."""
    _require_p(b)
    idx = range(-b.p + 1, b.p)
    return RationalMatrix(tuple(tuple(b[k - 2 * l] for l in idx) for k in idx))


def build_matrix_folded(b: SymmetricMask) -> RationalMatrix:
    """p x p matrix acting on (b_{j,0}, ..., b_{j,p-1})."""
    _require_p(b)
    rows = []
    for k in range(b.p):
        rows.append(tuple(b[k] if l == 0 else b[abs(k - 2 * l)] + b[k + 2 * l] for l in range(b.p)))
    return RationalMatrix(tuple(rows))


def build_matrix_transpose(b: SymmetricMask) -> RationalMatrix:
    """Matrix of the decimated recursion c_{j,k} = b_{j, 2^j k}."""
    return build_matrix_large(b).transpose()


def char_poly(a: RationalMatrix) -> polyq.Poly:
    """Ascending coefficients of det(A - lambda I), exactly.

    Faddeev-LeVerrier on the integer matrix D*A, rescaled afterwards.
    """
    n = a.n
    if n < 1:
        raise ValueError("empty matrix")
    d = lcm(*(x.denominator for row in a.entries for x in row))
    ia = [[int(x * d) for x in row] for row in a.entries]
    # c[k] is the coefficient of lambda^k in det(lambda I - D A)
    c = [0] * (n + 1)
    c[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prod = [[sum(ia[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += c[n - k + 1]
        mk = prod
        trace = sum(sum(ia[i][t] * mk[t][i] for t in range(n)) for i in range(n))
        c[n - k] = -trace // k
    sign = -1 if n % 2 else 1
    return polyq.make(Fraction(sign * c[k], d ** (n - k)) for k in range(n + 1))


@dataclass(frozen=True)
class RhoEnclosure:
    """Spectral radius ``estimate`` with true value within ``radius_bound``."""

    estimate: float
    radius_bound: float
    charpoly: Tuple[Fraction, ...] = ()

    @property
    def lower(self) -> float:
        return self.estimate - self.radius_bound

    @property
    def upper(self) -> float:
        return self.estimate + self.radius_bound


# complex rationals as (re, im) pairs


def _cmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _cdiv(x, y):
    den = y[0] * y[0] + y[1] * y[1]
    return ((x[0] * y[0] + x[1] * y[1]) / den, (x[1] * y[0] - x[0] * y[1]) / den)


def _ceval(p, z):
    acc = (Fraction(0), Fraction(0))
    for c in reversed(p):
        acc = _cmul(acc, z)
        acc = (acc[0] + c, acc[1])
    return acc


def _abs2(z) -> Fraction:
    return z[0] * z[0] + z[1] * z[1]


def _float_sqrt(x: Fraction) -> float:
    # scale by a power of 4 so tiny or huge rationals do not under/overflow
    k = (x.numerator.bit_length() - x.denominator.bit_length()) // 2
    return math.ldexp(math.sqrt(float(x / Fraction(4) ** k)), k)


def _sqrt_up(x: Fraction) -> float:
    if x <= 0:
        return 0.0
    u = _float_sqrt(x)
    while Fraction(u) ** 2 < x:
        u = math.nextafter(u, math.inf)
    return u


def _sqrt_down(x: Fraction) -> float:
    if x <= 0:
        return 0.0
    u = _float_sqrt(x)
    while u > 0 and Fraction(u) ** 2 > x:
        u = math.nextafter(u, 0.0)
    return u


def _add_up(a: float, b: float) -> float:
    s = a + b
    return s if Fraction(s) >= Fraction(a) + Fraction(b) else math.nextafter(s, math.inf)


def _sub_down(a: float, b: float) -> float:
    s = a - b
    return s if Fraction(s) <= Fraction(a) - Fraction(b) else math.nextafter(s, -math.inf)


def aberth_roots(p: Sequence, max_iter: int = 500, tol: float = 1e-15) -> List[complex]:
    """All roots of a polynomial by Aberth-Ehrlich simultaneous iteration (binary64)."""
    c = [complex(float(x)) for x in p]
    n = len(c) - 1
    if n < 1:
        return []
    lead = c[-1]
    c = [x / lead for x in c]
    if n == 1:
        return [-c[0]]
    dc = [i * c[i] for i in range(1, n + 1)]
    bound = 1 + max(abs(x) for x in c[:-1])
    # initial guesses on a circle, rotated to avoid symmetric stagnation
    radius = max(min(bound, abs(c[0]) ** (1.0 / n) if c[0] else 1.0), 1e-3)
    z = [radius * complex(math.cos(2 * math.pi * k / n + 0.4), math.sin(2 * math.pi * k / n + 0.4))
         for k in range(n)]

    def ev(cs, x):
        acc = 0j
        for a in reversed(cs):
            acc = acc * x + a
        return acc

    for _ in range(max_iter):
        moved = 0.0
        for i in range(n):
            pz = ev(c, z[i])
            if pz == 0:
                continue
            ratio = pz / ev(dc, z[i])
            s = sum(1 / (z[i] - z[j]) for j in range(n) if j != i and z[i] != z[j])
            step = ratio / (1 - ratio * s)
            z[i] -= step
            moved = max(moved, abs(step) / max(abs(z[i]), 1.0))
        if moved < tol:
            break
    return z


def _newton_exact(p, dp, z: complex) -> complex:
    """One Newton step carried out in exact complex rational arithmetic."""
    zq = (Fraction(z.real), Fraction(z.imag))
    d = _ceval(dp, zq)
    if d == (0, 0):
        return z
    step = _cdiv(_ceval(p, zq), d)
    return complex(float(zq[0] - step[0]), float(zq[1] - step[1]))


def enclose_spectral_radius(charpoly: Sequence, rtol: float = RHO_RTOL) -> RhoEnclosure:
    """Rigorous enclosure of the largest root modulus of an exact polynomial.

    The roots of the square-free part are approximated by Aberth iteration
    plus one exact Newton step.  Weierstrass corrections ``W_i`` are then
    computed exactly, and the inclusion theorem of Braess and Hadeler
    (every root lies in a disk ``|z - z_i| <= n |W_i|``; a connected union
    of k disks holds exactly k roots) bounds rho from both sides.
    """
    p = polyq.make(charpoly)
    if len(p) < 2:
        raise ValueError("characteristic polynomial must have degree >= 1")
    sf = polyq.monic(polyq.squarefree(p))
    n = len(sf) - 1
    dsf = polyq.derivative(sf)
    approx = [_newton_exact(sf, dsf, z) for z in aberth_roots(sf)]
    pts = [(Fraction(z.real), Fraction(z.imag)) for z in approx]
    if len(set(pts)) < n:
        raise EnclosureTooWide("root approximations coincide", max(abs(z) for z in approx), math.inf)

    radii = []  # float upper bounds of n|W_i|
    for i, zi in enumerate(pts):
        num = _ceval(sf, zi)
        den = (Fraction(1), Fraction(0))
        for j, zj in enumerate(pts):
            if j != i:
                den = _cmul(den, (zi[0] - zj[0], zi[1] - zj[1]))
        w2 = _abs2(_cdiv(num, den)) if num != (0, 0) else Fraction(0)
        radii.append(_sqrt_up(w2 * n * n))

    # connected components of overlapping disks
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            reach = Fraction(radii[i]) + Fraction(radii[j])
            if _abs2((pts[i][0] - pts[j][0], pts[i][1] - pts[j][1])) <= reach * reach:
                parent[find(i)] = find(j)

    mod_up = [_add_up(_sqrt_up(_abs2(z)), r) for z, r in zip(pts, radii)]
    mod_down = [max(_sub_down(_sqrt_down(_abs2(z)), r), 0.0) for z, r in zip(pts, radii)]
    upper = max(mod_up)
    comp_low = {}
    for i in range(n):
        root = find(i)
        comp_low[root] = min(comp_low.get(root, math.inf), mod_down[i])
    lower = max(comp_low.values())

    estimate = max(abs(z) for z in approx)
    radius = max(_sub_up(upper, estimate), _sub_up(estimate, lower), 0.0)
    if radius > rtol * max(1.0, estimate):
        raise EnclosureTooWide(
            f"spectral radius enclosure {radius:.3g} exceeds {rtol:g} relative", estimate, radius
        )
    return RhoEnclosure(estimate, radius, p)


def _sub_up(a: float, b: float) -> float:
    s = a - b
    return s if Fraction(s) >= Fraction(a) - Fraction(b) else math.nextafter(s, math.inf)


def spectral_radius(a: RationalMatrix, rtol: float = RHO_RTOL) -> RhoEnclosure:
    return enclose_spectral_radius(char_poly(a), rtol)


def regularity_from_rho(r: int, rho: RhoEnclosure) -> Tuple[float, bool]:
    """gamma = r - log2(rho) and whether log2(rho) may be an integer.

    When the caveat is set the limit is only guaranteed to lie in
    C^(gamma - eps) for every eps > 0.
    """
    if rho.upper < 0.5:
        raise OutOfTheoremRange(f"rho = {rho.estimate!r} < 1/2; rerun with a smaller r")
    if rho.lower >= 1 and rho.lower >= 2.0 ** r:
        raise ReductionWindowExceeded(f"rho = {rho.estimate!r} >= 2^r = {2 ** r}")
    k = round(math.log2(rho.estimate))
    caveat = rho.lower <= 2.0 ** k <= rho.upper
    return r - math.log2(rho.estimate), caveat


@dataclass
class RegularityReport:
    """Every intermediate of the pipeline plus the verdict.

    ``gamma`` is None when the method does not apply (B indefinite, rho
    outside the admissible window); ``notes`` then says why.
    """

    symbol: LaurentPoly
    multiplicity: int
    r: int
    mask: SymmetricMask
    s_poly: SPoly
    positivity: PositivityVerdict
    matrix: Optional[RationalMatrix]
    rho: RhoEnclosure
    gamma: Optional[float]
    optimal: bool
    integer_exponent_caveat: bool
    notes: List[str] = field(default_factory=list)

    @property
    def p(self) -> int:
        return self.mask.p

    @property
    def applicable(self) -> bool:
        return self.gamma is not None


def check_convergence_condition(a: LaurentPoly):
    a1, am1 = a(1), a(-1)
    if a1 != 2 or am1 != 0:
        raise ConvergenceConditionError(
            f"necessary convergence condition a(1) = 2, a(-1) = 0 fails: "
            f"a(1) = {a1}{'' if a1 == 2 else ' != 2'}, a(-1) = {am1}{'' if am1 == 0 else ' != 0'}"
        )


def difference_mask(a: LaurentPoly, r: Optional[int] = None) -> Tuple[int, int, SymmetricMask]:
    """``(multiplicity, r, b)`` with ``a = 2**-r (1+z)**(r+1) b`` up to shift.

    ``r`` defaults to the maximal choice; a smaller ``r`` folds the surplus
    (1+z) factors back into b.
    """
    mu, quotient = extract_one_plus_z(a)
    if mu == 0:
        raise ConvergenceConditionError("a(-1) != 0: no factor (1 + z)")
    if r is None:
        r = mu - 1
    if not 0 <= r <= mu - 1:
        raise InputError(f"r = {r} must satisfy 0 <= r <= {mu - 1}")
    b = quotient * Fraction(2) ** r * LaurentPoly([1, 1]) ** (mu - 1 - r)
    return mu, r, center_symmetric(b)


def analyze(a: LaurentPoly, r: Optional[int] = None, rtol: float = RHO_RTOL) -> RegularityReport:
    check_convergence_condition(a)
    mu, r, b = difference_mask(a, r)
    q = to_s_poly(b)
    verdict = positivity(q)
    notes: List[str] = []

    if b.p == 0:
        rho = RhoEnclosure(1.0, 0.0, (Fraction(1), Fraction(-1)))
        notes.append(f"p = 0: B-spline of degree {r}, limit lies in C^beta for every beta < {r}")
        return RegularityReport(a, mu, r, b, q, verdict, None, rho, float(r), True, True, notes)

    matrix = build_matrix_folded(b)
    rho = spectral_radius(matrix, rtol)
    gamma: Optional[float] = None
    caveat = False
    if verdict.kind is Positivity.INDEFINITE:
        lo, hi = verdict.witness
        notes.append(f"B changes sign on [0, 1] (witness s in [{lo}, {hi}]): method inapplicable")
    else:
        try:
            gamma, caveat = regularity_from_rho(r, rho)
        except OutOfTheoremRange as exc:
            notes.append(f"{exc}")
        except ReductionWindowExceeded as exc:
            notes.append(f"{exc}")
    optimal = gamma is not None and verdict.strictly_positive
    if gamma is not None:
        if optimal:
            notes.append("B > 0: gamma is the exact Hoelder regularity")
        else:
            notes.append("B >= 0 with a zero: gamma is a lower bound only")
        if caveat:
            notes.append("log2(rho) is an integer: membership holds for exponents below gamma")
    return RegularityReport(a, mu, r, b, q, verdict, matrix, rho, gamma, optimal, caveat, notes)


def family_report(fid: FamilyId) -> RegularityReport:
    return analyze(fid.symbol())


def regularity_table(kind: Kind, m_max: int, include_bspline: bool = False):
    """``{(m, l): report}`` for 1 <= m <= m_max, ordered by (m, l)."""
    kind = Kind(kind)
    return {(fid.m, fid.l): family_report(fid) for fid in members(kind, m_max, include_bspline)}
