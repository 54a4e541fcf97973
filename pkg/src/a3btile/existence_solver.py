"""Root finding for quadrilaterals inside one-parameter angle families."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .errors import DegeneracyError, InvalidParameterError, SingularConfigurationError
from .geometry_realizer import closure_error
from .trig_kernel import PI, AngleQuad, Quadrilateral, check_quad, cos_a_two_ways, cos_b, make_quad

GRID = 10_000
BISECT_TOL = 1e-13
DEDUP = 1e-9


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x).limit_denominator(10**6)


@dataclass(frozen=True)
class LinearFamily:
    """Angles (c_i + s_i * alpha) for i = alpha, beta, gamma, delta.

    ``coeffs`` holds four (constant, slope) pairs of Fractions; the angle sum
    must equal 2 + 4/f for every alpha.
    """

    coeffs: Tuple[Tuple[Fraction, Fraction], ...]
    f: int
    interval: Tuple[float, float]

    def __post_init__(self):
        if len(self.coeffs) != 4:
            raise InvalidParameterError("need four (constant, slope) pairs")
        c = sum(_frac(x[0]) for x in self.coeffs)
        s = sum(_frac(x[1]) for x in self.coeffs)
        if c != 2 + Fraction(4, self.f) or s != 0:
            raise InvalidParameterError(
                f"angle sum {c} + {s}*alpha is not identically 2+4/f for f={self.f}")
        if not self.interval[0] < self.interval[1]:
            raise InvalidParameterError("empty search interval")

    @classmethod
    def of(cls, f: int, interval, *pairs) -> "LinearFamily":
        return cls(tuple((_frac(c), _frac(s)) for c, s in pairs), f, tuple(interval))

    def angles(self, alpha: float) -> AngleQuad:
        return AngleQuad(*(float(c) + float(s) * alpha for c, s in self.coeffs))

    def exact(self) -> Tuple[Optional[Fraction], ...]:
        return tuple(c if s == 0 else None for c, s in self.coeffs)


@dataclass(frozen=True)
class AlphaRoot:
    alpha: float
    equation: str
    multiplicity: int = 1


def _residual(fam: LinearFamily, which: int):
    def r(x: float) -> float:
        al, be, ga, de = (float(c) * PI + float(s) * PI * x for c, s in fam.coeffs)
        if which == 0:
            return math.sin(al - ga / 2) * math.sin(be / 2) - math.sin(ga / 2) * math.sin(de - be / 2)
        return math.sin(al + ga / 2) * math.sin(be / 2) + math.sin(ga / 2) * math.sin(de + be / 2)
    return r


def _bisect(r, lo: float, hi: float, tol: float) -> float:
    flo = r(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = r(mid)
        if fm == 0.0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _golden_min(g, lo: float, hi: float, tol: float) -> float:
    inv = (math.sqrt(5) - 1) / 2
    c, d = hi - inv * (hi - lo), lo + inv * (hi - lo)
    while hi - lo > tol:
        if g(c) < g(d):
            hi, d = d, c
            c = hi - inv * (hi - lo)
        else:
            lo, c = c, d
            d = lo + inv * (hi - lo)
    return 0.5 * (lo + hi)


def alpha_roots(family: LinearFamily, tol: float = BISECT_TOL, grid: int = GRID) -> List[AlphaRoot]:
    """Roots of r7 and r8 along the family, each tagged with its equation.

    Sign changes on a grid of ``grid`` points are refined by bisection.  A
    grid point where |r| has a local minimum without a sign change is
    refined by golden-section search and reported as a double root when the
    residual there vanishes to 1e-12.
    """
    lo, hi = family.interval
    xs = np.linspace(lo, hi, grid + 1)[1:-1]
    out: List[AlphaRoot] = []
    probe = np.random.default_rng(0).uniform(lo, hi, 64)
    for which, name in ((0, "r7"), (1, "r8")):
        r = _residual(family, which)
        if max(abs(r(x)) for x in probe) < 1e-12:
            raise DegeneracyError(f"{name} vanishes identically on this family")
        vals = np.array([r(x) for x in xs])
        found: List[AlphaRoot] = []
        for i in range(len(xs) - 1):
            if vals[i] == 0.0:
                found.append(AlphaRoot(float(xs[i]), name))
            elif vals[i] * vals[i + 1] < 0:
                found.append(AlphaRoot(_bisect(r, xs[i], xs[i + 1], tol), name))
        for i in range(1, len(xs) - 1):
            a, b, c = abs(vals[i - 1]), abs(vals[i]), abs(vals[i + 1])
            same = vals[i - 1] * vals[i] > 0 and vals[i] * vals[i + 1] > 0
            if same and b <= a and b <= c:
                x = _golden_min(lambda t: abs(r(t)), xs[i - 1], xs[i + 1], tol)
                if abs(r(x)) < 1e-12:
                    found.append(AlphaRoot(x, name, 2))
        found.sort(key=lambda z: z.alpha)
        for z in found:
            if not out or all(abs(z.alpha - w.alpha) > DEDUP or w.equation != name for w in out):
                out.append(z)
    return sorted(out, key=lambda z: (z.alpha, z.equation))


def complete_quad(family: LinearFamily, alpha: float) -> Optional[Quadrilateral]:
    """Quadrilateral at ``alpha`` with a from the angles and b from the cos b relation.

    Returns None when the angles leave (0, 2), cos a is undefined or out of
    range, or the boundary walk does not close.
    """
    ang = family.angles(alpha)
    if not all(0 < x < 2 for x in ang.as_tuple()):
        return None
    try:
        c1, _ = cos_a_two_ways(ang)
    except SingularConfigurationError:
        return None
    if abs(c1) > 1:
        return None
    a = math.acos(c1) / PI
    cb = cos_b(ang, a)
    if abs(cb) > 1 + 1e-12:
        return None
    b = math.acos(max(-1.0, min(1.0, cb))) / PI
    q = make_quad(ang, a, b, family.f, family.exact())
    if closure_error(q) > 1e-8:
        return None
    return q


def valid_roots(family: LinearFamily, tol: float = 1e-9) -> List[Tuple[AlphaRoot, Quadrilateral]]:
    """Roots that complete to a closing quadrilateral passing check_quad."""
    out = []
    for z in alpha_roots(family):
        q = complete_quad(family, z.alpha)
        if q is not None and check_quad(q, tol).passed:
            out.append((z, q))
    return out


@dataclass(frozen=True)
class QuarticResult:
    k: int
    A: float
    B: float
    C: float
    roots: Tuple[float, float, float, float]
    residuals: Tuple[float, ...]
    double: bool
    B_printed: float = float("nan")

    def alphas(self) -> List[float]:
        """Distinct alpha in (0, 1) with cos(alpha*pi) among the roots."""
        out: List[float] = []
        for x in self.roots:
            al = math.acos(max(-1.0, min(1.0, x))) / PI
            if all(abs(al - y) > 1e-9 for y in out):
                out.append(al)
        return sorted(out)


def quartic_case(k: int) -> QuarticResult:
    """Coefficients and roots of A x^4 + B x^2 + C = 0 with x = cos(alpha).

    The family is (alpha, 2-2alpha-2/k, 2/k, alpha+1/k) and the quartic is
    r7 = 0 squared out.  The x^2 coefficient carries 2cos^2(pi/k); with a
    single cos^2(pi/k) (kept as ``B_printed``) the listed roots would not
    solve it.  Vieta's -B/A = c^2 + x34^2 fixes the coefficient.
    """
    if k < 3:
        raise InvalidParameterError("k must be >= 3")
    c = math.cos(PI / k)
    A = 8 * c**3 - 4 * c**2 - 8 * c + 5
    B = -8 * c**5 + 4 * c**3 + 2 * c**2 + 4 * c - 4
    C = c**2 * (2 * c**2 + c - 2) ** 2
    x34 = (2 * c**2 + c - 2) / math.sqrt(A)
    roots = (c, -c, x34, -x34)
    res = tuple(A * x**4 + B * x**2 + C for x in roots)
    Bp = -8 * c**5 + 4 * c**3 + c**2 + 4 * c - 4
    return QuarticResult(k, A, B, C, roots, res, abs(abs(x34) - c) < 1e-9, Bp)


def nonexistence_margin(k: int) -> float:
    """min(|x12|, |x34|) - cos((1/2 - 1/k) pi); positive rules out every alpha."""
    if k < 6:
        raise InvalidParameterError("the margin argument applies to k >= 6 only")
    q = quartic_case(k)
    return min(abs(q.roots[0]), abs(q.roots[2])) - math.cos((0.5 - 1.0 / k) * PI)


def quartic_family(k: int) -> LinearFamily:
    """(alpha, 2-2alpha-2/k, 2/k, alpha+1/k) with f = 4k."""
    K = Fraction(1, k)
    return LinearFamily.of(4 * k, (0.0, 1.0 - 2.0 / k), (0, 1), (2 - 2 * K, -2), (2 * K, 0), (K, 1))


SPORADIC_FAMILIES = {
    "emt12_a2b_c3": LinearFamily.of(12, (1 / 3, 1.0), (0, 1), (2, -2), (Fraction(2, 3), 0), (Fraction(-1, 3), 1)),
    "emt16_a2b_bcd2": LinearFamily.of(16, (0.25, 1.0), (0, 1), (2, -2), (Fraction(1, 2), 0), (Fraction(-1, 4), 1)),
    "emt16_bd2_a2c2": LinearFamily.of(16, (0.0, 1.0), (0, 1), (Fraction(1, 2), 0), (1, -1), (Fraction(3, 4), 0)),
    "f16_bc2_a2d2": LinearFamily.of(16, (0.0, 1.0), (0, 1), (Fraction(1, 2), 0), (Fraction(3, 4), 0), (1, -1)),
    "octa24_b3": LinearFamily.of(24, (0.0, 1.0), (0, 1), (Fraction(2, 3), 0), (1, -1), (Fraction(1, 2), 0)),
}
