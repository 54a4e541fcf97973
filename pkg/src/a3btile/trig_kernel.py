"""Spherical trigonometry of the a^3b quadrilateral.

All angles and arc lengths are stored in units of pi: the value ``2/3``
means an angle of 2*pi/3 radians.  Trigonometric functions are applied to
``x * pi`` at the call site.

Corner layout (counterclockwise for a "+" tile)::

    alpha --a-- beta --a-- gamma --a-- delta --b-- alpha
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .errors import InvalidParameterError, SingularConfigurationError

PI = math.pi
TRIG_TOL = 1e-10
SUM_TOL = 1e-12
SINGULAR_TOL = 1e-9

ANGLE_NAMES = ("alpha", "beta", "gamma", "delta")


def check_f(f: int) -> int:
    """Return ``f`` if it is an even integer >= 6, else raise."""
    if isinstance(f, bool) or not isinstance(f, int) or f < 6 or f % 2:
        raise InvalidParameterError(f"f must be an even integer >= 6, got {f!r}")
    return f


@dataclass(frozen=True)
class AngleQuad:
    alpha: float
    beta: float
    gamma: float
    delta: float

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def radians(self) -> Tuple[float, float, float, float]:
        return tuple(x * PI for x in self.as_tuple())  # type: ignore[return-value]


@dataclass(frozen=True)
class EdgePair:
    a: float
    b: float


@dataclass(frozen=True)
class Quadrilateral:
    """Angles, edges and the tile count ``f`` of a tiling quadrilateral.

    ``exact`` optionally carries each angle as a Fraction (in pi units) when it
    is known to be rational; ``None`` entries mark irrational angles.  The
    validator uses it to check vertex sums in exact arithmetic.
    """

    angles: AngleQuad
    edges: EdgePair
    f: int
    exact: Tuple[Optional[Fraction], ...] = field(default=(None, None, None, None))

    def __post_init__(self):
        check_f(self.f)
        if len(self.exact) != 4:
            raise InvalidParameterError("exact must have four entries")

    @property
    def theta(self) -> Tuple[float, float, float, float]:
        return self.angles.as_tuple()


def make_quad(angles, a: float, b: float, f: int, exact=None) -> Quadrilateral:
    """Convenience constructor from a plain 4-sequence of angles."""
    if not isinstance(angles, AngleQuad):
        angles = AngleQuad(*(float(x) for x in angles))
    ex = tuple(exact) if exact is not None else (None,) * 4
    ex = tuple(Fraction(x) if x is not None else None for x in ex)
    return Quadrilateral(angles, EdgePair(float(a), float(b)), f, ex)


def angle_sum_residual(angles: AngleQuad, f: int) -> float:
    """alpha + beta + gamma + delta - (2 + 4/f)."""
    check_f(f)
    al, be, ga, de = angles.as_tuple()
    return al + be + ga + de - (2.0 + 4.0 / f)


def cos_b(angles: AngleQuad, a: float) -> float:
    """cos(b*pi) predicted from beta, gamma and the a-edge."""
    _, be, ga, _ = angles.radians()
    ca = math.cos(a * PI)
    cb, cg, sb, sg = math.cos(be), math.cos(ga), math.sin(be), math.sin(ga)
    return (
        ca**3 * (1 - cb) * (1 - cg)
        - ca**2 * sb * sg
        + ca * (cb + cg - cb * cg)
        + sb * sg
    )


def cos_a_two_ways(angles: AngleQuad) -> Tuple[float, float]:
    """The two expressions for cos(a*pi) in terms of the angles alone.

    Raises SingularConfigurationError when sin(alpha) or sin(delta) is
    below 1e-9 (alpha or delta equal to 1), or when sin(beta/2) or
    sin(gamma/2) vanishes.
    """
    al, be, ga, de = angles.radians()
    sa, sd = math.sin(al), math.sin(de)
    if abs(sa) < SINGULAR_TOL or abs(sd) < SINGULAR_TOL:
        raise SingularConfigurationError(
            "cos a is undefined when alpha or delta equals 1 (sin vanishes)"
        )
    hg, hb = math.sin(ga / 2) ** 2, math.sin(be / 2) ** 2
    if hg < SINGULAR_TOL or hb < SINGULAR_TOL:
        raise SingularConfigurationError("beta or gamma is a multiple of 2")
    first = (sa + math.cos(de) * math.sin(ga)) / (2 * sd * hg)
    second = (sd + math.cos(al) * math.sin(be)) / (2 * sa * hb)
    return first, second


def coolsaet_residuals(angles: AngleQuad) -> Tuple[float, float]:
    """(r7, r8); a genuine a^3b quadrilateral makes at least one vanish."""
    al, be, ga, de = angles.radians()
    r7 = math.sin(al - ga / 2) * math.sin(be / 2) - math.sin(ga / 2) * math.sin(de - be / 2)
    r8 = math.sin(al + ga / 2) * math.sin(be / 2) + math.sin(ga / 2) * math.sin(de + be / 2)
    return r7, r8


@dataclass(frozen=True)
class ResidualReport:
    angle_sum: float
    eq4: float
    cos_a: Optional[Tuple[float, float]]
    coolsaet: Tuple[float, float]
    tol: float
    passed: bool
    failures: Tuple[str, ...]

    @property
    def coolsaet_min(self) -> float:
        return min(abs(self.coolsaet[0]), abs(self.coolsaet[1]))


def check_quad(q: Quadrilateral, tol: float = TRIG_TOL) -> ResidualReport:
    """Evaluate every residual of ``q`` and give a verdict at ``tol``.

    The cos a pair is skipped (reported as None) when alpha or delta is 1.
    """
    if tol <= 0:
        raise InvalidParameterError("tol must be positive")
    s = angle_sum_residual(q.angles, q.f)
    e4 = cos_b(q.angles, q.edges.a) - math.cos(q.edges.b * PI)
    try:
        c1, c2 = cos_a_two_ways(q.angles)
        ca = math.cos(q.edges.a * PI)
        cres: Optional[Tuple[float, float]] = (c1 - ca, c2 - ca)
    except SingularConfigurationError:
        cres = None
    r = coolsaet_residuals(q.angles)
    fails = []
    if abs(s) > tol:
        fails.append("angle_sum")
    if abs(e4) > tol:
        fails.append("eq4")
    if cres is not None and max(abs(cres[0]), abs(cres[1])) > tol:
        fails.append("cos_a")
    if min(abs(r[0]), abs(r[1])) > tol:
        fails.append("coolsaet")
    return ResidualReport(s, e4, cres, r, tol, not fails, tuple(fails))
