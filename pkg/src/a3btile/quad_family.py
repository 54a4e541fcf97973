"""The earth-map family of a^3b quadrilaterals and its special points.

For every even f >= 6 there is a one-parameter family of quadrilaterals
(parametrized by beta) that tiles the sphere as a 2-layer earth map.  Points
of the family where beta is an integer multiple of gamma = 4/f admit flip
modifications, classified into five cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DegenerateBetaError, DomainError, RhombusReductionError
from .trig_kernel import PI, AngleQuad, Quadrilateral, check_f, coolsaet_residuals, make_quad

EXCLUDE_TOL = 1e-12
INTEGER_TOL = 1e-9

CASE_IDS = ("A", "B", "C", "D", "E")
CASE_BOUNDS = {
    "A": "f/8<m<=f/6",
    "B": "f/6<m<f/4",
    "C": "m=f/4",
    "D": "(f+4)/4<=m<f/3",
    "E": "f/3<=m<3f/8",
}
CASE_MAX_FLIPS = {"A": 3, "B": 2, "C": 2, "D": 2, "E": 3}


def beta_interval(f: int) -> Tuple[float, float]:
    """Open interval of admissible beta for the earth-map family."""
    check_f(f)
    return (1.0 / 3.0, 1.5) if f == 6 else (0.5, 1.5)


def rhombus_beta(f: int) -> float:
    return 1.0 - 2.0 / f


def check_family_params(f: int, beta: float) -> None:
    """Raise a DomainError subclass when (f, beta) is not admissible."""
    lo, hi = beta_interval(f)
    if not (lo < beta < hi):
        raise DomainError(
            f"beta={beta!r} outside the open interval ({lo:g}, {hi:g}) for f={f}",
            bound="lower" if beta <= lo else "upper",
        )
    if abs(beta - rhombus_beta(f)) < EXCLUDE_TOL:
        # at f=6 the rhombus point coincides with beta = gamma = 2/3
        if f == 6:
            raise DegenerateBetaError(
                "beta=2/3 equals gamma at f=6: the quadrilateral degenerates to the square",
                bound="beta!=2/3",
            )
        raise RhombusReductionError(
            f"beta=1-2/f={rhombus_beta(f):.12g} reduces the quadrilateral to a rhombus",
            bound="beta!=1-2/f",
        )


def _tan_alpha_parts(f: int, beta: float) -> Tuple[float, float]:
    cb, sb = math.cos(beta * PI), math.sin(beta * PI)
    s4 = math.sin(4 * PI / f)
    h2 = math.sin(2 * PI / f) ** 2
    num = cb * ((cb - 1) * s4 + 2 * sb * h2)
    den = (s4 * sb - 1) * (cb - 1) - 2 * cb * cb * h2
    return num, den


def cos_alpha_crosscheck(f: int, a: float, b: float) -> float:
    """cos(alpha*pi) from the triangle spanned by D and two edge midpoints."""
    ha, hb = a * PI / 2, b * PI / 2
    return (math.cos(2 * PI / f) - math.cos(ha) * math.cos(hb)) / (math.sin(ha) * math.sin(hb))


def _emt_quad(f: int, beta: float) -> Quadrilateral:
    gamma = 4.0 / f
    cb = math.cos(beta * PI)
    a = math.acos(-cb / (1 - cb)) / PI
    ca = math.cos(a * PI)
    g = gamma * PI
    cosb = (
        ca**3 * (1 - cb) * (1 - math.cos(g))
        - ca**2 * math.sin(beta * PI) * math.sin(g)
        + ca * (cb + math.cos(g) - cb * math.cos(g))
        + math.sin(beta * PI) * math.sin(g)
    )
    b = math.acos(max(-1.0, min(1.0, cosb))) / PI
    # b exceeds 1 exactly when the apex D is more than a quarter turn from the
    # midpoint of its b-edge, i.e. when beta > 2 - 4/f (possible only for f=6)
    if beta > 2.0 - gamma:
        b = 2.0 - b
    num, den = _tan_alpha_parts(f, beta)
    base = (math.atan2(num, den) / PI) % 1.0
    if math.sin(a * PI / 2) * math.sin(b * PI / 2) > 1e-12:
        target = cos_alpha_crosscheck(f, a, b)
        alpha = min((base, base + 1.0), key=lambda x: abs(math.cos(x * PI) - target))
    else:
        # b -> 0 at the end of the interval; fall back to the angle identities
        def score(x):
            r = coolsaet_residuals(AngleQuad(x, beta, gamma, 2.0 - x - beta))
            return min(abs(r[0]), abs(r[1]))

        alpha = min((base, base + 1.0), key=score)
    delta = 2.0 - alpha - beta
    return make_quad((alpha, beta, gamma, delta), a, b, f, exact=(None, None, Fraction(4, f), None))


def emt_quad(f: int, beta: float) -> Quadrilateral:
    """Earth-map quadrilateral with gamma = 4/f and the given beta."""
    check_f(f)
    check_family_params(f, beta)
    return _emt_quad(f, beta)


@dataclass(frozen=True)
class ModuliPoint:
    f: int
    t: float


def t_interval(f: int) -> Tuple[float, float]:
    check_f(f)
    return (-0.25, 1.0 / 3.0) if f == 6 else (-0.25, 0.25)


def a_from_t(t: float) -> float:
    """Edge a recovered from cos(t*pi) = 1 / (2 sin(a*pi/2))."""
    return 2.0 * math.asin(1.0 / (2.0 * math.cos(t * PI))) / PI


def moduli_point_quad(p: ModuliPoint) -> Quadrilateral:
    """Quadrilateral at longitude offset ``t`` on the a^3b moduli curve.

    The rhombus point t = 1/f is allowed here; it is the only admissible
    point that emt_quad rejects.
    """
    lo, hi = t_interval(p.f)
    if not (lo < p.t < hi):
        raise DomainError(f"t={p.t!r} outside ({lo:g}, {hi:g}) for f={p.f}")
    q = _emt_quad(p.f, 1.0 - 2.0 * p.t)
    a2 = a_from_t(p.t)
    if abs(a2 - q.edges.a) > 1e-9:
        raise ArithmeticError(f"moduli edge a={a2} disagrees with family a={q.edges.a}")
    return q


@dataclass(frozen=True)
class FlipCase:
    f: int
    m: int
    case_id: str
    degeneracy: str = "none"

    @property
    def beta(self) -> Fraction:
        return (Fraction(self.f, 2) - self.m) * Fraction(4, self.f)

    @property
    def l(self) -> int:
        return min(self.m, self.f // 2 - self.m)

    @property
    def max_flips(self) -> int:
        return CASE_MAX_FLIPS[self.case_id]

    @property
    def flip_type(self) -> str:
        """"L2" when beta >= 1 (m <= f/4), otherwise "L1"."""
        return "L2" if 4 * self.m <= self.f else "L1"


def flip_case(f: int, m: int) -> FlipCase:
    """Classify an integer m into one of the five flip cases.

    Raises DomainError outside (f/8, 3f/8) or for f < 8 or m < 2, and
    RhombusReductionError at m = (f+2)/4.
    """
    check_f(f)
    if f < 8:
        raise DomainError("flip modifications need f >= 8", bound="f>=8")
    if not (8 * m > f and 8 * m < 3 * f) or m < 2:
        raise DomainError(f"m={m} outside (f/8, 3f/8) for f={f}", bound="f/8<m<3f/8")
    if 4 * m == f + 2:
        raise RhombusReductionError(
            f"m=(f+2)/4={m}: beta=1-2/f reduces the quadrilateral to a rhombus",
            bound="m!=(f+2)/4",
        )
    if 6 * m <= f:
        return FlipCase(f, m, "A")
    if 4 * m < f:
        return FlipCase(f, m, "B")
    if 4 * m == f:
        return FlipCase(f, m, "C", "beta_eq_1_triangle")
    if 3 * m < f:
        deg = "delta_eq_1_triangle" if 4 * m == f + 4 else "none"
        return FlipCase(f, m, "D", deg)
    return FlipCase(f, m, "E")


def flip_admissible(f: int, beta: float) -> Optional[FlipCase]:
    """FlipCase when beta is an integer multiple of gamma = 4/f, else None."""
    check_f(f)
    check_family_params(f, beta)
    mf = f / 2.0 - beta * f / 4.0
    m = round(mf)
    if abs(mf - m) > INTEGER_TOL:
        return None
    try:
        return flip_case(f, m)
    except DomainError:
        return None


def b_of_beta(f: int, beta: float) -> float:
    return _emt_quad(f, beta).edges.b


def b_min(f: int, grid: int = 2001) -> Tuple[float, float]:
    """(minimal b, beta at the minimum) over the admissible beta interval."""
    lo, hi = beta_interval(f)
    eps = 1e-9
    betas = np.linspace(lo + eps, hi - eps, grid)
    bs = np.array([b_of_beta(f, x) for x in betas])
    i = int(np.argmin(bs))
    left = betas[max(i - 1, 0)]
    right = betas[min(i + 1, grid - 1)]
    res = minimize_scalar(
        lambda x: b_of_beta(f, x), bounds=(left, right), method="bounded",
        options={"xatol": 1e-12},
    )
    if res.fun <= bs[i]:
        return float(res.fun), float(res.x)
    return float(bs[i]), float(betas[i])


@dataclass(frozen=True)
class PredicateReport:
    values: Dict[str, bool]
    violations: Tuple[str, ...]
    warnings: Tuple[str, ...]

    @property
    def consistent(self) -> bool:
        return not self.violations


def quad_predicates(q: Quadrilateral, tol: float = 1e-9) -> PredicateReport:
    """Cross-check the angle inequalities that any simple a^3b quadrilateral obeys."""
    al, be, ga, de = q.theta
    v: Dict[str, bool] = {
        "beta<gamma": be < ga - tol,
        "beta>gamma": be > ga + tol,
        "alpha>delta": al > de + tol,
        "alpha<delta": al < de - tol,
    }
    bad = []
    if v["beta<gamma"] != v["alpha>delta"] or v["beta>gamma"] != v["alpha<delta"]:
        bad.append("beta<gamma <=> alpha>delta")
    if (abs(be - de) <= tol) != (abs(al - 1) <= tol):
        bad.append("beta=delta <=> alpha=1")
    convex = all(x < 1 - tol for x in q.theta)
    v["convex"] = convex
    if convex:
        v["beta>delta"] = be > de + tol
        v["alpha<gamma"] = al < ga - tol
        v["beta<delta"] = be < de - tol
        v["alpha>gamma"] = al > ga + tol
        if v["beta>delta"] != v["alpha<gamma"] or v["beta<delta"] != v["alpha>gamma"]:
            bad.append("beta>delta <=> alpha<gamma")
        for name, ok in (
            ("alpha+delta<1+beta", al + de < 1 + be),
            ("alpha+delta<1+gamma", al + de < 1 + ga),
            ("alpha+beta<1+delta", al + be < 1 + de),
            ("gamma+delta<1+alpha", ga + de < 1 + al),
        ):
            v[name] = ok
            if not ok:
                bad.append(name)
    if de <= 1 + tol:
        v["2alpha+beta>1"] = 2 * al + be > 1
        v["beta+2gamma>1"] = be + 2 * ga > 1
        for name in ("2alpha+beta>1", "beta+2gamma>1"):
            if not v[name]:
                bad.append(name)
    warn = []
    if sum(x >= 1 - tol for x in q.theta) >= 2:
        warn.append("two angles >= 1: no tiling by congruent copies exists")
    return PredicateReport(v, tuple(bad), tuple(warn))
