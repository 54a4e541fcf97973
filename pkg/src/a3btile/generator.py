"""Earth map tilings, their flip modifications, and the sporadic tilings.

Vertex numbering of the earth map with k = f/2 time zones:
north pole 0, south pole 1, V_i = 2 + i and D_i = 2 + k + i (indices mod k).
Zone i holds the northern tile N_i (id i) and the southern tile S_i
(id k + i)::

    N_i : alpha=D_i, beta=V_{i-1}, gamma=N, delta=V_i
    S_i : alpha=V_i, beta=D_{i+1}, gamma=S, delta=D_i
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .errors import DomainError, InvalidParameterError
from .quad_family import flip_case, FlipCase
from .trig_kernel import Quadrilateral, check_f, make_quad
from .tiling_model import Tiling, from_corners
from . import sporadic_data

SPORADIC_IDS = ("emt12_a2b_c3", "emt16_a2b_bcd2", "emt16_bd2_a2c2", "f16_bc2_a2d2", "octa24_b3")

# census of each sporadic tiling, as (alpha, beta, gamma, delta) counts
SPORADIC_CENSUS = {
    "emt12_a2b_c3": {(2, 1, 0, 0): 6, (0, 0, 3, 0): 2, (0, 1, 1, 2): 6},
    "emt16_a2b_bcd2": {(2, 1, 0, 0): 8, (0, 1, 1, 2): 8, (0, 0, 4, 0): 2},
    "emt16_bd2_a2c2": {(0, 1, 0, 2): 8, (2, 0, 2, 0): 8, (0, 4, 0, 0): 2},
    "f16_bc2_a2d2": {(0, 1, 2, 0): 8, (2, 0, 0, 2): 6, (1, 2, 0, 1): 4},
    "octa24_b3": {(0, 3, 0, 0): 8, (2, 0, 2, 0): 12, (0, 0, 0, 4): 6},
}


def _zone(k: int, i: int) -> int:
    return i % k


def emt_corners(f: int) -> List[Tuple[int, str, Tuple[int, int, int, int]]]:
    check_f(f)
    k = f // 2
    V = lambda i: 2 + i % k
    D = lambda i: 2 + k + i % k
    out = []
    for i in range(k):
        out.append((i, "+", (D(i), V(i - 1), 0, V(i))))
    for i in range(k):
        out.append((k + i, "+", (V(i), D(i + 1), 1, D(i))))
    return out


def build_emt(f: int) -> Tiling:
    """2-layer earth map tiling with f tiles in f/2 time zones."""
    return from_corners(emt_corners(f))


@dataclass(frozen=True)
class FlipSpec:
    f: int
    m: int
    gaps: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.gaps)


def _block_map(f: int, m: int, start: int, l: int) -> Dict[int, int]:
    """Vertex permutation realizing the reflection of zones start..start+l-1.

    The block is a hexagon N, V_{s-1}, D_s, S, D_{s+l}, V_{s+l-1} with all
    sides of length a.  For beta >= 1 the mirror axis passes through
    V_{s-1} and D_{s+l}; for beta < 1 it passes through the midpoints of two
    opposite sides.
    """
    k = f // 2
    V = lambda i: 2 + i % k
    D = lambda i: 2 + k + i % k
    N, S = 0, 1
    h = [N, V(start - 1), D(start), S, D(start + l), V(start + l - 1)]
    if 4 * m <= f:
        pairs = [(h[0], h[2]), (h[3], h[5])]
    else:
        pairs = [(h[0], h[1]), (h[3], h[4]), (h[2], h[5])]
    sigma: Dict[int, int] = {}
    for x, y in pairs:
        sigma[x], sigma[y] = y, x
    return sigma


def _check_spec(f: int, m: int, gaps: Sequence[int]) -> FlipCase:
    fc = flip_case(f, m)
    n = len(gaps)
    if not 1 <= n <= fc.max_flips:
        raise InvalidParameterError(f"case {fc.case_id} allows 1..{fc.max_flips} flips, got {n}")
    if any(g < 0 for g in gaps):
        raise InvalidParameterError("gaps must be nonnegative")
    G = f // 2 - n * fc.l
    if G < 0:
        raise InvalidParameterError(f"infeasible: G = f/2 - n*l = {G} < 0")
    if sum(gaps) != G:
        raise InvalidParameterError(f"gaps sum to {sum(gaps)}, expected G = {G}")
    return fc


def apply_flips(f: int, m: int, gaps: Sequence[int]) -> Tiling:
    """Earth map with n = len(gaps) flipped blocks of l zones each.

    Consecutive blocks are separated by ``gaps[j]`` unflipped zones, going
    around the zone cycle.
    """
    fc = _check_spec(f, m, gaps)
    k, l = f // 2, fc.l
    tiles = {tid: (tid, ch, c) for tid, ch, c in emt_corners(f)}
    start = 0
    for g in gaps:
        sigma = _block_map(f, m, start, l)
        for z in range(start, start + l):
            for tid in (z % k, k + z % k):
                _, ch, c = tiles[tid]
                tiles[tid] = (tid, "-" if ch == "+" else "+", tuple(sigma.get(v, v) for v in c))
        start += l + g
    return from_corners(tiles[t] for t in sorted(tiles))


def multisets(total: int, n: int, lo: int = 0) -> List[Tuple[int, ...]]:
    """Nondecreasing n-tuples of integers >= lo summing to ``total``."""
    if n == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(lo, total // n + 1):
        for rest in multisets(total - first, n - 1, first):
            out.append((first,) + rest)
    return out


def enumerate_flip_tilings(f: int, m: int) -> List[FlipSpec]:
    """All flip tilings for (f, m), one per multiset of gaps."""
    fc = flip_case(f, m)
    out = []
    for n in range(1, fc.max_flips + 1):
        G = f // 2 - n * fc.l
        if G < 0:
            continue
        out.extend(FlipSpec(f, m, g) for g in multisets(G, n))
    return out


def nearest_int(x: Fraction) -> int:
    """Closest integer, rounding half up; the callers never hit a tie."""
    x = Fraction(x)
    if x.denominator == 2:
        raise ArithmeticError(f"nearest integer of {x} is a tie")
    return math.floor(x + Fraction(1, 2))


def count_by_gaps(G: int, n: int) -> int:
    """Number of multisets of n nonnegative integers summing to G."""
    if G < 0:
        return 0
    if n == 1:
        return 1
    if n == 2:
        return G // 2 + 1
    if n == 3:
        return nearest_int(Fraction((G + 3) ** 2, 12))
    raise InvalidParameterError("n must be 1, 2 or 3")


def count_flip_tilings(f: int, m: int, n: int) -> int:
    """Number of distinct tilings with n simultaneous flips (closed form)."""
    fc = flip_case(f, m)
    if not 1 <= n <= fc.max_flips:
        raise InvalidParameterError(f"case {fc.case_id} allows at most {fc.max_flips} flips, got n={n}")
    if n == 1:
        return 1
    cid = fc.case_id
    if n == 2:
        if cid in ("A", "B"):
            return (f - 4 * m + 4) // 4
        if cid in ("D", "E"):
            return (4 * m - f + 4) // 4
        return count_by_gaps(f // 2 - 2 * fc.l, 2)
    if cid == "A":
        return (f - 6 * m + 4) // 4 + nearest_int(Fraction((f - 6 * m) ** 2, 48))
    return (3 * m - f + 2) // 2 + nearest_int(Fraction((3 * m - f) ** 2, 12))


def flip_census(f: int, m: int, n: int) -> Dict[Tuple[int, int, int, int], int]:
    """Vertex census predicted for n flips (keys are alpha..delta counts)."""
    fc = flip_case(f, m)
    h = f // 2
    c: Dict[Tuple[int, int, int, int], int] = {(1, 1, 0, 1): f - 2 * n}
    if fc.flip_type == "L2":
        # n blocks of m zones: poles of the blocks merge into alpha^n delta^n
        c[(n, 0, h - n * m, n)] = c.get((n, 0, h - n * m, n), 0) + 2
        c[(0, 1, m, 0)] = 2 * n
    else:
        c[(1, 0, h - m, 1)] = 2 * n
        c[(0, n, n * m - (n - 1) * h, 0)] = 2
    return dict(sorted(c.items()))


def q1(f: int) -> int:
    check_f(f)
    if f < 8:
        raise DomainError("no flips exist for f < 8", bound="f>=8")
    return 2 * ((f - 4) // 8) + 1


def q1_by_count(f: int) -> int:
    """Integers m in (f/8, 3f/8) other than the rhombus value (f+2)/4."""
    ms = [m for m in range(1, f) if f < 8 * m < 3 * f and 4 * m != f + 2]
    return len(ms)


def q2(f: int) -> int:
    """Rational quadrilaterals among those admitting flips (lookup by f mod 24)."""
    check_f(f)
    if f < 8:
        raise DomainError("no flips exist for f < 8", bound="f>=8")
    if f == 8:
        return 0
    if f == 18:
        return 1
    r = f % 24
    table = {8: 2, 10: 1, 12: 1, 14: 1, 16: 2, 18: 0, 20: 2, 22: 1, 0: 1, 2: 1, 4: 2, 6: 0}
    # 24k-16 needs k>=2 and 24k-6 needs k>=2; f=8 and f=18 are handled above
    return table[r]


def q_table(f: int) -> Tuple[int, int, int]:
    a, b = q1(f), q2(f)
    return a, b, a - b


def sporadic_quad(name: str) -> Quadrilateral:
    """The sporadic quadrilateral with its closed-form angles and edges."""
    P = math.pi
    s2, s3, s5 = math.sqrt(2), math.sqrt(3), math.sqrt(5)
    if name == "emt12_a2b_c3":
        al = 1 - math.asin(math.sqrt(6) / 4) / P
        a = math.acos((2 * s5 - 3) / 3) / P
        b = math.acos(3 * s5 - 6) / P
        return make_quad((al, 2 - 2 * al, 2 / 3, al - 1 / 3), a, b, 12, (None, None, Fraction(2, 3), None))
    if name == "emt16_a2b_bcd2":
        al = 1 - math.asin(math.sqrt(3 * math.sqrt(10) - 3 * s5 - 3 * s2 + 15) / 6) / P
        a = math.acos((math.sqrt(10) + s5 - s2 - 3) / 2) / P
        b = math.acos(((27 * s5 - 43) * s2 + 23 * s5 - 27) / ((196 * s5 - 420) * s2 - 267 * s5 + 623)) / P
        return make_quad((al, 2 - 2 * al, 0.5, al - 0.25), a, b, 16, (None, None, Fraction(1, 2), None))
    if name == "emt16_bd2_a2c2":
        al = 1 - math.asin(math.sqrt(2 * s2 + 1) / 2) / P
        a = math.acos(1 / math.sqrt(2 * s2 + 1)) / P
        b = math.acos(7 / (2 * s2 + 1) ** 1.5) / P
        return make_quad((al, 0.5, 1 - al, 0.75), a, b, 16, (None, Fraction(1, 2), None, Fraction(3, 4)))
    if name == "f16_bc2_a2d2":
        al = 1 - math.asin(math.sqrt(10 + 4 * s2) / math.sqrt(17)) / P
        b = math.acos((2 * s2 - 1) / 4) / P
        return make_quad((al, 0.5, 0.75, 1 - al), 0.25, b, 16, (None, Fraction(1, 2), Fraction(3, 4), None))
    if name == "octa24_b3":
        al = math.asin(math.sqrt(4 + s3) / math.sqrt(6)) / P
        a = math.asin(s2 / math.sqrt(4 + s3)) / P
        return make_quad((al, 2 / 3, 1 - al, 0.5), a, 0.5 - a, 24, (None, Fraction(2, 3), None, Fraction(1, 2)))
    raise InvalidParameterError(f"unknown sporadic id {name!r}; choose from {', '.join(SPORADIC_IDS)}")


@lru_cache(maxsize=None)
def _sporadic_tiling(name: str) -> Tiling:
    return from_corners(sporadic_data.TILINGS[name])


def sporadic(name: str) -> Tuple[Quadrilateral, List[Tiling]]:
    """Quadrilateral and tiling(s) of a sporadic case."""
    q = sporadic_quad(name)
    return q, [_sporadic_tiling(name)]
