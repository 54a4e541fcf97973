"""Vertex types, the coplanarity (irrational angle) test, and vertex counts."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import InvalidParameterError, PreconditionError

VertexVector = Tuple[int, int, int, int]
VERTEX_TOL = 1e-9


@dataclass(frozen=True)
class AngleAssignment:
    theta: Tuple[float, float, float, float]
    f: int

    def __post_init__(self):
        if len(self.theta) != 4:
            raise InvalidParameterError("theta needs four angles")
        if abs(math.fsum(self.theta) - (2 + 4 / self.f)) > 1e-9:
            raise InvalidParameterError(
                f"angle sum {math.fsum(self.theta)!r} differs from 2+4/f={2 + 4 / self.f!r}"
            )


def default_max_degree(theta: Sequence[float]) -> int:
    return math.ceil(2.0 / min(theta))


def enumerate_vertex_types(assign: AngleAssignment, tol: float = VERTEX_TOL,
                           max_degree: Optional[int] = None) -> List[VertexVector]:
    """All vertex vectors of degree 3..max_degree whose angles sum to 2.

    Vectors with an odd number of alpha plus delta, or containing all four
    angles, are dropped.
    """
    th = assign.theta
    if max_degree is None:
        max_degree = default_max_degree(th)
    if max_degree < 3:
        raise InvalidParameterError("max_degree must be >= 3")
    out = []
    for n1 in range(max_degree + 1):
        for n2 in range(max_degree + 1 - n1):
            for n3 in range(max_degree + 1 - n1 - n2):
                for n4 in range(max_degree + 1 - n1 - n2 - n3):
                    n = (n1, n2, n3, n4)
                    if sum(n) < 3 or (n1 + n4) % 2 or all(n):
                        continue
                    s = math.fsum(k * x for k, x in zip(n, th))
                    if abs(s - 2.0) <= tol:
                        out.append(n)
    return out


def balance_filter(types: Sequence[VertexVector]) -> List[VertexVector]:
    """Apply the balance condition when alpha^2... or delta^2... is absent.

    If no type has two alphas, or none has two deltas, every vertex either
    avoids alpha and delta or carries exactly one of each.
    """
    has_a2 = any(n[0] >= 2 for n in types)
    has_d2 = any(n[3] >= 2 for n in types)
    if has_a2 and has_d2:
        return list(types)
    return [n for n in types if (n[0], n[3]) in ((0, 0), (1, 1))]


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _rank3(rows: Sequence[Sequence[int]]) -> bool:
    """True when three integer 4-vectors are linearly independent."""
    return any(det_int([[r[c] for c in cols] for r in rows]) for cols in itertools.combinations(range(4), 3))


def coplanarity_check(l: Sequence[int], m: Sequence[int], n: Sequence[int], f: Optional[int] = None) -> bool:
    """True iff det(u, l, m, n) = 0 with u = (1, 1, 1, 1).

    When l and m are vertices and some angle is irrational, every other
    vertex n must satisfy this.
    """
    u = (1, 1, 1, 1)
    if not _rank3([u, l, m]):
        raise PreconditionError(f"u=(1,1,1,1), l={tuple(l)}, m={tuple(m)} are linearly dependent")
    return det_int([u, l, m, n]) == 0


def solve_multiplicities(types: Sequence[VertexVector], f: int) -> List[Tuple[int, ...]]:
    """All x >= 0 with sum_v x_v * n_v = (f, f, f, f), by depth-first search."""
    types = [tuple(t) for t in types]
    if not types:
        raise InvalidParameterError("types must be nonempty")
    k = len(types)
    out: List[Tuple[int, ...]] = []

    def rec(i: int, rem: List[int], acc: List[int]):
        if i == k:
            if not any(rem):
                out.append(tuple(acc))
            return
        t = types[i]
        bound = min(rem[j] // t[j] for j in range(4) if t[j]) if any(t) else 0
        for x in range(bound, -1, -1):
            nrem = [rem[j] - x * t[j] for j in range(4)]
            # every remaining angle must still be coverable by later types
            if all(nrem[j] == 0 or any(types[q][j] for q in range(i + 1, k)) for j in range(4)):
                rec(i + 1, nrem, acc + [x])

    rec(0, [f] * 4, [])
    return sorted(out)
