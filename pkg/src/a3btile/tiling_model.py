"""Combinatorial tilings by a^3b quadrilaterals and their validator.

A tile lists its four corners as vertex ids in the fixed label order
(alpha, beta, gamma, delta).  Side ``s`` of a tile joins corner ``s`` to
corner ``s+1 (mod 4)``; sides 0, 1, 2 are a-edges and side 3 is the b-edge.
A "+" tile runs alpha, beta, gamma, delta counterclockwise seen from outside
the sphere; a "-" tile is its mirror image and runs them clockwise.
"""

from __future__ import annotations

import dataclasses
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidParameterError
from .trig_kernel import Quadrilateral

SIDE_LABELS = ("a", "a", "a", "b")
CHIRALITIES = ("+", "-")
CHECK_NAMES = (
    "edge_matching",
    "tile_pattern",
    "vertex_angle_sum",
    "angle_balance",
    "parity",
    "euler",
    "degree_identities",
    "no_four_kinds",
)

VertexVector = Tuple[int, int, int, int]


@dataclass(frozen=True)
class Tile:
    id: int
    chirality: str
    corners: Tuple[int, int, int, int]

    def side(self, s: int) -> Tuple[int, int]:
        return self.corners[s], self.corners[(s + 1) % 4]

    def ccw_sides(self) -> List[Tuple[int, int]]:
        """Sides as ordered vertex pairs in counterclockwise direction."""
        if self.chirality == "+":
            return [self.side(s) for s in range(4)]
        return [self.side(s)[::-1] for s in range(4)]


@dataclass(frozen=True)
class Edge:
    """Two half-sides ``(tile, side)`` glued together, carrying a label."""

    t1: int
    s1: int
    t2: int
    s2: int
    label: str


@dataclass(frozen=True)
class Vertex:
    """A vertex with its corner incidences in counterclockwise cyclic order.

    ``declared`` is an optional vertex vector recorded alongside the tiling
    (for instance read from a JSON file); the validator compares it with the
    vector implied by the incidences.
    """

    id: int
    incidences: Tuple[Tuple[int, int], ...]
    declared: Optional[VertexVector] = None

    def vector(self) -> VertexVector:
        n = [0, 0, 0, 0]
        for _, c in self.incidences:
            n[c] += 1
        return tuple(n)  # type: ignore[return-value]


@dataclass(frozen=True)
class Tiling:
    tiles: Tuple[Tile, ...]
    edges: Tuple[Edge, ...]
    vertices: Tuple[Vertex, ...]

    @property
    def f(self) -> int:
        return len(self.tiles)

    def tile(self, tid: int) -> Tile:
        return self._tile_map()[tid]

    def _tile_map(self) -> Dict[int, Tile]:
        return {t.id: t for t in self.tiles}

    def neighbours(self) -> Dict[Tuple[int, int], Tuple[int, int]]:
        """Map each half-side to the half-side glued to it."""
        out = {}
        for e in self.edges:
            out[(e.t1, e.s1)] = (e.t2, e.s2)
            out[(e.t2, e.s2)] = (e.t1, e.s1)
        return out


def _vertex_cycles(tiles: Sequence[Tile], nb: Dict[Tuple[int, int], Tuple[int, int]]):
    """Counterclockwise incidence cycles around each vertex."""
    by_id = {t.id: t for t in tiles}
    around: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for t in tiles:
        for c, v in enumerate(t.corners):
            around[v].append((t.id, c))
    cycles = {}
    for v, incs in around.items():
        start = min(incs)
        order = [start]
        cur = start
        while True:
            tid, c = cur
            t = by_id[tid]
            # counterclockwise around v, leave t through its side towards the
            # counterclockwise-previous corner of t
            s = (c - 1) % 4 if t.chirality == "+" else c
            nxt = nb.get((tid, s))
            if nxt is None:
                break
            ntile = by_id[nxt[0]]
            a, b = ntile.side(nxt[1])
            cn = nxt[1] if a == v else (nxt[1] + 1) % 4
            if ntile.corners[cn] != v:
                break
            cur = (nxt[0], cn)
            if cur == start or cur in order or len(order) > len(incs):
                break
            order.append(cur)
        if sorted(order) != sorted(incs):
            order = sorted(incs)
        cycles[v] = tuple(order)
    return cycles


def from_corners(tiles: Iterable[Tuple[int, str, Sequence[int]]], strict: bool = True) -> Tiling:
    """Build a Tiling from ``(id, chirality, corners)`` triples.

    Sides with the same unordered vertex pair are glued; each such pair must
    occur exactly twice.  With ``strict=False`` unpaired sides are left open
    (and extra ones dropped) so that the validator can report the defect.
    """
    tl = tuple(sorted((Tile(int(i), str(ch), tuple(int(x) for x in c)) for i, ch, c in tiles), key=lambda t: t.id))
    for t in tl:
        if strict and (len(t.corners) != 4 or t.chirality not in CHIRALITIES):
            raise InvalidParameterError(f"malformed tile {t}")
    pairs: Dict[frozenset, List[Tuple[int, int]]] = defaultdict(list)
    for t in tl:
        for s in range(4):
            pairs[frozenset(t.side(s))].append((t.id, s))
    edges = []
    for key in sorted(pairs, key=lambda k: sorted(k)):
        hs = sorted(pairs[key])
        if len(hs) != 2:
            if strict:
                raise InvalidParameterError(f"side {sorted(key)} is shared by {len(hs)} tiles")
            if len(hs) < 2:
                continue
        (t1, s1), (t2, s2) = hs[:2]
        edges.append(Edge(t1, s1, t2, s2, SIDE_LABELS[s1]))
    nb = {}
    for e in edges:
        nb[(e.t1, e.s1)] = (e.t2, e.s2)
        nb[(e.t2, e.s2)] = (e.t1, e.s1)
    cycles = _vertex_cycles(tl, nb)
    verts = tuple(Vertex(v, cycles[v]) for v in sorted(cycles))
    return Tiling(tl, tuple(edges), verts)


def with_declared_vectors(t: Tiling) -> Tiling:
    """Copy of ``t`` in which each vertex records its own vector."""
    return dataclasses.replace(
        t, vertices=tuple(dataclasses.replace(v, declared=v.vector()) for v in t.vertices)
    )


def vertex_census(t: Tiling) -> Dict[VertexVector, int]:
    """Vertex vectors with multiplicities, sorted by vector."""
    c = Counter(v.vector() for v in t.vertices)
    return dict(sorted(c.items()))


def census_string(census: Dict[VertexVector, int]) -> str:
    """Human-readable census such as ``6(1,1,0,1) 2(0,0,3,0)``."""
    return " ".join(f"{k}({','.join(map(str, v))})" for v, k in sorted(census.items(), key=lambda kv: (-kv[1], kv[0])))


def total_excess(q: Quadrilateral) -> float:
    """f times the excess of one tile: the sphere's area, 4 in pi units."""
    return q.f * (sum(q.theta) - 2.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> Tuple[str, ...]:
        return tuple(c.name for c in self.checks if not c.passed)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _check_edges(t: Tiling) -> CheckResult:
    tiles = t._tile_map()
    seen: Counter = Counter()
    for e in t.edges:
        for tid, s in ((e.t1, e.s1), (e.t2, e.s2)):
            if tid not in tiles or not 0 <= s < 4:
                return CheckResult("edge_matching", False, f"edge {e} refers to a missing side")
            seen[(tid, s)] += 1
        if SIDE_LABELS[e.s1] != e.label or SIDE_LABELS[e.s2] != e.label:
            return CheckResult("edge_matching", False, f"edge {e} joins sides of labels "
                               f"{SIDE_LABELS[e.s1]}/{SIDE_LABELS[e.s2]} under label {e.label}")
        t1, t2 = tiles[e.t1], tiles[e.t2]
        u = t1.ccw_sides()[e.s1]
        w = t2.ccw_sides()[e.s2]
        if u != w[::-1]:
            return CheckResult("edge_matching", False,
                               f"edge {e}: tiles {e.t1},{e.t2} traverse {u} and {w}, orientation clash")
    for tid in tiles:
        for s in range(4):
            if seen[(tid, s)] != 1:
                return CheckResult("edge_matching", False, f"side ({tid},{s}) used {seen[(tid, s)]} times")
    return CheckResult("edge_matching", True)


def _check_pattern(t: Tiling) -> CheckResult:
    ids = [x.id for x in t.tiles]
    if len(set(ids)) != len(ids):
        return CheckResult("tile_pattern", False, "duplicate tile ids")
    expect: Counter = Counter()
    for x in t.tiles:
        if x.chirality not in CHIRALITIES:
            return CheckResult("tile_pattern", False, f"tile {x.id} has chirality {x.chirality!r}")
        if len(x.corners) != 4 or len(set(x.corners)) != 4:
            return CheckResult("tile_pattern", False, f"tile {x.id} corners {x.corners} not four distinct vertices")
        for c, v in enumerate(x.corners):
            expect[(v, x.id, c)] += 1
    got: Counter = Counter()
    vids = [v.id for v in t.vertices]
    if len(set(vids)) != len(vids):
        return CheckResult("tile_pattern", False, "duplicate vertex ids")
    for v in t.vertices:
        for tid, c in v.incidences:
            got[(v.id, tid, c)] += 1
        if v.declared is not None and tuple(v.declared) != v.vector():
            return CheckResult("tile_pattern", False,
                               f"vertex {v.id} declares {tuple(v.declared)} but carries {v.vector()}")
    if got != expect:
        diff = (expect - got) + (got - expect)
        k = sorted(diff)[0]
        return CheckResult("tile_pattern", False,
                           f"corner incidence ({k[1]},{k[2]}) at vertex {k[0]} is not recorded consistently")
    return CheckResult("tile_pattern", True)


def _vertex_sum_ok(n: VertexVector, q: Quadrilateral, tol: float) -> Tuple[bool, str]:
    if all(e is not None for e in q.exact):
        s = sum((k * e for k, e in zip(n, q.exact)), Fraction(0))
        return s == 2, f"exact sum {s}"
    idx = [i for i in range(4) if n[i]]
    if idx and all(q.exact[i] is not None for i in idx):
        s = sum((n[i] * q.exact[i] for i in idx), Fraction(0))
        return s == 2, f"exact sum {s}"
    s = sum(k * x for k, x in zip(n, q.theta))
    return abs(s - 2) <= tol, f"sum {s:.15g}"


def validate(t: Tiling, q: Quadrilateral, tol: float = 1e-9) -> ValidationReport:
    """Run the eight checks on ``t`` with angles from ``q``."""
    out = [_check_edges(t), _check_pattern(t)]
    vecs = [(v.id, v.vector()) for v in t.vertices]

    bad = None
    for vid, n in vecs:
        ok, why = _vertex_sum_ok(n, q, tol)
        if not ok:
            bad = f"vertex {vid} {n}: {why}"
            break
    out.append(CheckResult("vertex_angle_sum", bad is None, bad or ""))

    f = t.f
    tot = [0, 0, 0, 0]
    for _, n in vecs:
        for i in range(4):
            tot[i] += n[i]
    ok = f == q.f and tot == [f] * 4
    out.append(CheckResult("angle_balance", ok, "" if ok else f"angle totals {tot}, f={f}, quad f={q.f}"))

    bad = next((f"vertex {vid} {n}" for vid, n in vecs if (n[0] + n[3]) % 2), None)
    out.append(CheckResult("parity", bad is None, bad or ""))

    v, e = len(t.vertices), len(t.edges)
    ok = v - e + f == 2
    out.append(CheckResult("euler", ok, f"v-e+f={v - e + f}"))

    deg = Counter(sum(n) for _, n in vecs)
    rhs1 = 6 + sum((k - 3) * c for k, c in deg.items() if k > 3)
    rhs2 = 8 + sum((k - 4) * c for k, c in deg.items() if k > 4)
    low = any(k < 3 for k in deg)
    ok = not low and f == rhs1 and deg.get(3, 0) == rhs2
    out.append(CheckResult("degree_identities", ok,
                           f"f={f} vs {rhs1}, v3={deg.get(3, 0)} vs {rhs2}" + (", degree < 3" if low else "")))

    bad = next((f"vertex {vid} {n}" for vid, n in vecs if all(n)), None)
    out.append(CheckResult("no_four_kinds", bad is None, bad or ""))
    return ValidationReport(tuple(out))


def corrupt(t: Tiling, kind: str, index: int = 0, value=None) -> Tiling:
    """Return a copy of ``t`` with one field changed.

    kinds: ``chirality`` (flip tile ``index``), ``corner`` (set corner
    ``value[0]`` of tile ``index`` to vertex ``value[1]``), ``edge_label``
    (swap a/b on edge ``index``), ``edge_side`` (retarget the second half of
    edge ``index`` to side ``value``), ``incidence`` (change the corner index
    of the first incidence of vertex ``index`` to ``value``), ``declared``
    (set the declared vector of vertex ``index`` to ``value``), ``drop_tile``.
    """
    tiles, edges, verts = list(t.tiles), list(t.edges), list(t.vertices)
    if kind == "chirality":
        x = tiles[index]
        tiles[index] = dataclasses.replace(x, chirality="-" if x.chirality == "+" else "+")
    elif kind == "corner":
        x = tiles[index]
        c = list(x.corners)
        c[value[0]] = value[1]
        tiles[index] = dataclasses.replace(x, corners=tuple(c))
    elif kind == "edge_label":
        x = edges[index]
        edges[index] = dataclasses.replace(x, label="b" if x.label == "a" else "a")
    elif kind == "edge_side":
        edges[index] = dataclasses.replace(edges[index], s2=value)
    elif kind == "incidence":
        x = verts[index]
        inc = list(x.incidences)
        inc[0] = (inc[0][0], value)
        verts[index] = dataclasses.replace(x, incidences=tuple(inc))
    elif kind == "declared":
        verts[index] = dataclasses.replace(verts[index], declared=tuple(value))
    elif kind == "drop_tile":
        tiles.pop(index)
    else:
        raise InvalidParameterError(f"unknown corruption kind {kind!r}")
    return Tiling(tuple(tiles), tuple(edges), tuple(verts))
