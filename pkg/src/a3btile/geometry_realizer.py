"""Unit-sphere coordinates for tilings, and mesh export.

Positions are numpy arrays of shape (3,).  A placement stores the four
corners of one tile in label order (alpha, beta, gamma, delta).
"""

from __future__ import annotations

import io
import json
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import GeometricInconsistencyError, InconsistentQuadrilateralError
from .quad_family import a_from_t, check_family_params, emt_quad
from .tiling_model import Tiling, Vertex, from_corners, vertex_census
from .trig_kernel import ANGLE_NAMES, PI, AngleQuad, Quadrilateral, check_f, make_quad

CLOSURE_TOL = 1e-10
CLOSURE_FAIL = 1e-8
DISCREPANCY_TOL = 1e-8
DEDUP_RADIUS = 1e-9


def unit(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v)


def arc(p, q) -> float:
    """Great-circle distance in pi units (atan2 form, accurate near 0 and 1)."""
    return math.atan2(np.linalg.norm(np.cross(p, q)), float(np.dot(p, q))) / PI


def interior_angle(p, nxt, prv) -> float:
    """Angle at ``p`` swept counterclockwise from direction ``nxt`` to ``prv``."""
    t1 = nxt - np.dot(nxt, p) * p
    t2 = prv - np.dot(prv, p) * p
    x = float(np.dot(t1, t2))
    y = float(np.dot(np.cross(p, t1), t2))
    return (math.atan2(y, x) / PI) % 2.0


@dataclass(frozen=True)
class Placement:
    """Corner positions of one tile.

    ``long_sides[s]`` marks a side longer than a half turn (b > 1 occurs
    for f = 6); it runs along the longer arc of its great circle.
    """

    tile: int
    positions: Tuple[np.ndarray, ...]
    chirality: str
    long_sides: Tuple[bool, bool, bool, bool] = (False, False, False, False)

    def ccw(self) -> List[np.ndarray]:
        p = list(self.positions)
        return p if self.chirality == "+" else p[::-1]

    def angles(self) -> Tuple[float, float, float, float]:
        """Interior angles at alpha, beta, gamma, delta."""
        p = self.positions
        out = []
        for i in range(4):
            # heading towards a neighbour along a long side is reversed
            nxt = -p[(i + 1) % 4] if self.long_sides[i] else p[(i + 1) % 4]
            prv = -p[(i - 1) % 4] if self.long_sides[(i - 1) % 4] else p[(i - 1) % 4]
            if self.chirality == "-":
                nxt, prv = prv, nxt
            out.append(interior_angle(p[i], nxt, prv))
        return tuple(out)  # type: ignore[return-value]

    def sides(self) -> Tuple[float, float, float, float]:
        p = self.positions
        out = []
        for i in range(4):
            d = arc(p[i], p[(i + 1) % 4])
            out.append(2.0 - d if self.long_sides[i] else d)
        return tuple(out)  # type: ignore[return-value]

    def excess(self) -> float:
        return sum(self.angles()) - 2.0


@dataclass
class Mesh:
    positions: Dict[int, np.ndarray]
    placements: Dict[int, Placement]
    discrepancy: float = 0.0
    corners: Dict[int, Tuple[int, int, int, int]] = field(default_factory=dict)


def _walk(q: Quadrilateral) -> Tuple[List[np.ndarray], float]:
    al, be, ga, de = q.theta
    a, b = q.edges.a, q.edges.b
    sides = (a, a, a, b)
    corner_angles = (be, ga, de, al)
    p = np.array([0.0, 0.0, 1.0])
    t = np.array([1.0, 0.0, 0.0])
    pts = [p]
    for i in range(4):
        s = sides[i] * PI
        p, t = math.cos(s) * p + math.sin(s) * t, -math.sin(s) * p + math.cos(s) * t
        pts.append(p)
        turn = PI - corner_angles[i] * PI
        n = np.cross(p, t)
        t = math.cos(turn) * t + math.sin(turn) * n
    err = float(np.linalg.norm(pts[4] - pts[0]))
    return pts[:4], err


def canonical_tile(q: Quadrilateral, chirality: str = "+", tile: int = -1) -> Placement:
    """Place alpha at the north pole heading along the prime meridian.

    The boundary walk turns left, so a "+" tile is counterclockwise seen
    from outside.  The "-" tile is its mirror image in the plane y = 0.
    """
    pts, err = _walk(q)
    if err > CLOSURE_FAIL:
        raise InconsistentQuadrilateralError(f"boundary walk misses its start by {err:.3e}")
    if chirality == "-":
        pts = [p * np.array([1.0, -1.0, 1.0]) for p in pts]
    return Placement(tile, tuple(pts), chirality, long_flags(q))


def long_flags(q: Quadrilateral) -> Tuple[bool, bool, bool, bool]:
    a, b = q.edges.a, q.edges.b
    return (a > 1, a > 1, a > 1, b > 1)


def closure_error(q: Quadrilateral) -> float:
    return _walk(q)[1]


def _frame(p, q) -> np.ndarray:
    e1 = unit(p)
    e2 = unit(q - np.dot(q, e1) * e1)
    return np.column_stack([e1, e2, np.cross(e1, e2)])


def align(template: Placement, i: int, j: int, pi_, pj) -> Placement:
    """Rigidly move ``template`` so corner i lands on pi_ and corner j on pj."""
    src = _frame(template.positions[i], template.positions[j])
    dst = _frame(pi_, pj)
    R = dst @ src.T
    return Placement(template.tile, tuple(R @ p for p in template.positions), template.chirality,
                     template.long_sides)


def _templates(q: Quadrilateral) -> Dict[str, Placement]:
    return {c: canonical_tile(q, c) for c in ("+", "-")}


def realize_by_propagation(t: Tiling, q: Quadrilateral, seed: Optional[Placement] = None,
                           tol: float = DISCREPANCY_TOL) -> Mesh:
    """Place tiles breadth-first across shared edges and measure closure."""
    if not t.tiles:
        return Mesh({}, {}, 0.0)
    templates = _templates(q)
    tiles = t._tile_map()
    nb = t.neighbours()
    first = t.tiles[0]
    if seed is None:
        seed = templates[first.chirality]
    seed = Placement(first.id, seed.positions, first.chirality, long_flags(q))
    placed: Dict[int, Placement] = {first.id: seed}
    copies: Dict[int, List[np.ndarray]] = {}
    for c, v in enumerate(first.corners):
        copies.setdefault(v, []).append(seed.positions[c])
    queue = deque([first.id])
    while queue:
        tid = queue.popleft()
        cur = placed[tid]
        ct = tiles[tid]
        for s in range(4):
            other = nb.get((tid, s))
            if other is None or other[0] in placed or other[0] not in tiles:
                continue
            ot = tiles[other[0]]
            os_ = other[1]
            pos = dict(zip(ct.corners, cur.positions))
            u, w = ot.corners[os_], ot.corners[(os_ + 1) % 4]
            if u not in pos or w not in pos:
                raise GeometricInconsistencyError(f"edge {tid}:{s} and {ot.id}:{os_} do not share endpoints")
            tmpl = Placement(ot.id, templates[ot.chirality].positions, ot.chirality, long_flags(q))
            pl = align(tmpl, os_, (os_ + 1) % 4, pos[u], pos[w])
            placed[ot.id] = pl
            for c, v in enumerate(ot.corners):
                copies.setdefault(v, []).append(pl.positions[c])
            queue.append(ot.id)
    if len(placed) != len(tiles):
        raise GeometricInconsistencyError("tile adjacency graph is disconnected")
    disc = 0.0
    positions = {}
    for v, ps in copies.items():
        ref = ps[0]
        for p in ps[1:]:
            disc = max(disc, float(np.linalg.norm(p - ref)))
        positions[v] = unit(np.mean(ps, axis=0))
    mesh = Mesh(dict(sorted(positions.items())), dict(sorted(placed.items())), disc,
                {x.id: x.corners for x in t.tiles})
    if disc >= tol:
        raise GeometricInconsistencyError(f"propagation discrepancy {disc:.3e} exceeds {tol:g}")
    return mesh


def _sph(colat: float, lon: float) -> np.ndarray:
    c, l = colat * PI, lon * PI
    return np.array([math.sin(c) * math.cos(l), math.sin(c) * math.sin(l), math.cos(c)])


def _rot_pi(axis: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Rotation by pi about ``axis``: the point reflection through it."""
    axis = unit(axis)
    return 2.0 * np.dot(axis, v) * axis - v


def _rot_z(v: np.ndarray, lon: float) -> np.ndarray:
    c, s = math.cos(lon * PI), math.sin(lon * PI)
    return np.array([c * v[0] - s * v[1], s * v[0] + c * v[1], v[2]])


def emt_coordinates(f: int, beta: float, allow_rhombus: bool = False) -> Mesh:
    """Direct construction of the earth map tiling on the sphere.

    A is the north pole, E and F lie on the equator 2/f apart, D sits at
    colatitude 1 - a and longitude t from E, and B, C are the point
    reflections of D through E and F.  The zones are rotations of ABDC by
    multiples of 4/f; each southern tile is its northern partner rotated
    by pi about the equatorial point between them.  Longitudes are negated
    at the end so that tiles run counterclockwise, matching build_emt.
    """
    check_f(f)
    if not allow_rhombus:
        check_family_params(f, beta)
    t = (1.0 - beta) / 2.0
    a = a_from_t(t)
    k = f // 2
    A = np.array([0.0, 0.0, 1.0])
    E, F = _sph(0.5, 0.0), _sph(0.5, 2.0 / f)
    D = _sph(1.0 - a, t)
    B, C = _rot_pi(E, D), _rot_pi(F, D)
    mirror = np.array([1.0, -1.0, 1.0])
    pos: Dict[int, np.ndarray] = {0: A * mirror, 1: -A}
    for i in range(k):
        rot = 4.0 * i / f
        pos[2 + k + i] = _rot_z(D, rot) * mirror
        pos[2 + (i - 1) % k] = _rot_z(B, rot) * mirror
    # south pole and a consistency check of V_i from C
    for i in range(k):
        Ci = _rot_z(C, 4.0 * i / f) * mirror
        if np.linalg.norm(Ci - pos[2 + i]) > 1e-9:
            raise GeometricInconsistencyError("zone rotation does not close up")
    from .generator import emt_corners

    placements = {}
    corners = {}
    flags = long_flags(emt_quad(f, beta)) if not allow_rhombus else (False,) * 4
    for tid, ch, c in emt_corners(f):
        placements[tid] = Placement(tid, tuple(pos[v] for v in c), ch, flags)
        corners[tid] = c
    # southern tiles as point reflections of the northern ones
    disc = 0.0
    for i in range(k):
        Fi = _sph(0.5, (4.0 * i + 2.0) / f) * mirror
        north = placements[i].positions
        img = {c: _rot_pi(Fi, p) for c, p in zip(corners[i], north)}
        south = corners[k + i]
        # image of N_i corners (alpha..delta) lands on S_i corners in the same label order
        for lab in range(4):
            disc = max(disc, float(np.linalg.norm(img[corners[i][lab]] - pos[south[lab]])))
    return Mesh(dict(sorted(pos.items())), placements, disc, corners)


def mesh_excess(mesh: Mesh) -> float:
    return sum(p.excess() for p in mesh.placements.values())


def procrustes_residual(m1: Mesh, m2: Mesh) -> float:
    """Max residual after the best orthogonal map sending m1's vertices to m2's."""
    from scipy.linalg import orthogonal_procrustes

    keys = sorted(set(m1.positions) & set(m2.positions))
    X = np.array([m1.positions[k] for k in keys])
    Y = np.array([m2.positions[k] for k in keys])
    R, _ = orthogonal_procrustes(X, Y)
    return float(np.max(np.linalg.norm(X @ R - Y, axis=1)))


def _slerp(p, q, n: int, long: bool = False) -> List[np.ndarray]:
    """n+1 equally spaced points on the arc from p to q (the long way if asked)."""
    w = math.atan2(np.linalg.norm(np.cross(p, q)), float(np.dot(p, q)))
    if long:
        # along the great circle through p and q, but passing through -q's side
        u = unit(q - np.dot(q, p) * p)
        total = 2 * PI - w
        return [math.cos(i / n * total) * p - math.sin(i / n * total) * u for i in range(n + 1)]
    if w < 1e-15:
        return [p.copy() for _ in range(n + 1)]
    s = math.sin(w)
    return [(math.sin((1 - i / n) * w) * p + math.sin(i / n * w) * q) / s for i in range(n + 1)]


def export_obj(mesh: Mesh, segments_per_arc: int = 8) -> bytes:
    """Wavefront text: arc-sampled tile boundaries as ``l`` polylines.

    Each tile contributes four polylines (alpha-beta, beta-gamma,
    gamma-delta, delta-alpha) with ``segments_per_arc + 1`` points each,
    plus an ``f`` record over its four corner vertices.
    """
    if segments_per_arc < 1:
        raise ValueError("segments_per_arc must be >= 1")
    out = io.StringIO()
    out.write("# a3b tiling\n")
    idx = 0
    for tid in sorted(mesh.placements):
        pl = mesh.placements[tid]
        out.write(f"o tile_{tid}\n")
        p = pl.positions
        corner_idx = []
        for s in range(4):
            pts = _slerp(p[s], p[(s + 1) % 4], segments_per_arc, pl.long_sides[s])
            first = idx + 1
            for x in pts:
                out.write(f"v {x[0]:.12f} {x[1]:.12f} {x[2]:.12f}\n")
            idx += len(pts)
            corner_idx.append(first)
            out.write("l " + " ".join(str(i) for i in range(first, idx + 1)) + "\n")
        out.write("f " + " ".join(str(i) for i in corner_idx) + "\n")
    return out.getvalue().encode("utf-8")


def dedup_count(points: Sequence[np.ndarray], radius: float = DEDUP_RADIUS) -> int:
    reps: List[np.ndarray] = []
    for p in points:
        if not any(np.linalg.norm(p - r) < radius for r in reps):
            reps.append(p)
    return len(reps)


def obj_vertices(data: bytes) -> List[np.ndarray]:
    return [np.array([float(x) for x in line.split()[1:4]])
            for line in data.decode("utf-8").splitlines() if line.startswith("v ")]


def tiling_document(t: Tiling, q: Quadrilateral, mesh: Optional[Mesh] = None) -> Dict[str, Any]:
    """The JSON object for ``t``.

    Beyond the tiling itself, ``exact`` holds rational angles as "p/q"
    strings (null when irrational) and ``census`` lists vertex vectors with
    their counts; the loader recomputes the census rather than trusting it.
    """
    doc: Dict[str, Any] = {
        "census": [{"count": k, "vector": list(v)} for v, k in vertex_census(t).items()],
        "type": "a3b",
        "f": q.f,
        "angles": dict(zip(ANGLE_NAMES, map(float, q.theta))),
        "exact": {k: (None if e is None else str(e)) for k, e in zip(ANGLE_NAMES, q.exact)},
        "edges": {"a": float(q.edges.a), "b": float(q.edges.b)},
        "tiles": [{"id": x.id, "chirality": x.chirality, "corners": list(x.corners)} for x in t.tiles],
        "vertices": [{"id": v.id, "vector": list(v.declared if v.declared is not None else v.vector())}
                     for v in t.vertices],
        "mesh": None,
    }
    if mesh is not None:
        doc["mesh"] = {
            "positions": {str(k): [float(x) for x in mesh.positions[k]] for k in sorted(mesh.positions)},
            "discrepancy": float(mesh.discrepancy),
        }
    return doc


def export_json(t: Tiling, q: Quadrilateral, mesh: Optional[Mesh] = None) -> bytes:
    """Canonical JSON: sorted keys, UTF-8, one trailing newline."""
    text = json.dumps(tiling_document(t, q, mesh), sort_keys=True, indent=1, ensure_ascii=False)
    return (text + "\n").encode("utf-8")


@dataclass
class TilingFile:
    tiling: Tiling
    quad: Quadrilateral
    positions: Optional[Dict[int, np.ndarray]] = None
    discrepancy: Optional[float] = None


def load_json(data: bytes) -> TilingFile:
    """Inverse of export_json.

    Tiles are glued leniently so that a damaged file still loads; vertex
    vectors in the file become declared vectors for the validator to check.
    """
    doc = json.loads(data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data)
    if doc.get("type") != "a3b":
        raise ValueError("not an a3b tiling document")
    ang = AngleQuad(*(float(doc["angles"][k]) for k in ANGLE_NAMES))
    ex = doc.get("exact") or {}
    exact = tuple(None if ex.get(k) is None else Fraction(ex[k]) for k in ANGLE_NAMES)
    q = make_quad(ang, float(doc["edges"]["a"]), float(doc["edges"]["b"]), int(doc["f"]), exact)
    t = from_corners(((x["id"], x["chirality"], x["corners"]) for x in doc["tiles"]), strict=False)
    declared = {int(v["id"]): tuple(int(n) for n in v["vector"]) for v in doc["vertices"]}
    verts = [Vertex(v.id, v.incidences, declared.get(v.id)) for v in t.vertices]
    known = {v.id for v in t.vertices}
    verts += [Vertex(k, (), n) for k, n in sorted(declared.items()) if k not in known]
    t = Tiling(t.tiles, t.edges, tuple(sorted(verts, key=lambda v: v.id)))
    out = TilingFile(t, q)
    if doc.get("mesh") is not None:
        out.positions = {int(k): np.array(v, dtype=float) for k, v in doc["mesh"]["positions"].items()}
        out.discrepancy = float(doc["mesh"]["discrepancy"])
    return out
