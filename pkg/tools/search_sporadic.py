"""Find the sporadic tilings by geometric backtracking and print them as data.

Tiles are placed edge to edge on the sphere using the actual quadrilateral.
The first tile is fixed; every later tile is glued across an open edge at the
most filled vertex.  A branch dies when a vertex angle sum exceeds 2, when
a partial vertex cannot be completed to any admissible vertex type, or when
tiles overlap.  The output is pasted into ``a3btile/sporadic_data.py``.

    python tools/search_sporadic.py [name ...] [--all]
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter

import numpy as np

from a3btile.generator import SPORADIC_CENSUS, SPORADIC_IDS, sporadic_quad
from a3btile.geometry_realizer import align, canonical_tile
from a3btile.tiling_model import SIDE_LABELS, from_corners, validate, vertex_census
from a3btile.vertex_solver import AngleAssignment, enumerate_vertex_types

EPS = 1e-7


def _sub(n, t):
    return all(a <= b for a, b in zip(n, t))


class Search:
    def __init__(self, q, types, limit=1):
        self.q = q
        self.types = types
        self.limit = limit
        self.tmpl = {c: canonical_tile(q, c) for c in "+-"}
        self.pos = []            # vertex positions
        self.vec = []            # partial vertex vectors
        self.tiles = []          # (chirality, corners)
        self.open = {}           # directed ccw side (u, v) -> label, unmatched
        self.used = set()        # directed ccw sides already present
        self.solutions = []

    def vid(self, p):
        for i, x in enumerate(self.pos):
            if np.linalg.norm(x - p) < EPS:
                return i
        return None

    def inside(self, poly, p):
        n = len(poly)
        return all(np.dot(np.cross(poly[i], poly[(i + 1) % n]), p) > 1e-9 for i in range(n))

    def ccw(self, ch, pts):
        return list(pts) if ch == "+" else list(pts)[::-1]

    def fits(self, n):
        return any(_sub(n, t) for t in self.types)

    def place(self, ch, pts):
        ids = []
        new = []
        for p in pts:
            i = self.vid(p)
            if i is None:
                i = len(self.pos) + len(new)
                new.append(p)
            ids.append(i)
        if len(set(ids)) != 4:
            return None
        poly = self.ccw(ch, pts)
        # overlap tests against every placed tile
        centre = sum(pts)
        centre = centre / np.linalg.norm(centre)
        for tch, tc in self.tiles:
            tpoly = self.ccw(tch, [self.pos[v] for v in tc])
            if self.inside(tpoly, centre):
                return None
            for p in new:
                if self.inside(tpoly, p):
                    return None
        for p in self.pos:
            if self.inside(poly, p):
                return None
        # angle bookkeeping
        vec = [list(v) for v in self.vec] + [[0, 0, 0, 0] for _ in new]
        for c, v in enumerate(ids):
            vec[v][c] += 1
            if not self.fits(vec[v]):
                return None
        sides = []
        for s in range(4):
            u, w = ids[s], ids[(s + 1) % 4]
            d = (u, w) if ch == "+" else (w, u)
            if d in self.used:
                return None
            r = (d[1], d[0])
            if r in self.open and self.open[r] != SIDE_LABELS[s]:
                return None
            sides.append((d, SIDE_LABELS[s]))
        return ids, new, vec, sides

    def commit(self, ch, res):
        ids, new, vec, sides = res
        saved = (len(self.pos), [list(v) for v in self.vec], dict(self.open), set(self.used))
        self.pos.extend(new)
        self.vec = [tuple(v) for v in vec]
        for d, lab in sides:
            self.used.add(d)
            r = (d[1], d[0])
            if r in self.open:
                del self.open[r]
            else:
                self.open[d] = lab
        self.tiles.append((ch, tuple(ids)))
        return saved

    def undo(self, saved):
        npos, vec, op, used = saved
        del self.pos[npos:]
        self.vec = [tuple(v) for v in vec]
        self.open, self.used = op, used
        self.tiles.pop()

    def filled(self, v):
        return sum(k * x for k, x in zip(self.vec[v], self.q.theta))

    def run(self):
        res = self.place("+", self.tmpl["+"].positions)
        self.commit("+", res)
        self.dfs()
        return self.solutions

    def dfs(self):
        if len(self.solutions) >= self.limit:
            return
        if len(self.tiles) == self.q.f:
            if not self.open and all(tuple(v) in self.types for v in self.vec):
                self.solutions.append(list(self.tiles))
            return
        if not self.open:
            return
        # the open side at the most filled vertex
        d = max(sorted(self.open), key=lambda e: max(self.filled(e[0]), self.filled(e[1])))
        u, w = d
        lab = self.open[d]
        for ch in "+-":
            for s in range(4):
                if SIDE_LABELS[s] != lab:
                    continue
                # the new tile runs the shared side from w to u counterclockwise
                i, j = (s, (s + 1) % 4) if ch == "+" else ((s + 1) % 4, s)
                pl = align(self.tmpl[ch], i, j, self.pos[w], self.pos[u])
                res = self.place(ch, pl.positions)
                if res is None:
                    continue
                saved = self.commit(ch, res)
                self.dfs()
                self.undo(saved)


def canonical(tiles):
    """Renumber vertices by first appearance and emit (id, chirality, corners)."""
    ren = {}
    out = []
    for tid, (ch, c) in enumerate(tiles):
        for v in c:
            ren.setdefault(v, len(ren))
        out.append((tid, ch, tuple(ren[v] for v in c)))
    return out


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("names", nargs="*", default=list(SPORADIC_IDS))
    ap.add_argument("--all", action="store_true", help="count solutions instead of stopping at the first")
    args = ap.parse_args(argv)
    print('"""Sporadic tilings as (tile id, chirality, corner vertex ids) triples.\n\n'
          'Corners are listed in the order alpha, beta, gamma, delta.  Generated\n'
          'once by tools/search_sporadic.py and checked by the validator and the\n'
          'geometric realizer in the test suite.\n"""\n')
    print("TILINGS = {")
    for name in args.names:
        q = sporadic_quad(name)
        types = enumerate_vertex_types(AngleAssignment(q.theta, q.f))
        s = Search(q, types, limit=10**6 if args.all else 1)
        sols = s.run()
        if not sols:
            print(f"# {name}: no tiling found", file=sys.stderr)
            continue
        cens = Counter()
        for sol in sols:
            t = from_corners(canonical(sol))
            cens[tuple(sorted(vertex_census(t).items()))] += 1
        print(f"# {name}: {len(sols)} solution(s) from the fixed seed; censuses {dict(cens)}", file=sys.stderr)
        t = canonical(sols[0])
        tl = from_corners(t)
        rep = validate(tl, q)
        assert rep.passed, rep.failed
        assert vertex_census(tl) == SPORADIC_CENSUS[name], vertex_census(tl)
        print(f"    {name!r}: [")
        for tid, ch, c in t:
            print(f"        ({tid}, {ch!r}, {c}),")
        print("    ],")
    print("}")


if __name__ == "__main__":
    main()
