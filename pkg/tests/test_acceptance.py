"""The eight acceptance criteria, each reporting one PASS/FAIL line."""

import itertools
import random
from collections import Counter

import numpy as np

from a3btile.errors import DomainError, PreconditionError
from a3btile.existence_solver import (
    SPORADIC_FAMILIES,
    alpha_roots,
    complete_quad,
    nonexistence_margin,
    quartic_case,
)
from a3btile.generator import (
    SPORADIC_CENSUS,
    SPORADIC_IDS,
    apply_flips,
    build_emt,
    count_flip_tilings,
    enumerate_flip_tilings,
    q1,
    q_table,
    sporadic,
    sporadic_quad,
)
from a3btile.geometry_realizer import emt_coordinates, mesh_excess, realize_by_propagation
from a3btile.quad_family import beta_interval, emt_quad, flip_case, rhombus_beta
from a3btile.tiling_model import corrupt, validate, with_declared_vectors
from a3btile.trig_kernel import check_quad
from a3btile.vertex_solver import (
    AngleAssignment,
    coplanarity_check,
    enumerate_vertex_types,
    solve_multiplicities,
)

# printed (alpha, a, b) per row; decimals are truncated, so x lies in [p, p + 1e-4)
PRINTED = {
    "emt12_a2b_c3": (0.7902, 0.3367, 0.2495),
    "emt16_a2b_bcd2": (0.7898, 0.3362, 0.1052),
    "emt16_bd2_a2c2": (0.5664, 0.3292, 0.1158),
    "f16_bc2_a2d2": (0.5906, 0.25, 0.3488),
    "octa24_b3": (0.4322, 0.2011, 0.2988),
}
HALF_DIGIT = 5e-5


def test_criterion_1_sporadic_roots(record):
    worst_alpha, worst_ab, worst_literal, ok = 0.0, 0.0, 0.0, True
    for name, (p_al, p_a, p_b) in PRINTED.items():
        roots = alpha_roots(SPORADIC_FAMILIES[name])
        closed = sporadic_quad(name)
        hits = [z for z in roots if abs(z.alpha - closed.theta[0]) < 1e-10]
        ok &= len(hits) == 1
        if not hits:
            continue
        z = hits[0]
        worst_alpha = max(worst_alpha, abs(z.alpha - closed.theta[0]))
        q = complete_quad(SPORADIC_FAMILIES[name], z.alpha)
        ok &= q is not None
        for x, p in ((z.alpha, p_al), (q.edges.a, p_a), (q.edges.b, p_b)):
            # centre of the truncation interval, within half a digit
            exact_print = p in (0.25,)
            centre = p if exact_print else p + HALF_DIGIT
            dev = abs(x - centre)
            worst_ab = max(worst_ab, dev)
            worst_literal = max(worst_literal, abs(x - p))
            ok &= dev <= HALF_DIGIT + 1e-12
        if name == "f16_bc2_a2d2":
            ok &= abs(q.edges.a - 0.25) < 1e-12
        if name == "octa24_b3":
            ok &= abs(q.edges.a + q.edges.b - 0.5) < 1e-12
    record(1, ok, f"alpha vs closed form max {worst_alpha:.1e} (tol 1e-10); "
                  f"(alpha,a,b) within {worst_ab:.1e} of the printed truncation intervals "
                  f"(tol 5e-5; max distance to the bare printed digits {worst_literal:.1e})")
    assert ok


def test_criterion_2_earth_map_family(record):
    ok, worst_sum, worst_trig, n = True, 0.0, 0.0, 0
    for f in (6, 8, 10, 16, 50):
        lo, hi = beta_interval(f)
        betas = np.linspace(lo, hi, 27)[1:-1]
        assert all(abs(b - rhombus_beta(f)) > 1e-6 for b in betas)
        for be in betas:
            q = emt_quad(f, float(be))
            rep = check_quad(q, 1e-9)
            trig = max([abs(rep.eq4), rep.coolsaet_min] + ([max(map(abs, rep.cos_a))] if rep.cos_a else []))
            worst_sum, worst_trig = max(worst_sum, abs(rep.angle_sum)), max(worst_trig, trig)
            ok &= rep.passed and abs(rep.angle_sum) < 1e-12 and trig < 1e-9
            if f >= 8:
                a, b = q.edges.a, q.edges.b
                ok &= 1 / 3 - 1e-15 <= a < 1 / 2 and b < 1 / 2 + 4 / f
            n += 1
    gaps = [abs(emt_quad(10**4, be).edges.b - emt_quad(10**4, be).edges.a) for be in np.linspace(0.55, 1.45, 19)]
    ok &= max(gaps) < 1e-3
    record(2, ok, f"{n} samples; angle-sum max {worst_sum:.1e}, trig max {worst_trig:.1e}; "
                  f"range claims hold; f=1e4 max |b-a| {max(gaps):.1e}")
    assert ok


def table_q(f):
    """Counting table columns: f -> (Q1, Q2, Q3) or None."""
    if f == 8:
        return 1, 0, 1
    if f == 18:
        return 3, 1, 2
    cols = [(-16, 2, -5, 2, -7), (-14, 1, -5, 1, -6), (-12, 1, -3, 1, -4), (-10, 1, -3, 1, -4),
            (-8, 1, -3, 2, -5), (-6, 2, -3, 0, -3), (-4, 1, -1, 2, -3), (-2, 1, -1, 1, -2),
            (0, 1, -1, 1, -2), (2, 1, -1, 1, -2), (4, 1, 1, 2, -1), (6, 1, 1, 0, 1)]
    for off, kmin, c1, c2, c3 in cols:
        k, r = divmod(f - off, 24)
        if r == 0 and k >= kmin:
            return 6 * k + c1, c2, 6 * k + c3, k
    return None


def test_criterion_3_counting(record):
    ok, checked = True, 0
    for f in range(8, 24 * 8 + 8, 2):
        row = table_q(f)
        if row is None or (len(row) == 4 and row[3] > 8):
            continue
        ok &= q1(f) == row[0]
        checked += 1
    exact = {f: q_table(f) for f in (8, 16, 18, 20, 28)}
    ok &= all(exact[f] == table_q(f)[:3] for f in exact)
    ok &= exact[8] == (1, 0, 1) and exact[18] == (3, 1, 2)
    record(3, ok, f"Q1 closed form matches {checked} table entries (k<=8); "
                  + " ".join(f"f={f}:{v}" for f, v in exact.items()))
    assert ok


def brute_count(G, n):
    if G < 0:
        return 0
    return sum(1 for c in itertools.product(range(G + 1), repeat=n) if sum(c) == G and list(c) == sorted(c))


def test_criterion_4_flips(record):
    ok = len(enumerate_flip_tilings(14, 5)) == 4
    pairs = 0
    for f in range(8, 61, 2):
        for m in range(2, f):
            try:
                fc = flip_case(f, m)
            except DomainError:
                continue
            pairs += 1
            by_n = Counter(s.n for s in enumerate_flip_tilings(f, m))
            for n in range(1, fc.max_flips + 1):
                G = f // 2 - n * fc.l
                ok &= by_n.get(n, 0) == count_flip_tilings(f, m, n) == brute_count(G, n)
    record(4, ok, f"f=14,m=5 gives 4 specs; {pairs} admissible (f,m) with f<=60 agree with closed form and brute force")
    assert ok


def generated():
    for f in range(6, 41, 2):
        yield f"emt{f}", with_declared_vectors(build_emt(f)), emt_quad(f, 1.1), emt_coordinates(f, 1.1)
    for f in range(8, 25, 2):
        for m in range(2, f):
            try:
                fc = flip_case(f, m)
            except DomainError:
                continue
            q = emt_quad(f, float(fc.beta))
            for s in enumerate_flip_tilings(f, m):
                t = with_declared_vectors(apply_flips(f, m, s.gaps))
                yield f"flip{f},{m},{s.gaps}", t, q, None
    for name in SPORADIC_IDS:
        q, [t] = sporadic(name)
        yield name, with_declared_vectors(t), q, None


def random_corruption(t, rnd):
    while True:
        kind = rnd.choice(["chirality", "corner", "edge_label", "edge_side", "incidence", "declared", "drop_tile"])
        if kind in ("chirality", "drop_tile"):
            args = (rnd.randrange(t.f), None)
        elif kind == "corner":
            args = (rnd.randrange(t.f), (rnd.randrange(4), rnd.choice(t.vertices).id))
        elif kind == "edge_label":
            args = (rnd.randrange(len(t.edges)), None)
        elif kind == "edge_side":
            args = (rnd.randrange(len(t.edges)), rnd.randrange(4))
        elif kind == "incidence":
            args = (rnd.randrange(len(t.vertices)), rnd.randrange(4))
        else:
            args = (rnd.randrange(len(t.vertices)), tuple(rnd.randrange(5) for _ in range(4)))
        bad = corrupt(t, kind, *args)
        if bad != t:
            return kind, bad


def test_criterion_5_validator(record):
    cases = list(generated())
    failures = [name for name, t, q, _ in cases if not validate(t, q).passed]
    rnd = random.Random(20240501)
    caught, kinds = 0, Counter()
    for _ in range(20):
        name, t, q, _ = rnd.choice(cases)
        kind, bad = random_corruption(t, rnd)
        kinds[kind] += 1
        caught += not validate(bad, q).passed
    ok = not failures and caught == 20
    record(5, ok, f"{len(cases)} generated tilings, {len(failures)} rejected; "
                  f"{caught}/20 corruptions caught ({dict(sorted(kinds.items()))})")
    assert ok


def test_criterion_6_geometry(record):
    q = emt_quad(8, 0.9)
    m = emt_coordinates(8, 0.9)
    err_side = max(abs(s - e) for pl in m.placements.values()
                   for s, e in zip(pl.sides(), (q.edges.a,) * 3 + (q.edges.b,)))
    err_ang = max(abs(x - e) for pl in m.placements.values() for x, e in zip(pl.angles(), q.theta))
    qo, [to] = sporadic("octa24_b3")
    octa = realize_by_propagation(to, qo)
    meshes = [mm for _, _, _, mm in generated() if mm is not None]
    for name, t, qq, mm in generated():
        if mm is None:
            meshes.append(realize_by_propagation(t, qq))
    worst_excess = max(abs(mesh_excess(mm) - 4) for mm in meshes + [m, octa])
    ok = err_side < 1e-9 and err_ang < 1e-9 and octa.discrepancy < 1e-8 and worst_excess < 1e-8
    record(6, ok, f"f=8 arcs {err_side:.1e}, angles {err_ang:.1e}; octa24 discrepancy {octa.discrepancy:.1e}; "
                  f"excess within {worst_excess:.1e} of 4 on {len(meshes) + 2} meshes")
    assert ok


def leibniz_det(rows):
    """Determinant by the permutation expansion, independent of elimination."""
    n = len(rows)
    total = 0
    for p in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term *= rows[i][p[i]]
        total += term
    return total


def test_criterion_7_vertex(record):
    q3 = sporadic_quad("emt16_bd2_a2c2")
    types3 = set(enumerate_vertex_types(AngleAssignment(q3.theta, 16), max_degree=8))
    brute = {n for n in itertools.product(range(9), repeat=4)
             if 3 <= sum(n) <= 8 and abs(np.dot(n, q3.theta) - 2) < 1e-9 and (n[0] + n[3]) % 2 == 0 and not all(n)}
    ok = types3 == brute == {(0, 1, 0, 2), (2, 0, 2, 0), (0, 4, 0, 0)}

    unique = []
    for name in SPORADIC_IDS:
        census = SPORADIC_CENSUS[name]
        types = sorted(census)
        sols = solve_multiplicities(types, sporadic_quad(name).f)
        unique.append(sols == [tuple(census[t] for t in types)])
    ok &= all(unique)
    ok &= solve_multiplicities([(2, 1, 0, 0), (0, 0, 3, 0), (0, 1, 1, 2)], 12) == [(6, 2, 6)]

    rnd = random.Random(7)
    agree = 0
    u = (1, 1, 1, 1)
    for _ in range(1000):
        l, m, n = ([rnd.randint(0, 6) for _ in range(4)] for _ in range(3))
        dependent = all(leibniz_det([[r[c] for c in cols] for r in (u, l, m)]) == 0
                        for cols in itertools.combinations(range(4), 3))
        try:
            got = coplanarity_check(l, m, n)
            agree += (not dependent) and got == (leibniz_det([u, l, m, n]) == 0)
        except PreconditionError:
            agree += dependent
    ok &= agree == 1000
    record(7, ok, f"row-3 types {sorted(types3)} match brute force; "
                  f"{sum(unique)}/5 rows have a unique census over their vertex types; "
                  f"coplanarity agrees on {agree}/1000 triples")
    assert ok


def test_criterion_8_quartic(record):
    q4, q5 = quartic_case(4), quartic_case(5)
    ok = q4.double and np.allclose(q4.alphas(), [0.25, 0.75], atol=1e-12)
    ok &= np.allclose(q5.alphas(), [0.2, 0.4, 0.6, 0.8], atol=1e-12)
    margins = [nonexistence_margin(k) for k in range(6, 101)]
    ok &= min(margins) > 0
    record(8, ok, f"k=4 double roots {q4.alphas()}; k=5 roots {[round(x, 12) for x in q5.alphas()]}; "
                  f"min margin over 6..100 = {min(margins):.4f}")
    assert ok
