import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from a3btile.errors import DomainError, InvalidParameterError
from a3btile.generator import (
    SPORADIC_IDS,
    apply_flips,
    build_emt,
    count_by_gaps,
    count_flip_tilings,
    enumerate_flip_tilings,
    flip_census,
    multisets,
    nearest_int,
    q1,
    q1_by_count,
    q2,
    q_table,
    sporadic,
)
from a3btile.quad_family import emt_quad, flip_case
from a3btile.tiling_model import validate, vertex_census
from fractions import Fraction


def admissible(fmax):
    for f in range(8, fmax + 1, 2):
        for m in range(2, f):
            try:
                yield f, m, flip_case(f, m)
            except DomainError:
                continue


def test_build_emt_small():
    t = build_emt(6)
    assert t.f == 6 and len(t.vertices) == 8 and len(t.edges) == 12
    assert len(t.vertices) - len(t.edges) + t.f == 2
    assert vertex_census(build_emt(8)) == {(1, 1, 0, 1): 8, (0, 0, 4, 0): 2}
    with pytest.raises(InvalidParameterError):
        build_emt(5)


def test_apply_flips_examples():
    t = apply_flips(14, 5, (0, 0, 1))
    q = emt_quad(14, 4 / 7)
    assert validate(t, q).passed
    assert vertex_census(t) == {(1, 1, 0, 1): 8, (1, 0, 2, 1): 6, (0, 3, 1, 0): 2}
    with pytest.raises(InvalidParameterError):
        apply_flips(16, 5, (0, 0, 0))
    with pytest.raises(InvalidParameterError):
        apply_flips(14, 5, (0, 0, 2))


def test_enumeration_examples():
    specs = enumerate_flip_tilings(14, 5)
    assert [s.gaps for s in specs] == [(5,), (0, 3), (1, 2), (0, 0, 1)]
    assert Counter(s.n for s in enumerate_flip_tilings(16, 3)) == {1: 1, 2: 2}
    assert count_flip_tilings(14, 5, 3) == 1
    assert count_flip_tilings(24, 4, 3) == 1


def test_zero_gap_single_spec():
    # f=24, m=4 (l=4): three flips use 12 zones, G = 0
    assert [s.gaps for s in enumerate_flip_tilings(24, 4) if s.n == 3] == [(0, 0, 0)]


def brute_multisets(G, n):
    # necklace-free count: nondecreasing gap tuples summing to G
    return sum(1 for c in itertools.product(range(G + 1), repeat=n) if sum(c) == G and list(c) == sorted(c))


@given(st.integers(0, 25), st.integers(1, 3))
def test_multisets_vs_bruteforce(G, n):
    assert len(multisets(G, n)) == brute_multisets(G, n) == count_by_gaps(G, n)


def test_counts_against_forms_and_enumeration():
    for f, m, fc in admissible(60):
        specs = enumerate_flip_tilings(f, m)
        by_n = Counter(s.n for s in specs)
        for n in range(1, fc.max_flips + 1):
            G = f // 2 - n * fc.l
            expect = brute_multisets(G, n) if G >= 0 else 0
            assert by_n.get(n, 0) == expect == count_flip_tilings(f, m, n), (f, m, n)


def test_flip_census_matches_tilings():
    for f, m, fc in admissible(24):
        q = emt_quad(f, float(fc.beta))
        for s in enumerate_flip_tilings(f, m):
            t = apply_flips(f, m, s.gaps)
            assert validate(t, q).passed, (f, m, s)
            assert vertex_census(t) == flip_census(f, m, s.n)


def test_nearest_int():
    assert nearest_int(Fraction(1, 12)) == 0
    assert nearest_int(Fraction(7, 12)) == 1
    with pytest.raises(ArithmeticError):
        nearest_int(Fraction(1, 2))


def counting_columns(f):
    """Column formulas of the counting table, as (Q1, Q2, Q3)."""
    if f == 8:
        return 1, 0, 1
    if f == 18:
        return 3, 1, 2
    cols = [  # (offset, k_min, Q1, Q2, Q3) with f = 24k + offset
        (-16, 2, lambda k: 6 * k - 5, 2, lambda k: 6 * k - 7),
        (-14, 1, lambda k: 6 * k - 5, 1, lambda k: 6 * k - 6),
        (-12, 1, lambda k: 6 * k - 3, 1, lambda k: 6 * k - 4),
        (-10, 1, lambda k: 6 * k - 3, 1, lambda k: 6 * k - 4),
        (-8, 1, lambda k: 6 * k - 3, 2, lambda k: 6 * k - 5),
        (-6, 2, lambda k: 6 * k - 3, 0, lambda k: 6 * k - 3),
        (-4, 1, lambda k: 6 * k - 1, 2, lambda k: 6 * k - 3),
        (-2, 1, lambda k: 6 * k - 1, 1, lambda k: 6 * k - 2),
        (0, 1, lambda k: 6 * k - 1, 1, lambda k: 6 * k - 2),
        (2, 1, lambda k: 6 * k - 1, 1, lambda k: 6 * k - 2),
        (4, 1, lambda k: 6 * k + 1, 2, lambda k: 6 * k - 1),
        (6, 1, lambda k: 6 * k + 1, 0, lambda k: 6 * k + 1),
    ]
    for off, kmin, a, b, c in cols:
        if (f - off) % 24 == 0 and (f - off) // 24 >= kmin:
            k = (f - off) // 24
            return a(k), b, c(k)
    return None


@pytest.mark.parametrize("f", [8, 16, 18, 20, 28])
def test_q_table_examples(f):
    assert q_table(f) == counting_columns(f)


def test_q_table_all_columns():
    seen = 0
    for f in range(8, 24 * 8 + 8, 2):
        row = counting_columns(f)
        if row is not None:
            seen += 1
            assert q_table(f) == row, f
    assert seen > 80


@given(st.integers(4, 500).map(lambda k: 2 * k))
def test_q1_closed_form_equals_count(f):
    assert q1(f) == q1_by_count(f)
    assert 0 <= q2(f) <= 2


def test_q_small_f_rejected():
    with pytest.raises(DomainError):
        q1(6)


@pytest.mark.parametrize("name", SPORADIC_IDS)
def test_sporadic_examples(name):
    q, tl = sporadic(name)
    assert len(tl) == 1 and tl[0].f == q.f


def test_sporadic_closed_forms():
    q, _ = sporadic("emt12_a2b_c3")
    assert q.f == 12 and q.theta[0] == pytest.approx(0.7902, abs=1e-4)
    q, _ = sporadic("octa24_b3")
    assert q.edges.a == pytest.approx(0.2011, abs=1e-4)
    assert q.edges.b == pytest.approx(0.5 - q.edges.a, abs=1e-15)
    q, _ = sporadic("f16_bc2_a2d2")
    assert q.edges.a == 0.25
    with pytest.raises(InvalidParameterError):
        sporadic("nope")
