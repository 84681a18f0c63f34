"""Constructor: The List, placements, generator shapes, special families."""

from math import gcd

import pytest

from leavitt.algebra import Element, Monomial
from leavitt.construct import (
    GeneratorSet,
    ListEntry,
    NotDivisible,
    automorphism_count,
    boxes,
    build_generators,
    build_graded_generators,
    leavitt_lexicographic_generators,
    make_placement,
    the_list,
    validate_placement,
)
from leavitt.fixtures import load_fixture
from leavitt.profiles import make_profile


def valid_pairs(n_max):
    for n in range(3, n_max + 1):
        for d in range(2, n):
            if gcd(d, n - 1) == 1:
                yield n, d


def test_the_list_5_3():
    entries = [e.render() for e in the_list(make_profile(5, 3))]
    assert entries == [
        "x1.x1",
        "x2.x1", "x3.x1", "x4.x1", "x5.x1",
        "x2", "x3", "x4", "x5",
    ]


def test_the_list_sizes():
    assert len(the_list(make_profile(8, 5))) == 7 * 4 + 1
    for n, d in valid_pairs(20):
        p = make_profile(n, d)
        entries = the_list(p)
        assert len(entries) == (d - 1) * (n - 1) + 1
        assert len(set(entries)) == len(entries)
        assert len(entries) == len(boxes(p))


def test_the_list_d2():
    entries = [e.render() for e in the_list(make_profile(5, 2))] if gcd(2, 4) == 1 else None
    p = make_profile(6, 2)
    assert [e.render() for e in the_list(p)] == ["x1", "x2", "x3", "x4", "x5", "x6"]


def test_row1_placeable_entries_5_3():
    p = make_profile(5, 3)
    entries = the_list(p)
    row1 = [e.render() for e in entries if p.class_of(e.u) == p.class_of(1)]
    assert row1 == ["x1.x1", "x4.x1", "x4"]


def test_canonical_placement_valid():
    for n, d in valid_pairs(15):
        p = make_profile(n, d)
        validate_placement(p, make_placement(p))


def test_random_placements_valid():
    for n, d in [(5, 3), (7, 5), (9, 5), (10, 7)]:
        p = make_profile(n, d)
        for seed in range(100):
            validate_placement(p, make_placement(p, "random", seed))


def test_random_placement_deterministic():
    p = make_profile(9, 5)
    a = make_placement(p, "random", 42)
    b = make_placement(p, "random", 42)
    assert a.assignment == b.assignment


def test_generator_shapes():
    for n, d in valid_pairs(14):
        p = make_profile(n, d)
        gens = build_generators(p)
        assert len(gens.X) == n and len(gens.Y) == n
        for x, y in zip(gens.X, gens.Y):
            assert y == x.involute()
        for i in range(p.q):
            for (row, col) in gens.X[i].entries:
                assert col == 1
        for idx in range(p.q + 2, n):
            for (row, col), e in gens.X[idx].entries.items():
                assert col == d
        # the stated 1-entries of X_{q+1} and X_{q+2}
        xq1 = gens.X[p.q]
        for (row, col), e in xq1.entries.items():
            if col != 1:
                assert e.is_one() and row == col + p.r - 1
        xq2 = gens.X[p.q + 1]
        for (row, col), e in xq2.entries.items():
            if col != d:
                assert e.is_one() and col == row + p.s


def test_tail_entries_dagger_pairwise():
    """a_j a_i* = delta_ij for the tail of X_{q+2}, any placement."""
    for n, d in [(5, 3), (8, 3), (9, 5), (10, 7)]:
        p = make_profile(n, d)
        for seed in range(10):
            gens = build_generators(p, make_placement(p, "random", seed))
            xq2 = gens.X[p.q + 1]
            tail = [xq2.entry(i, d) for i in range(p.r - 1, d + 1)]
            for a in tail:
                for b in tail:
                    prod = a * b.involute()
                    if a == b:
                        assert prod.is_one()
                    else:
                        assert prod.is_zero()


def test_graded_6_3_matches_fixture():
    gens = build_graded_generators(6, 3)
    fix = load_fixture("M3L6-deg1")
    assert [x for x in gens.X] == [x for x in fix.X]


def test_graded_4_2_shape():
    gens = build_graded_generators(4, 2)
    assert all(col == 1 for (_, col) in gens.X[0].entries)
    assert all(col == 1 for (_, col) in gens.X[1].entries)
    assert all(col == 2 for (_, col) in gens.X[2].entries)
    assert all(col == 2 for (_, col) in gens.X[3].entries)


def test_graded_not_divisible():
    with pytest.raises(NotDivisible):
        build_graded_generators(6, 4)


def test_lex_5_3_matches_fixture():
    gens = leavitt_lexicographic_generators(5, 3)
    fix = load_fixture("M3L5-lex")
    assert [x for x in gens.X] == [x for x in fix.X]


def test_lex_6_3_coincides_with_graded():
    lex = leavitt_lexicographic_generators(6, 3)
    graded = build_graded_generators(6, 3)
    assert [x for x in lex.X] == [x for x in graded.X]


def test_automorphism_count_5_3():
    assert automorphism_count(make_profile(5, 3)) == 48


def test_automorphism_count_divisible_by_d():
    for n, d in valid_pairs(30):
        p = make_profile(n, d)
        assert automorphism_count(p) % d == 0


def test_placement_independence_of_shapes():
    p = make_profile(7, 5)
    canonical = build_generators(p)
    for seed in (0, 1, 2):
        rand = build_generators(p, make_placement(p, "random", seed))
        # same support everywhere; only the placed monomials differ
        for a, b in zip(canonical.X, rand.X):
            assert set(a.entries) == set(b.entries)
