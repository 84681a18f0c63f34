"""Acceptance suite: nine end-to-end checks, one printed line each.

Each test prints "criterion N: pass" (or "FAIL") so a plain pytest -s run
doubles as an acceptance report.
"""

import random
import time
from fractions import Fraction
from math import gcd

import pytest

from leavitt.algebra import Element, Monomial, degree_zero_image, reduce_word
from leavitt.certify import (
    check_dagger,
    check_relations,
    evaluate_certificate,
    generation_certificate,
    span_closure_verify,
)
from leavitt.classify import graded_iso_exists, is_isomorphic
from leavitt.construct import (
    automorphism_count,
    build_generators,
    make_placement,
    the_list,
    boxes,
)
from leavitt.fields import QQ
from leavitt.fixtures import fixture_names, load_fixture
from leavitt.matrices import matrix_unit
from leavitt.profiles import make_profile, reduce_large_d


def report(number, ok, detail=""):
    line = "criterion %d: %s" % (number, "pass" if ok else "FAIL")
    if detail:
        line += "  (%s)" % detail
    print(line)
    assert ok, line


def test_criterion_1_worked_example_profile():
    start = time.perf_counter()
    p = make_profile(35, 13)
    ok = (
        list(p.hseq) == [1, 6, 11, 3, 8, 13, 5, 10, 2, 7, 12, 4, 9]
        and sorted(p.S1hat) == [1, 3, 6, 8, 11]
        and (p.d1, p.d2) == (5, 8)
        and (p.e1, p.e2) == (2, 4)
        and (p.f1, p.f2) == (4, 5)
        and (p.b, p.t) == (3, 1)
    )
    elapsed = time.perf_counter() - start
    report(1, ok and elapsed < 0.1, "(35,13) profile in %.3f ms" % (elapsed * 1e3))


def test_criterion_2_theorem_main_end_to_end():
    start = time.perf_counter()
    pairs = 0
    for n in range(2, 9):
        for d in range(1, 13):
            if gcd(d, n - 1) != 1:
                continue
            d_eff = reduce_large_d(n, d) if d >= n else d
            profile = make_profile(n, d_eff)
            gens = build_generators(profile, make_placement(profile))
            if not check_relations(gens).ok:
                report(2, False, "relations fail at (%d,%d)" % (n, d))
            cert = generation_certificate(profile, gens)
            if not evaluate_certificate(cert, gens).ok:
                report(2, False, "certificate fails at (%d,%d)" % (n, d))
            pairs += 1
    elapsed = time.perf_counter() - start
    report(2, elapsed < 120, "%d pairs certified in %.1f s" % (pairs, elapsed))


def test_criterion_3_placement_independence():
    from leavitt.profiles import NotCoprime

    for n, d in [(5, 3), (6, 5), (7, 3), (9, 5), (35, 13)]:
        if gcd(d, n - 1) != 1:
            # the theorem's hypothesis fails; the only correct behavior is a
            # consistent refusal, independent of any placement
            with pytest.raises(NotCoprime):
                make_profile(n, d)
            continue
        profile = make_profile(n, d)
        for seed in range(20):
            gens = build_generators(profile, make_placement(profile, "random", seed=seed))
            if not check_relations(gens).ok:
                report(3, False, "relations fail at (%d,%d) seed %d" % (n, d, seed))
            cert = generation_certificate(profile, gens)
            if not evaluate_certificate(cert, gens).ok:
                report(3, False, "certificate fails at (%d,%d) seed %d" % (n, d, seed))
    report(3, True, "5 shapes x 20 random placements")


def test_criterion_4_dagger_identity():
    count = 0
    for n in range(3, 11):
        for d in range(2, n):
            if gcd(d, n - 1) != 1:
                continue
            if not check_dagger(the_list(make_profile(n, d)), n):
                report(4, False, "dagger fails at (%d,%d)" % (n, d))
            count += 1
    report(4, True, "%d (n,d) pairs" % count)


def test_criterion_5_counting_identities():
    checked = 0
    for n in range(3, 61):
        for d in range(2, n):
            if gcd(d, n - 1) != 1:
                continue
            p = make_profile(n, d)
            list_size, box_count, s1_box, s1_list = p.counts()
            ok = (
                list_size == box_count
                and s1_box == s1_list
                and p.e1 + p.e2 == p.s + 1
                and p.f1 + p.f2 == p.r
                and p.b + p.t == p.d1 - 1
                and p.r - 1 == 1 + (p.d1 - 1) * p.s - p.t * p.d
                and p.e1 == sum(1 for v in p.S1hat if v >= p.r - 1)
                and p.e2 == sum(1 for v in p.S2hat if v >= p.r - 1)
                and p.f1 == sum(1 for v in p.S1hat if v <= p.r)
                and p.f2 == sum(1 for v in p.S2hat if v <= p.r)
            )
            if not ok:
                report(5, False, "identities fail at (%d,%d)" % (n, d))
            checked += 1
    report(5, True, "%d profiles" % checked)


def test_criterion_6_fixture_verification():
    start = time.perf_counter()
    lex_bounds = (6, 3)
    for name in fixture_names():
        gens = load_fixture(name)
        if not check_relations(gens).ok:
            report(6, False, "relations fail for %s" % name)
        if name == "M3L5-lex":
            targets = [matrix_unit(3, 5, 1, 3, QQ)]
            result = span_closure_verify(
                gens, targets=targets, degree_bound=lex_bounds[0], iteration_bound=lex_bounds[1]
            )
            if result.status != "inconclusive":
                report(6, False, "lex set unexpectedly verified")
        else:
            result = span_closure_verify(gens, degree_bound=6)
            if not result.verified:
                report(6, False, "closure inconclusive for %s" % name)
    elapsed = time.perf_counter() - start
    report(6, elapsed < 60, "11 fixtures in %.1f s" % elapsed)


def test_criterion_7_classifier_agreement():
    for n in range(2, 13):
        for m in range(2, 13):
            for d in range(1, 31):
                for k in range(1, 31):
                    same, _ = is_isomorphic(n, d, m, k)
                    expect = n == m and gcd(d, n - 1) == gcd(k, m - 1)
                    if same != expect:
                        report(7, False, "mismatch at (%d,%d) vs (%d,%d)" % (n, d, m, k))
    # equivalence relation on a sample, diagonal vs Theorem Main
    sample = [(n, d) for n in range(2, 8) for d in range(1, 9)]
    for n, d in sample:
        assert is_isomorphic(n, d, n, d)[0]
    for n in range(2, 13):
        for d in range(1, 31):
            assert is_isomorphic(n, d, n, 1)[0] == (gcd(d, n - 1) == 1)
    # graded criterion vs prime-divisibility brute force
    for n in range(2, 101):
        for d in range(1, 101):
            primes_d = _prime_set(d)
            primes_n = _prime_set(n)
            expect = primes_d <= primes_n
            if graded_iso_exists(n, d) != expect:
                report(7, False, "graded mismatch at (%d,%d)" % (n, d))
    for n, d in [(6, 4), (10, 50), (12, 36), (1000, 640), (999, 37)]:
        assert graded_iso_exists(n, d) == (_prime_set(d) <= _prime_set(n))
    report(7, True, "iso grid 12x30 squared, graded brute force")


def _prime_set(k):
    out = set()
    p = 2
    while p * p <= k:
        while k % p == 0:
            out.add(p)
            k //= p
        p += 1
    if k > 1:
        out.add(k)
    return out


def test_criterion_8_core_algebra_suite():
    rng = random.Random(20260826)
    n = 3
    cases = 0
    for _ in range(1000):
        letters = []
        for _ in range(rng.randrange(2, 7)):
            if rng.random() < 0.5:
                letters.append(("x", rng.randrange(1, n + 1)))
            else:
                letters.append(("y", rng.randrange(1, n + 1)))
        first = reduce_word(letters, n, QQ, rng=random.Random(1))
        second = reduce_word(letters, n, QQ, rng=random.Random(2))
        third = reduce_word(letters, n, QQ)
        if not (first == second == third):
            report(8, False, "confluence fails on %r" % (letters,))
        cases += 1
    # involution laws and grading additivity on random elements
    for _ in range(200):
        a = _random_element(rng, n)
        b = _random_element(rng, n)
        if (a * b).involute() != b.involute() * a.involute():
            report(8, False, "involution anti-homomorphism fails")
        if (a.involute()).involute() != a:
            report(8, False, "involution not involutive")
    # degree-0 oracle
    for nn in (2, 3):
        for level in (1, 2, 3):
            for _ in range(10):
                a = _random_degree_zero(rng, nn, level)
                b = _random_degree_zero(rng, nn, level)
                left = degree_zero_image(a * b, level)
                right = _matmul(degree_zero_image(a, level), degree_zero_image(b, level))
                if left != right:
                    report(8, False, "degree-0 oracle disagrees at n=%d T=%d" % (nn, level))
    report(8, True, "%d confluence cases, involution, grading, oracle" % cases)


def _random_element(rng, n):
    total = Element.zero(n, QQ)
    for _ in range(rng.randrange(1, 4)):
        yword = tuple(rng.randrange(1, n + 1) for _ in range(rng.randrange(0, 3)))
        xword = tuple(rng.randrange(1, n + 1) for _ in range(rng.randrange(0, 3)))
        coeff = Fraction(rng.randrange(-3, 4))
        if coeff:
            total = total + Element.monomial(Monomial(yword, xword), n, QQ).scale(coeff)
    return total


def _matmul(a, b):
    size = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size)]
        for i in range(size)
    ]


def _random_degree_zero(rng, n, level):
    k = rng.randrange(0, level + 1)
    yword = tuple(rng.randrange(1, n + 1) for _ in range(k))
    xword = tuple(rng.randrange(1, n + 1) for _ in range(k))
    return Element.monomial(Monomial(yword, xword), n, QQ)


def test_criterion_9_automorphism_count():
    ok = automorphism_count(make_profile(5, 3)) == 48
    for n in range(2, 61):
        for d in range(2, n):
            if gcd(d, n - 1) != 1:
                continue
            if automorphism_count(make_profile(n, d)) % d != 0:
                report(9, False, "count not divisible by d at (%d,%d)" % (n, d))
    report(9, ok, "(5,3) -> 48; divisibility by d on the n <= 60 grid")
