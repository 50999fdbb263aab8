#!/usr/bin/env python3
"""
Test gap posets, lower ideals and the ideal/core bijection
"""

import itertools
import math
import random

import pytest
import sympy

from multicores.errors import CapExceededError, DomainError, InfinitePosetError, NotACoreError, NotAnIdealError
from multicores.exact_algebra import catalan, motzkin
from multicores.partitions import Partition, is_multicore
from multicores.semigroup_poset import (
    _MULTI_CATALAN_TABLES,
    build_gap_poset,
    consecutive_poset,
    core_to_ideal,
    count_lower_ideals,
    enumerate_cores,
    enumerate_lower_ideals,
    gaps_from_series,
    ideal_class,
    ideal_to_core,
    multi_catalan,
    semigroup_series,
)


def random_generators(rng: random.Random) -> tuple[int, ...]:
    while True:
        gens = tuple(sorted({rng.randint(2, 9) for _ in range(rng.randint(2, 4))}))
        if len(gens) > 1 and math.gcd(*gens) == 1:
            return gens


def test_gaps_of_five_seven_thirteen():
    poset = build_gap_poset((13, 5, 7))
    assert poset.generators == (5, 7, 13)
    assert poset.gaps == (1, 2, 3, 4, 6, 8, 9, 11, 16)
    assert poset.frobenius_number == 16


def test_non_coprime_generators_rejected():
    with pytest.raises(InfinitePosetError) as info:
        build_gap_poset((4, 6))
    assert info.value.divisor == 2
    with pytest.raises(DomainError):
        build_gap_poset(())


def test_semigroup_with_one():
    poset = build_gap_poset((1, 5))
    assert poset.gaps == ()
    assert enumerate_lower_ideals(poset) == [frozenset()]


def test_covers_differ_by_a_generator():
    poset = build_gap_poset((5, 7, 13))
    assert (6, 1) in poset.covers and (11, 4) in poset.covers and (16, 3) in poset.covers
    assert all(a - b in poset.generators for a, b in poset.covers)


def test_order_queries():
    poset = build_gap_poset((5, 7, 13))
    assert poset.leq(1, 16)
    assert poset.leq(4, 4)
    assert not poset.leq(2, 1)
    assert poset.below(11) == {1, 4, 6}


def test_hasse_reduction():
    poset = build_gap_poset((3, 4))
    assert poset.gaps == (1, 2, 5)
    assert poset.hasse_edges() == [(5, 1), (5, 2)]
    for gens in [(5, 7, 13), (4, 5, 6), (3, 7)]:
        p = build_gap_poset(gens)
        assert set(p.hasse_edges()) <= set(p.covers)


def test_dot_export():
    dot = build_gap_poset((5, 7, 13)).to_dot()
    assert dot.startswith('digraph "P_5_7_13" {')
    assert '"1" -> "6";' in dot
    assert dot.rstrip().endswith("}")


def test_gaps_match_generating_function():
    """Gaps are the zero coefficients of prod 1/(1 - x^s)"""
    rng = random.Random(13)
    for _ in range(15):
        gens = random_generators(rng)
        poset = build_gap_poset(gens)
        series = semigroup_series(gens, poset.frobenius_number + 2)
        assert gaps_from_series(series) == list(poset.gaps)


def test_semigroup_series_against_sympy():
    x = sympy.symbols("x")
    expected = sympy.series(1 / ((1 - x**3) * (1 - x**5)), x, 0, 16).removeO()
    got = semigroup_series((3, 5), 16)
    assert [int(got[i]) for i in range(16)] == [int(expected.coeff(x, i)) for i in range(16)]


def test_lower_ideal_enumeration():
    poset = build_gap_poset((5, 7, 13))
    ideals = enumerate_lower_ideals(poset)
    assert ideals[0] == frozenset()
    assert ideals[-1] == frozenset(poset.gaps)
    assert len(set(ideals)) == len(ideals)
    assert all(poset.is_lower_ideal(i) for i in ideals)
    assert count_lower_ideals(poset) == len(ideals)


def test_pair_counts_are_rational_catalan():
    for s, t in [(2, 3), (3, 4), (3, 5), (4, 7), (5, 8)]:
        expected = math.comb(s + t, s) // (s + t)
        assert count_lower_ideals(build_gap_poset((s, t))) == expected


def test_count_matches_enumeration_random():
    rng = random.Random(41)
    for _ in range(12):
        poset = build_gap_poset(random_generators(rng))
        assert count_lower_ideals(poset) == len(enumerate_lower_ideals(poset))


def test_caps_raise():
    poset = build_gap_poset((3, 5))
    with pytest.raises(CapExceededError):
        enumerate_lower_ideals(poset, cap=3)
    with pytest.raises(CapExceededError):
        count_lower_ideals(poset, cap=3)


def test_enumeration_matches_subset_scan():
    """The memoized search returns exactly the downward-closed subsets, each once"""
    for gens in [(3, 4), (3, 5), (4, 5, 6), (4, 7), (5, 6, 9)]:
        poset = build_gap_poset(gens)
        brute = {frozenset(c) for r in range(len(poset.gaps) + 1)
                 for c in itertools.combinations(poset.gaps, r) if poset.is_lower_ideal(c)}
        ideals = enumerate_lower_ideals(poset)
        assert len(ideals) == len(set(ideals))
        assert set(ideals) == brute


def test_enumeration_of_catalan_poset():
    ideals = enumerate_lower_ideals(consecutive_poset(10, 1))
    assert len(ideals) == catalan(10)
    assert ideals[0] == frozenset() and ideals[-1] == frozenset(consecutive_poset(10, 1).gaps)


def test_ideal_core_bijection_anchor():
    poset = build_gap_poset((5, 7, 13))
    assert ideal_to_core({1, 4, 6, 11}, poset) == Partition.of(8, 4, 3, 1)
    assert core_to_ideal(Partition.of(8, 4, 3, 1), poset) == {1, 4, 6, 11}


def test_bijection_errors():
    poset = build_gap_poset((5, 7, 13))
    with pytest.raises(NotAnIdealError) as info:
        ideal_to_core({11}, poset)
    assert info.value.element == 11
    with pytest.raises(NotAnIdealError) as info:
        poset.check_lower_ideal({1, 5})
    assert info.value.missing is None
    with pytest.raises(NotACoreError) as info:
        core_to_ideal(Partition.of(2), build_gap_poset((2, 3)))
    assert info.value.divisor == 2


def test_cores_of_two_three():
    assert enumerate_cores(build_gap_poset((2, 3))) == [Partition(), Partition.of(1)]


def test_every_core_is_a_multicore():
    for gens in [(3, 5), (4, 5, 6), (5, 7, 13)]:
        poset = build_gap_poset(gens)
        cores = enumerate_cores(poset)
        assert len(set(cores)) == len(cores)
        assert all(is_multicore(c, gens) for c in cores)
        assert all(core_to_ideal(c, poset) in set(enumerate_lower_ideals(poset)) for c in cores)


def test_consecutive_poset():
    assert consecutive_poset(3, 2).gaps == (1, 2)
    assert consecutive_poset(5, 1).generators == (5, 6)
    with pytest.raises(DomainError):
        consecutive_poset(0, 2)


def test_multi_catalan_special_cases():
    for s in range(12):
        assert multi_catalan(s, 1) == catalan(s)
        assert multi_catalan(s, 2) == motzkin(s)
    assert multi_catalan(-3, 2) == 1
    with pytest.raises(DomainError):
        multi_catalan(4, 0)


def test_multi_catalan_counts_ideals():
    for p in range(1, 5):
        for s in range(1, 9):
            assert multi_catalan(s, p) == count_lower_ideals(consecutive_poset(s, p))


def test_ideal_class():
    assert ideal_class(frozenset(), 5) == 1
    assert ideal_class({1, 2}, 5) == 3
    assert ideal_class({1, 2, 3, 4}, 5) == 5


def test_multi_catalan_table_is_shared_across_calls():
    assert multi_catalan(30, 2) == motzkin(30)
    table = _MULTI_CATALAN_TABLES[2]
    size = len(table)
    assert size >= 31
    assert [multi_catalan(s, 2) for s in range(10)] == [motzkin(s) for s in range(10)]
    assert _MULTI_CATALAN_TABLES[2] is table and len(table) == size
    assert multi_catalan(size + 1, 2) == motzkin(size + 1)
    assert len(table) == size + 2
