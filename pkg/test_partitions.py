#!/usr/bin/env python3
"""
Test partitions, hook lengths, core predicates and the first-column hook bijection
"""

import itertools
import random

import pytest
from pydantic import ValidationError
from sympy.utilities.iterables import partitions as sympy_partitions

from multicores.errors import DomainError
from multicores.partitions import (
    Partition,
    count_subpartitions,
    first_column_hooks,
    hook_length,
    hooks,
    is_core,
    is_core_by_hookset,
    is_multicore,
    iter_subpartitions,
    partition_from_hooks,
    render_diagram,
    subpartitions,
)


def random_partition(rng: random.Random) -> Partition:
    return Partition.from_weak(sorted((rng.randint(1, 7) for _ in range(rng.randint(0, 6))), reverse=True))


def all_partitions(max_size: int):
    """Every partition of size at most max_size."""
    yield Partition()
    for n in range(1, max_size + 1):
        for counts in sympy_partitions(n):
            yield Partition.from_weak(sorted((part for part, m in counts.items() for _ in range(m)), reverse=True))


def test_partition_validation():
    with pytest.raises(ValidationError):
        Partition(parts=(1, 2))
    with pytest.raises(ValidationError):
        Partition.of(2, 0)
    assert Partition.from_weak([3, 1, 0, 0]) == Partition.of(3, 1)
    assert str(Partition()) == "∅"
    assert str(Partition.of(2, 1)) == "(2,1)"


def test_hook_lengths():
    lam = Partition.of(6, 3, 1, 1)
    assert hook_length(lam, 1, 1) == 9
    assert hook_length(lam, 2, 3) == 1
    assert hooks(Partition.of(2, 1)) == [3, 1, 1]
    with pytest.raises(DomainError):
        hook_length(lam, 2, 4)


def test_hooks_agree_with_hook_length():
    rng = random.Random(11)
    for _ in range(30):
        lam = random_partition(rng)
        assert hooks(lam) == [hook_length(lam, r, c) for r, c in lam.cells()]


def test_four_core_anchor():
    lam = Partition.of(6, 3, 1, 1)
    assert is_core(lam, 4)
    assert first_column_hooks(lam) == {1, 2, 5, 9}


def test_multicore_anchor():
    assert partition_from_hooks({1, 4, 6, 11}) == Partition.of(8, 4, 3, 1)
    assert is_multicore(Partition.of(8, 4, 3, 1), (5, 7, 13))
    assert not is_multicore(Partition.of(2), (2, 3))
    with pytest.raises(DomainError):
        is_multicore(Partition.of(1), [])


def test_hook_bijection_round_trip():
    for lam in all_partitions(20):
        assert partition_from_hooks(first_column_hooks(lam)) == lam
    for r in range(11):
        for h in itertools.combinations(range(1, 11), r):
            assert first_column_hooks(partition_from_hooks(h)) == frozenset(h)
    assert partition_from_hooks(set()) == Partition()
    with pytest.raises(DomainError):
        partition_from_hooks([0, 2])


def test_core_tests_agree():
    """The hook scan and the first-column criterion give the same verdict"""
    for lam in all_partitions(15):
        for s in range(1, 8):
            assert is_core(lam, s) == is_core_by_hookset(lam, s)


def test_conjugate():
    assert Partition.of(3, 1).conjugate() == Partition.of(2, 1, 1)
    rng = random.Random(7)
    for _ in range(20):
        lam = random_partition(rng)
        assert lam.conjugate().conjugate() == lam
        assert lam.conjugate().size == lam.size


def test_subpartitions_of_two_one():
    listed = list(iter_subpartitions(Partition.of(2, 1)))
    assert sorted(p.parts for p in listed) == [(), (1,), (1, 1), (2,), (2, 1)]
    assert count_subpartitions(Partition.of(2, 1)) == 5


def test_subpartition_count_matches_listing():
    rng = random.Random(17)
    for _ in range(25):
        lam = random_partition(rng)
        listed = list(iter_subpartitions(lam))
        assert len(listed) == count_subpartitions(lam)
        assert len(set(listed)) == len(listed)
        assert all(lam.contains(mu) for mu in listed)


def test_subpartitions_streams_above_cap():
    lam = Partition.of(3, 3, 3)
    assert isinstance(subpartitions(lam), list)
    streamed = subpartitions(lam, cap=5)
    assert not isinstance(streamed, list)
    assert sum(1 for _ in streamed) == count_subpartitions(lam)


def test_render_diagram():
    lam = Partition.of(2, 1)
    assert render_diagram(lam) == "1\n3 1"
    assert render_diagram(lam, "english") == "3 1\n1"
    assert render_diagram(lam, show_hooks=False) == "#\n# #"
    assert render_diagram(Partition()) == "∅"
    with pytest.raises(DomainError):
        render_diagram(lam, "russian")
