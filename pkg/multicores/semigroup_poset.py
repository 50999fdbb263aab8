"""Gap posets P_S of numerical semigroups and their lower ideals.

a covers b in P_S exactly when a - b is a generator. Since every cover goes from a
larger gap to a smaller one, listing the gaps in increasing order is a linear
extension, which the ideal search relies on.
"""
from __future__ import annotations

import bisect
import math
import threading
import logging
from collections.abc import Iterable, Iterator
from functools import lru_cache
from typing import Any

import networkx as nx
from pydantic import BaseModel, ConfigDict, PrivateAttr

from multicores.config import DEFAULT_MAX_COUNT, DEFAULT_MAX_ITEMS
from multicores.errors import (
    CapExceededError,
    DomainError,
    InfinitePosetError,
    NotACoreError,
    NotAnIdealError,
)
from multicores.exact_algebra import PowerSeries, series_geometric
from multicores.partitions import Partition, core_witness, first_column_hooks, partition_from_hooks

logger = logging.getLogger(__name__)

LowerIdeal = frozenset  # downward-closed set of gaps


def normalize_generators(gens: Iterable[int]) -> tuple[int, ...]:
    values = tuple(sorted(set(int(g) for g in gens)))
    if not values:
        raise DomainError("the generator set S must be non-empty")
    if values[0] < 1:
        raise DomainError(f"generators must be positive integers, got {values}")
    return values


class GapPoset(BaseModel):
    """P_S: the gaps of the semigroup generated by S with a > b when a - b is in S."""

    model_config = ConfigDict(frozen=True)

    generators: tuple[int, ...]
    gaps: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]

    _graph: Any = PrivateAttr(default=None)
    _lower_covers: dict = PrivateAttr(default_factory=dict)

    def model_post_init(self, context: Any, /) -> None:
        # edges point from the covered element up to the covering one
        graph = nx.DiGraph()
        graph.add_nodes_from(self.gaps)
        graph.add_edges_from((b, a) for a, b in self.covers)
        self._graph = graph
        lower: dict[int, list[int]] = {g: [] for g in self.gaps}
        for a, b in self.covers:
            lower[a].append(b)
        self._lower_covers = {g: tuple(sorted(bs)) for g, bs in lower.items()}

    @property
    def graph(self) -> nx.DiGraph:
        return self._graph

    @property
    def frobenius_number(self) -> int:
        return max(self.gaps, default=-1)

    def lower_covers(self, a: int) -> tuple[int, ...]:
        return self._lower_covers[a]

    def leq(self, a: int, b: int) -> bool:
        """a <= b in the reflexive-transitive closure of the cover relation."""
        return a == b or nx.has_path(self._graph, a, b)

    def below(self, a: int) -> frozenset[int]:
        return frozenset(nx.ancestors(self._graph, a))

    def ideal_violation(self, subset: Iterable[int]) -> tuple[int, int | None] | None:
        """(element, missing lower cover) witnessing that subset is not a lower ideal.

        The missing cover is None when the element is not a gap at all.
        """
        members = set(subset)
        for a in sorted(members):
            if a not in self._lower_covers:
                return a, None
            for b in self._lower_covers[a]:
                if b not in members:
                    return a, b
        return None

    def is_lower_ideal(self, subset: Iterable[int]) -> bool:
        return self.ideal_violation(subset) is None

    def check_lower_ideal(self, subset: Iterable[int]) -> LowerIdeal:
        subset = frozenset(subset)
        violation = self.ideal_violation(subset)
        if violation is not None:
            raise NotAnIdealError(subset, *violation)
        return subset

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Covers that are not implied by chains, as (upper, lower) pairs."""
        reduced = nx.transitive_reduction(self._graph)
        return sorted((a, b) for b, a in reduced.edges)

    def to_dot(self, reduce: bool = False) -> str:
        edges = self.hasse_edges() if reduce else list(self.covers)
        name = "P_" + "_".join(map(str, self.generators))
        lines = [f'digraph "{name}" {{', "rankdir=BT;", "node [shape=plaintext fontname=Arial];"]
        lines.extend(f'"{g}";' for g in self.gaps)
        lines.extend(f'"{b}" -> "{a}";' for a, b in edges)
        lines.append("}")
        return "\n".join(lines)

    def export(self) -> dict:
        return {
            "generators": list(self.generators),
            "gaps": list(self.gaps),
            "covers": [list(c) for c in self.covers],
        }


def build_gap_poset(gens: Iterable[int]) -> GapPoset:
    generators = normalize_generators(gens)
    divisor = math.gcd(*generators)
    if divisor > 1:
        raise InfinitePosetError(generators, divisor)

    # once min(S) consecutive integers are representable, all larger ones are too
    smallest = generators[0]
    representable = [True]
    gaps: list[int] = []
    run, m = 0, 0
    while run < smallest:
        m += 1
        ok = any(m >= s and representable[m - s] for s in generators)
        representable.append(ok)
        if ok:
            run += 1
        else:
            run = 0
            gaps.append(m)

    gapset = set(gaps)
    covers = tuple((a, a - s) for a in gaps for s in generators if a - s in gapset)
    logger.debug(f"Built P_{generators}: {len(gaps)} gaps, {len(covers)} covers")
    return GapPoset(generators=generators, gaps=tuple(gaps), covers=covers)


def semigroup_series(gens: Iterable[int], order: int) -> PowerSeries:
    """prod 1/(1 - x^s): the coefficient of x^k counts representations of k."""
    series = PowerSeries.constant(1, order)
    for s in normalize_generators(gens):
        series = series * series_geometric(s, order)
    return series


def gaps_from_series(series: PowerSeries) -> list[int]:
    return [k for k in range(1, series.order) if series[k] == 0]


def _search_tables(poset: GapPoset) -> tuple[list[int], list[int]]:
    """Bitmasks over gap indices: the lower covers of each gap, and the decided gaps a cover can still reach."""
    gaps = poset.gaps
    index = {g: i for i, g in enumerate(gaps)}
    span = max(poset.generators)
    need = [sum(1 << index[b] for b in poset.lower_covers(g)) for g in gaps]
    window = []
    for i, g in enumerate(gaps):
        lo = bisect.bisect_left(gaps, g - span)
        window.append(((1 << i) - 1) & ~((1 << lo) - 1))
    window.append(0)
    return need, window


def _ideal_masks(poset: GapPoset) -> tuple[int, ...]:
    """Every lower ideal as a bitmask over gap indices, memoized on the frontier."""
    need, window = _search_tables(poset)
    last = len(poset.gaps)
    memo: dict[tuple[int, int], tuple[int, ...]] = {}

    def suffixes(i: int, frontier: int) -> tuple[int, ...]:
        if i == last:
            return (0,)
        key = (i, frontier)
        if key in memo:
            return memo[key]
        out = suffixes(i + 1, frontier & window[i + 1])
        if need[i] & ~frontier == 0:
            bit = 1 << i
            out = out + tuple(bit | m for m in suffixes(i + 1, (frontier | bit) & window[i + 1]))
        memo[key] = out
        return out

    return suffixes(0, 0)


def iter_lower_ideals(poset: GapPoset) -> Iterator[LowerIdeal]:
    """Every lower ideal once; the empty ideal first, the full gap set last."""
    gaps = poset.gaps
    for mask in _ideal_masks(poset):
        yield frozenset(gaps[i] for i in range(mask.bit_length()) if mask >> i & 1)


def enumerate_lower_ideals(poset: GapPoset, cap: int = DEFAULT_MAX_ITEMS) -> list[LowerIdeal]:
    count_lower_ideals(poset, cap)
    return list(iter_lower_ideals(poset))


def count_lower_ideals(poset: GapPoset, cap: int = DEFAULT_MAX_COUNT) -> int:
    """Same search as iter_lower_ideals without materializing the ideals."""
    need, window = _search_tables(poset)
    last = len(poset.gaps)
    memo: dict[tuple[int, int], int] = {}

    def count(i: int, frontier: int) -> int:
        if i == last:
            return 1
        key = (i, frontier)
        if key in memo:
            return memo[key]
        total = count(i + 1, frontier & window[i + 1])
        if need[i] & ~frontier == 0:
            total += count(i + 1, (frontier | 1 << i) & window[i + 1])
        memo[key] = total
        return total

    total = count(0, 0)
    if total > cap:
        raise CapExceededError(f"lower ideals of P_{poset.generators}", cap)
    return total


def ideal_to_core(ideal: Iterable[int], poset: GapPoset) -> Partition:
    return partition_from_hooks(poset.check_lower_ideal(ideal))


def core_to_ideal(p: Partition, poset: GapPoset) -> LowerIdeal:
    for s in poset.generators:
        hook = core_witness(p, s)
        if hook is not None:
            raise NotACoreError(p.parts, s, hook)
    return poset.check_lower_ideal(first_column_hooks(p))


def enumerate_cores(poset: GapPoset, cap: int = DEFAULT_MAX_ITEMS) -> list[Partition]:
    """All S-cores, through the ideal bijection."""
    return [partition_from_hooks(ideal) for ideal in enumerate_lower_ideals(poset, cap)]


@lru_cache(maxsize=256)
def consecutive_poset(s: int, p: int) -> GapPoset:
    """T_{s,p} = P_{s, s+1, ..., s+p}."""
    if s < 1 or p < 1:
        raise DomainError(f"T_(s,p) needs s >= 1 and p >= 1, got s={s}, p={p}")
    return build_gap_poset(range(s, s + p + 1))


# p -> [C_0^(p), C_1^(p), ...], extended on demand
_MULTI_CATALAN_TABLES: dict[int, list[int]] = {}
_TABLE_LOCK = threading.Lock()


def _multi_catalan_table(p: int, s: int) -> list[int]:
    with _TABLE_LOCK:
        table = _MULTI_CATALAN_TABLES.setdefault(p, [1])

        def c(v: int) -> int:
            return 1 if v <= 0 else table[v]

        for m in range(len(table), s + 1):
            table.append(sum(c(i - p) * c(m - i) for i in range(1, m + 1)))
    return table


def multi_catalan(s: int, p: int) -> int:
    """C_s^(p) = |J(T_{s,p})| by the first-missing-element recursion."""
    if p < 1:
        raise DomainError(f"multi_catalan needs p >= 1, got {p}")
    if s <= 0:
        return 1
    return _multi_catalan_table(p, s)[s]


def ideal_class(ideal: Iterable[int], s: int) -> int:
    """i such that the ideal contains 1..i-1 but not i; s if it contains 1..s-1."""
    members = set(ideal)
    return next((i for i in range(1, s) if i not in members), s)
