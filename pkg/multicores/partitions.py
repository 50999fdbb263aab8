"""Partitions, hook lengths, cores and the first-column hook bijection.

Rows are numbered from 1 with row 1 the longest; in the french picture row 1 sits at
the bottom. Hook lengths do not depend on the orientation, only rendering does.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from typing import Union

from pydantic import BaseModel, ConfigDict, field_validator

from multicores.config import DEFAULT_SUBPARTITION_CAP
from multicores.errors import DomainError

logger = logging.getLogger(__name__)

HookSet = frozenset  # finite set of distinct positive integers


class Partition(BaseModel):
    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...] = ()

    @field_validator("parts")
    @classmethod
    def _weakly_decreasing(cls, parts: tuple[int, ...]) -> tuple[int, ...]:
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
        return parts

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(parts=tuple(parts))

    @classmethod
    def from_weak(cls, values: Iterable[int]) -> "Partition":
        """Build from a weakly decreasing sequence that may end in zeros."""
        return cls(parts=tuple(v for v in values if v))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(parts=tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self) -> Iterator[tuple[int, int]]:
        for row, part in enumerate(self.parts, start=1):
            for col in range(1, part + 1):
                yield row, col

    def contains(self, other: "Partition") -> bool:
        """True when other <= self componentwise."""
        if other.length > self.length:
            return False
        return all(m <= l for m, l in zip(other.parts, self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "∅"


def hook_length(p: Partition, row: int, col: int) -> int:
    if not (1 <= row <= p.length and 1 <= col <= p.parts[row - 1]):
        raise DomainError(f"cell ({row}, {col}) is not in the diagram of {p}")
    arm = p.parts[row - 1] - col
    leg = sum(1 for part in p.parts[row:] if part >= col)
    return arm + leg + 1


def hooks(p: Partition) -> list[int]:
    """All hook lengths, row by row."""
    conj = p.conjugate().parts
    return [(p.parts[r - 1] - c) + (conj[c - 1] - r) + 1 for r, c in p.cells()]


def core_witness(p: Partition, s: int) -> int | None:
    """A hook length divisible by s, or None for an s-core."""
    if s < 1:
        raise DomainError(f"core order must be at least 1, got {s}")
    return next((h for h in hooks(p) if h % s == 0), None)


def is_core(p: Partition, s: int) -> bool:
    return core_witness(p, s) is None


def is_multicore(p: Partition, gens: Iterable[int]) -> bool:
    gens = list(gens)
    if not gens:
        raise DomainError("is_multicore needs at least one generator")
    if any(s < 1 for s in gens):
        raise DomainError(f"generators must be positive, got {gens}")
    hook_values = hooks(p)
    return all(h % s for h in hook_values for s in gens)


def first_column_hooks(p: Partition) -> HookSet:
    k = p.length
    return frozenset(part + k - i for i, part in enumerate(p.parts, start=1))


def partition_from_hooks(h: Iterable[int]) -> Partition:
    values = sorted(h, reverse=True)
    if any(v < 1 for v in values):
        raise DomainError(f"hook sets contain positive integers only, got {values}")
    if len(set(values)) != len(values):
        raise DomainError(f"hook sets have distinct elements, got {values}")
    k = len(values)
    return Partition(parts=tuple(v - (k - i) for i, v in enumerate(values, start=1)))


def is_core_by_hookset(p: Partition, s: int) -> bool:
    """s-core test via the first-column hooks: h in H and h >= s force h - s in H."""
    if s < 1:
        raise DomainError(f"core order must be at least 1, got {s}")
    hs = first_column_hooks(p)
    return all(h - s in hs for h in hs if h >= s)


def _weak_subsequences(bounds: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not bounds:
        yield ()
        return

    def extend(prefix: list[int], i: int, cap: int):
        if i == len(bounds):
            yield tuple(prefix)
            return
        for v in range(min(cap, bounds[i]), -1, -1):
            prefix.append(v)
            yield from extend(prefix, i + 1, v)
            prefix.pop()

    yield from extend([], 0, bounds[0])


def count_subpartitions(p: Partition) -> int:
    """Number of mu <= p, counted without listing them."""
    if not p.parts:
        return 1
    # ways[v]: sequences for the rows so far whose last value is v
    ways = [1] * (p.parts[0] + 1)
    for bound in p.parts[1:]:
        suffix = 0
        new = [0] * (bound + 1)
        totals = [0] * (len(ways) + 1)
        for v in range(len(ways) - 1, -1, -1):
            suffix += ways[v]
            totals[v] = suffix
        for v in range(bound + 1):
            new[v] = totals[v] if v < len(ways) else 0
        ways = new
    return sum(ways)


def iter_subpartitions(p: Partition) -> Iterator[Partition]:
    for weak in _weak_subsequences(p.parts):
        yield Partition.from_weak(weak)


def subpartitions(p: Partition, cap: int = DEFAULT_SUBPARTITION_CAP) -> Union[list[Partition], Iterator[Partition]]:
    """All mu <= p: a list below the cap, a stream above it."""
    total = count_subpartitions(p)
    if total > cap:
        logger.info(f"{total} subpartitions of {p} exceed cap {cap}; streaming")
        return iter_subpartitions(p)
    return list(iter_subpartitions(p))


def render_diagram(p: Partition, orientation: str = "french", show_hooks: bool = True) -> str:
    if orientation not in ("french", "english"):
        raise DomainError(f"orientation must be 'french' or 'english', got {orientation!r}")
    if not p.parts:
        return "∅"
    values = hooks(p)
    width = len(str(max(values))) if show_hooks else 1
    rows, pos = [], 0
    for part in p.parts:
        cells = values[pos:pos + part] if show_hooks else ["#"] * part
        rows.append(" ".join(f"{c:>{width}}" for c in cells))
        pos += part
    if orientation == "french":
        rows.reverse()
    return "\n".join(rows)
