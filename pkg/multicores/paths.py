"""(s,t)-Dyck paths in the rectangle and generalized Dyck paths.

Rectangle paths run from (0,0) to (s,t) with unit N and E steps and keep every lattice
point weakly above y = (t/s)x, so the rectangle is s wide and t tall. The cells between
the path and the upper-left corner form an english Ferrers diagram contained in
diagonal_partition(s, t).

Generalized (n,k) paths run from (0,0) to (n,n) with steps Nk = (0,k), Ek = (k,0) and
Di = (i,i) for 1 <= i <= k-1, staying weakly above y = x.
"""
from __future__ import annotations

import math
import threading
import logging
from collections.abc import Iterator, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from multicores.config import DEFAULT_MAX_ITEMS
from multicores.errors import CapExceededError, DomainError, LabelingError, NotCoprimeError
from multicores.exact_algebra import QPolynomial, binomial
from multicores.partitions import Partition
from multicores.semigroup_poset import LowerIdeal, consecutive_poset

logger = logging.getLogger(__name__)

UNIT_STEPS = {"N": (0, 1), "E": (1, 0)}


def require_coprime(s: int, t: int) -> None:
    if s < 1 or t < 1:
        raise DomainError(f"rectangle sides must be positive, got s={s}, t={t}")
    divisor = math.gcd(s, t)
    if divisor != 1:
        raise NotCoprimeError((s, t), divisor)


def _above_line(x: int, y: int, s: int, t: int) -> bool:
    return y * s >= t * x


class RectPath(BaseModel):
    model_config = ConfigDict(frozen=True)

    s: int
    t: int
    steps: tuple[str, ...]

    @model_validator(mode="after")
    def _stays_above_diagonal(self) -> "RectPath":
        x = y = 0
        for step in self.steps:
            if step not in UNIT_STEPS:
                raise ValueError(f"rectangle paths use N and E steps only, got {step!r}")
            dx, dy = UNIT_STEPS[step]
            x, y = x + dx, y + dy
            if x > self.s or y > self.t or not _above_line(x, y, self.s, self.t):
                raise ValueError(f"step to ({x},{y}) leaves the region above y = ({self.t}/{self.s})x")
        if (x, y) != (self.s, self.t):
            raise ValueError(f"path ends at ({x},{y}), expected ({self.s},{self.t})")
        return self


def count_rect_paths(s: int, t: int) -> int:
    require_coprime(s, t)
    total, remainder = divmod(binomial(s + t, s), s + t)
    assert remainder == 0, "cycle lemma count must be integral for coprime s, t"
    return total


def diagonal_partition(s: int, t: int) -> Partition:
    """Parts floor(s*i/t) for 1 <= i <= t-1: the cells above the path nearest the diagonal."""
    require_coprime(s, t)
    return Partition.from_weak(s * (t - j) // t for j in range(1, t))


def iter_rect_paths(s: int, t: int) -> Iterator[RectPath]:
    require_coprime(s, t)
    steps: list[str] = []

    def walk(x: int, y: int) -> Iterator[tuple[str, ...]]:
        if (x, y) == (s, t):
            yield tuple(steps)
            return
        if y < t:
            steps.append("N")
            yield from walk(x, y + 1)
            steps.pop()
        if x < s and _above_line(x + 1, y, s, t):
            steps.append("E")
            yield from walk(x + 1, y)
            steps.pop()

    for path in walk(0, 0):
        yield RectPath(s=s, t=t, steps=path)


def enumerate_rect_paths(s: int, t: int, cap: int = DEFAULT_MAX_ITEMS) -> list[RectPath]:
    paths = []
    for path in iter_rect_paths(s, t):
        paths.append(path)
        if len(paths) > cap:
            raise CapExceededError(f"({s},{t})-Dyck paths", cap)
    return paths


def path_partition(path: RectPath) -> Partition:
    """Row r from the top has as many cells as the x at which the path climbs into it."""
    climbs, x = [], 0
    for step in path.steps:
        if step == "N":
            climbs.append(x)
        else:
            x += 1
    return Partition.from_weak(reversed(climbs))


def coarea(path: RectPath) -> int:
    return path_partition(path).size


def coarea_polynomial(s: int, t: int, cap: int = DEFAULT_MAX_ITEMS) -> QPolynomial:
    return QPolynomial.from_counts(coarea(p) for p in enumerate_rect_paths(s, t, cap))


# ---------------------------------------------------------------------------
# Generalized Dyck paths
# ---------------------------------------------------------------------------

def step_names(k: int) -> tuple[str, ...]:
    return ("Nk", "Ek") + tuple(f"D{i}" for i in range(1, k))


def step_vector(step: str, k: int) -> tuple[int, int]:
    if step == "Nk":
        return 0, k
    if step == "Ek":
        return k, 0
    if step.startswith("D") and step[1:].isdigit() and 1 <= int(step[1:]) <= k - 1:
        i = int(step[1:])
        return i, i
    raise ValueError(f"{step!r} is not a step of a generalized path with k={k}")


class GeneralizedDyckPath(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    steps: tuple[str, ...]

    @model_validator(mode="after")
    def _stays_above_diagonal(self) -> "GeneralizedDyckPath":
        if self.n < 1 or self.k < 1:
            raise ValueError(f"generalized paths need n, k >= 1, got n={self.n}, k={self.k}")
        x = y = 0
        for step in self.steps:
            dx, dy = step_vector(step, self.k)
            x, y = x + dx, y + dy
            if y < x or x > self.n or y > self.n:
                raise ValueError(f"step {step} reaches ({x},{y}), outside the region y >= x")
        if (x, y) != (self.n, self.n):
            raise ValueError(f"path ends at ({x},{y}), expected ({self.n},{self.n})")
        return self

    def points(self) -> list[tuple[int, int]]:
        pts, x, y = [(0, 0)], 0, 0
        for step in self.steps:
            dx, dy = step_vector(step, self.k)
            x, y = x + dx, y + dy
            pts.append((x, y))
        return pts


# k -> [GD_{0,k}, GD_{1,k}, ...], extended on demand
_GD_TABLES: dict[int, list[int]] = {}
_TABLE_LOCK = threading.Lock()


def _gd_table(k: int, n: int) -> list[int]:
    with _TABLE_LOCK:
        table = _GD_TABLES.setdefault(k, [1])

        def gd(v: int) -> int:
            return 1 if v <= 0 else table[v]

        for m in range(len(table), n + 1):
            table.append(sum(gd(s - k) * gd(m - s) for s in range(1, m + 1)))
    return table


def count_gd(n: int, k: int) -> int:
    """GD_{n,k} by conditioning on the first return to the diagonal; 1 for n <= 0."""
    if k < 1:
        raise DomainError(f"count_gd needs k >= 1, got {k}")
    if n <= 0:
        return 1
    return _gd_table(k, n)[n]


def iter_gd(n: int, k: int) -> Iterator[GeneralizedDyckPath]:
    if n < 1 or k < 1:
        raise DomainError(f"generalized paths need n, k >= 1, got n={n}, k={k}")
    names = step_names(k)
    vectors = [step_vector(name, k) for name in names]
    steps: list[str] = []

    def walk(x: int, y: int) -> Iterator[tuple[str, ...]]:
        if (x, y) == (n, n):
            yield tuple(steps)
            return
        for name, (dx, dy) in zip(names, vectors):
            nx_, ny = x + dx, y + dy
            if nx_ <= n and ny <= n and ny >= nx_:
                steps.append(name)
                yield from walk(nx_, ny)
                steps.pop()

    for path in walk(0, 0):
        yield GeneralizedDyckPath(n=n, k=k, steps=path)


def enumerate_gd(n: int, k: int, cap: int = DEFAULT_MAX_ITEMS) -> list[GeneralizedDyckPath]:
    paths = []
    for path in iter_gd(n, k):
        paths.append(path)
        if len(paths) > cap:
            raise CapExceededError(f"generalized ({n},{k})-Dyck paths", cap)
    return paths


def inflate(path: GeneralizedDyckPath) -> tuple[str, ...]:
    """Unit N/E steps; Di becomes i N steps followed by i E steps."""
    out: list[str] = []
    for step in path.steps:
        if step == "Nk":
            out.extend("N" * path.k)
        elif step == "Ek":
            out.extend("E" * path.k)
        else:
            i = int(step[1:])
            out.extend("N" * i + "E" * i)
    return tuple(out)


def touch_points(path: GeneralizedDyckPath) -> list[int]:
    """x-coordinates 0 < x < n where the path meets the diagonal."""
    return [x for x, y in path.points()[1:-1] if x == y]


def _column_heights(unit_steps: Sequence[str], n: int) -> list[int]:
    """heights[x]: the y at which the path crosses from column x to x+1."""
    heights, x, y = [0] * n, 0, 0
    for step in unit_steps:
        if step == "N":
            y += 1
        else:
            heights[x] = y
            x += 1
    return heights


def label_cells(n: int, k: int) -> dict[tuple[int, int], int]:
    """Labels of the cells on every k-th diagonal above y = x.

    The cell with lower-left corner (x, x + jk + 1) gets label j(n+k) + x + 1, so the
    j-th labeled diagonal reads 1 + j(n+k), 2 + j(n+k), ... up to (j+1)n - 1, which is
    exactly row j of the gaps of T_{n,k}.
    """
    labels = {}
    j = 0
    while j * k + 1 <= n - 1:
        d = j * k + 1
        for x in range(n - d):
            labels[(x, x + d)] = j * (n + k) + x + 1
        j += 1
    return labels


def gd_to_ideal(path: GeneralizedDyckPath) -> LowerIdeal:
    """Labels of the cells between the inflated path and the diagonal."""
    n, k = path.n, path.k
    heights = _column_heights(inflate(path), n)
    ideal = frozenset(label for (x, y), label in label_cells(n, k).items() if y < heights[x])
    poset = consecutive_poset(n, k)
    violation = poset.ideal_violation(ideal)
    if violation is not None:
        raise LabelingError(f"labels {sorted(ideal)} under {path.steps} are not a lower ideal of "
                            f"T_({n},{k}): {violation}")
    return ideal


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

_CELL = 24
_PAD = 12


def _svg_points(points: Sequence[tuple[int, int]], height: int) -> str:
    return " ".join(f"{_PAD + x * _CELL},{_PAD + (height - y) * _CELL}" for x, y in points)


def _panel(width: int, height: int, points: list[tuple[int, int]], diagonal: tuple[int, int],
           labels: dict[tuple[int, int], int] | None = None) -> list[str]:
    parts = []
    for x in range(width + 1):
        parts.append(f'<line x1="{_PAD + x * _CELL}" y1="{_PAD}" x2="{_PAD + x * _CELL}" '
                     f'y2="{_PAD + height * _CELL}" stroke="#DDDDDD"/>')
    for y in range(height + 1):
        parts.append(f'<line x1="{_PAD}" y1="{_PAD + y * _CELL}" x2="{_PAD + width * _CELL}" '
                     f'y2="{_PAD + y * _CELL}" stroke="#DDDDDD"/>')
    parts.append(f'<line x1="{_PAD}" y1="{_PAD + height * _CELL}" x2="{_PAD + diagonal[0] * _CELL}" '
                 f'y2="{_PAD + (height - diagonal[1]) * _CELL}" stroke="#708BA6" stroke-dasharray="4 3"/>')
    for (x, y), label in (labels or {}).items():
        parts.append(f'<text x="{_PAD + x * _CELL + _CELL // 2}" y="{_PAD + (height - y) * _CELL - _CELL // 3}" '
                     f'font-size="9" text-anchor="middle" fill="#555555">{label}</text>')
    parts.append(f'<polyline points="{_svg_points(points, height)}" fill="none" stroke="#DAB21D" stroke-width="3"/>')
    return parts


def _unit_points(unit_steps: Sequence[str]) -> list[tuple[int, int]]:
    pts, x, y = [(0, 0)], 0, 0
    for step in unit_steps:
        dx, dy = UNIT_STEPS[step]
        x, y = x + dx, y + dy
        pts.append((x, y))
    return pts


def _wrap_svg(width_px: int, height_px: int, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width_px}" height="{height_px}" '
            f'viewBox="0 0 {width_px} {height_px}">')
    return "\n".join([head, *body, "</svg>"]) + "\n"


def path_svg(path: RectPath | GeneralizedDyckPath, labels: bool = False) -> str:
    if isinstance(path, RectPath):
        width, height = path.s, path.t
        points = _unit_points(path.steps)
        cell_labels = None
    else:
        width = height = path.n
        points = path.points()
        cell_labels = label_cells(path.n, path.k) if labels else None
    body = _panel(width, height, points, (width, height), cell_labels)
    return _wrap_svg(2 * _PAD + width * _CELL, 2 * _PAD + height * _CELL, body)


def paths_grid_svg(paths: Sequence[RectPath | GeneralizedDyckPath], columns: int = 4) -> str:
    """All paths as a grid of panels."""
    if not paths:
        return _wrap_svg(2 * _PAD, 2 * _PAD, [])
    first = paths[0]
    width, height = (first.s, first.t) if isinstance(first, RectPath) else (first.n, first.n)
    panel_w, panel_h = 2 * _PAD + width * _CELL, 2 * _PAD + height * _CELL
    body = []
    for index, path in enumerate(paths):
        row, col = divmod(index, columns)
        points = _unit_points(path.steps) if isinstance(path, RectPath) else path.points()
        body.append(f'<g transform="translate({col * panel_w},{row * panel_h})">')
        body.extend(_panel(width, height, points, (width, height)))
        body.append("</g>")
    rows = (len(paths) + columns - 1) // columns
    return _wrap_svg(min(len(paths), columns) * panel_w, rows * panel_h, body)
