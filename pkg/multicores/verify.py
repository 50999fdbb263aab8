"""Checkable statements: each pairs a closed formula with an independent oracle.

Instance functions return (passed, detail) and are module-level so that suites can
fan them out over a process pool. Reports keep instances in parameter order whatever
the number of workers.
"""
from __future__ import annotations

import json
import math
import time
import logging
from collections import Counter
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Optional, Union

import pandas as pd
from pydantic import BaseModel, computed_field

from multicores.config import SuiteRanges
from multicores.errors import DomainError, FormulaViolation, NonExactDivisionError, NotCoprimeError
from multicores.exact_algebra import (
    PowerSeries,
    QPolynomial,
    binomial,
    catalan,
    det_exact,
    det_qpoly,
    hessenberg_catalan_det,
    motzkin,
    q_binomial,
    series_divide,
    series_divide_monomial,
    series_sqrt,
)
from multicores.partitions import (
    Partition,
    first_column_hooks,
    hook_length,
    is_core,
    is_multicore,
    iter_subpartitions,
    partition_from_hooks,
)
from multicores.paths import (
    coarea,
    coarea_polynomial,
    count_gd,
    count_rect_paths,
    diagonal_partition,
    enumerate_gd,
    enumerate_rect_paths,
    gd_to_ideal,
)
from multicores.semigroup_poset import (
    build_gap_poset,
    consecutive_poset,
    core_to_ideal,
    count_lower_ideals,
    enumerate_lower_ideals,
    ideal_class,
    ideal_to_core,
    multi_catalan,
)

logger = logging.getLogger(__name__)

Outcome = tuple[bool, str]


class InstanceResult(BaseModel):
    parameters: dict[str, Union[int, str]]
    passed: bool
    detail: str = ""


class CheckReport(BaseModel):
    statement: str
    parameter_range: str
    instances: list[InstanceResult] = []
    duration_seconds: float = 0.0

    @computed_field
    @property
    def status(self) -> str:
        if not self.instances:
            return "untested"
        return "pass" if all(i.passed for i in self.instances) else "fail"

    @computed_field
    @property
    def first_counterexample(self) -> Optional[InstanceResult]:
        return next((i for i in self.instances if not i.passed), None)


# ---------------------------------------------------------------------------
# Determinant formulas
# ---------------------------------------------------------------------------

def kreweras_matrix(lam: Partition) -> list[list[int]]:
    parts = lam.parts
    k = len(parts)
    return [[binomial(parts[j - 1] + 1, j - i + 1) for j in range(1, k + 1)] for i in range(1, k + 1)]


def kreweras_count(lam: Partition) -> int:
    """Number of partitions contained in lam, as det(binom(lam_j + 1, j - i + 1))."""
    return det_exact(kreweras_matrix(lam))


def _qdet_entry(part: int, i: int, j: int) -> QPolynomial:
    m = j - i + 1
    if m < 0:
        return QPolynomial.zero()
    return QPolynomial.monomial(m * (m - 1) // 2) * q_binomial(part + 1, m)


def qdet_matrix(parts: tuple[int, ...]) -> list[list[QPolynomial]]:
    k = len(parts)
    return [[_qdet_entry(parts[j - 1], i, j) for j in range(1, k + 1)] for i in range(1, k + 1)]


def qdet_coarea(lam: Partition) -> QPolynomial:
    """sum over mu <= lam of q^|mu|, as det(q^binom(j-i+1, 2) [lam_j + 1, j - i + 1]_q)."""
    return det_qpoly(qdet_matrix(lam.parts))


def subpartition_size_polynomial(lam: Partition) -> QPolynomial:
    return QPolynomial.from_counts(mu.size for mu in iter_subpartitions(lam))


def coarea_qdet(s: int, t: int) -> QPolynomial:
    """Coarea generating polynomial of (s,t)-Dyck paths with parts floor(s(t-j)/t)."""
    diagonal_partition(s, t)  # coprimality check
    return det_qpoly(qdet_matrix(tuple(s * (t - j) // t for j in range(1, t))))


def catalan_identity(n: int) -> int:
    """sum_{k=1..n} (-1)^k binom(k+1, n-k) C_k; zero for every n >= 2."""
    if n < 2:
        raise DomainError(f"catalan_identity is stated for n >= 2, got {n}")
    return sum((-1) ** k * binomial(k + 1, n - k) * catalan(k) for k in range(1, n + 1))


def hessenberg_recursion(n: int) -> int:
    """(-1)^(n-1) sum_{k=1..n-1} (-1)^k binom(k+1, n-k) C_k, which reproduces C_n."""
    if n < 2:
        raise DomainError(f"the Hessenberg recursion starts at n = 2, got {n}")
    return (-1) ** (n - 1) * sum((-1) ** k * binomial(k + 1, n - k) * catalan(k) for k in range(1, n))


# ---------------------------------------------------------------------------
# Two-generator semigroups
# ---------------------------------------------------------------------------

def _fractional(numerator: int, denominator: int) -> Fraction:
    return Fraction(numerator % denominator, denominator)


def popoviciu(s: int, t: int, m: int) -> int:
    """N_{s,t}(m) = m/st - {t^-1 m / s} - {s^-1 m / t} + 1 in exact rationals."""
    if s < 1 or t < 1 or math.gcd(s, t) != 1:
        raise NotCoprimeError((s, t), math.gcd(s, t))
    if m < 0:
        raise DomainError(f"popoviciu needs m >= 0, got {m}")
    t_inv = pow(t, -1, s) if s > 1 else 0
    s_inv = pow(s, -1, t) if t > 1 else 0
    value = Fraction(m, s * t) - _fractional(t_inv * m, s) - _fractional(s_inv * m, t) + 1
    if value.denominator != 1:
        raise FormulaViolation(f"N_({s},{t})({m}) evaluated to the non-integer {value}")
    return int(value)


def representation_count(s: int, t: int, m: int) -> int:
    """#{(k, l) >= 0 : sk + tl = m} by direct search."""
    return sum(1 for k in range(m // s + 1) if (m - s * k) % t == 0)


def frobenius_pair(s: int, t: int) -> int:
    if s < 2 or t < 2:
        raise DomainError(f"frobenius_pair needs s, t >= 2, got ({s}, {t})")
    poset = build_gap_poset((s, t))
    value = s * t - s - t
    if poset.frobenius_number != value:
        raise FormulaViolation(f"largest gap of P_({s},{t}) is {poset.frobenius_number}, expected {value}")
    return value


def sylvester_check(s: int, t: int) -> bool:
    """Exactly half of 1..(s-1)(t-1) are gaps."""
    if s < 2 or t < 2:
        raise DomainError(f"sylvester_check needs s, t >= 2, got ({s}, {t})")
    bound = (s - 1) * (t - 1)
    gaps = build_gap_poset((s, t)).gaps
    return 2 * sum(1 for g in gaps if g <= bound) == bound


def _require_odd(s: int) -> None:
    if s < 3 or s % 2 == 0:
        raise DomainError(f"P_(s,s+2) is finite only for odd s; need odd s >= 3, got {s}")


def symmetry_entries(s: int) -> list[tuple[int, int, int, int]]:
    """(i, j, entry, reflected entry) for the rectangle R_s."""
    _require_odd(s)
    return [(i, j, (s + 1) * (j - 1) + i, (s + 1) * (s - 1 - j) + i)
            for j in range(1, s) for i in range(1, s + 2)]


def symmetry_check(s: int) -> CheckReport:
    """(s+1)(j-1)+i is a gap of P_(s,s+2) iff (s+1)(s-1-j)+i is not."""
    start = time.perf_counter()
    _require_odd(s)
    gaps = set(build_gap_poset((s, s + 2)).gaps)
    instances = []
    for i, j, entry, reflected in symmetry_entries(s):
        ok = (entry in gaps) != (reflected in gaps)
        instances.append(InstanceResult(
            parameters={"s": s, "i": i, "j": j},
            passed=ok,
            detail=f"{entry} {'in' if entry in gaps else 'not in'} P, {reflected} {'in' if reflected in gaps else 'not in'} P",
        ))
    return CheckReport(statement=f"symmetry of R_{s} in P_({s},{s + 2})",
                       parameter_range=f"1<=i<={s + 1}, 1<=j<={s - 1}",
                       instances=instances, duration_seconds=time.perf_counter() - start)


def symmetry_table(s: int) -> str:
    """R_s drawn with j increasing upwards; gaps of P_(s,s+2) are starred."""
    _require_odd(s)
    gaps = set(build_gap_poset((s, s + 2)).gaps)
    width = len(str((s + 1) * (s - 1))) + 1
    lines = []
    for j in range(s - 1, 0, -1):
        cells = []
        for i in range(1, s + 2):
            value = (s + 1) * (j - 1) + i
            cells.append(f"{value}{'*' if value in gaps else ' '}".rjust(width + 1))
        lines.append("".join(cells))
    return "\n".join(lines)


def symmetry_pairing(s: int) -> list[tuple[int, int]]:
    """Pairs (m, m') with m = a(s+1)+r+1 and m' = (s-2-a)(s+1)+r+1."""
    _require_odd(s)
    return [(a * (s + 1) + r + 1, (s - 2 - a) * (s + 1) + r + 1)
            for a in range((s - 3) // 2 + 1) for r in range(s + 1)]


# ---------------------------------------------------------------------------
# Multi-Catalan numbers
# ---------------------------------------------------------------------------

def motzkin_identity_check(s: int) -> bool:
    """C_s^(2) equals sum_k binom(s, 2k) C_k."""
    if s < 0:
        raise DomainError(f"motzkin_identity_check needs s >= 0, got {s}")
    return multi_catalan(s, 2) == motzkin(s)


def gf_series(p: int, n_terms: int) -> PowerSeries:
    """(2 - 2x - A_r - sqrt(A_r^2 - 4x^2)) / (2x^(r-1)) with r = p + 1."""
    if p < 1 or n_terms < 1:
        raise DomainError(f"gf_coefficients needs p >= 1 and n_terms >= 1, got p={p}, n_terms={n_terms}")
    r = p + 1
    order = n_terms + r - 1
    one = PowerSeries.constant(1, order)
    x = PowerSeries.x_power(1, order)
    x2 = PowerSeries.x_power(2, order)
    a_r = one - x + series_divide(x2 - PowerSeries.x_power(r - 1, order), one - x)
    root = series_sqrt(a_r * a_r - x2 * 4)
    numerator = one * 2 - x * 2 - a_r - root
    try:
        quotient = series_divide_monomial(numerator, r - 1)
    except NonExactDivisionError as exc:
        raise FormulaViolation(f"numerator of the r={r} generating function is not divisible by x^{r - 1}: {exc}") from exc
    return quotient / 2


def gf_coefficients(p: int, n_terms: int) -> list[int]:
    return gf_series(p, n_terms).to_integers()


def conjecture_rhs(s: int) -> int:
    return sum(binomial(j + 3, 3) * multi_catalan(j, 2) for j in range(s - 1))


def conjecture_total_size(s: int) -> tuple[int, int]:
    """(total size of all (s,s+1,s+2)-cores, sum_{j<=s-2} binom(j+3,3) C_j^(2))."""
    if s < 3:
        raise DomainError(f"the total-size conjecture concerns s >= 3, got {s}")
    poset = consecutive_poset(s, 2)
    lhs = sum(partition_from_hooks(ideal).size for ideal in enumerate_lower_ideals(poset))
    return lhs, conjecture_rhs(s)


def conjecture_lhs_by_paths(s: int) -> int:
    """Same total, reached through generalized (s,2)-paths and a full hook scan."""
    total = 0
    gens = (s, s + 1, s + 2)
    for path in enumerate_gd(s, 2):
        core = partition_from_hooks(gd_to_ideal(path))
        if not is_multicore(core, gens):
            raise FormulaViolation(f"{core} from {path.steps} is not a {gens}-core")
        total += core.size
    return total


# ---------------------------------------------------------------------------
# Instances
# ---------------------------------------------------------------------------

def _box_shapes(size: int) -> list[Partition]:
    return sorted(iter_subpartitions(Partition(parts=(size,) * size)), key=lambda p: (p.size, p.parts))


def _coprime_pairs(sum_max: int, smallest: int = 1) -> list[tuple[int, int]]:
    return [(s, t) for total in range(2, sum_max + 1) for s in range(smallest, total)
            for t in [total - s] if s < t and math.gcd(s, t) == 1 and t >= smallest]


def kreweras_instance(parts: str) -> Outcome:
    lam = Partition.from_weak(map(int, parts.split(","))) if parts else Partition()
    formula = kreweras_count(lam)
    oracle = sum(1 for _ in iter_subpartitions(lam))
    return formula == oracle, f"det={formula} brute={oracle}"


def qdet_instance(parts: str) -> Outcome:
    lam = Partition.from_weak(map(int, parts.split(","))) if parts else Partition()
    formula = qdet_coarea(lam)
    oracle = subpartition_size_polynomial(lam)
    ok = formula == oracle and formula.at_one() == kreweras_count(lam)
    return ok, f"det={formula} brute={oracle}"


def coarea_instance(s: int, t: int) -> Outcome:
    paths = enumerate_rect_paths(s, t)
    from_paths = Counter(coarea(p) for p in paths)
    lam = diagonal_partition(s, t)
    from_shape = Counter(mu.size for mu in iter_subpartitions(lam))
    polynomial = coarea_polynomial(s, t)
    ok = from_paths == from_shape and coarea_qdet(s, t) == polynomial
    return ok, f"coarea polynomial {polynomial}"


def kreweras_diagonal_instance(s: int, t: int) -> Outcome:
    formula = kreweras_count(diagonal_partition(s, t))
    closed = count_rect_paths(s, t)
    return formula == closed, f"det={formula} binom(s+t,s)/(s+t)={closed}"


def catalan_identity_instance(n: int) -> Outcome:
    value = catalan_identity(n)
    return value == 0, f"sum={value}"


def hessenberg_instance(n: int) -> Outcome:
    det = hessenberg_catalan_det(n)
    closed = binomial(2 * n, n) // (n + 1)
    recursion = hessenberg_recursion(n) if n >= 2 else closed
    return det == closed == recursion, f"det={det} recursion={recursion} C_n={closed}"


def popoviciu_instance(s: int, t: int) -> Outcome:
    for m in range(s * t + 1):
        formula, oracle = popoviciu(s, t, m), representation_count(s, t, m)
        if formula != oracle:
            return False, f"m={m}: formula={formula} brute={oracle}"
    return True, f"0<=m<={s * t}"


def frobenius_instance(s: int, t: int) -> Outcome:
    try:
        value = frobenius_pair(s, t)
    except FormulaViolation as exc:
        return False, str(exc)
    if not sylvester_check(s, t):
        return False, "gap count in 1..(s-1)(t-1) is not half"
    gaps = set(build_gap_poset((s, t)).gaps)
    for m in range(1, s * t + 1):
        if (m in gaps) != (popoviciu(s, t, m) == 0):
            return False, f"m={m}: gap membership disagrees with N_(s,t)(m)"
    return True, f"frobenius={value} gaps={len(gaps)}"


def symmetry_instance(s: int) -> Outcome:
    report = symmetry_check(s)
    bad = report.first_counterexample
    if bad is not None:
        return False, f"(i,j)=({bad.parameters['i']},{bad.parameters['j']}): {bad.detail}"
    return True, f"{len(report.instances)} entries"


def symmetry_pairing_instance(s: int) -> Outcome:
    t = s + 2
    half = (s + 1) // 2
    if not (pow(s, -1, t) == half == pow(t, -1, s)):
        return False, f"modular inverses differ from {half}"
    for m, m_prime in symmetry_pairing(s):
        total = popoviciu(s, t, m) + popoviciu(s, t, m_prime)
        if total != 1:
            return False, f"N({m}) + N({m_prime}) = {total}"
    return True, f"{len(symmetry_pairing(s))} pairs"


def multi_catalan_instance(s: int, p: int) -> Outcome:
    recursion = multi_catalan(s, p)
    poset = consecutive_poset(s, p)
    counted = count_lower_ideals(poset)
    listed = len(enumerate_lower_ideals(poset))
    ok = recursion == counted == listed
    if p == 1:
        ok = ok and recursion == catalan(s)
    if p == 2:
        ok = ok and recursion == motzkin(s)
    return ok, f"recursion={recursion} counted={counted} listed={listed}"


def motzkin_instance(s: int) -> Outcome:
    return motzkin_identity_check(s), f"C^(2)={multi_catalan(s, 2)} sum={motzkin(s)}"


def gf_instance(p: int, n_terms: int) -> Outcome:
    try:
        coefficients = gf_coefficients(p, n_terms)
    except FormulaViolation as exc:
        return False, str(exc)
    expected = [multi_catalan(s, p) for s in range(n_terms)]
    return coefficients == expected, f"r={p + 1}: {coefficients[:8]}"


def gd_count_instance(n: int, k: int) -> Outcome:
    listed = len(enumerate_gd(n, k))
    recursion = count_gd(n, k)
    ideals = multi_catalan(n, k)
    return listed == recursion == ideals, f"listed={listed} GD={recursion} C^(k)={ideals}"


def gd_power_instance(n: int, k: int) -> Outcome:
    listed = len(enumerate_gd(n, k))
    return listed == count_gd(n, k) == 2 ** (n - 1), f"GD={listed} 2^(n-1)={2 ** (n - 1)}"


def gd_bijection_instance(n: int, k: int) -> Outcome:
    images = [gd_to_ideal(path) for path in enumerate_gd(n, k)]
    ideals = set(enumerate_lower_ideals(consecutive_poset(n, k)))
    injective = len(set(images)) == len(images)
    onto = set(images) == ideals
    return injective and onto, f"paths={len(images)} distinct={len(set(images))} ideals={len(ideals)}"


def conjecture_instance(s: int) -> Outcome:
    lhs, rhs = conjecture_total_size(s)
    confirm = conjecture_lhs_by_paths(s)
    if confirm != lhs:
        raise FormulaViolation(f"total core size for s={s} differs between ideal and path enumeration: {lhs} vs {confirm}")
    if lhs != rhs:
        logger.warning(f"Total-size conjecture fails at s={s}: lhs={lhs} rhs={rhs}")
    return lhs == rhs, f"lhs={lhs} rhs={rhs}"


def pair_equinumerous_instance(s: int, t: int) -> Outcome:
    poset = build_gap_poset((s, t))
    ideals = enumerate_lower_ideals(poset)
    cores = {ideal_to_core(i, poset) for i in ideals}
    if not all(is_multicore(c, (s, t)) for c in cores):
        return False, "an ideal produced a non-core"
    paths = len(enumerate_rect_paths(s, t))
    closed = count_rect_paths(s, t)
    counts = {len(ideals), len(cores), paths, closed}
    return len(counts) == 1, f"ideals={len(ideals)} cores={len(cores)} paths={paths} formula={closed}"


def consecutive_equinumerous_instance(n: int, k: int) -> Outcome:
    poset = consecutive_poset(n, k)
    ideals = enumerate_lower_ideals(poset)
    gens = poset.generators
    cores = {ideal_to_core(i, poset) for i in ideals}
    if not all(is_multicore(c, gens) for c in cores):
        return False, "an ideal produced a non-core"
    paths = len(enumerate_gd(n, k))
    counts = {len(ideals), len(cores), paths, multi_catalan(n, k)}
    return len(counts) == 1, f"ideals={len(ideals)} cores={len(cores)} paths={paths}"


def decomposition_instance(s: int, p: int) -> Outcome:
    classes = Counter(ideal_class(i, s) for i in enumerate_lower_ideals(consecutive_poset(s, p)))
    for i in range(1, s + 1):
        expected = multi_catalan(i - p, p) * multi_catalan(s - i, p)
        if classes.get(i, 0) != expected:
            return False, f"|J_{i}| = {classes.get(i, 0)}, expected {expected}"
    return True, f"classes {dict(sorted(classes.items()))}"


def _anchor_bijection() -> bool:
    poset = build_gap_poset((5, 7, 13))
    core = ideal_to_core({1, 4, 6, 11}, poset)
    return core == Partition.of(8, 4, 3, 1) and core_to_ideal(core, poset) == {1, 4, 6, 11}


def _anchor_four_core() -> bool:
    lam = Partition.of(6, 3, 1, 1)
    return is_core(lam, 4) and first_column_hooks(lam) == {1, 2, 5, 9} and hook_length(lam, 1, 1) == 9


def _anchor_multicore() -> bool:
    return is_multicore(Partition.of(8, 4, 3, 1), (5, 7, 13))


def _anchor_gaps() -> bool:
    return build_gap_poset((5, 7, 13)).gaps == (1, 2, 3, 4, 6, 8, 9, 11, 16)


def _anchor_diagonal() -> bool:
    return diagonal_partition(7, 5) == Partition.of(5, 4, 2, 1)


ANCHORS: dict[str, Callable[[], bool]] = {
    "{1,4,6,11} <-> (8,4,3,1) in P_(5,7,13)": _anchor_bijection,
    "(6,3,1,1) is a 4-core with first-column hooks {1,2,5,9}": _anchor_four_core,
    "(8,4,3,1) is a (5,7,13)-core": _anchor_multicore,
    "gaps of P_(5,7,13)": _anchor_gaps,
    "diagonal_partition(7,5) = (5,4,2,1)": _anchor_diagonal,
}


def anchor_instance(name: str) -> Outcome:
    return ANCHORS[name](), name


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def _call(fn: Callable[..., Outcome], params: dict[str, Any]) -> Outcome:
    return fn(**params)


def run_check(statement: str, parameter_range: str, fn: Callable[..., Outcome],
              params: list[dict[str, Any]], jobs: int = 1) -> CheckReport:
    logger.info(f"Checking {statement} over {len(params)} instances ({parameter_range})")
    start = time.perf_counter()
    if jobs > 1 and len(params) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_call, [fn] * len(params), params))
    else:
        outcomes = [fn(**p) for p in params]
    instances = [InstanceResult(parameters=p, passed=ok, detail=detail) for p, (ok, detail) in zip(params, outcomes)]
    report = CheckReport(statement=statement, parameter_range=parameter_range,
                         instances=instances, duration_seconds=round(time.perf_counter() - start, 3))
    if report.status != "pass":
        logger.warning(f"{statement}: {report.status}, first counterexample {report.first_counterexample}")
    return report


def _shape_params(size: int) -> list[dict[str, Any]]:
    return [{"parts": ",".join(map(str, lam.parts))} for lam in _box_shapes(size)]


def suite_anchors(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    return [run_check("anchor values", "fixed", anchor_instance,
                      [{"name": name} for name in ANCHORS], 1)]


def suite_kreweras(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    pairs = _coprime_pairs(r.pair_sum_max)
    return [
        run_check("Kreweras determinant counts subpartitions", f"shapes in a {r.box_kreweras}x{r.box_kreweras} box",
                  kreweras_instance, _shape_params(r.box_kreweras), jobs),
        run_check("Kreweras determinant of the diagonal partition is binom(s+t,s)/(s+t)",
                  f"coprime s<t, s+t<={r.pair_sum_max}", kreweras_diagonal_instance,
                  [{"s": s, "t": t} for s, t in pairs], jobs),
    ]


def suite_qdet(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    return [run_check("q-determinant is the size generating polynomial of subpartitions",
                      f"shapes in a {r.box_qdet}x{r.box_qdet} box", qdet_instance, _shape_params(r.box_qdet), jobs)]


def suite_coarea(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    pairs = [(s, t) for s in range(1, r.coarea_sum_max) for t in range(1, r.coarea_sum_max)
             if s != t and s + t <= r.coarea_sum_max and math.gcd(s, t) == 1]
    return [run_check("coarea distribution of (s,t)-Dyck paths", f"coprime s+t<={r.coarea_sum_max}",
                      coarea_instance, [{"s": s, "t": t} for s, t in pairs], jobs)]


def suite_identity(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    return [
        run_check("Catalan identity sum (-1)^k binom(k+1,n-k) C_k = 0", f"2<=n<={r.catalan_identity_max}",
                  catalan_identity_instance, [{"n": n} for n in range(2, r.catalan_identity_max + 1)], jobs),
        *suite_hessenberg(r, jobs),
    ]


def suite_hessenberg(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    return [run_check("Hessenberg determinant equals C_n", f"1<=n<={r.hessenberg_max}",
                      hessenberg_instance, [{"n": n} for n in range(1, r.hessenberg_max + 1)], jobs)]


def suite_popoviciu(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    pairs = [(s, t) for t in range(2, r.popoviciu_max + 1) for s in range(1, t) if math.gcd(s, t) == 1]
    return [run_check("Popoviciu formula equals the representation count", f"coprime s<t<={r.popoviciu_max}, 0<=m<=st",
                      popoviciu_instance, [{"s": s, "t": t} for s, t in pairs], jobs)]


def suite_frobenius(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    pairs = [(s, t) for t in range(3, r.popoviciu_max + 1) for s in range(2, t) if math.gcd(s, t) == 1]
    return [run_check("Frobenius number st-s-t and Sylvester half count", f"coprime 2<=s<t<={r.popoviciu_max}",
                      frobenius_instance, [{"s": s, "t": t} for s, t in pairs], jobs)]


def suite_symmetry(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    odd = [{"s": s} for s in range(3, r.symmetry_max_s + 1, 2)]
    return [
        run_check("R_s symmetry in P_(s,s+2)", f"odd 3<=s<={r.symmetry_max_s}", symmetry_instance, odd, jobs),
        run_check("N(m) + N(m') = 1 on the pairing of R_s", f"odd 3<=s<={r.symmetry_max_s}",
                  symmetry_pairing_instance, odd, jobs),
    ]


def suite_multi_catalan(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    params = [{"s": s, "p": p} for p in range(1, r.multi_catalan_max_p + 1) for s in range(1, r.multi_catalan_max_s + 1)]
    return [run_check("multi-Catalan recursion counts lower ideals of T_(s,p)",
                      f"1<=s<={r.multi_catalan_max_s}, 1<=p<={r.multi_catalan_max_p}", multi_catalan_instance, params, jobs)]


def suite_motzkin(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    return [run_check("C_s^(2) = sum_k binom(s,2k) C_k", f"0<=s<={r.motzkin_max}",
                      motzkin_instance, [{"s": s} for s in range(r.motzkin_max + 1)], jobs)]


def suite_gf(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    return [run_check("generating function with r = p + 1 matches the recursion",
                      f"1<=p<={r.gf_max_p}, {r.gf_terms} terms", gf_instance,
                      [{"p": p, "n_terms": r.gf_terms} for p in range(1, r.gf_max_p + 1)], jobs)]


def suite_gd(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    counts = [{"n": n, "k": k} for k in range(1, r.gd_max_k + 1) for n in range(1, r.gd_max_n + 1)]
    powers = [{"n": n, "k": k} for k in range(1, r.gd_power_max + 1) for n in range(1, k + 1)]
    bijection = [{"n": n, "k": k} for k in range(1, r.gd_bijection_max_k + 1) for n in range(1, r.gd_bijection_max_n + 1)]
    return [
        run_check("generalized Dyck paths are counted by C_n^(k)", f"n<={r.gd_max_n}, k<={r.gd_max_k}",
                  gd_count_instance, counts, jobs),
        run_check("GD_(n,k) = 2^(n-1) for n <= k", f"1<=n<=k<={r.gd_power_max}", gd_power_instance, powers, jobs),
        run_check("labeling sends generalized paths bijectively onto J(T_(n,k))",
                  f"n<={r.gd_bijection_max_n}, k<={r.gd_bijection_max_k}", gd_bijection_instance, bijection, jobs),
    ]


def suite_conjecture(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    return [run_check("total size of (s,s+1,s+2)-cores = sum binom(j+3,3) C_j^(2)",
                      f"3<=s<={r.conjecture_max_s}", conjecture_instance,
                      [{"s": s} for s in range(3, r.conjecture_max_s + 1)], jobs)]


def suite_equinumerous(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    pairs = [{"s": s, "t": t} for s, t in _coprime_pairs(r.pair_sum_max)]
    runs = [{"n": n, "k": k} for k in range(1, r.gd_bijection_max_k + 1) for n in range(1, r.gd_bijection_max_n + 1)]
    return [
        run_check("#(s,t)-cores = #(s,t)-Dyck paths = #ideals of P_(s,t)", f"coprime s<t, s+t<={r.pair_sum_max}",
                  pair_equinumerous_instance, pairs, jobs),
        run_check("#(n..n+k)-cores = #generalized paths = #ideals of T_(n,k)",
                  f"n<={r.gd_bijection_max_n}, k<={r.gd_bijection_max_k}", consecutive_equinumerous_instance, runs, jobs),
    ]


def suite_decomposition(r: SuiteRanges, jobs: int = 1) -> list[CheckReport]:
    params = [{"s": s, "p": p} for p in range(1, r.decomposition_max_p + 1) for s in range(1, r.decomposition_max_s + 1)]
    return [run_check("|J_i(T_(s,p))| = C_(i-p)^(p) C_(s-i)^(p)",
                      f"s<={r.decomposition_max_s}, p<={r.decomposition_max_p}", decomposition_instance, params, jobs)]


SUITES: dict[str, Callable[[SuiteRanges, int], list[CheckReport]]] = {
    "anchors": suite_anchors,
    "kreweras": suite_kreweras,
    "qdet": suite_qdet,
    "coarea": suite_coarea,
    "identity": suite_identity,
    "hessenberg": suite_hessenberg,
    "popoviciu": suite_popoviciu,
    "frobenius": suite_frobenius,
    "symmetry": suite_symmetry,
    "multi-catalan": suite_multi_catalan,
    "motzkin": suite_motzkin,
    "gf": suite_gf,
    "gd": suite_gd,
    "conjecture": suite_conjecture,
    "equinumerous": suite_equinumerous,
    "decomposition": suite_decomposition,
}


def run_suite(name: str, ranges: SuiteRanges | None = None, jobs: int = 1) -> list[CheckReport]:
    ranges = ranges or SuiteRanges()
    if name == "all":
        # hessenberg already runs inside identity
        return [report for key, suite in SUITES.items() if key != "hessenberg" for report in suite(ranges, jobs)]
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return SUITES[name](ranges, jobs)


def equinumerosity_suite(ranges: SuiteRanges | None = None, jobs: int = 1) -> CheckReport:
    """Both equinumerosity statements merged into one report."""
    reports = suite_equinumerous(ranges or SuiteRanges(), jobs)
    return CheckReport(
        statement="cores, paths and lower ideals are equinumerous",
        parameter_range="; ".join(r.parameter_range for r in reports),
        instances=[i for r in reports for i in r.instances],
        duration_seconds=sum(r.duration_seconds for r in reports),
    )


STATUS_ICONS = {"pass": "✅", "fail": "❌", "untested": "⚠️"}


def summarize(reports: Iterable[CheckReport]) -> pd.DataFrame:
    rows = []
    for report in reports:
        failed = sum(1 for i in report.instances if not i.passed)
        rows.append({
            "status": f"{STATUS_ICONS[report.status]} {report.status}",
            "statement": report.statement,
            "range": report.parameter_range,
            "instances": len(report.instances),
            "failed": failed,
        })
    return pd.DataFrame(rows, columns=["status", "statement", "range", "instances", "failed"])


def reports_to_json(reports: Iterable[CheckReport]) -> str:
    """JSON without timings, so identical runs serialize identically."""
    payload = [r.model_dump(mode="json", exclude={"duration_seconds"}) for r in reports]
    return json.dumps(payload, indent=2, ensure_ascii=False)
