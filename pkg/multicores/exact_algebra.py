"""Exact integers, q-polynomials, truncated power series and determinants.

Everything here is immutable and side-effect free. Python ints never overflow, and
series coefficients are Fractions, so no result is ever rounded.
"""
from __future__ import annotations

import math
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Union

from multicores.errors import DomainError, FormulaViolation, NonExactDivisionError

logger = logging.getLogger(__name__)

# Cofactor expansion up to this dimension, fraction-free elimination above it.
COFACTOR_MAX_DIM = 6


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0:
        return 0
    if n < 0:
        raise DomainError(f"binomial({n}, {k}): negative n is outside the supported domain")
    if k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    if n < 0:
        raise DomainError(f"catalan({n}): n must be non-negative")
    return math.comb(2 * n, n) // (n + 1)


def motzkin(n: int) -> int:
    """Motzkin number as the sum of binomial(n, 2k) * C_k."""
    if n < 0:
        raise DomainError(f"motzkin({n}): n must be non-negative")
    return sum(binomial(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


# ---------------------------------------------------------------------------
# Polynomials in q
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QPolynomial:
    """Integer polynomial in q; coeffs[i] is the coefficient of q^i, no trailing zeros."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not all(isinstance(c, int) for c in coeffs):
            raise TypeError(f"QPolynomial coefficients must be integers, got {coeffs}")
        n = len(coeffs)
        while n and coeffs[n - 1] == 0:
            n -= 1
        object.__setattr__(self, "coeffs", coeffs[:n])

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QPolynomial":
        if power < 0:
            raise DomainError(f"monomial power must be non-negative, got {power}")
        return cls((0,) * power + (coeff,))

    @classmethod
    def from_counts(cls, values: Iterable[int]) -> "QPolynomial":
        """Sum of q^v over a multiset of non-negative integers."""
        coeffs: list[int] = []
        for v in values:
            if v < 0:
                raise DomainError(f"exponent must be non-negative, got {v}")
            if v >= len(coeffs):
                coeffs.extend([0] * (v + 1 - len(coeffs)))
            coeffs[v] += 1
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, power: int) -> int:
        if power < 0:
            raise IndexError(power)
        return self.coeffs[power] if power < len(self.coeffs) else 0

    @staticmethod
    def _coerce(other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(tuple(self[i] + other[i] for i in range(size)))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return QPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise DomainError("negative powers of q-polynomials are not polynomials")
        result = QPolynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exact_div(self, divisor: "QPolynomial") -> "QPolynomial":
        """Long division that must leave no remainder."""
        divisor = self._coerce(divisor)
        if not divisor:
            raise NonExactDivisionError("division of a q-polynomial by zero")
        rem = list(self.coeffs)
        lead = divisor.coeffs[-1]
        dd = divisor.degree
        quotient = [0] * max(len(rem) - dd, 0)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            top = rem[shift + dd]
            if top == 0:
                continue
            factor, r = divmod(top, lead)
            if r:
                raise NonExactDivisionError(f"{self} is not divisible by {divisor} over the integers")
            quotient[shift] = factor
            for i, c in enumerate(divisor.coeffs):
                rem[shift + i] -= factor * c
        if any(rem):
            raise NonExactDivisionError(f"{self} is not divisible by {divisor}")
        return QPolynomial(tuple(quotient))

    def __call__(self, q):
        value = 0
        for c in reversed(self.coeffs):
            value = value * q + c
        return value

    def at_one(self) -> int:
        return sum(self.coeffs)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if power == 0:
                body = str(c)
            else:
                mono = "q" if power == 1 else f"q^{power}"
                body = mono if c == 1 else ("-" + mono if c == -1 else f"{c}{mono}")
            terms.append(body)
        return " + ".join(terms).replace("+ -", "- ")


def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial [n over k]_q through the product/quotient form."""
    if n < 0:
        raise DomainError(f"q_binomial({n}, {k}): n must be non-negative")
    if k < 0 or k > n:
        return QPolynomial.zero()
    k = min(k, n - k)
    one = QPolynomial.one()
    numerator, denominator = one, one
    for i in range(k):
        numerator = numerator * (one - QPolynomial.monomial(n - i))
        denominator = denominator * (one - QPolynomial.monomial(i + 1))
    return numerator.exact_div(denominator)


@lru_cache(maxsize=None)
def q_binomial_pascal(n: int, k: int) -> QPolynomial:
    """Same polynomial via [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if n < 0:
        raise DomainError(f"q_binomial_pascal({n}, {k}): n must be non-negative")
    if k < 0 or k > n:
        return QPolynomial.zero()
    if k == 0 or k == n:
        return QPolynomial.one()
    return q_binomial_pascal(n - 1, k - 1) + QPolynomial.monomial(k) * q_binomial_pascal(n - 1, k)


# ---------------------------------------------------------------------------
# Determinants
# ---------------------------------------------------------------------------

def _square_rows(m: Sequence[Sequence]) -> list[list]:
    rows = [list(row) for row in m]
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise DomainError(f"determinant needs a square matrix; row {i} has {len(row)} entries, expected {n}")
    return rows


def _laplace(rows: list[list], one):
    n = len(rows)
    if n == 0:
        return one
    if n == 1:
        return rows[0][0]
    total = one - one
    for j, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * _laplace(minor, one)
        total = total - term if j % 2 else total + term
    return total


def _exact_int_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise NonExactDivisionError(f"Bareiss step {a}/{b} is not exact")
    return q


def det_cofactor(m: Sequence[Sequence], one=1):
    """Determinant by expansion along the first row."""
    return _laplace(_square_rows(m), one)


def det_bareiss(m: Sequence[Sequence], one=1, exact_div: Callable | None = None):
    """Fraction-free Gaussian elimination; every division is exact."""
    a = _square_rows(m)
    n = len(a)
    if n == 0:
        return one
    divide = exact_div or _exact_int_div
    negate = False
    previous = one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    negate = not negate
                    break
            else:
                return one - one
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], previous)
        previous = a[k][k]
    return -a[n - 1][n - 1] if negate else a[n - 1][n - 1]


def det_exact(m: Sequence[Sequence[int]]) -> int:
    rows = _square_rows(m)
    if len(rows) <= COFACTOR_MAX_DIM:
        return _laplace(rows, 1)
    return det_bareiss(rows)


def det_qpoly(m: Sequence[Sequence[Union[QPolynomial, int]]]) -> QPolynomial:
    rows = [[QPolynomial._coerce(entry) for entry in row] for row in _square_rows(m)]
    one = QPolynomial.one()
    if len(rows) <= COFACTOR_MAX_DIM:
        return _laplace(rows, one)
    return det_bareiss(rows, one=one, exact_div=lambda a, b: a.exact_div(b))


def hessenberg_catalan_matrix(n: int) -> list[list[int]]:
    return [[binomial(j + 1, i - j + 1) for j in range(1, n)] for i in range(1, n)]


def hessenberg_catalan_det(n: int) -> int:
    """det(binom(j+1, i-j+1)) over 1 <= i,j <= n-1, which equals C_n."""
    if n < 1:
        raise DomainError(f"hessenberg_catalan_det({n}): n must be at least 1")
    return det_exact(hessenberg_catalan_matrix(n))


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class PowerSeries:
    """coeffs[i] is the coefficient of x^i for i < order; nothing is known beyond order."""

    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise DomainError(f"truncation order must be non-negative, got {self.order}")
        coeffs = tuple(Fraction(c) for c in self.coeffs[: self.order])
        coeffs += (Fraction(0),) * (self.order - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls((value,), order)

    @classmethod
    def x_power(cls, m: int, order: int, coeff: Scalar = 1) -> "PowerSeries":
        return cls((0,) * m + (coeff,), order)

    def __getitem__(self, i: int) -> Fraction:
        if i < 0 or i >= self.order:
            raise IndexError(f"coefficient of x^{i} is beyond truncation order {self.order}")
        return self.coeffs[i]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise DomainError(f"cannot raise truncation order from {self.order} to {order}")
        return PowerSeries(self.coeffs, order)

    def _padded(self, order: int) -> "PowerSeries":
        # Newton iterates are approximations, so zero-padding them is legitimate.
        return PowerSeries(self.coeffs, order)

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(order)), order)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(tuple(c * other for c in self.coeffs), self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = [Fraction(0)] * order
        for i in range(order):
            a = self.coeffs[i]
            if a:
                for j in range(order - i):
                    out[i + j] += a * other.coeffs[j]
        return PowerSeries(tuple(out), order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(tuple(c / other for c in self.coeffs), self.order)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return series_divide(self, other)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_integers(self) -> list[int]:
        """Coefficients as ints; a non-integral coefficient is a FormulaViolation."""
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise FormulaViolation(f"coefficient of x^{i} is {c}, expected an integer")
        return [int(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = [f"{c}x^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return (" + ".join(terms) or "0") + f" + O(x^{self.order})"


def series_add(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    return f + g


def series_subtract(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    return f - g


def series_multiply(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    return f * g


def series_inverse(g: PowerSeries) -> PowerSeries:
    if g.order == 0:
        return g
    g0 = g.coeffs[0]
    if g0 == 0:
        raise DomainError("series inverse needs a nonzero constant coefficient")
    inv = [Fraction(1) / g0]
    for n in range(1, g.order):
        acc = sum((g.coeffs[i] * inv[n - i] for i in range(1, n + 1)), Fraction(0))
        inv.append(-acc / g0)
    return PowerSeries(tuple(inv), g.order)


def series_divide(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    if g.order and g.coeffs[0] == 0:
        raise DomainError("series division needs a divisor with nonzero constant coefficient; "
                          "use series_divide_monomial for powers of x")
    order = min(f.order, g.order)
    return f.truncate(order) * series_inverse(g.truncate(order))


def series_divide_monomial(f: PowerSeries, m: int) -> PowerSeries:
    """Exact division by x^m: the m lowest coefficients of f must vanish."""
    if m < 0:
        raise DomainError(f"monomial power must be non-negative, got {m}")
    if m > f.order:
        raise DomainError(f"cannot divide a series of order {f.order} by x^{m}")
    low = [i for i in range(m) if f.coeffs[i] != 0]
    if low:
        raise NonExactDivisionError(
            f"division by x^{m} is not exact: coefficient of x^{low[0]} is {f.coeffs[low[0]]}"
        )
    return PowerSeries(f.coeffs[m:], f.order - m)


def series_geometric(m: int, order: int) -> PowerSeries:
    """1 / (1 - x^m)."""
    if m < 1:
        raise DomainError(f"series_geometric needs m >= 1, got {m}")
    return PowerSeries(tuple(1 if i % m == 0 else 0 for i in range(order)), order)


def series_sqrt(f: PowerSeries) -> PowerSeries:
    """Principal square root by Newton iteration g <- (g + f/g) / 2."""
    if f.order == 0:
        return f
    if f.coeffs[0] != 1:
        raise DomainError(f"series_sqrt needs constant coefficient 1, got {f.coeffs[0]}")
    g = PowerSeries.constant(1, 1)
    precision = 1
    while precision < f.order:
        precision = min(2 * precision, f.order)
        approx = g._padded(precision)
        g = (approx + series_divide(f.truncate(precision), approx)) * Fraction(1, 2)
    return g
