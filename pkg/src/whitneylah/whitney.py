"""Translated Whitney numbers and relatives.

Covers the translated Whitney numbers of the first and second kind, the
translated Whitney-Lah numbers through four independent computation routes,
the generic two-sequence recurrence they specialize, and the translated
Dowling numbers (exact row sums, a Dobinski-style floating-point series,
and the alternating Qi-type explicit formula).

Triangles are memoized per (family, alpha): rows are built once, cached,
and thereafter read-only, so concurrent readers are safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .arith import TruncSeries, ts_inverse, ts_pow
from .classical import lah

WHITNEY_FAMILIES = ("tw1", "tw2", "twl")
TWL_METHODS = ("recurrence", "explicit", "product", "scaled")


class InvalidAlpha(ValueError):
    """The translation parameter must be a positive integer."""


class DuplicateBValues(ValueError):
    """The explicit two-sequence formula needs pairwise distinct b values."""


class NoConvergence(ArithmeticError):
    """Series truncation hit its term budget before the stopping rule."""


def _check_alpha(alpha: int) -> None:
    if not isinstance(alpha, int) or alpha < 1:
        raise InvalidAlpha(f"alpha must be a positive integer, got {alpha!r}")


@lru_cache(maxsize=None)
def _tw1_row(alpha: int, n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _tw1_row(alpha, n - 1)
    row = []
    for k in range(n + 1):
        left = prev[k - 1] if 1 <= k <= n else 0
        right = prev[k] if k < n else 0
        row.append(left + alpha * (n - 1) * right)
    return tuple(row)


@lru_cache(maxsize=None)
def _tw2_row(alpha: int, n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _tw2_row(alpha, n - 1)
    row = []
    for k in range(n + 1):
        left = prev[k - 1] if 1 <= k <= n else 0
        right = prev[k] if k < n else 0
        row.append(left + alpha * k * right)
    return tuple(row)


@lru_cache(maxsize=None)
def _twl_row(alpha: int, n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _twl_row(alpha, n - 1)
    row = []
    for k in range(n + 1):
        left = prev[k - 1] if 1 <= k <= n else 0
        right = prev[k] if k < n else 0
        row.append(left + alpha * (n - 1 + k) * right)
    return tuple(row)


def tw1(alpha: int, n: int, k: int) -> int:
    """Translated Whitney number of the first kind, by its recurrence."""
    _check_alpha(alpha)
    if n < 0 or k < 0 or k > n:
        return 0
    return _tw1_row(alpha, n)[k]


def tw2(alpha: int, n: int, k: int) -> int:
    """Translated Whitney number of the second kind, by its recurrence."""
    _check_alpha(alpha)
    if n < 0 or k < 0 or k > n:
        return 0
    return _tw2_row(alpha, n)[k]


def tw2_explicit(alpha: int, n: int, k: int) -> int:
    """Second-kind value by the alternating power sum
    (1/(alpha^k k!)) sum_j (-1)^(k-j) C(k,j) (alpha j)^n."""
    _check_alpha(alpha)
    if n < 0 or k < 0 or k > n:
        return 0
    acc = 0
    for j in range(k + 1):
        acc += (-1) ** (k - j) * math.comb(k, j) * (alpha * j) ** n
    q, rem = divmod(acc, alpha**k * math.factorial(k))
    assert rem == 0
    return q


def _rising_value(j: int, n: int) -> int:
    """Rising factorial j(j+1)...(j+n-1) at an integer point."""
    out = 1
    for i in range(n):
        out *= j + i
    return out


def twl(alpha: int, n: int, k: int, method: str = "recurrence") -> int:
    """Translated Whitney-Lah number by one of four independent routes.

    recurrence : additive triangle recurrence
    explicit   : alternating binomial sum over rising factorials
    product    : alpha^(n-k) (n!/k!) C(n-1, n-k)
    scaled     : alpha^(n-k) times the Lah number
    """
    _check_alpha(alpha)
    if method not in TWL_METHODS:
        raise ValueError(f"unknown method {method!r}")
    if n == 0 and k == 0:
        return 1
    if n < 0 or k < 0 or k > n:
        return 0
    if method == "recurrence":
        return _twl_row(alpha, n)[k]
    if method == "explicit":
        acc = 0
        for j in range(k + 1):
            acc += (-1) ** (k - j) * math.comb(k, j) * _rising_value(j, n)
        q, rem = divmod(acc, math.factorial(k))
        assert rem == 0
        return alpha ** (n - k) * q
    if method == "product":
        if k == 0:
            return 0
        return (
            alpha ** (n - k)
            * (math.factorial(n) // math.factorial(k))
            * math.comb(n - 1, n - k)
        )
    return alpha ** (n - k) * lah(n, k)


@dataclass(frozen=True)
class MansourSpec:
    """Coefficient sequences (a_i) and (b_i) for the generic triangle
    recurrence u(n,k) = u(n-1,k-1) + (a_{n-1} + b_k) u(n-1,k)."""

    a: Callable[[int], Fraction | int]
    b: Callable[[int], Fraction | int]

    @classmethod
    def linear(cls, alpha: int) -> "MansourSpec":
        """a_i = alpha*i, b_j = alpha*j: specializes u to the translated
        Whitney-Lah triangle."""
        return cls(a=lambda i: alpha * i, b=lambda j: alpha * j)


def mansour_u(spec: MansourSpec, n: int, k: int, method: str = "recurrence") -> Fraction:
    """Generic two-sequence triangle value, by recurrence or by the
    partial-fraction explicit formula.

    The explicit route's denominator runs over i = 0..k (i != j); it
    requires b_0..b_k pairwise distinct.
    """
    if method == "recurrence":
        return _mansour_recurrence(spec, n, k)
    if method == "explicit":
        return _mansour_explicit(spec, n, k, denom_bound=k)
    raise ValueError(f"unknown method {method!r}")


def _mansour_recurrence(spec: MansourSpec, n: int, k: int) -> Fraction:
    memo: dict[tuple[int, int], Fraction] = {}

    def u(n: int, k: int) -> Fraction:
        if k < 0 or k > n:
            return Fraction(0)
        if n == 0:
            return Fraction(1) if k == 0 else Fraction(0)
        key = (n, k)
        if key in memo:
            return memo[key]
        if k == 0:
            out = Fraction(1)
            for i in range(n):
                out *= Fraction(spec.a(i)) + Fraction(spec.b(0))
        else:
            out = u(n - 1, k - 1) + (Fraction(spec.a(n - 1)) + Fraction(spec.b(k))) * u(
                n - 1, k
            )
        memo[key] = out
        return out

    return u(n, k)


def _mansour_explicit(spec: MansourSpec, n: int, k: int, denom_bound: int) -> Fraction:
    bs = [Fraction(spec.b(j)) for j in range(max(k, denom_bound) + 1)]
    if len(set(bs[: k + 1])) != k + 1:
        raise DuplicateBValues(f"b_0..b_{k} must be pairwise distinct, got {bs[:k + 1]}")
    total = Fraction(0)
    for j in range(k + 1):
        num = Fraction(1)
        for i in range(n):
            num *= bs[j] + Fraction(spec.a(i))
        den = Fraction(1)
        for i in range(denom_bound + 1):
            if i != j:
                if bs[j] == bs[i]:
                    raise DuplicateBValues(
                        f"b_{j} = b_{i} = {bs[j]} inside denominator range"
                    )
                den *= bs[j] - bs[i]
        total += num / den
    return total


def mansour_u_explicit_as_printed(spec: MansourSpec, n: int, k: int) -> Fraction:
    """Explicit formula with its denominator product over i = 0..n-1
    (i != j), the bound that contradicts the recurrence at (n,k) = (3,1).
    Kept for erratum documentation, not for computation."""
    return _mansour_explicit(spec, n, k, denom_bound=n - 1)


def dowling(alpha: int, n: int) -> int:
    """Translated Dowling number: row sum of the second-kind triangle."""
    _check_alpha(alpha)
    if n < 0:
        return 0
    return sum(_tw2_row(alpha, n))


def dowling_dobinski(
    alpha: int, n: int, rel_tol: float = 1e-12, max_terms: int = 200
) -> float:
    """Dobinski-style series e^(-1/alpha) * sum_i (i*alpha)^n / (i! alpha^i),
    truncated once a term drops below rel_tol times the partial sum.

    This is the package's only floating-point surface.
    """
    _check_alpha(alpha)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if rel_tol <= 0:
        raise ValueError(f"rel_tol must be positive, got {rel_tol}")
    if max_terms < 1:
        raise ValueError(f"max_terms must be at least 1, got {max_terms}")
    total = 1.0 if n == 0 else 0.0
    term = 0.0
    for i in range(1, max_terms):
        if i == 1:
            term = float(alpha) ** (n - 1)
        else:
            term *= (i / (i - 1)) ** n / (i * alpha)
        total += term
        if total > 0.0 and term < rel_tol * total:
            return math.exp(-1.0 / alpha) * total
    raise NoConvergence(
        f"stopping rule did not fire within {max_terms} terms (alpha={alpha}, n={n})"
    )


def dowling_qi(alpha: int, n: int) -> int:
    """Dowling number via the alternating sum over Whitney-Lah row sums:
    sum_j (-1)^(n-j) (sum_k twl(alpha,j,k)) tw2(alpha,n,j)."""
    _check_alpha(alpha)
    if n < 0:
        return 0
    total = 0
    for j in range(n + 1):
        inner = sum(_twl_row(alpha, j))
        total += (-1) ** (n - j) * inner * tw2(alpha, n, j)
    return total


def twl_egf_series(alpha: int, k: int, order: int) -> TruncSeries:
    """Exponential generating function of the Whitney-Lah column k:
    (1/k!) (t/(1 - alpha t))^k, truncated at the given order.

    Its t^n coefficient times n! recovers twl(alpha, n, k) exactly.
    """
    _check_alpha(alpha)
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    geom = ts_inverse(TruncSeries([1, -alpha], order))
    t = TruncSeries([0, 1], order)
    return ts_pow(t * geom, k) * Fraction(1, math.factorial(k))


@dataclass(frozen=True)
class WhitneyTriangle:
    """A fully built translated Whitney-family triangle."""

    family: str
    alpha: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, family: str, alpha: int, n_max: int) -> "WhitneyTriangle":
        rowfns = {"tw1": _tw1_row, "tw2": _tw2_row, "twl": _twl_row}
        if family not in rowfns:
            raise ValueError(f"unknown Whitney family {family!r}")
        _check_alpha(alpha)
        rows = tuple(rowfns[family](alpha, n) for n in range(n_max + 1))
        return cls(family, alpha, rows)

    def value(self, n: int, k: int) -> int:
        if 0 <= k <= n < len(self.rows):
            return self.rows[n][k]
        return 0
