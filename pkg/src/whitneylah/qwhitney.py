"""Translated q-Whitney numbers of the first, second, and third kinds,
Garsia-Remmel q-Lah numbers, and translated q-Dowling numbers.

The first- and second-kind families are defined by horizontal generating
functions (change of basis between powers of [t] and the generalized
q-factorials [t|alpha]); the recurrences implemented here are forced by two
one-line basis manipulations:

    [t - m]_q      = q^(-m) ([t]_q - [m]_q)
    [t]_q [t|a]_k  = q^(k a) [t|a]_{k+1} + [k a]_q [t|a]_k

so that

    w1[n+1, k] = q^(-n a) ( w1[n, k-1] - [n a]_q w1[n, k] )
    w2[n+1, k] = q^((k-1) a) w2[n, k-1] + [k a]_q w2[n, k]

Negative alpha (needed by the convolution and Dowling identities) enters
through the reflection [-m]_q = -q^(-m) [m]_q applied inside the
recurrences. Values are Laurent polynomials; negative exponents are normal.

Triangles are memoized per (family, alpha) and immutable once built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .arith import LaurentPoly, TruncSeries, lp_div_exact, monomial, ts_inverse
from .qcalc import gqf_at, qbinom, qfact, qint
from .whitney import InvalidAlpha

QWHITNEY_FAMILIES = ("qw1", "qw2", "qwl", "qlah_gr")
QLAH_ROUTES = ("recurrence", "explicit")


class InvalidRange(ValueError):
    """Arguments outside the closed formula's domain of validity."""


def _check_alpha_nonzero(alpha: int) -> None:
    if not isinstance(alpha, int) or alpha == 0:
        raise InvalidAlpha(f"alpha must be a nonzero integer, got {alpha!r}")


def _check_alpha_positive(alpha: int) -> None:
    if not isinstance(alpha, int) or alpha < 1:
        raise InvalidAlpha(f"alpha must be a positive integer, got {alpha!r}")


def qint_signed(m: int) -> LaurentPoly:
    """[m]_q for any integer m, via the reflection [-m]_q = -q^(-m) [m]_q."""
    if m >= 0:
        return qint(m)
    return -1 * (monomial(m) * qint(-m))


@lru_cache(maxsize=None)
def _qw1_row(alpha: int, n: int) -> tuple[LaurentPoly, ...]:
    if n == 0:
        return (LaurentPoly.one(),)
    prev = _qw1_row(alpha, n - 1)
    m = (n - 1) * alpha
    shift = monomial(-m)
    qm = qint_signed(m)
    row = []
    for k in range(n + 1):
        left = prev[k - 1] if 1 <= k <= n else LaurentPoly.zero()
        right = prev[k] if k < n else LaurentPoly.zero()
        row.append(shift * (left - qm * right))
    return tuple(row)


@lru_cache(maxsize=None)
def _qw2_row(alpha: int, n: int) -> tuple[LaurentPoly, ...]:
    if n == 0:
        return (LaurentPoly.one(),)
    prev = _qw2_row(alpha, n - 1)
    row = []
    for k in range(n + 1):
        left = prev[k - 1] if 1 <= k <= n else LaurentPoly.zero()
        right = prev[k] if k < n else LaurentPoly.zero()
        row.append(monomial((k - 1) * alpha) * left + qint_signed(k * alpha) * right)
    return tuple(row)


@lru_cache(maxsize=None)
def _qwl_row(alpha: int, n: int) -> tuple[LaurentPoly, ...]:
    if n == 0:
        return (LaurentPoly.one(),)
    prev = _qwl_row(alpha, n - 1)
    row = []
    for k in range(n + 1):
        left = prev[k - 1] if 1 <= k <= n else LaurentPoly.zero()
        right = prev[k] if k < n else LaurentPoly.zero()
        row.append(
            monomial(alpha * (n - 1 + k - 1)) * left
            + qint((n - 1 + k) * alpha) * right
        )
    return tuple(row)


@lru_cache(maxsize=None)
def _qlah_gr_row(n: int) -> tuple[LaurentPoly, ...]:
    if n == 0:
        return (LaurentPoly.one(),)
    prev = _qlah_gr_row(n - 1)
    row = []
    for k in range(n + 1):
        left = prev[k - 1] if 1 <= k <= n else LaurentPoly.zero()
        right = prev[k] if k < n else LaurentPoly.zero()
        row.append(monomial(n - 1 + k - 1) * left + qint(n - 1 + k) * right)
    return tuple(row)


def qw1(alpha: int, n: int, k: int) -> LaurentPoly:
    """Translated q-Whitney number of the first kind."""
    _check_alpha_nonzero(alpha)
    if n < 0 or k < 0 or k > n:
        return LaurentPoly.zero()
    return _qw1_row(alpha, n)[k]


def qw2(alpha: int, n: int, k: int) -> LaurentPoly:
    """Translated q-Whitney number of the second kind."""
    _check_alpha_nonzero(alpha)
    if n < 0 or k < 0 or k > n:
        return LaurentPoly.zero()
    return _qw2_row(alpha, n)[k]


def qwl(alpha: int, n: int, k: int) -> LaurentPoly:
    """Translated q-Whitney-Lah number, by its triangle recurrence."""
    _check_alpha_positive(alpha)
    if n < 0 or k < 0 or k > n:
        return LaurentPoly.zero()
    return _qwl_row(alpha, n)[k]


def qwl_explicit(alpha: int, n: int, k: int) -> LaurentPoly:
    """Translated q-Whitney-Lah number by the alternating Gaussian-binomial
    sum, divided exactly by [k]_{q^alpha}! [alpha]_q^k.

    The division is mathematically exact; a remainder would signal a
    transcription fault, so it is allowed to raise.
    """
    _check_alpha_positive(alpha)
    if n < 0 or k < 0 or k > n:
        return LaurentPoly.zero()
    acc = LaurentPoly.zero()
    for j in range(k + 1):
        sign = 1 if (k - j) % 2 == 0 else -1
        term = (
            monomial(alpha * math.comb(k - j, 2))
            * qbinom(k, j, alpha)
            * gqf_at(j, alpha, "-", n)
        )
        acc = acc + sign * term
    denom = qfact(k, alpha) * qint(alpha) ** k
    return lp_div_exact(acc, denom)


def qlah_gr(n: int, k: int, route: str = "recurrence") -> LaurentPoly:
    """Garsia-Remmel q-Lah number, by recurrence or by the closed product
    formula C(n,k)_q ([n-1]!/[k-1]!) q^(k(k-1)) (valid for 1 <= k <= n)."""
    if route not in QLAH_ROUTES:
        raise ValueError(f"unknown route {route!r}")
    if route == "recurrence":
        if n < 0 or k < 0 or k > n:
            return LaurentPoly.zero()
        return _qlah_gr_row(n)[k]
    if not 1 <= k <= n:
        raise InvalidRange(f"closed formula needs 1 <= k <= n, got ({n}, {k})")
    ratio = LaurentPoly.one()
    for i in range(k, n):
        ratio = ratio * qint(i)
    return qbinom(n, k) * ratio * monomial(k * (k - 1))


def qdowling(alpha: int, n: int) -> LaurentPoly:
    """Translated q-Dowling number: row sum of the second-kind triangle."""
    _check_alpha_positive(alpha)
    if n < 0:
        return LaurentPoly.zero()
    acc = LaurentPoly.zero()
    for v in _qw2_row(alpha, n):
        acc = acc + v
    return acc


def qdowling_qi(alpha: int, n: int) -> LaurentPoly:
    """Translated q-Dowling number via the explicit convolution
    sum_j (sum_{k<=j} qwl(alpha,j,k)) qw2(-alpha,n,j); the sign of the
    classical alternating formula is carried by the negated alpha."""
    _check_alpha_positive(alpha)
    if n < 0:
        return LaurentPoly.zero()
    total = LaurentPoly.zero()
    for j in range(n + 1):
        inner = LaurentPoly.zero()
        for v in _qwl_row(alpha, j):
            inner = inner + v
        total = total + inner * qw2(-alpha, n, j)
    return total


def gqf_point(t: int, alpha: int, n: int) -> LaurentPoly:
    """The generalized q-factorial [t|alpha]_n at an integer point t:
    the product of [t - i*alpha]_q for i = 0..n-1, with negative arguments
    resolved by the reflection rule. alpha may be negative."""
    out = LaurentPoly.one()
    for i in range(n):
        out = out * qint_signed(t - i * alpha)
    return out


def qwl_egf_sum_series(alpha: int, k: int, order: int) -> TruncSeries:
    """Denominator-cleared generating-function side for the q-Whitney-Lah
    column k: sum_j (-1)^(k-j) q^(alpha C(k-j,2)) C(k,j)_{q^alpha}
    prod_{m<j} (1 - q^(alpha m) [alpha]_q t)^(-1), truncated at ``order``.

    Multiplying its t^n coefficient by [n]_{q^alpha}! yields
    [k]_{q^alpha}! [alpha]_q^k qwl(alpha, n, k).
    """
    _check_alpha_positive(alpha)
    total = TruncSeries.zero(order)
    a = qint(alpha)
    for j in range(k + 1):
        sign = 1 if (k - j) % 2 == 0 else -1
        prod = TruncSeries.one(order)
        for m in range(j):
            prod = prod * ts_inverse(
                TruncSeries([LaurentPoly.one(), -1 * (monomial(alpha * m) * a)], order)
            )
        weight = monomial(alpha * math.comb(k - j, 2)) * qbinom(k, j, alpha)
        total = total + prod * (sign * weight)
    return total


def qbinom_transform(f: Sequence[LaurentPoly], alpha: int = 1) -> list[LaurentPoly]:
    """Forward Gaussian-binomial transform over q^alpha:
    F_k = sum_{j<=k} C(k,j)_{q^alpha} f_j."""
    _check_alpha_positive(alpha)
    out = []
    for k in range(len(f)):
        acc = LaurentPoly.zero()
        for j in range(k + 1):
            acc = acc + qbinom(k, j, alpha) * f[j]
        out.append(acc)
    return out


def qbinom_inverse_transform(F: Sequence[LaurentPoly], alpha: int = 1) -> list[LaurentPoly]:
    """Inverse Gaussian-binomial transform over q^alpha:
    f_k = sum_{j<=k} (-1)^(k-j) q^(alpha C(k-j,2)) C(k,j)_{q^alpha} F_j."""
    _check_alpha_positive(alpha)
    out = []
    for k in range(len(F)):
        acc = LaurentPoly.zero()
        for j in range(k + 1):
            sign = 1 if (k - j) % 2 == 0 else -1
            acc = acc + sign * (
                monomial(alpha * math.comb(k - j, 2)) * qbinom(k, j, alpha) * F[j]
            )
        out.append(acc)
    return out


@dataclass(frozen=True)
class QTriangle:
    """A fully built q-family triangle of Laurent polynomial values."""

    family: str
    alpha: int
    rows: tuple[tuple[LaurentPoly, ...], ...]

    @classmethod
    def build(cls, family: str, alpha: int, n_max: int) -> "QTriangle":
        if family == "qw1":
            _check_alpha_nonzero(alpha)
            rows = tuple(_qw1_row(alpha, n) for n in range(n_max + 1))
        elif family == "qw2":
            _check_alpha_nonzero(alpha)
            rows = tuple(_qw2_row(alpha, n) for n in range(n_max + 1))
        elif family == "qwl":
            _check_alpha_positive(alpha)
            rows = tuple(_qwl_row(alpha, n) for n in range(n_max + 1))
        elif family == "qlah_gr":
            if alpha != 1:
                raise InvalidAlpha("the Garsia-Remmel q-Lah triangle has alpha = 1")
            rows = tuple(_qlah_gr_row(n) for n in range(n_max + 1))
        else:
            raise ValueError(f"unknown q-family {family!r}")
        return cls(family, alpha, rows)

    def value(self, n: int, k: int) -> LaurentPoly:
        if 0 <= k <= n < len(self.rows):
            return self.rows[n][k]
        return LaurentPoly.zero()
