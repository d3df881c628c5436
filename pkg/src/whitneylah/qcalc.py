"""q-arithmetic primitives, all returned as Laurent polynomials.

The optional ``base`` argument realizes the substitution q -> q^base, so
quantities like [n] over q^a live in the same Laurent ring as everything
else and mixed-base expressions compose directly.
"""

from __future__ import annotations

from functools import lru_cache

from .arith import LaurentPoly, lp_div_exact


class InvalidOrder(ValueError):
    """Falling-factorial order exceeds its argument."""


class NegativeArgument(ValueError):
    """A q-integer of a negative integer was requested.

    Callers that genuinely need one must apply the reflection
    [-m]_q = -q^(-m) [m]_q themselves, keeping its sign and q-power
    conventions visible at the call site.
    """


def _check_base(base: int) -> None:
    if not isinstance(base, int) or base < 1:
        raise ValueError(f"base must be a positive integer, got {base!r}")


@lru_cache(maxsize=None)
def qint(n: int, base: int = 1) -> LaurentPoly:
    """q-integer [n] over q^base: 1 + q^base + ... + q^((n-1)*base).

    ``qint(0)`` is the empty sum, i.e. 0.
    """
    _check_base(base)
    if n < 0:
        raise NegativeArgument(f"q-integer of negative {n}")
    return LaurentPoly({i * base: 1 for i in range(n)})


@lru_cache(maxsize=None)
def qfact(n: int, base: int = 1) -> LaurentPoly:
    """q-factorial [n]! over q^base: the product [1][2]...[n]; [0]! = 1."""
    _check_base(base)
    if n < 0:
        raise NegativeArgument(f"q-factorial of negative {n}")
    if n == 0:
        return LaurentPoly.one()
    return qfact(n - 1, base) * qint(n, base)


@lru_cache(maxsize=None)
def qbinom(n: int, k: int, base: int = 1) -> LaurentPoly:
    """Gaussian binomial coefficient over q^base.

    Zero outside 0 <= k <= n. Computed as [n]!/([k]![n-k]!) by exact
    division, which doubles as a self-check of the division kernel.
    """
    _check_base(base)
    if k < 0 or k > n:
        return LaurentPoly.zero()
    return lp_div_exact(qfact(n, base), qfact(k, base) * qfact(n - k, base))


def qfalling(n: int, k: int, base: int = 1) -> LaurentPoly:
    """q-falling factorial [n][n-1]...[n-k+1] over q^base (= [n]!/[n-k]!)."""
    _check_base(base)
    if n < 0:
        raise NegativeArgument(f"q-falling factorial of negative {n}")
    if k < 0 or k > n:
        raise InvalidOrder(f"order {k} outside 0 <= k <= n = {n}")
    out = LaurentPoly.one()
    for i in range(k):
        out = out * qint(n - i, base)
    return out


def gqf_at(j: int, alpha: int, sign: str, n: int) -> LaurentPoly:
    """Generalized q-factorial of t with increment alpha, at the point t = alpha*j.

    ``sign='-'`` gives the increment -alpha, i.e. the ascending product
    [alpha*j][alpha*(j+1)]...[alpha*(j+n-1)]; ``sign='+'`` the descending
    product [alpha*j][alpha*(j-1)]...[alpha*(j-n+1)]. The descending product
    is 0 as soon as a factor [0] appears (n > j); factors of negative
    integers are refused, see :class:`NegativeArgument`.
    """
    _check_base(alpha)
    if j < 0:
        raise NegativeArgument(f"evaluation point index {j} is negative")
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    out = LaurentPoly.one()
    for i in range(n):
        m = j + i if sign == "-" else j - i
        if m == 0:
            return LaurentPoly.zero()
        if m < 0:
            raise NegativeArgument(
                f"factor [alpha*{m}] of a negative integer at step {i}"
            )
        out = out * qint(m * alpha)
    return out
