"""Exact arithmetic kernels.

Two building blocks used everywhere else in the package:

* :class:`LaurentPoly` -- a sparse polynomial in one formal variable with
  ``fractions.Fraction`` coefficients and signed integer exponents.
* :class:`TruncSeries` -- a power series in a second formal variable,
  truncated at a fixed order, whose coefficients live in any ring that
  supports ``+``/``-``/``*`` (rationals or Laurent polynomials).

Integers and rationals themselves are Python ``int`` and
``fractions.Fraction``: both are arbitrary precision and already canonical
(reduced, positive denominator), so no wrapper types are introduced.

All values are immutable after construction and all operations are pure,
so instances may be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DivisionByZero(ZeroDivisionError):
    """Division of a Laurent polynomial by the zero polynomial."""


class NonExactDivision(ArithmeticError):
    """Laurent polynomial division left a nonzero remainder."""


class NonInvertibleConstantTerm(ArithmeticError):
    """Series inversion requires a unit constant coefficient."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficient must be int or Fraction, got {value!r}")


class LaurentPoly:
    """Sparse Laurent polynomial: a finite map exponent -> nonzero Fraction.

    The stored form is canonical (zero coefficients are never kept), so two
    polynomials are mathematically equal iff their term maps are identical;
    ``==`` is a structural check. Exponents may be negative.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for exp, coeff in items:
            if not isinstance(exp, int) or isinstance(exp, bool):
                raise TypeError(f"exponent must be int, got {exp!r}")
            c = acc.get(exp, _ZERO) + _as_fraction(coeff)
            if c:
                acc[exp] = c
            else:
                acc.pop(exp, None)
        self._terms = acc

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def var(cls) -> "LaurentPoly":
        """The formal variable itself (exponent 1, coefficient 1)."""
        return cls({1: 1})

    # -- inspection ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Terms in ascending exponent order."""
        return iter(sorted(self._terms.items()))

    def coeff(self, exp: int) -> Fraction:
        return self._terms.get(exp, _ZERO)

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations -----------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            s = out.get(e, _ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return _wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return LaurentPoly()
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = e1 + e2
                s = out.get(e, _ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return _wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self.is_constant():
            # constants must hash like the scalar they equal
            return hash(self.coeff(0))
        return hash(tuple(sorted(self._terms.items())))

    # -- rendering -------------------------------------------------------

    def to_str(self, var: str = "q") -> str:
        """Canonical text form: ascending exponents, ``C*q^E`` terms.

        Exponent 0 omits the variable, exponent 1 drops ``^1``, and unit
        coefficients on a variable part are elided (``q^2``, ``-q^2``).
        This rendering is bit-exact for equal polynomials.
        """
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                body = str(c)
            else:
                qpart = var if e == 1 else f"{var}^{e}"
                if c == 1:
                    body = qpart
                elif c == -1:
                    body = "-" + qpart
                else:
                    body = f"{c}*{qpart}"
            parts.append(body)
        out = parts[0]
        for body in parts[1:]:
            if body.startswith("-"):
                out += " - " + body[1:]
            else:
                out += " + " + body
        return out

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_str()!r})"


def _wrap(terms: dict[int, Fraction]) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    p._terms = terms
    return p


def monomial(exp: int, coeff: Scalar = 1) -> LaurentPoly:
    """The single-term polynomial ``coeff * q^exp``."""
    return LaurentPoly({exp: coeff})


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact product of two Laurent polynomials."""
    return a * b


def lp_div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact quotient ``a / b`` in the Laurent ring.

    Performs ascending-exponent long division after shifting both operands
    so the divisor's lowest exponent is zero. Any nonzero remainder raises
    :class:`NonExactDivision`; nothing is ever truncated silently.
    """
    if b.is_zero:
        raise DivisionByZero("division by the zero polynomial")
    if a.is_zero:
        return LaurentPoly()
    shift = a.min_exp - b.min_exp
    a_lo = a.min_exp
    b_lo = b.min_exp
    rem = {e - a_lo: c for e, c in a._terms.items()}
    div = {e - b_lo: c for e, c in b._terms.items()}
    # exact quotients are bounded in degree by deg(a) - deg(b)
    max_qexp = max(rem) - max(div)
    lead = div[0]
    quot: dict[int, Fraction] = {}
    while rem:
        e = min(rem)
        if e > max_qexp:
            raise NonExactDivision(
                f"{a.to_str()!s} is not divisible by {b.to_str()!s}"
            )
        c = rem[e] / lead
        quot[e] = c
        for be, bc in div.items():
            ne = e + be
            s = rem.get(ne, _ZERO) - c * bc
            if s:
                rem[ne] = s
            else:
                rem.pop(ne, None)
    return _wrap({e + shift: c for e, c in quot.items()})


def lp_eval_q1(a: LaurentPoly) -> Fraction:
    """Value at the point q = 1, i.e. the sum of all coefficients.

    Negative exponents contribute like non-negative ones since 1^e = 1.
    This is a ring homomorphism onto the rationals.
    """
    return sum(a._terms.values(), _ZERO)


class TruncSeries:
    """Power series truncated at a fixed order N (exact modulo t^(N+1)).

    Coefficients may be ints, Fractions, or LaurentPoly values; they only
    need ring arithmetic. Binary operations between series of different
    orders truncate to the smaller order, never claiming more precision
    than both operands carry.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        cs = list(coeffs)
        if order is None:
            if not cs:
                raise ValueError("need coefficients or an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = cs[: order + 1]
        cs += [_ZERO] * (order + 1 - len(cs))
        self._order = order
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, value, order: int) -> "TruncSeries":
        return cls([value], order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls.constant(_ONE, order)

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls.constant(_ZERO, order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coeff(self, n: int):
        if not 0 <= n <= self._order:
            raise IndexError(f"coefficient {n} outside truncation order {self._order}")
        return self._coeffs[n]

    @staticmethod
    def _is_scalar(other) -> bool:
        return isinstance(other, (int, Fraction, LaurentPoly)) and not isinstance(
            other, bool
        )

    def __add__(self, other):
        if isinstance(other, TruncSeries):
            n = min(self._order, other._order)
            return TruncSeries(
                [self._coeffs[i] + other._coeffs[i] for i in range(n + 1)], n
            )
        if self._is_scalar(other):
            cs = list(self._coeffs)
            cs[0] = cs[0] + other
            return TruncSeries(cs, self._order)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self._coeffs], self._order)

    def __sub__(self, other):
        if isinstance(other, TruncSeries) or self._is_scalar(other):
            return self + (-other if isinstance(other, TruncSeries) else -1 * other)
        return NotImplemented

    def __rsub__(self, other):
        if self._is_scalar(other):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            n = min(self._order, other._order)
            out = []
            for m in range(n + 1):
                acc = _ZERO
                for i in range(m + 1):
                    acc = acc + self._coeffs[i] * other._coeffs[m - i]
                out.append(acc)
            return TruncSeries(out, n)
        if self._is_scalar(other):
            return TruncSeries([c * other for c in self._coeffs], self._order)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._order == other._order and all(
            a == b for a, b in zip(self._coeffs, other._coeffs)
        )

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self._coeffs)
        return f"TruncSeries([{body}], order={self._order})"


def _unit_inverse(c0):
    """Inverse of a unit coefficient: nonzero rational or Laurent monomial."""
    if isinstance(c0, (int, Fraction)) and not isinstance(c0, bool):
        if c0 == 0:
            raise NonInvertibleConstantTerm("constant term is zero")
        return _ONE / _as_fraction(c0)
    if isinstance(c0, LaurentPoly):
        if c0.is_zero:
            raise NonInvertibleConstantTerm("constant term is zero")
        if len(c0) != 1:
            raise NonInvertibleConstantTerm(
                f"constant term {c0} is not a unit in the Laurent ring"
            )
        ((e, c),) = c0.items()
        return monomial(-e, _ONE / c)
    raise NonInvertibleConstantTerm(f"unsupported coefficient {c0!r}")


def ts_inverse(s: TruncSeries) -> TruncSeries:
    """Multiplicative inverse modulo t^(N+1).

    The constant coefficient must be a unit (nonzero rational, or a single
    Laurent monomial); otherwise :class:`NonInvertibleConstantTerm`.
    """
    inv0 = _unit_inverse(s.coeff(0))
    out = [inv0]
    for n in range(1, s.order + 1):
        acc = _ZERO
        for i in range(1, n + 1):
            acc = acc + s.coeff(i) * out[n - i]
        out.append(-1 * (inv0 * acc))
    return TruncSeries(out, s.order)


def ts_pow(s: TruncSeries, k: int) -> TruncSeries:
    """k-fold product of a truncated series with itself; k = 0 gives 1."""
    if not isinstance(k, int) or k < 0:
        raise ValueError("power must be a non-negative integer")
    result = TruncSeries.one(s.order)
    for _ in range(k):
        result = result * s
    return result
