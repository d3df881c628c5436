"""Kernel tests: Laurent polynomials and truncated series."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whitneylah.arith import (
    DivisionByZero,
    LaurentPoly,
    NonExactDivision,
    NonInvertibleConstantTerm,
    TruncSeries,
    lp_div_exact,
    lp_eval_q1,
    lp_mul,
    monomial,
    ts_inverse,
    ts_pow,
)

q = LaurentPoly.var()
qinv = monomial(-1)


class TestSerialization:
    def test_canonical_forms(self):
        assert LaurentPoly().to_str() == "0"
        assert (1 + q).to_str() == "1 + q"
        assert (-qinv).to_str() == "-q^-1"
        assert (2 * q + q**2).to_str() == "2*q + q^2"
        assert (LaurentPoly({0: Fraction(1, 2)}) + q**3).to_str() == "1/2 + q^3"

    def test_sign_folding_and_elisions(self):
        assert (q - 1).to_str() == "-1 + q"
        assert (q - q**2).to_str() == "q - q^2"
        assert (-q - 1).to_str() == "-1 - q"
        assert monomial(2, Fraction(-1, 3)).to_str() == "-1/3*q^2"
        assert monomial(0, -1).to_str() == "-1"
        assert monomial(1).to_str() == "q"

    def test_variable_name_override(self):
        assert (q**2 - 3).to_str("t") == "-3 + t^2"


class TestMul:
    def test_cross_cancellation(self):
        assert lp_mul(qinv + 1, q - 1) == q - qinv

    def test_annihilator(self):
        assert lp_mul(1 + 5 * q, LaurentPoly.zero()).is_zero

    def test_qfactorial_shape(self):
        assert lp_mul(1 + q, 1 + q + q**2) == 1 + 2 * q + 2 * q**2 + q**3


class TestDivExact:
    def test_geometric_factor(self):
        assert lp_div_exact(1 - q**2, 1 - q) == 1 + q

    def test_inverse_of_mul_example(self):
        assert lp_div_exact(q - qinv, qinv + 1) == q - 1

    def test_remainder_raises(self):
        with pytest.raises(NonExactDivision):
            lp_div_exact(1 + q**2, 1 + q)

    def test_zero_divisor_raises(self):
        with pytest.raises(DivisionByZero):
            lp_div_exact(1 + q, LaurentPoly.zero())

    def test_zero_dividend(self):
        assert lp_div_exact(LaurentPoly.zero(), 1 + q).is_zero


class TestEvalQ1:
    def test_coefficient_sum(self):
        assert lp_eval_q1(2 * q + q**2) == 3

    def test_negative_exponents(self):
        assert lp_eval_q1(-monomial(-2) - qinv) == -2

    def test_qint_four(self):
        assert lp_eval_q1(1 + q + q**2 + q**3) == 4


class TestTruncSeries:
    def test_inverse_geometric(self):
        s = TruncSeries([1, -1], 3)
        assert ts_inverse(s) == TruncSeries([1, 1, 1, 1], 3)

    def test_inverse_identity(self):
        assert ts_inverse(TruncSeries.one(5)) == TruncSeries.one(5)

    def test_inverse_laurent_coeffs(self):
        s = TruncSeries([LaurentPoly.one(), -q], 2)
        inv = ts_inverse(s)
        assert list(inv.coeffs) == [LaurentPoly.one(), q, q**2]

    def test_non_invertible_raises(self):
        with pytest.raises(NonInvertibleConstantTerm):
            ts_inverse(TruncSeries([0, 1], 3))
        with pytest.raises(NonInvertibleConstantTerm):
            ts_inverse(TruncSeries([1 + q, 1], 3))

    def test_monomial_constant_term_is_unit(self):
        s = TruncSeries([monomial(-2, 3), q], 3)
        assert s * ts_inverse(s) == TruncSeries.one(3)

    def test_pow(self):
        t = TruncSeries([0, 1], 4)
        assert ts_pow(t, 2) == TruncSeries([0, 0, 1], 4)
        assert ts_pow(TruncSeries([1, 1], 4), 2) == TruncSeries([1, 2, 1], 4)
        assert ts_pow(TruncSeries([0, 1, 1], 3), 2) == TruncSeries([0, 0, 1, 2], 3)
        assert ts_pow(TruncSeries([5, 1], 3), 0) == TruncSeries.one(3)

    def test_order_mixing_takes_minimum(self):
        a = TruncSeries([1, 1, 1, 1], 3)
        b = TruncSeries([1, 2], 1)
        assert (a * b).order == 1
        assert (a + b).order == 1


# -- randomized properties ---------------------------------------------------

coeffs = st.fractions(min_value=-9, max_value=9, max_denominator=9)
exponents = st.integers(min_value=-4, max_value=4)
polys = st.dictionaries(exponents, coeffs, max_size=5).map(LaurentPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, nonzero_polys)
def test_mul_div_roundtrip(a, b):
    assert lp_div_exact(a * b, b) == a


@given(polys, polys)
def test_eval_q1_is_homomorphism(a, b):
    assert lp_eval_q1(a * b) == lp_eval_q1(a) * lp_eval_q1(b)
    assert lp_eval_q1(a + b) == lp_eval_q1(a) + lp_eval_q1(b)


@given(st.lists(st.tuples(exponents, coeffs), max_size=8))
def test_canonical_form_is_construction_order_independent(pairs):
    built = LaurentPoly(pairs)
    rebuilt = LaurentPoly(list(reversed(pairs)))
    assert built == rebuilt
    assert list(built.items()) == list(rebuilt.items())
    assert built.to_str() == rebuilt.to_str()


@given(
    st.lists(coeffs, min_size=1, max_size=5).filter(lambda cs: cs[0] != 0)
)
@settings(max_examples=60)
def test_series_inverse_roundtrip(cs):
    s = TruncSeries(cs, 5)
    assert s * ts_inverse(s) == TruncSeries.one(5)


@given(st.integers(min_value=-3, max_value=3), st.lists(coeffs, max_size=4))
@settings(max_examples=60)
def test_series_inverse_roundtrip_laurent(e, cs):
    coeff_list = [monomial(e)] + [LaurentPoly({0: c}) for c in cs]
    s = TruncSeries(coeff_list, 4)
    assert s * ts_inverse(s) == TruncSeries.one(4)
