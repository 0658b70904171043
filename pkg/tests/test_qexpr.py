"""Tests for the exact q-arithmetic kernel."""

import random
from fractions import Fraction
from math import isqrt

import pytest

from wildmckay.qexpr import (
    INFINITE,
    PoleError,
    QExpr,
    QFrac,
    is_infinite,
    monomial,
    nth_root_approx,
)


def sqrt_oracle(n: int, digits: int) -> Fraction:
    """Independent square-root approximation: integer isqrt at fixed scale."""
    scale = 10**digits
    return Fraction(isqrt(n * scale * scale), scale)


class TestMonomial:
    def test_identity_element(self):
        assert monomial(1, 0) == QExpr.one()

    def test_single_monomial(self):
        m = monomial(1, -1)
        assert m.terms == ((Fraction(-1), Fraction(1)),)

    def test_zero_annihilation(self):
        assert monomial(0, 5) == QExpr.zero()
        assert monomial(0, 5).terms == ()


class TestArithmetic:
    def test_division_exact_quotient_half_exponent(self):
        # In t = q^(1/2): (t^2 - 1)/(t - 1) = t + 1, so the result is q^(1/2) + 1.
        num = QExpr.q() - 1
        den = QExpr.q(Fraction(1, 2)) - 1
        result = num / den
        assert result.num == QExpr.q(Fraction(1, 2)) + 1
        assert result.den == QExpr.one()

    def test_division_with_nontrivial_denominator(self):
        # In t = q^(1/3): (t^3 - 1)/(t^2 - 1); gcd is t - 1, leaving
        # (t^2 + t + 1)/(t + 1), which is not a polynomial.
        num = QExpr.q() - 1
        den = QExpr.q(Fraction(2, 3)) - 1
        result = num / den
        third = Fraction(1, 3)
        assert result.num == QExpr({2 * third: 1, third: 1, 0: 1})
        assert result.den == QExpr({third: 1, 0: 1})

    def test_additive_identity(self):
        x = QExpr({Fraction(3, 2): 2, -1: 5})
        assert x + QExpr.zero() == x
        assert QFrac(x, QExpr.q() + 1) + 0 == QFrac(x, QExpr.q() + 1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            QFrac(QExpr.one()) / QFrac(QExpr.zero())
        with pytest.raises(ZeroDivisionError):
            QFrac(QExpr.one(), QExpr.zero())

    def test_fraction_cancellation_is_canonical(self):
        q = QExpr.q()
        a = QFrac((q - 1) * (q + 1), (q - 1) * q)
        b = QFrac(q + 1, q)
        assert a == b
        assert hash(a) == hash(b)

    def test_negative_exponent_normalization(self):
        # q^(-2) and 1/q^2 canonicalize identically.
        assert QFrac(QExpr.q(-2)) == QFrac(1, QExpr.q(2))


class TestEvaluate:
    def test_serre_shape_at_5(self):
        # q^(1-n) with n = 2
        assert QExpr.q(-1).evaluate(5) == Fraction(1, 5)

    def test_polynomial_value(self):
        expr = QExpr.q(4) + QExpr.q(3)
        assert expr.evaluate(5) == 750

    def test_sqrt_approximation(self):
        expr = QExpr.q(Fraction(1, 2)) + 1
        tol = Fraction(1, 10**9)
        value = expr.evaluate(5, precision=tol)
        target = sqrt_oracle(5, 15) + 1
        assert abs(value - target) <= tol + Fraction(1, 10**15)

    def test_fractional_requires_precision(self):
        with pytest.raises(ValueError):
            QExpr.q(Fraction(1, 2)).evaluate(5)

    def test_pole_error(self):
        frac = QFrac(1, QExpr.q() - 1)
        with pytest.raises(PoleError):
            frac.evaluate(1)

    def test_fraction_evaluate_fractional_exponents(self):
        # (q - 1)/(q^(1/2) - 1) = q^(1/2) + 1 at q = 5
        frac = QFrac(QExpr.q() - 1, QExpr.q(Fraction(1, 2)) - 1)
        tol = Fraction(1, 10**9)
        value = frac.evaluate(5, precision=tol)
        target = sqrt_oracle(5, 15) + 1
        assert abs(value - target) <= 2 * tol


def random_qexpr(rng: random.Random, max_terms: int = 4) -> QExpr:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
        coeff = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        terms[exp] = coeff
    return QExpr(terms)


class TestRingAxioms:
    N_CASES = 1000

    def test_axioms_on_random_triples(self):
        rng = random.Random(20260808)
        for _ in range(self.N_CASES):
            a = random_qexpr(rng)
            b = random_qexpr(rng)
            c = random_qexpr(rng)
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a + b == b + a
            assert a * (b + c) == a * b + a * c

    def test_mul_div_roundtrip(self):
        rng = random.Random(55)
        checked = 0
        while checked < 200:
            a = random_qexpr(rng)
            b = random_qexpr(rng)
            if b.is_zero:
                continue
            checked += 1
            assert (QFrac(a) * b) / b == QFrac(a)

    def test_eval_is_ring_homomorphism(self):
        rng = random.Random(99)
        for _ in range(300):
            a = QExpr({rng.randint(-4, 4): Fraction(rng.randint(-9, 9)) for _ in range(rng.randint(0, 3))})
            b = QExpr({rng.randint(-4, 4): Fraction(rng.randint(-9, 9)) for _ in range(rng.randint(0, 3))})
            q0 = Fraction(rng.randint(1, 7), rng.randint(1, 3))
            assert (a * b).evaluate(q0) == a.evaluate(q0) * b.evaluate(q0)
            assert (a + b).evaluate(q0) == a.evaluate(q0) + b.evaluate(q0)


class TestSerialization:
    def test_qexpr_roundtrip(self):
        expr = QExpr({Fraction(-1, 2): Fraction(3, 4), 2: -5})
        data = expr.to_json()
        assert data == [[-1, 2, 3, 4], [2, 1, -5, 1]]
        assert QExpr.from_json(data) == expr

    def test_qfrac_roundtrip(self):
        frac = QFrac(QExpr.q() + 1, QExpr.q(2) + QExpr.q())
        data = frac.to_json()
        assert set(data) == {"num", "den"}
        assert QFrac.from_json(data) == frac


class TestInfinite:
    def test_singleton_and_repr(self):
        assert is_infinite(INFINITE)
        assert not is_infinite(QFrac(1))
        assert repr(INFINITE) == "Infinite"


class TestNthRoot:
    def test_matches_isqrt_oracle(self):
        tol = Fraction(1, 10**12)
        for n in (2, 3, 5, 7, 10):
            approx = nth_root_approx(n, 2, tol)
            target = sqrt_oracle(n, 18)
            assert abs(approx - target) <= tol + Fraction(1, 10**18)

    def test_exact_cube(self):
        tol = Fraction(1, 10**9)
        approx = nth_root_approx(27, 3, tol)
        assert abs(approx - 3) <= tol
