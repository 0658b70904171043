"""Tests for the stringy point-count evaluator."""

from fractions import Fraction

import pytest

from wildmckay.qexpr import QExpr, QFrac, is_infinite
from wildmckay.stringy import (
    MalformedSubsetError,
    SncLogPairData,
    VerticalComponent,
    stringy_count_snc,
    stringy_point_contribution,
)

HALF = Fraction(1, 2)


class TestPointContribution:
    def test_empty_product(self):
        assert stringy_point_contribution(0, []) == QFrac(1)

    def test_negative_coefficient(self):
        # q * (q-1)/(q^2-1) = q/(q+1)
        value = stringy_point_contribution(1, [-1])
        assert value == QFrac(QExpr.q(), QExpr.q() + 1)

    def test_two_half_coefficients(self):
        # ((q-1)/(q^(1/2)-1))^2 = (q^(1/2)+1)^2
        value = stringy_point_contribution(0, [HALF, HALF])
        expected = QFrac((QExpr.q(HALF) + 1) * (QExpr.q(HALF) + 1))
        assert value == expected

    def test_divergent(self):
        assert is_infinite(stringy_point_contribution(0, [HALF, 1]))
        assert is_infinite(stringy_point_contribution(2, [Fraction(3, 2)]))

    def test_fractional_vertical_weight(self):
        assert stringy_point_contribution(HALF, []) == QFrac(QExpr.q(HALF))


def smooth_pair(count):
    return SncLogPairData([], [VerticalComponent(0, {frozenset(): count})])


class TestCountSnc:
    def test_smooth_variety_reproduces_point_count(self):
        assert stringy_count_snc(smooth_pair(7)) == QFrac(7)

    def test_single_point_on_half_divisor(self):
        data = SncLogPairData([HALF], [VerticalComponent(0, {frozenset({1}): 1})])
        assert stringy_count_snc(data) == QFrac(QExpr.q(HALF) + 1)

    def test_coefficient_one_on_populated_stratum_diverges(self):
        data = SncLogPairData([Fraction(1)], [VerticalComponent(0, {frozenset({1}): 1})])
        assert is_infinite(stringy_count_snc(data))

    def test_coefficient_one_on_empty_stratum_is_harmless(self):
        data = SncLogPairData(
            [Fraction(1)],
            [VerticalComponent(0, {frozenset({1}): 0, frozenset(): 3})],
        )
        assert stringy_count_snc(data) == QFrac(3)

    def test_decomposes_into_point_contributions(self):
        cs = [HALF, Fraction(-1), Fraction(1, 3)]
        data = SncLogPairData(
            cs,
            [
                VerticalComponent(0, {frozenset(): 2, frozenset({1}): 1, frozenset({1, 3}): 4}),
                VerticalComponent(2, {frozenset({2}): 3}),
            ],
        )
        expected = (
            stringy_point_contribution(0, []) * 2
            + stringy_point_contribution(0, [HALF]) * 1
            + stringy_point_contribution(0, [HALF, Fraction(1, 3)]) * 4
            + stringy_point_contribution(2, [Fraction(-1)]) * 3
        )
        assert stringy_count_snc(data) == expected

    def test_zero_coefficients_give_plain_count(self):
        data = SncLogPairData(
            [0, 0],
            [VerticalComponent(0, {frozenset(): 5, frozenset({1}): 2, frozenset({1, 2}): 1})],
        )
        assert stringy_count_snc(data) == QFrac(8)

    def test_monotone_in_stratum_counts(self):
        base = SncLogPairData([HALF], [VerticalComponent(0, {frozenset({1}): 1})])
        bigger = SncLogPairData(
            [HALF], [VerticalComponent(0, {frozenset({1}): 1, frozenset(): 2})]
        )
        tol = Fraction(1, 10**12)
        for q0 in (Fraction(3, 2), 4, 9):
            small = stringy_count_snc(base).evaluate(q0, precision=tol)
            large = stringy_count_snc(bigger).evaluate(q0, precision=tol)
            assert large > small


class TestValidationAndJson:
    def test_round_trip(self):
        data = SncLogPairData(
            [HALF, Fraction(-2, 3)],
            [
                VerticalComponent(0, {frozenset(): 4, frozenset({1, 2}): 1}),
                VerticalComponent(Fraction(5, 2), {frozenset({2}): 2}),
            ],
            declared_total=7,
        )
        assert SncLogPairData.from_json(data.to_json()) == data

    def test_parse_rational_forms(self):
        data = SncLogPairData.from_json(
            {
                "horizontal": ["1/2", [2, 3], -1],
                "vertical": [{"a": "3/4", "strata": [{"subset": [1, 3], "count": 2}]}],
            }
        )
        assert data.horizontal == (HALF, Fraction(2, 3), Fraction(-1))
        assert data.vertical[0].a == Fraction(3, 4)

    def test_subset_out_of_range(self):
        with pytest.raises(MalformedSubsetError):
            SncLogPairData([HALF], [VerticalComponent(0, {frozenset({2}): 1})])

    def test_subset_duplicates_rejected(self):
        with pytest.raises(MalformedSubsetError):
            SncLogPairData.from_json(
                {"horizontal": [0], "vertical": [{"a": 0, "strata": [{"subset": [1, 1], "count": 1}]}]}
            )

    def test_total_consistency(self):
        with pytest.raises(ValueError):
            SncLogPairData([], [VerticalComponent(0, {frozenset(): 3})], declared_total=4)

    def test_negative_count_rejected(self):
        with pytest.raises(ValueError):
            SncLogPairData([], [VerticalComponent(0, {frozenset(): -1})])
