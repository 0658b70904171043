"""Tests for the tame local-field enumeration and its exact invariants."""

from fractions import Fraction
from math import gcd
from pathlib import Path

import pytest

from wildmckay.localfields import (
    EtaleAlgebra,
    FieldFixture,
    PartialEnumerationError,
    TameFieldClass,
    algebra_mass_sum,
    crossvalidate_fixtures,
    enumerate_tame_etale_algebras,
    enumerate_tame_field_classes,
    load_fixtures,
    skipped_wild_strata,
    tame_enumeration_is_complete,
)

FIXTURES = Path(__file__).resolve().parent.parent / "data" / "sample_fixtures.json"


class TestFieldClasses:
    def test_base_field(self):
        classes = enumerate_tame_field_classes(5, 1)
        assert len(classes) == 1
        cls = classes[0]
        assert (cls.f, cls.e, cls.disc_exponent, cls.aut_order) == (1, 1, 0, 1)

    def test_quadratics_over_q5(self):
        # Q_5 has exactly three quadratic extensions: the unramified one and
        # two ramified ones (g = gcd(2, 4) = 2 residue twists).
        classes = enumerate_tame_field_classes(5, 2)
        assert [(c.f, c.e, c.disc_exponent, c.aut_order) for c in classes] == [
            (2, 1, 0, 2),
            (1, 2, 1, 2),
            (1, 2, 1, 2),
        ]

    def test_cubics_over_q7(self):
        # g = gcd(3, 6) = 3 and multiplication by 7 is trivial mod 3, so the
        # three residues give three totally ramified classes, each Galois.
        classes = enumerate_tame_field_classes(7, 3)
        assert [(c.f, c.e, c.aut_order) for c in classes] == [
            (3, 1, 3),
            (1, 3, 3),
            (1, 3, 3),
            (1, 3, 3),
        ]
        ramified = [c for c in classes if c.e == 3]
        assert sum(Fraction(1, 7**c.disc_exponent * c.aut_order) for c in ramified) == Fraction(1, 49)

    def test_cubics_over_q5(self):
        # g = gcd(3, 4) = 1: a single ramified class with trivial automorphisms.
        classes = enumerate_tame_field_classes(5, 3)
        assert [(c.f, c.e, c.disc_exponent, c.aut_order) for c in classes] == [
            (3, 1, 0, 3),
            (1, 3, 2, 1),
        ]

    def test_wild_strata_skipped_and_reported(self):
        assert skipped_wild_strata(5, 5) == [(1, 5)]
        assert skipped_wild_strata(5, 10) == [(1, 10), (2, 5)]
        assert all(c.e % 5 != 0 for c in enumerate_tame_field_classes(5, 10))

    def test_totally_ramified_class_count_matches_gcd(self):
        # number of (f=1, e) classes = gcd(e, p-1), each with that aut order
        for p in (5, 7, 11):
            for e in range(1, 7):
                if e % p == 0:
                    continue
                classes = [c for c in enumerate_tame_field_classes(p, e) if c.f == 1]
                assert len(classes) == gcd(e, p - 1)
                assert all(c.aut_order == gcd(e, p - 1) for c in classes)

    def test_wild_class_rejected(self):
        with pytest.raises(ValueError):
            TameFieldClass(5, 1, 5, (0,))

    def test_stratum_mass_identity(self):
        # sum over classes of q^(-f(e-1)) / aut = q^(f(1-e)) / f for the
        # groupoid of degree-ef extensions with residue degree f.
        for p in (5, 7, 11):
            for n in range(1, 7):
                for cls_f in range(1, n + 1):
                    if n % cls_f:
                        continue
                    e = n // cls_f
                    if e % p == 0:
                        continue
                    stratum = [c for c in enumerate_tame_field_classes(p, n) if c.f == cls_f]
                    total = sum(Fraction(1, p**c.disc_exponent * c.aut_order) for c in stratum)
                    assert total == Fraction(1, cls_f * p ** (cls_f * (e - 1)))

    def test_serre_mass_tame_instance(self):
        # f = 1 stratum: sum p^(1-n) exactly
        for p, n in [(5, 2), (5, 3), (5, 4), (7, 3), (11, 6)]:
            stratum = [c for c in enumerate_tame_field_classes(p, n) if c.f == 1]
            total = sum(Fraction(1, p**c.disc_exponent * c.aut_order) for c in stratum)
            assert total == Fraction(1, p ** (n - 1))


class TestEtaleAlgebras:
    def test_degree_one(self):
        algebras = enumerate_tame_etale_algebras(5, 1)
        assert len(algebras) == 1
        assert algebras[0].aut_order == 1

    def test_degree_two_over_q5(self):
        algebras = enumerate_tame_etale_algebras(5, 2)
        stats = sorted((a.disc_exponent, a.aut_order) for a in algebras)
        assert stats == [(0, 2), (0, 2), (1, 2), (1, 2)]

    def test_degree_three_over_q5(self):
        # Brute-force verification of the list: 2 cubic fields, 3 quadratic
        # x linear products, 1 split algebra.  The mass identity below pins
        # the count at 6 (1/6 + 1/2 + 2/10 + 1/3 + 1/25 = 31/25).
        algebras = enumerate_tame_etale_algebras(5, 3)
        assert len(algebras) == 6
        shapes = sorted(tuple(sorted(cls.degree for cls, m in a.factors for _ in range(m))) for a in algebras)
        assert shapes == [(1, 1, 1), (1, 2), (1, 2), (1, 2), (3,), (3,)]
        assert algebra_mass_sum(5, 3) == Fraction(31, 25)

    def test_split_algebra_aut_is_factorial(self):
        base = enumerate_tame_field_classes(7, 1)[0]
        for m in (2, 3, 4):
            algebra = EtaleAlgebra([(base, m)])
            expected = 1
            for i in range(2, m + 1):
                expected *= i
            assert algebra.aut_order == expected

    def test_power_algebra_aut(self):
        # L^m has aut = m! * (aut L)^m
        quad = [c for c in enumerate_tame_field_classes(5, 2) if c.f == 2][0]
        algebra = EtaleAlgebra([(quad, 3)])
        assert algebra.aut_order == 6 * 2**3
        assert algebra.degree == 6
        assert algebra.geometric_component_count == 6

    def test_mass_sums(self):
        assert algebra_mass_sum(5, 1) == 1
        assert algebra_mass_sum(5, 2) == Fraction(6, 5)
        assert algebra_mass_sum(7, 3) == Fraction(57, 49)
        # hand-audited: d=0 terms sum to 1, d=1 to 1/5, d=2 to 2/25, d=3 to 1/125
        assert algebra_mass_sum(5, 4) == Fraction(161, 125)

    def test_partial_enumeration_guard(self):
        assert not tame_enumeration_is_complete(3, 4)
        with pytest.raises(PartialEnumerationError):
            algebra_mass_sum(3, 4)


class TestFixtures:
    def test_sample_file_crossvalidates(self):
        fixtures = load_fixtures(FIXTURES)
        report = crossvalidate_fixtures(fixtures)
        assert report.ok
        assert set(report.uncheckable) == {"2.2.2.1", "2.2.2.2", "2.2.3.1"}
        assert len(report.matched) == len(fixtures) - 3

    def test_matched_ramified_quadratic(self):
        fix = FieldFixture(p=5, n=2, e=2, f=1, disc_exponent=1, aut_order=2, label="5.2.1.1")
        report = crossvalidate_fixtures([fix])
        assert report.matched == ["5.2.1.1"]

    def test_wild_listed_uncheckable(self):
        fix = FieldFixture(p=2, n=2, e=2, f=1, disc_exponent=2, aut_order=2, label="2.2.2.1")
        report = crossvalidate_fixtures([fix])
        assert report.uncheckable == ["2.2.2.1"]
        assert report.ok

    def test_impossible_aut_mismatch(self):
        fix = FieldFixture(p=5, n=2, e=2, f=1, disc_exponent=1, aut_order=3, label="bogus")
        report = crossvalidate_fixtures([fix])
        assert not report.ok
        assert report.mismatches[0][0] == "bogus"

    def test_multiplicity_is_respected(self):
        fix = FieldFixture(p=5, n=2, e=2, f=1, disc_exponent=1, aut_order=2, label="dup")
        report = crossvalidate_fixtures([fix, fix, fix])
        # only two ramified quadratic classes exist
        assert len(report.matched) == 2
        assert len(report.mismatches) == 1
