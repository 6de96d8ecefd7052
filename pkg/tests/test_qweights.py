import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from qhurwitz import (
    PoleError,
    Species,
    TruncatedSeries,
    WeightConfig,
    bose_factor,
    parse_rational,
    parse_species_flag,
    quantum_dilog_coeffs,
    reciprocal,
    symmetrized_weight,
    weight_coefficient,
)

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)
FIFTH = Fraction(1, 5)


class TestWeightCoefficient:
    def test_degree_zero_is_one(self):
        for family in ("E", "E'", "H"):
            assert weight_coefficient(family, HALF, 0) == 1
        assert weight_coefficient("Q", (HALF, FIFTH), 0) == 1

    def test_h_degree_one(self):
        for q in (HALF, THIRD, Fraction(-1, 3)):
            assert weight_coefficient("H", q, 1) == 1 / (1 - q)

    def test_e_closed_forms(self):
        q = HALF
        assert weight_coefficient("E", q, 1) == 2
        assert weight_coefficient("E", q, 2) == q / ((1 - q) * (1 - q**2))
        assert weight_coefficient("E'", q, 1) == q / (1 - q)
        assert weight_coefficient("E'", q, 2) == q**3 / ((1 - q) * (1 - q**2))

    def test_q_hybrid_degree_one(self):
        assert weight_coefficient("Q", (HALF, FIFTH), 1) == 1 / (1 - HALF) + 1 / (1 - FIFTH)

    def test_q_hybrid_is_convolution_of_e_and_h(self):
        for i in range(6):
            expected = sum(
                weight_coefficient("E", HALF, m) * weight_coefficient("H", FIFTH, i - m)
                for m in range(i + 1)
            )
            assert weight_coefficient("Q", (HALF, FIFTH), i) == expected

    def test_h_values_positive_for_small_q(self):
        for q in (HALF, THIRD, Fraction(1, 7)):
            for i in range(8):
                assert weight_coefficient("H", q, i) > 0

    def test_pole_error(self):
        with pytest.raises(PoleError):
            weight_coefficient("H", Fraction(1), 1)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            weight_coefficient("X", HALF, 1)


class TestQuantumDilog:
    def test_leading_coefficients(self):
        coeffs = quantum_dilog_coeffs(HALF, 3)
        assert coeffs[0] == 1 / (1 - HALF)
        assert coeffs[1] == Fraction(1, 2) / (1 - HALF**2)
        assert coeffs[2] == Fraction(1, 3) / (1 - HALF**3)

    def test_series_mode(self):
        q = TruncatedSeries.variable("q", 6)
        coeffs = quantum_dilog_coeffs(q, 2)
        assert coeffs[0] == (1 - q).inverse()


class TestSymmetrizedWeight:
    def test_empty_is_one(self):
        for family in ("E", "E'", "H"):
            assert symmetrized_weight(family, HALF, ()) == 1

    def test_single_colength(self):
        # Values fixed by the cross-pipeline equality: a single branch point
        # of colength c sums the levels of its product, giving 1/(1-q^c) for
        # E and H (levels from 0) and q^c/(1-q^c) for E' (levels from 1).
        for c in (1, 2, 3):
            assert symmetrized_weight("E", HALF, (c,)) == 1 / (1 - HALF**c)
            assert symmetrized_weight("H", HALF, (c,)) == 1 / (1 - HALF**c)
            assert symmetrized_weight("E'", HALF, (c,)) == HALF**c / (1 - HALF**c)

    def test_pairs_match_degree_two_coefficients(self):
        q = THIRD
        assert symmetrized_weight("E", q, (1, 1)) == weight_coefficient("E", q, 2)
        assert symmetrized_weight("H", q, (1, 1)) == weight_coefficient("H", q, 2)
        assert symmetrized_weight("E'", q, (1, 1)) == weight_coefficient("E'", q, 2)

    def test_mixed_pair_closed_form(self):
        q = HALF
        c1, c2 = 1, 2
        expected = (
            q**c1 / (1 - q**c1) + q**c2 / (1 - q**c2)
        ) / (2 * (1 - q ** (c1 + c2)))
        assert symmetrized_weight("E", q, (c1, c2)) == expected

    def test_eprime_is_e_times_q_to_the_total(self):
        q = THIRD
        for colengths in [(1,), (2,), (1, 1), (2, 1), (1, 1, 1), (3, 2, 1)]:
            total = sum(colengths)
            assert symmetrized_weight("E'", q, colengths) == q**total * symmetrized_weight(
                "E", q, colengths
            )

    def test_eprime_reciprocal_form(self):
        # Second printed shape of the same weight: the product of
        # 1/(q^(-P_s) - 1) over running partial sums, averaged over orderings.
        q = THIRD
        for colengths in [(1,), (2,), (1, 1), (2, 1), (3, 1), (1, 1, 1), (2, 2, 3)]:
            k = len(colengths)
            total = 0
            for order in itertools.permutations(colengths):
                partial = 0
                term = Fraction(1)
                for c in order:
                    partial += c
                    term *= reciprocal(q**-partial - 1)
                total += term
            assert symmetrized_weight("E'", q, colengths) == total / factorial(k)

    @given(
        st.lists(st.integers(1, 3), min_size=1, max_size=4),
        st.sampled_from(["E", "E'", "H"]),
    )
    def test_permutation_invariance(self, colengths, family):
        base = symmetrized_weight(family, HALF, tuple(colengths))
        for order in itertools.permutations(colengths):
            assert symmetrized_weight(family, HALF, order) == base

    def test_rejects_zero_colength(self):
        with pytest.raises(ValueError):
            symmetrized_weight("E", HALF, (0,))


class TestBoseFactor:
    def test_examples(self):
        assert bose_factor(HALF, 1) == 1
        assert bose_factor(HALF, 2) == Fraction(1, 3)

    def test_matches_occupation_number_shape(self):
        q = THIRD
        for c in (1, 2, 3):
            assert bose_factor(q, c) == 1 / (q**-c - 1)

    def test_series_mode_geometric_expansion(self):
        q = TruncatedSeries.variable("q", 9)
        expected = TruncatedSeries("q", 9, {(2 * k,): 1 for k in range(1, 5)})
        assert bose_factor(q, 2) == expected

    def test_range_check(self):
        with pytest.raises(ValueError):
            bose_factor(Fraction(3, 2), 1)
        with pytest.raises(ValueError):
            bose_factor(Fraction(0), 1)


class TestSpeciesParsing:
    def test_parse_rational(self):
        assert parse_rational("1/2") == HALF
        assert parse_rational("3") == 3
        with pytest.raises(ValueError):
            parse_rational("x")

    def test_parse_species_flag(self):
        species = parse_species_flag("E:q=1/2", 1)
        assert species.family == "E"
        assert species.parameter == HALF
        assert species.slot == 1
        assert species.describe() == "E:q=1/2"

    def test_species_validation(self):
        with pytest.raises(ValueError):
            Species(family="E", parameter=Fraction(3, 2), slot=1)
        with pytest.raises(ValueError):
            Species(family="X", parameter=HALF, slot=1)

    def test_config_requires_contiguous_slots(self):
        a = Species(family="E", parameter=HALF, slot=1)
        b = Species(family="H", parameter=FIFTH, slot=3)
        with pytest.raises(ValueError):
            WeightConfig(species=(a, b), n=2)
        WeightConfig(species=(a, Species(family="H", parameter=FIFTH, slot=2)), n=2)
