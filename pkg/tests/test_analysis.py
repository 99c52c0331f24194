from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cocircular import (
    ANTIPODAL_CERTIFICATE,
    HYPOTHESES_NOT_MET,
    LEMMA_CHAIN_INFEASIBLE,
    SpecialMassPattern,
    exhaustive_theorem_check,
    predict_nonexistence,
    required_signs,
    run_lemma_suite,
    side_predicates,
    sign_system,
)
from cocircular.analysis import antipodal_pair


class TestSidePredicates:
    def test_small_even_case(self):
        assert side_predicates(1, 2, 6) == (Fraction(2), Fraction(-4), Fraction(2))

    def test_mirrored_case(self):
        assert side_predicates(4, 5, 6) == (Fraction(2), Fraction(2), Fraction(-4))

    def test_half_integers_for_odd_n(self):
        p1, p2, p3 = side_predicates(1, 2, 5)
        assert p1 == Fraction(3, 4)
        assert p2 == Fraction(-9, 4)
        assert p3 == Fraction(3, 4)

    def test_zero_factor_is_antipodal(self):
        # a vanishing product happens exactly at an antipodal placement
        for n in range(4, 16, 2):
            for l in range(1, n - 1):
                for s in range(l + 1, n):
                    zero = any(p == 0 for p in side_predicates(l, s, n))
                    assert zero == (antipodal_pair(n, l, s) is not None)

    def test_index_violation(self):
        with pytest.raises(ValueError):
            side_predicates(2, 2, 6)


class TestRequiredSigns:
    def test_all_heavier(self):
        assert required_signs((1, 1, 1)) == (1, 1, 1)

    def test_light_between(self):
        assert required_signs((-1, 1, 1)) == (-1, 1, -1)

    def test_two_light(self):
        assert required_signs((-1, -1, 1)) == (1, -1, -1)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            required_signs((0, 1, 1))


class TestSignSystem:
    def test_witnessed_violation(self):
        system = sign_system(1, 2, 6, (1, 1, 1))
        assert system.violated == frozenset({2})
        assert system.predicates == (Fraction(2), Fraction(-4), Fraction(2))

    def test_relabeling_swaps_second_and_third(self):
        # reflecting the circle maps (l, s) -> (n - s, n - l) and swaps the
        # constraints that involve the first two specials with the last
        for n in (5, 7, 8, 9):
            for l in range(1, n - 1):
                for s in range(l + 1, n):
                    if antipodal_pair(n, l, s):
                        continue
                    for signs in [(1, 1, 1), (-1, 1, 1), (1, -1, -1)]:
                        a = sign_system(l, s, n, signs)
                        b = sign_system(n - s, n - l, n, (signs[1], signs[0], signs[2]))
                        assert b.p1 == a.p1 and b.p2 == a.p3 and b.p3 == a.p2
                        swap = {1: 1, 2: 3, 3: 2}
                        assert b.violated == frozenset(swap[i] for i in a.violated)

    @given(
        st.integers(4, 40),
        st.data(),
    )
    def test_product_is_negative_off_antipodal(self, n, data):
        l = data.draw(st.integers(1, n - 2))
        s = data.draw(st.integers(l + 1, n - 1))
        if antipodal_pair(n, l, s):
            return
        p1, p2, p3 = side_predicates(l, s, n)
        assert p1 * p2 * p3 < 0

    @given(st.integers(4, 40), st.data())
    def test_some_constraint_always_violated(self, n, data):
        l = data.draw(st.integers(1, n - 2))
        s = data.draw(st.integers(l + 1, n - 1))
        if antipodal_pair(n, l, s):
            return
        signs = data.draw(st.tuples(*[st.sampled_from([1, -1])] * 3))
        assert sign_system(l, s, n, signs).violated


class TestPredictNonexistence:
    def test_lemma_chain_witness(self):
        p = SpecialMassPattern.from_values(6, 1, 2, 2.0, 3.0, 4.0)
        verdict = predict_nonexistence(p)
        assert verdict.tag == LEMMA_CHAIN_INFEASIBLE
        assert "p2" in verdict.witness
        assert verdict.system is not None and 2 in verdict.system.violated

    def test_antipodal_routed_first(self):
        p = SpecialMassPattern.from_values(4, 1, 2, 3.0, 2.0, 5.0)
        assert predict_nonexistence(p).tag == ANTIPODAL_CERTIFICATE

    def test_symmetric_ordering_escapes(self):
        p = SpecialMassPattern.from_values(5, 2, 3, 2.0, 2.0, 0.5)
        assert predict_nonexistence(p).tag == HYPOTHESES_NOT_MET

    def test_symmetric_antipodal_still_certified(self):
        # equal pair across the circle: the closed form applies regardless
        # of the symmetric ordering of the values
        p = SpecialMassPattern.from_values(8, 1, 4, 2.0, 1.5, 2.0)
        assert antipodal_pair(8, 1, 4) == (1, 4) or antipodal_pair(8, 1, 4) == (4, 8)
        assert predict_nonexistence(p).tag == ANTIPODAL_CERTIFICATE

    def test_two_equal_nonsymmetric_uses_chain(self):
        p = SpecialMassPattern.from_values(6, 1, 2, 2.0, 2.0, 0.5)
        verdict = predict_nonexistence(p)
        assert verdict.tag == LEMMA_CHAIN_INFEASIBLE


class TestExhaustiveCheck:
    def test_frozen_table_for_six_bodies(self):
        # hand-checked placements for n = 6 (antipodal ones excluded)
        expected = {
            (1, 2): (Fraction(2), Fraction(-4), Fraction(2)),
            (1, 5): (Fraction(-4), Fraction(2), Fraction(2)),
            (2, 4): (Fraction(-1), Fraction(-1), Fraction(-1)),
            (4, 5): (Fraction(2), Fraction(2), Fraction(-4)),
        }
        seen = {}
        for l in range(1, 5):
            for s in range(l + 1, 6):
                if antipodal_pair(6, l, s) is None:
                    seen[(l, s)] = side_predicates(l, s, 6)
        assert seen == expected

    def test_no_satisfiable_system_small(self):
        report = exhaustive_theorem_check(50)
        assert report.passed
        assert report.satisfiable == 0

    def test_counts_are_complete(self):
        report = exhaustive_theorem_check(12)
        total = sum((n - 1) * (n - 2) // 2 for n in range(4, 13))
        assert report.placements_checked + report.antipodal_routed == total
        assert report.sign_systems_checked == 8 * report.placements_checked

    def test_agrees_with_exact_rational_path(self):
        # the vectorized integer engine must match the Fraction-based system
        for n in range(4, 13):
            for l in range(1, n - 1):
                for s in range(l + 1, n):
                    if antipodal_pair(n, l, s):
                        continue
                    for signs in [(1, 1, 1), (-1, 1, 1), (1, -1, 1), (-1, -1, -1)]:
                        assert sign_system(l, s, n, signs).violated

    def test_rejects_tiny_n(self):
        with pytest.raises(ValueError):
            exhaustive_theorem_check(3)


class TestLemmaSuite:
    def test_small_run_all_pass(self):
        report = run_lemma_suite(seed=7, trials=16)
        assert report.passed
        assert report.failures == 0
        assert report.worst_rel_err <= 1e-10
        for family in ("one_side", "opposite_sides", "reflection_pair", "control"):
            assert report.count(family) == 4

    def test_deterministic(self):
        a = run_lemma_suite(seed=3, trials=8)
        b = run_lemma_suite(seed=3, trials=8)
        assert a.records == b.records

    def test_controls_exactly_zero(self):
        report = run_lemma_suite(seed=1, trials=8)
        for record in report.records:
            if record.family == "control":
                assert record.reflection_value == 0.0

    def test_expansion_terms_are_certificates(self):
        report = run_lemma_suite(seed=11, trials=12)
        for record in report.records:
            if record.family != "control":
                assert record.reflection_value < 0
                assert record.rel_err <= 1e-10
