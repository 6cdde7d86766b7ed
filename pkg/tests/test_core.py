"""Base semantics: derived relations, statuses, judgment, validation."""

import pytest

from deliberated.core import (
    DecisionSituation,
    UnknownIdentifier,
    deliberated_judgment,
    derive_relations,
    is_clear_cut,
    is_justifiable,
    is_untenable,
    proposition_status,
    to_direct_encoding,
    validate_situation,
)


def brute_justifiable(sit, t):
    """Independent oracle: raw quantifier translation over the relations."""
    d = derive_relations(sit)
    return any(
        (s, t) in sit.support
        and all((x, s) not in d.trumps_exists for x in sit.arguments)
        for s in sit.arguments
    )


def brute_untenable(sit, t):
    d = derive_relations(sit)
    supporters = [s for s in sit.arguments if (s, t) in sit.support]
    return all(
        any(
            (c, s) in d.trumps_forall
            and all((x, c) not in d.trumps_exists for x in sit.arguments)
            for c in sit.arguments
        )
        for s in supporters
    )


class TestDerivedRelations:
    def test_weather_exists_and_decisive(self, weather):
        d = derive_relations(weather)
        assert d.trumps_exists == {("s2", "s1"), ("s3", "s2")}
        assert d.decisive == {"s3", "s"}

    def test_single_perspective_forall_equals_exists(self, weather):
        d = derive_relations(weather)
        assert d.trumps_forall == d.trumps_exists

    def test_empty_relation(self, empty):
        d = derive_relations(empty)
        assert d.decisive == empty.arguments
        assert d.trumps_forall == frozenset()

    def test_flicker_ambivalence(self, flicker):
        d = derive_relations(flicker)
        assert ("s2", "s1") in d.trumps_exists
        assert ("s2", "s1") in d.not_trumps_exists
        assert ("s2", "s1") not in d.trumps_forall

    def test_coverage_constraint(self, flicker, budget, weather):
        for sit in (flicker, budget, weather):
            d = derive_relations(sit)
            all_pairs = {(a, b) for a in sit.arguments for b in sit.arguments}
            # every pair not trumped-somewhere is denied-somewhere
            assert (all_pairs - d.trumps_exists) <= d.not_trumps_exists
            assert d.trumps_forall <= d.trumps_exists
            assert d.not_trumps_forall <= d.not_trumps_exists
            assert not (d.trumps_forall & d.not_trumps_forall)

    def test_decisive_characterisation(self, budget):
        d = derive_relations(budget)
        for s in budget.arguments:
            assert (s in d.decisive) == (not d.trumpers_of(s))


class TestValidation:
    def test_fixtures_are_wellformed(self, weather, variant, budget, flicker, empty):
        for sit in (weather, variant, budget, flicker, empty):
            assert validate_situation(sit).ok

    def test_unknown_argument_in_support(self):
        sit = DecisionSituation.from_perspectives(
            ["t"], ["a"], [("x", "t")], {"p1": []}
        )
        report = validate_situation(sit)
        assert not report.ok
        assert any("unknown argument 'x'" in v for v in report.violations)

    def test_ambivalent_outside_trumps(self):
        sit = DecisionSituation.direct(
            ["t"], ["a", "b"], [], [("a", "b")], [("b", "a")]
        )
        report = validate_situation(sit)
        assert not report.ok
        assert any("ambivalent" in v for v in report.violations)

    def test_self_trump_rejected(self):
        sit = DecisionSituation.from_perspectives(
            ["t"], ["a"], [], {"p1": [("a", "a")]}
        )
        assert not validate_situation(sit).ok

    def test_empty_perspective_map_rejected(self):
        sit = DecisionSituation.from_perspectives(["t"], ["a"], [], {})
        report = validate_situation(sit)
        assert any("empty" in v for v in report.violations)

    def test_namespace_overlap_rejected(self):
        sit = DecisionSituation.from_perspectives(["x"], ["x"], [], {"p1": []})
        assert not validate_situation(sit).ok


class TestStatuses:
    def test_weather_justifiable(self, weather):
        assert is_justifiable(weather, "t")
        assert not is_untenable(weather, "t")

    def test_variant_both_justifiable(self, variant):
        assert is_justifiable(variant, "t1")
        assert is_justifiable(variant, "t2")

    def test_flicker_neither(self, flicker):
        assert not is_justifiable(flicker, "t")
        assert not is_untenable(flicker, "t")
        assert proposition_status(flicker, "t") == "neither"

    def test_unsupported_proposition_untenable(self):
        sit = DecisionSituation.from_perspectives(
            ["t"], ["a"], [], {"p1": []}
        )
        assert is_untenable(sit, "t")

    def test_unknown_proposition_raises(self, weather):
        with pytest.raises(UnknownIdentifier):
            is_justifiable(weather, "zzz")
        with pytest.raises(UnknownIdentifier):
            is_untenable(weather, "zzz")

    def test_statuses_match_brute_force(self, weather, variant, budget, flicker, empty):
        for sit in (weather, variant, budget, flicker, empty):
            for t in sit.propositions:
                assert is_justifiable(sit, t) == brute_justifiable(sit, t)
                assert is_untenable(sit, t) == brute_untenable(sit, t)


class TestJudgment:
    def test_fixture_judgments(self, weather, variant, budget):
        assert deliberated_judgment(weather) == {"t"}
        assert deliberated_judgment(variant) == {"t1", "t2"}
        assert deliberated_judgment(budget) == {"t"}

    def test_judgment_is_pointwise(self, budget, flicker):
        for sit in (budget, flicker):
            assert deliberated_judgment(sit) == {
                t for t in sit.propositions if is_justifiable(sit, t)
            }

    def test_clear_cut(self, weather, flicker):
        assert is_clear_cut(weather).clear_cut
        report = is_clear_cut(flicker)
        assert not report.clear_cut
        assert report.status_of("t") == "neither"

    def test_empty_topic_clear_cut(self):
        sit = DecisionSituation.from_perspectives([], ["a"], [], {"p1": []})
        assert is_clear_cut(sit).clear_cut


class TestEncodingEquivalence:
    def test_direct_conversion_matches(self, weather, budget, flicker):
        for sit in (weather, budget, flicker):
            direct = to_direct_encoding(sit)
            a, b = derive_relations(sit), derive_relations(direct)
            assert a == b
            assert deliberated_judgment(sit) == deliberated_judgment(direct)
            assert is_clear_cut(sit).statuses == is_clear_cut(direct).statuses

    def test_direct_conversion_is_identity_on_direct(self):
        sit = DecisionSituation.direct(["t"], ["a", "b"], [], [("a", "b")])
        assert to_direct_encoding(sit) is sit
