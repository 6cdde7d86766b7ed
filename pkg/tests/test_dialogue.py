"""Validation dialogues: transcripts, verdicts, retries, replay."""

import pytest

from deliberated.agents import Agent
from deliberated.core import DecisionSituation
from deliberated.dialogue import (
    DialogueEngine,
    query_budget_limit,
    replay_transcript,
    run_validation_dialogue,
)
from deliberated.fixtures import budget_model
from deliberated.models import (
    MISSING_COUNTER,
    Model,
    UNCOUNTERED_TRUMPER,
    UNSUPPORTED_CLAIM,
    is_gamma_operationally_valid,
)


def entry_triples(transcript):
    return [(e.kind, e.pair, e.answer) for e in transcript.entries]


class TestBudgetWalkthrough:
    def test_exact_transcript(self, budget):
        transcript = run_validation_dialogue(
            Agent(budget, "static"), budget_model(), budget.arguments, budget=1
        )
        assert transcript.verdict == "valid"
        assert entry_triples(transcript) == [
            ("support", ("s", "t"), True),
            ("trump", ("s1r", "s"), False),
            ("trump", ("s2r", "s"), False),
            ("trump", ("sc1", "s"), True),
            ("trump", ("sc1c", "sc1"), True),
            ("trump", ("sc1c", "s"), False),
            ("trump", ("sc2", "s"), True),
            ("trump", ("sc2c", "sc2"), True),
            ("trump", ("sc2c", "s"), False),
            ("trump", ("sr", "s"), False),
        ]

    def test_replayable(self, budget):
        transcript = run_validation_dialogue(
            Agent(budget, "static"), budget_model(), budget.arguments, budget=1
        )
        assert replay_transcript(budget, transcript)


class TestInvalidVerdicts:
    def test_uncountered_trumper(self, weather):
        transcript = run_validation_dialogue(
            Agent(weather, "static"), Model.of([("s1", "t")]), weather.arguments
        )
        assert transcript.verdict == "invalid"
        assert transcript.failures[0].kind == UNCOUNTERED_TRUMPER
        assert transcript.failures[0].subject == ("s1", "s2")
        # stops at the violating answer
        assert entry_triples(transcript)[-1] == ("trump", ("s2", "s1"), True)

    def test_unsupported_claim_stops_immediately(self, weather):
        transcript = run_validation_dialogue(
            Agent(weather, "static"), Model.of([("s2", "t")]), weather.arguments
        )
        assert transcript.verdict == "invalid"
        assert transcript.failures[0].kind == UNSUPPORTED_CLAIM
        assert len(transcript.entries) == 1

    def test_missing_counter_for_supporter(self, weather):
        transcript = run_validation_dialogue(
            Agent(weather, "static"), Model.of([]), weather.arguments
        )
        assert transcript.verdict == "invalid"
        assert transcript.failures[0].kind == MISSING_COUNTER


class TestPerspectiveDependence:
    def test_flicker_cyclic_outcome_depends_on_start(self, flicker):
        m = Model.of([("s1", "t")])
        outcomes = {}
        for start in ("p1", "p2"):
            transcript = run_validation_dialogue(
                Agent(flicker, "cyclic", current=start), m, flicker.arguments, budget=2
            )
            outcomes[start] = transcript.verdict
        # the probe lands in the perspective after the support query
        assert outcomes == {"p1": "valid", "p2": "invalid"}

    def test_flicker_cyclic_deterministic(self, flicker):
        m = Model.of([("s1", "t")])
        runs = [
            entry_triples(
                run_validation_dialogue(
                    Agent(flicker, "cyclic", current="p1"), m, flicker.arguments, 2
                )
            )
            for _ in range(3)
        ]
        assert runs[0] == runs[1] == runs[2]

    def test_inconclusive_on_exhausted_budget(self, flicker):
        m = Model.of([("s1", "t")], [("s1", "s2")])
        transcript = run_validation_dialogue(
            Agent(flicker, "cyclic", current="p2"), m, flicker.arguments, budget=2
        )
        assert transcript.verdict == "inconclusive"
        assert transcript.unresolved == (("claim-counter", "s1", "t", "s2"),)
        assert dict(transcript.retry_rounds) == {
            ("claim-counter", "s1", "t", "s2"): 2
        }

    def test_static_exhaustion_is_refutation(self, flicker):
        m = Model.of([("s1", "t")], [("s1", "s2")])
        transcript = run_validation_dialogue(
            Agent(flicker, "static", current="p1"), m, flicker.arguments, budget=2
        )
        assert transcript.verdict == "invalid"


class TestStaticAgreement:
    def test_single_perspective_verdicts_match_ground_truth(self, weather, budget, empty):
        for sit in (weather, budget, empty):
            first_claim = min(sorted(sit.support))
            args = sorted(sit.arguments)
            models = [
                Model.of([]),
                Model.of([first_claim]),
                Model.of([first_claim], [(args[0], args[1])]),
            ]
            gammas = [sit.arguments, frozenset(args[:2])]
            for m in models:
                for gamma in gammas:
                    transcript = run_validation_dialogue(
                        Agent(sit, "static"), m, gamma, budget=1
                    )
                    truth = is_gamma_operationally_valid(sit, gamma, m)
                    assert transcript.verdict != "inconclusive"
                    assert (transcript.verdict == "valid") == truth.valid


class TestQueryBound:
    def test_transcripts_respect_bound(self, weather, budget, flicker):
        for sit in (weather, budget, flicker):
            args = sorted(sit.arguments)
            first_claim = min(sorted(sit.support))
            models = [
                Model.of([first_claim], [(args[-1], args[0])]),
                Model.of([]),
            ]
            for m in models:
                for policy in ("static", "cyclic"):
                    transcript = run_validation_dialogue(
                        Agent(sit, policy), m, sit.arguments, budget=2
                    )
                    limit = query_budget_limit(
                        m, len(sit.arguments), len(sit.propositions), 2
                    )
                    assert len(transcript.entries) <= limit


class TestReplay:
    def test_forged_yes_rejected(self, weather):
        import dataclasses

        transcript = run_validation_dialogue(
            Agent(weather, "static"), Model.of([("s1", "t")]), weather.arguments
        )
        entries = list(transcript.entries)
        # claim a trump the ground truth denies everywhere
        entries[-1] = dataclasses.replace(entries[-1], pair=("s1", "s2"))
        bad = dataclasses.replace(transcript, entries=tuple(entries))
        assert not replay_transcript(weather, bad)

    def test_tampered_verdict_rejected(self, weather):
        import dataclasses

        transcript = run_validation_dialogue(
            Agent(weather, "static"), Model.of([("s1", "t")]), weather.arguments
        )
        bad = dataclasses.replace(transcript, verdict="valid", failures=())
        assert not replay_transcript(weather, bad)

    def test_truncated_transcript_rejected(self, budget):
        import dataclasses

        transcript = run_validation_dialogue(
            Agent(budget, "static"), budget_model(), budget.arguments
        )
        bad = dataclasses.replace(transcript, entries=transcript.entries[:-1])
        assert not replay_transcript(budget, bad)

    def test_all_policies_roundtrip(self, flicker, budget):
        for sit in (flicker, budget):
            for policy in ("static", "cyclic", "drift"):
                transcript = run_validation_dialogue(
                    Agent(sit, policy, seed=4),
                    Model.of([("s1", "t")]) if sit is flicker else budget_model(),
                    sit.arguments,
                    budget=2,
                )
                assert replay_transcript(sit, transcript)


class TestEngine:
    def test_rejects_zero_budget(self, weather):
        with pytest.raises(ValueError):
            DialogueEngine(weather.propositions, Model.of([]), weather.arguments, 0, True)

    def test_no_obligations_finishes_immediately(self):
        sit = DecisionSituation.from_perspectives(["t"], ["a"], [], {"p1": []})
        engine = DialogueEngine(sit.propositions, Model.of([]), set(), 1, True)
        assert engine.finished
        assert engine.result().verdict == "valid"

    def test_self_probe_skipped(self, weather):
        transcript = run_validation_dialogue(
            Agent(weather, "static"), Model.of([("s1", "t")]), weather.arguments
        )
        assert ("trump", ("s1", "s1"), False) not in entry_triples(transcript)
