"""Document round-trips, canonical form, and positional parse errors."""

import json

import pytest

from deliberated.agents import Agent
from deliberated.dialogue import run_validation_dialogue
from deliberated.fixtures import budget_model, instance_text, load_fixture
from deliberated.formats import (
    DocumentError,
    parse_instance,
    parse_model,
    parse_transcript,
    serialize_instance,
    serialize_model,
    serialize_transcript,
)
from deliberated.models import Model


class TestInstanceDocuments:
    def test_fixture_files_are_canonical(self):
        for name in ("weather", "variant", "budget", "flicker", "empty"):
            text = instance_text(name)
            assert serialize_instance(parse_instance(text)) == text

    def test_weather_document_content(self, weather):
        doc = json.loads(instance_text("weather"))
        assert doc["format"] == "dj-situation/1"
        assert doc["arguments"] == ["s", "s1", "s2", "s3"]
        assert doc["relations"]["perspectives"]["p1"] == [["s2", "s1"], ["s3", "s2"]]
        assert parse_instance(instance_text("weather")) == weather

    def test_serialize_parse_is_canonicalisation(self):
        messy = json.dumps(
            {
                "support": [["s1", "t"], ["s", "t"]],
                "relations": {
                    "perspectives": {"p1": [["s3", "s2"], ["s2", "s1"]]},
                    "mode": "perspectives",
                },
                "arguments": ["s3", "s2", "s1", "s"],
                "propositions": ["t"],
                "format": "dj-situation/1",
            }
        )
        assert serialize_instance(parse_instance(messy)) == instance_text("weather")

    def test_direct_mode_roundtrip(self, flicker):
        from deliberated.core import to_direct_encoding

        direct = to_direct_encoding(flicker)
        text = serialize_instance(direct)
        assert parse_instance(text) == direct

    def test_unknown_format_rejected(self):
        with pytest.raises(DocumentError, match=r"\$\.format"):
            parse_instance('{"format": "dj-situation/9"}')

    def test_unknown_mode_rejected(self):
        doc = json.loads(instance_text("weather"))
        doc["relations"] = {"mode": "nonsense"}
        with pytest.raises(DocumentError, match=r"\$\.relations\.mode"):
            parse_instance(json.dumps(doc))

    def test_bad_pair_position_reported(self):
        doc = json.loads(instance_text("weather"))
        doc["support"][1] = ["only-one"]
        with pytest.raises(DocumentError, match=r"\$\.support\[1\]"):
            parse_instance(json.dumps(doc))

    def test_duplicate_identifier_rejected(self):
        doc = json.loads(instance_text("weather"))
        doc["arguments"] = ["s", "s", "s1", "s2", "s3"]
        with pytest.raises(DocumentError, match="duplicate"):
            parse_instance(json.dumps(doc))

    def test_direct_ambivalent_outside_trumps_rejected(self):
        doc = {
            "format": "dj-situation/1",
            "propositions": ["t"],
            "arguments": ["a", "b"],
            "support": [],
            "relations": {
                "mode": "direct",
                "trumps_exists": [["a", "b"]],
                "ambivalent": [["b", "a"]],
            },
        }
        with pytest.raises(DocumentError, match="ambivalent"):
            parse_instance(json.dumps(doc))

    def test_not_json(self):
        with pytest.raises(DocumentError, match="not valid JSON"):
            parse_instance("{nope")


class TestModelDocuments:
    def test_roundtrip(self):
        m = budget_model()
        assert parse_model(serialize_model(m)) == m

    def test_self_counter_rejected(self):
        doc = {"format": "dj-model/1", "support": [], "counters": [["a", "a"]]}
        with pytest.raises(DocumentError, match="self-counter"):
            parse_model(json.dumps(doc))

    def test_counters_default_empty(self):
        m = parse_model('{"format": "dj-model/1", "support": [["s", "t"]]}')
        assert m == Model.of([("s", "t")])


class TestTranscriptDocuments:
    def _transcript(self):
        budget = load_fixture("budget")
        return run_validation_dialogue(
            Agent(budget, "static"), budget_model(), budget.arguments, budget=1
        )

    def test_roundtrip(self):
        tr = self._transcript()
        assert parse_transcript(serialize_transcript(tr)) == tr

    def test_serialization_stable(self):
        tr = self._transcript()
        assert serialize_transcript(tr) == serialize_transcript(tr)

    def test_bad_answer_rejected(self):
        doc = json.loads(serialize_transcript(self._transcript()))
        doc["queries"][0]["answer"] = "maybe"
        with pytest.raises(DocumentError, match=r"\$\.queries\[0\]\.answer"):
            parse_transcript(json.dumps(doc))

    def test_bad_verdict_rejected(self):
        doc = json.loads(serialize_transcript(self._transcript()))
        doc["verdict"]["verdict"] = "sideways"
        with pytest.raises(DocumentError, match="unknown verdict"):
            parse_transcript(json.dumps(doc))

    def test_parsed_transcript_replays(self):
        from deliberated.dialogue import replay_transcript

        budget = load_fixture("budget")
        tr = parse_transcript(serialize_transcript(self._transcript()))
        assert replay_transcript(budget, tr)
