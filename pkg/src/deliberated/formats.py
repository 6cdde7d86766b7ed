"""Canonical instance, model and transcript documents.

All three formats are plain JSON with a version tag.  The serializers emit
keys in a fixed order and sort every identifier list, so serialization is
deterministic and ``parse . serialize`` is the identity on canonical text.
Parsers reject structural problems with the JSON path of the offending
element.
"""

from __future__ import annotations

import json
from typing import Any

from .agents import QueryAnswer
from .core import DecisionSituation, PerspectiveEncoding, validate_situation
from .dialogue import DialogueTranscript
from .models import Failure, Model

INSTANCE_FORMAT = "dj-situation/1"
MODEL_FORMAT = "dj-model/1"
TRANSCRIPT_FORMAT = "dj-transcript/1"
CHECK_FORMAT = "dj-check/1"


class DocumentError(ValueError):
    """Malformed or invalid document; the message names the JSON path."""


def _fail(path: str, message: str) -> None:
    raise DocumentError(f"{path}: {message}")


def _expect(value: Any, kind: type, path: str) -> Any:
    if not isinstance(value, kind):
        _fail(path, f"expected {kind.__name__}, got {type(value).__name__}")
    return value


def _id_list(value: Any, path: str) -> list[str]:
    _expect(value, list, path)
    out = []
    for i, x in enumerate(value):
        _expect(x, str, f"{path}[{i}]")
        out.append(x)
    dupes = sorted({x for x in out if out.count(x) > 1})
    if dupes:
        _fail(path, "duplicate identifiers: " + ", ".join(dupes))
    return out


def _pair_list(value: Any, path: str) -> list[tuple[str, str]]:
    _expect(value, list, path)
    out = []
    for i, item in enumerate(value):
        _expect(item, list, f"{path}[{i}]")
        if len(item) != 2:
            _fail(f"{path}[{i}]", "expected a pair")
        a = _expect(item[0], str, f"{path}[{i}][0]")
        b = _expect(item[1], str, f"{path}[{i}][1]")
        out.append((a, b))
    return out


def _check_format(doc: Any, expected: str, path: str = "$") -> dict:
    _expect(doc, dict, path)
    tag = doc.get("format")
    if tag != expected:
        _fail(f"{path}.format", f"expected {expected!r}, got {tag!r}")
    return doc


def _sorted_pairs(pairs) -> list[list[str]]:
    return [[a, b] for a, b in sorted(pairs)]


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


# --- instances ----------------------------------------------------------


def instance_to_payload(sit: DecisionSituation) -> dict:
    rel = sit.relations
    if isinstance(rel, PerspectiveEncoding):
        relations = {
            "mode": "perspectives",
            "perspectives": {
                p: _sorted_pairs(rel.perspectives[p])
                for p in sorted(rel.perspectives)
            },
        }
    else:
        relations = {
            "mode": "direct",
            "trumps_exists": _sorted_pairs(rel.trumps_exists),
            "ambivalent": _sorted_pairs(rel.ambivalent),
        }
    return {
        "format": INSTANCE_FORMAT,
        "propositions": sorted(sit.propositions),
        "arguments": sorted(sit.arguments),
        "support": _sorted_pairs(sit.support),
        "relations": relations,
    }


def serialize_instance(sit: DecisionSituation) -> str:
    return _dump(instance_to_payload(sit))


def instance_from_payload(doc: Any) -> DecisionSituation:
    _check_format(doc, INSTANCE_FORMAT)
    props = _id_list(doc.get("propositions"), "$.propositions")
    args = _id_list(doc.get("arguments"), "$.arguments")
    support = _pair_list(doc.get("support"), "$.support")
    rel = _expect(doc.get("relations"), dict, "$.relations")
    mode = rel.get("mode")
    if mode == "perspectives":
        raw = _expect(rel.get("perspectives"), dict, "$.relations.perspectives")
        perspectives = {
            _expect(p, str, "$.relations.perspectives key"): _pair_list(
                raw[p], f"$.relations.perspectives.{p}"
            )
            for p in raw
        }
        sit = DecisionSituation.from_perspectives(props, args, support, perspectives)
    elif mode == "direct":
        sit = DecisionSituation.direct(
            props,
            args,
            support,
            _pair_list(rel.get("trumps_exists"), "$.relations.trumps_exists"),
            _pair_list(rel.get("ambivalent", []), "$.relations.ambivalent"),
        )
    else:
        _fail("$.relations.mode", f"unknown mode {mode!r}")
    report = validate_situation(sit)
    if not report.ok:
        raise DocumentError("invalid situation: " + "; ".join(report.violations))
    return sit


def parse_instance(text: str) -> DecisionSituation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    return instance_from_payload(doc)


# --- models ---------------------------------------------------------------


def model_to_payload(m: Model) -> dict:
    return {
        "format": MODEL_FORMAT,
        "support": _sorted_pairs(m.support_claims),
        "counters": _sorted_pairs(m.counter_claims),
    }


def serialize_model(m: Model) -> str:
    return _dump(model_to_payload(m))


def model_from_payload(doc: Any) -> Model:
    _check_format(doc, MODEL_FORMAT)
    support = _pair_list(doc.get("support"), "$.support")
    counters = _pair_list(doc.get("counters", []), "$.counters")
    for i, (a, b) in enumerate(counters):
        if a == b:
            _fail(f"$.counters[{i}]", "self-counter pair")
    return Model.of(support, counters)


def parse_model(text: str) -> Model:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    return model_from_payload(doc)


# --- transcripts ----------------------------------------------------------


def transcript_to_payload(tr: DialogueTranscript) -> dict:
    return {
        "format": TRANSCRIPT_FORMAT,
        "model": model_to_payload(tr.model),
        "gamma": list(tr.gamma),
        "budget": tr.budget,
        "single_round": tr.single_round,
        "queries": [
            {
                "kind": e.kind,
                "pair": list(e.pair),
                "answer": "yes" if e.answer else "no",
                "perspective": e.perspective_used,
            }
            for e in tr.entries
        ],
        "verdict": {
            "verdict": tr.verdict,
            "failures": [
                {"kind": f.kind, "subject": list(f.subject)} for f in tr.failures
            ],
            "unresolved": [list(o) for o in tr.unresolved],
            "retry_rounds": [
                {"obligation": list(o), "rounds": n} for o, n in tr.retry_rounds
            ],
        },
    }


def serialize_transcript(tr: DialogueTranscript) -> str:
    return _dump(transcript_to_payload(tr))


def transcript_from_payload(doc: Any) -> DialogueTranscript:
    _check_format(doc, TRANSCRIPT_FORMAT)
    model = model_from_payload(_expect(doc.get("model"), dict, "$.model"))
    gamma = tuple(_id_list(doc.get("gamma"), "$.gamma"))
    budget = _expect(doc.get("budget"), int, "$.budget")
    single_round = _expect(doc.get("single_round"), bool, "$.single_round")
    entries = []
    for i, q in enumerate(_expect(doc.get("queries"), list, "$.queries")):
        path = f"$.queries[{i}]"
        _expect(q, dict, path)
        kind = _expect(q.get("kind"), str, f"{path}.kind")
        if kind not in ("trump", "support"):
            _fail(f"{path}.kind", f"unknown kind {kind!r}")
        pair = _pair_list([q.get("pair")], f"{path}.pair")[0]
        answer = q.get("answer")
        if answer not in ("yes", "no"):
            _fail(f"{path}.answer", f"expected yes/no, got {answer!r}")
        perspective = q.get("perspective")
        if perspective is not None:
            _expect(perspective, str, f"{path}.perspective")
        entries.append(QueryAnswer(kind, pair, answer == "yes", perspective))
    verdict_block = _expect(doc.get("verdict"), dict, "$.verdict")
    verdict = _expect(verdict_block.get("verdict"), str, "$.verdict.verdict")
    if verdict not in ("valid", "invalid", "inconclusive"):
        _fail("$.verdict.verdict", f"unknown verdict {verdict!r}")
    failures = tuple(
        Failure(
            _expect(f.get("kind"), str, f"$.verdict.failures[{i}].kind"),
            tuple(_pair_list([f.get("subject")], f"$.verdict.failures[{i}].subject")[0]),
        )
        for i, f in enumerate(
            _expect(verdict_block.get("failures"), list, "$.verdict.failures")
        )
    )
    unresolved = tuple(
        tuple(o)
        for o in _expect(verdict_block.get("unresolved"), list, "$.verdict.unresolved")
    )
    retry_rounds = tuple(
        (tuple(r["obligation"]), int(r["rounds"]))
        for r in _expect(
            verdict_block.get("retry_rounds"), list, "$.verdict.retry_rounds"
        )
    )
    return DialogueTranscript(
        model=model,
        gamma=gamma,
        budget=budget,
        single_round=single_round,
        entries=tuple(entries),
        verdict=verdict,
        failures=failures,
        unresolved=unresolved,
        retry_rounds=retry_rounds,
    )


def parse_transcript(text: str) -> DialogueTranscript:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    return transcript_from_payload(doc)


# --- condition reports ------------------------------------------------------


def check_report_to_payload(report) -> dict:
    def result(r) -> dict:
        return {"passed": r.passed, "witnesses": [list(w) if isinstance(w, tuple) else w for w in r.witnesses]}

    return {
        "format": CHECK_FORMAT,
        "gamma": list(report.gamma),
        "cac": report.cac,
        "j": report.j,
        "k": report.k,
        "conditions": {
            "answerability": result(report.answerability),
            "closed_reinstatement": result(report.closed_reinstatement),
            "covering": result(report.covering),
            "width": result(report.width),
            "length": result(report.length),
        },
    }


def serialize_check_report(report) -> str:
    return _dump(check_report_to_payload(report))
