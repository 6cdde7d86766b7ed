"""Record service exchanges for the frontend's scripted-session tests.

Drives real sessions through the HTTP service and dumps every exchange
(request and response) to frontend/fixtures/.  Session ids are normalised
to SESSION so the files are stable across recordings.  The human answers
replayed here are the static oracle's stream, which the walkthrough test
feeds back through the UI flow.
"""

from __future__ import annotations

import json
from pathlib import Path

from fastapi.testclient import TestClient

from deliberated.agents import Agent
from deliberated.conditions import check_cac
from deliberated.dialogue import run_validation_dialogue
from deliberated.fixtures import budget_model, instance_text, load_fixture
from deliberated.formats import check_report_to_payload, model_to_payload
from deliberated.models import Model
from deliberated.service import STORE, app

OUT = Path(__file__).resolve().parent.parent / "frontend" / "fixtures"


class Recorder:
    def __init__(self, client: TestClient):
        self.client = client
        self.exchanges: list[dict] = []
        self.session_id: str | None = None

    def _scrub(self, value):
        if self.session_id is None:
            return value
        text = json.dumps(value)
        return json.loads(text.replace(self.session_id, "SESSION"))

    def request(self, method: str, path: str, body=None):
        response = getattr(self.client, method.lower())(
            path, **({"json": body} if body is not None else {})
        )
        payload = response.json()
        if self.session_id is None and isinstance(payload, dict):
            self.session_id = payload.get("session_id")
        self.exchanges.append(
            {
                "method": method,
                "path": self._scrub(path),
                "request": self._scrub(body) if body is not None else None,
                "status": response.status_code,
                "response": self._scrub(payload),
            }
        )
        return payload


def record_budget_walkthrough() -> dict:
    budget = load_fixture("budget")
    eta = budget_model()
    answers = run_validation_dialogue(
        Agent(budget, "static"), eta, budget.arguments, 1
    )
    stream = {(e.kind, e.pair): "yes" if e.answer else "no" for e in answers.entries}

    STORE.clear()
    rec = Recorder(TestClient(app))
    rec.request("GET", "/instances")
    rec.request("GET", "/instances/budget")
    created = rec.request(
        "POST",
        "/sessions",
        {
            "instance": json.loads(instance_text("budget")),
            "model": model_to_payload(eta),
            "oracle_mode": {"mode": "human"},
            "budget": 1,
            "cac_certificate": check_report_to_payload(
                check_cac(budget, budget.arguments)
            ),
        },
    )
    sid = created["session_id"]
    while True:
        nxt = rec.request("GET", f"/sessions/{sid}/next")
        if nxt["state"] == "done":
            break
        q = nxt["query"]
        answer = stream[(q["kind"], tuple(q["pair"]))]
        rec.request(
            "POST",
            f"/sessions/{sid}/answer",
            {"query_id": q["query_id"], "answer": answer},
        )
    rec.request("GET", f"/sessions/{sid}/report")
    return {"name": "budget-walkthrough", "exchanges": rec.exchanges}


def record_weather_bad_model() -> dict:
    weather = load_fixture("weather")
    answers = run_validation_dialogue(
        Agent(weather, "static"), Model.of([("s1", "t")]), weather.arguments, 1
    )
    stream = {(e.kind, e.pair): "yes" if e.answer else "no" for e in answers.entries}

    STORE.clear()
    rec = Recorder(TestClient(app))
    created = rec.request(
        "POST",
        "/sessions",
        {
            "instance": json.loads(instance_text("weather")),
            "model": {"format": "dj-model/1", "support": [["s1", "t"]], "counters": []},
            "oracle_mode": {"mode": "human"},
            "budget": 1,
        },
    )
    sid = created["session_id"]
    while True:
        nxt = rec.request("GET", f"/sessions/{sid}/next")
        if nxt["state"] == "done":
            break
        q = nxt["query"]
        rec.request(
            "POST",
            f"/sessions/{sid}/answer",
            {
                "query_id": q["query_id"],
                "answer": stream[(q["kind"], tuple(q["pair"]))],
            },
        )
    rec.request("GET", f"/sessions/{sid}/report")
    return {"name": "weather-bad-model", "exchanges": rec.exchanges}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for recording in (record_budget_walkthrough(), record_weather_bad_model()):
        path = OUT / f"{recording['name']}.json"
        path.write_text(
            json.dumps(recording, indent=2, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
        print(f"wrote {path} ({len(recording['exchanges'])} exchanges)")


if __name__ == "__main__":
    main()
