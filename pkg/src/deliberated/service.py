"""HTTP session API for elicitation dialogues.

A session validates one model against one oracle.  Simulated oracles run
to completion at creation time; human oracles get one pending query at a
time and drive the dialogue by posting answers.  Sessions live in memory,
optionally journalled to append-only files.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass, field
from typing import Any, Literal

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from . import formats
from .agents import Agent
from .conditions import check_cac
from .core import DecisionSituation, UnknownIdentifier, deliberated_judgment
from .dialogue import DialogueEngine, DialogueTranscript, run_validation_dialogue
from .fixtures import FIXTURE_NAMES, instance_text
from .models import Model, model_claims, require_valid_model


class OracleMode(BaseModel):
    mode: Literal["simulated", "human"]
    policy: Literal["static", "cyclic", "drift"] = "static"
    seed: int = 0
    start_perspective: str | None = None


class CreateSessionRequest(BaseModel):
    instance: dict[str, Any]
    model: dict[str, Any]
    gamma: list[str] | None = None
    oracle_mode: OracleMode
    budget: int = Field(default=1, ge=1)
    cac_certificate: dict[str, Any] | None = None


class CreateSessionResponse(BaseModel):
    session_id: str
    state: str


class PendingQuery(BaseModel):
    query_id: int
    kind: str
    pair: tuple[str, str]


class NextResponse(BaseModel):
    state: str  # "running" | "done"
    query: PendingQuery | None = None
    verdict: str | None = None


class AnswerRequest(BaseModel):
    query_id: int
    answer: Literal["yes", "no"]


class AnswerResponse(BaseModel):
    acknowledged: bool
    state: str
    verdict: str | None = None


class ReportResponse(BaseModel):
    state: str
    transcript: dict[str, Any] | None = None
    verdict: str | None = None
    claims: list[str] | None = None
    judgment_conclusion: dict[str, Any] | None = None


@dataclass
class Session:
    id: str
    situation: DecisionSituation
    model: Model
    gamma: frozenset[str]
    budget: int
    oracle_mode: OracleMode
    certificate: dict[str, Any] | None
    engine: DialogueEngine | None = None
    transcript: DialogueTranscript | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def state(self) -> str:
        return "done" if self.transcript is not None else "running"


class SessionStore:
    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def add(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        return session

    def clear(self) -> None:
        with self._lock:
            self._sessions.clear()


STORE = SessionStore()

app = FastAPI(title="deliberated judgment sessions")
app.add_middleware(
    CORSMiddleware,
    allow_origins=[os.environ.get("DJ_CORS_ORIGIN", "*")],
    allow_methods=["*"],
    allow_headers=["*"],
)


def _journal(session: Session, event: dict[str, Any]) -> None:
    directory = os.environ.get("DJ_SESSION_JOURNAL_DIR")
    if not directory:
        return
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, f"{session.id}.jsonl")
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(event, sort_keys=True) + "\n")


def _unprocessable(detail: str) -> HTTPException:
    return HTTPException(status_code=422, detail=detail)


@app.get("/instances")
def list_instances() -> dict[str, list[str]]:
    return {"instances": list(FIXTURE_NAMES)}


@app.get("/instances/{name}")
def get_instance(name: str) -> dict[str, Any]:
    try:
        return json.loads(instance_text(name))
    except KeyError:
        raise HTTPException(status_code=404, detail=f"unknown instance {name!r}")


@app.post("/sessions", response_model=CreateSessionResponse)
def create_session(request: CreateSessionRequest) -> CreateSessionResponse:
    try:
        sit = formats.instance_from_payload(request.instance)
        model = formats.model_from_payload(request.model)
        require_valid_model(sit, model)
        gamma = (
            frozenset(request.gamma)
            if request.gamma is not None
            else frozenset(sit.arguments)
        )
        sit.require_arguments(gamma)
    except (formats.DocumentError, UnknownIdentifier) as exc:
        raise _unprocessable(str(exc))

    session = Session(
        id=uuid.uuid4().hex,
        situation=sit,
        model=model,
        gamma=gamma,
        budget=request.budget,
        oracle_mode=request.oracle_mode,
        certificate=request.cac_certificate,
    )
    mode = request.oracle_mode
    if mode.mode == "simulated":
        try:
            oracle = Agent(
                sit,
                mode.policy,
                seed=mode.seed,
                current=mode.start_perspective or "",
            )
            session.transcript = run_validation_dialogue(
                oracle, model, gamma, request.budget
            )
        except (ValueError, UnknownIdentifier) as exc:
            raise _unprocessable(str(exc))
    else:
        # human oracles answer deterministically from wherever they stand,
        # so a single probing round is definitive
        session.engine = DialogueEngine(
            sit.propositions, model, gamma, request.budget, single_round=True
        )
        if session.engine.finished:
            session.transcript = session.engine.result()
    STORE.add(session)
    _journal(session, {"event": "created", "mode": mode.mode, "state": session.state})
    return CreateSessionResponse(session_id=session.id, state=session.state)


@app.get("/sessions/{session_id}/next", response_model=NextResponse)
def next_query(session_id: str) -> NextResponse:
    session = STORE.get(session_id)
    with session.lock:
        if session.transcript is not None:
            return NextResponse(state="done", verdict=session.transcript.verdict)
        engine = session.engine
        assert engine is not None and engine.pending is not None
        q = engine.pending
        return NextResponse(
            state="running",
            query=PendingQuery(query_id=q.index, kind=q.kind, pair=q.pair),
        )


@app.post("/sessions/{session_id}/answer", response_model=AnswerResponse)
def post_answer(session_id: str, request: AnswerRequest) -> AnswerResponse:
    session = STORE.get(session_id)
    with session.lock:
        if session.transcript is not None:
            raise HTTPException(status_code=409, detail="session already done")
        engine = session.engine
        assert engine is not None and engine.pending is not None
        if request.query_id != engine.pending.index:
            raise HTTPException(
                status_code=409,
                detail=f"stale query id {request.query_id}; pending is {engine.pending.index}",
            )
        engine.submit(request.answer == "yes", None)
        _journal(
            session,
            {
                "event": "answer",
                "query_id": request.query_id,
                "answer": request.answer,
            },
        )
        if engine.finished:
            session.transcript = engine.result()
            _journal(session, {"event": "done", "verdict": session.transcript.verdict})
        return AnswerResponse(
            acknowledged=True,
            state=session.state,
            verdict=session.transcript.verdict if session.transcript else None,
        )


def _certificate_conclusion(session: Session) -> dict[str, Any] | None:
    """T_i = T_eta follows from a valid verdict plus a checked CAC certificate."""
    cert = session.certificate
    transcript = session.transcript
    if cert is None or transcript is None or transcript.verdict != "valid":
        return None
    cert_gamma = set(cert.get("gamma", []))
    if cert_gamma != set(session.gamma) or not cert.get("cac"):
        return None
    recomputed = check_cac(session.situation, session.gamma)
    if not recomputed.cac:
        return None
    claims = sorted(model_claims(session.situation, session.model))
    return {
        "holds": True,
        "T_i": claims,
        "basis": "valid dialogue + CAC certificate",
        "certificate_j": recomputed.j,
        "certificate_k": recomputed.k,
    }


@app.get("/sessions/{session_id}/report", response_model=ReportResponse)
def session_report(session_id: str) -> ReportResponse:
    session = STORE.get(session_id)
    with session.lock:
        if session.transcript is None:
            engine = session.engine
            assert engine is not None
            partial = [
                {
                    "kind": e.kind,
                    "pair": list(e.pair),
                    "answer": "yes" if e.answer else "no",
                    "perspective": e.perspective_used,
                }
                for e in engine.entries
            ]
            return ReportResponse(
                state="running",
                transcript={"queries": partial},
            )
        transcript_doc = formats.transcript_to_payload(session.transcript)
        claims = sorted(model_claims(session.situation, session.model))
        return ReportResponse(
            state="done",
            transcript=transcript_doc,
            verdict=session.transcript.verdict,
            claims=claims,
            judgment_conclusion=_certificate_conclusion(session),
        )


@app.get("/sessions/{session_id}/truth")
def session_truth(session_id: str) -> dict[str, Any]:
    """Ground-truth comparison for tests and the analyst view."""
    session = STORE.get(session_id)
    judgment = sorted(deliberated_judgment(session.situation))
    return {
        "judgment": judgment,
        "claims": sorted(model_claims(session.situation, session.model)),
    }
