"""Analyst-side validation dialogues driven only by trump/support queries.

The engine walks the observable obligations of operational validity in a
fixed order: first every claimed support, then for each claim the trumper
probes over gamma with counter-confirmation on a yes, then the supporters
of unclaimed propositions.  A no answer on a counter probe never refutes
the counter claim outright, so such probes are retried within a budget and
exhaustion yields the third verdict, "inconclusive".  Oracles committed to
a fixed perspective answer deterministically; for them a single round is
definitive and exhaustion is a refutation instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .agents import STATIC, Agent, QueryAnswer
from .core import DecisionSituation
from .models import (
    Failure,
    MISSING_COUNTER,
    Model,
    UNCOUNTERED_TRUMPER,
    UNSUPPORTED_CLAIM,
    model_claims,
    require_valid_model,
)

VALID = "valid"
INVALID = "invalid"
INCONCLUSIVE = "inconclusive"

Obligation = tuple


@dataclass(frozen=True)
class Query:
    index: int
    kind: str  # "trump" | "support"
    pair: tuple[str, str]


@dataclass(frozen=True)
class DialogueTranscript:
    model: Model
    gamma: tuple[str, ...]
    budget: int
    single_round: bool
    entries: tuple[QueryAnswer, ...]
    verdict: str
    failures: tuple[Failure, ...]
    unresolved: tuple[Obligation, ...]
    retry_rounds: tuple[tuple[Obligation, int], ...]


class DialogueEngine:
    """Incremental dialogue cursor: one pending query at a time."""

    def __init__(
        self,
        propositions: Iterable[str],
        model: Model,
        gamma: Iterable[str],
        budget: int,
        single_round: bool,
    ):
        if budget < 1:
            raise ValueError("budget must be >= 1")
        self.model = model
        self.gamma = tuple(sorted(set(gamma)))
        self.budget = budget
        self.single_round = single_round
        self._propositions = tuple(sorted(set(propositions)))
        self._entries: list[QueryAnswer] = []
        self._failures: list[Failure] = []
        self._unresolved: list[Obligation] = []
        self._rounds: dict[Obligation, int] = {}
        self._support_seen: dict[tuple[str, str], bool] = {}
        self._finished = False
        self._gen = self._run()
        self._pending: Query | None = self._bootstrap()

    def _bootstrap(self) -> Query | None:
        try:
            return next(self._gen)
        except StopIteration:
            self._finished = True
            return None

    @property
    def finished(self) -> bool:
        return self._finished

    @property
    def pending(self) -> Query | None:
        return self._pending

    @property
    def entries(self) -> tuple[QueryAnswer, ...]:
        return tuple(self._entries)

    def submit(self, answer: bool, perspective: str | None = None) -> None:
        if self._finished or self._pending is None:
            raise RuntimeError("dialogue already finished")
        q = self._pending
        self._entries.append(QueryAnswer(q.kind, q.pair, answer, perspective))
        try:
            self._pending = self._gen.send(answer)
        except StopIteration:
            self._finished = True
            self._pending = None

    def result(self) -> DialogueTranscript:
        if not self._finished:
            raise RuntimeError("dialogue still running")
        if self._failures:
            verdict = INVALID
        elif self._unresolved:
            verdict = INCONCLUSIVE
        else:
            verdict = VALID
        return DialogueTranscript(
            model=self.model,
            gamma=self.gamma,
            budget=self.budget,
            single_round=self.single_round,
            entries=tuple(self._entries),
            verdict=verdict,
            failures=tuple(self._failures),
            unresolved=tuple(self._unresolved),
            retry_rounds=tuple(sorted(self._rounds.items())),
        )

    # --- obligation walk -------------------------------------------------

    def _query(self, kind: str, pair: tuple[str, str]) -> Query:
        return Query(len(self._entries), kind, pair)

    def _run(self) -> Iterator[Query]:
        claims = sorted(self.model.support_claims)

        for s, t in claims:
            ans = yield self._query("support", (s, t))
            self._support_seen[(s, t)] = ans
            if not ans:
                self._failures.append(Failure(UNSUPPORTED_CLAIM, (s, t)))
                return

        for s, t in claims:
            for s_c in self.gamma:
                if s_c == s:
                    continue
                ans = yield self._query("trump", (s_c, s))
                if not ans:
                    continue
                key: Obligation = ("claim-counter", s, t, s_c)
                outcome = yield from self._discharge(
                    key, s_c, UNCOUNTERED_TRUMPER, (s, s_c)
                )
                if outcome == INVALID:
                    return

        claimed = model_claims_of(self.model)
        for t in self._propositions:
            if t in claimed:
                continue
            for s in self.gamma:
                if (s, t) in self._support_seen:
                    sup = self._support_seen[(s, t)]
                else:
                    sup = yield self._query("support", (s, t))
                    self._support_seen[(s, t)] = sup
                if not sup:
                    continue
                key = ("supporter-counter", t, s)
                outcome = yield from self._discharge(key, s, MISSING_COUNTER, (t, s))
                if outcome == INVALID:
                    return

    def _discharge(
        self, key: Obligation, target: str, fail_kind: str, witness: tuple[str, str]
    ) -> Iterator[Query]:
        counters = self.model.counters_of(target)
        if not counters:
            self._failures.append(Failure(fail_kind, witness))
            return INVALID
        rounds = 1 if self.single_round else self.budget
        for r in range(rounds):
            self._rounds[key] = r + 1
            for s_cc in counters:
                ans = yield self._query("trump", (s_cc, target))
                if ans:
                    return "discharged"
        if self.single_round:
            # a committed oracle repeats itself; the no answers are final
            self._failures.append(Failure(fail_kind, witness))
            return INVALID
        self._unresolved.append(key)
        return "unresolved"


def model_claims_of(m: Model) -> frozenset[str]:
    return frozenset(t for _, t in m.support_claims)


def run_validation_dialogue(
    oracle: Agent, m: Model, gamma: Iterable[str], budget: int = 1
) -> DialogueTranscript:
    """Drive a full validation dialogue against a simulated oracle."""
    sit = oracle.situation
    require_valid_model(sit, m)
    g = frozenset(gamma)
    sit.require_arguments(g)
    engine = DialogueEngine(
        sit.propositions,
        m,
        g,
        budget,
        single_round=(oracle.policy == STATIC),
    )
    while not engine.finished:
        q = engine.pending
        assert q is not None
        if q.kind == "support":
            got = oracle.ask_support(*q.pair)
        else:
            got = oracle.ask_trump(*q.pair)
        engine.submit(got.answer, got.perspective_used)
    return engine.result()


def query_budget_limit(m: Model, gamma_size: int, topic_size: int, budget: int) -> int:
    """Upper bound on the number of queries a dialogue may issue."""
    n_claims = len(m.support_claims)
    n_counters = len(m.counter_claims)
    claimed = len(model_claims_of(m))
    per_obligation = 1 + budget * n_counters
    return n_claims * (1 + gamma_size * per_obligation) + (
        topic_size - claimed
    ) * gamma_size * per_obligation


def replay_transcript(sit: DecisionSituation, transcript: DialogueTranscript) -> bool:
    """Check a transcript against ground truth and the dialogue rules.

    True iff every recorded answer is consistent with the situation's
    relations and the recorded verdict is exactly what the engine derives
    from those answers.
    """
    d = sit.derived
    for entry in transcript.entries:
        a, b = entry.pair
        if a not in sit.arguments:
            return False
        if entry.kind == "support":
            if b not in sit.propositions:
                return False
            if entry.answer != ((a, b) in sit.support):
                return False
        else:
            if b not in sit.arguments:
                return False
            if entry.answer and (a, b) not in d.trumps_exists:
                return False
            if not entry.answer and (a, b) not in d.not_trumps_exists:
                return False

    try:
        engine = DialogueEngine(
            sit.propositions,
            transcript.model,
            transcript.gamma,
            transcript.budget,
            transcript.single_round,
        )
    except ValueError:
        return False
    for entry in transcript.entries:
        if engine.finished or engine.pending is None:
            return False
        q = engine.pending
        if (q.kind, q.pair) != (entry.kind, entry.pair):
            return False
        engine.submit(entry.answer, entry.perspective_used)
    if not engine.finished:
        return False
    derived = engine.result()
    return (
        derived.verdict == transcript.verdict
        and derived.failures == transcript.failures
        and derived.unresolved == transcript.unresolved
    )
