"""Simulated individuals answering trump and support queries.

An agent owns a perspective-encoded situation, sits in one perspective at a
time, and answers each query from the perspective it is currently in.  The
transition policy decides where it lands after each answer; policies are
test instruments, not a cognitive model, and new ones can be registered.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .core import DecisionSituation, PerspectiveEncoding, UnknownIdentifier

STATIC = "static"
CYCLIC = "cyclic"
DRIFT = "drift"


@dataclass(frozen=True)
class QueryAnswer:
    kind: str  # "trump" | "support"
    pair: tuple[str, str]
    answer: bool
    perspective_used: str | None


def _stay(perspectives: list[str], current: str, seed: int, count: int) -> str:
    return current


def _advance(perspectives: list[str], current: str, seed: int, count: int) -> str:
    idx = perspectives.index(current)
    return perspectives[(idx + 1) % len(perspectives)]


def _drift(perspectives: list[str], current: str, seed: int, count: int) -> str:
    # pure function of (seed, query count) so sessions replay exactly
    pick = random.Random((seed << 20) ^ count).randrange(len(perspectives))
    return perspectives[pick]


POLICY_TRANSITIONS: dict[str, Callable[[list[str], str, int, int], str]] = {
    STATIC: _stay,
    CYCLIC: _advance,
    DRIFT: _drift,
}


@dataclass
class Agent:
    """Single-owner query oracle; one query at a time."""

    situation: DecisionSituation
    policy: str = STATIC
    seed: int = 0
    current: str = ""
    query_count: int = 0

    def __post_init__(self):
        if not isinstance(self.situation.relations, PerspectiveEncoding):
            raise ValueError("agents require a perspective-encoded situation")
        if self.policy not in POLICY_TRANSITIONS:
            raise ValueError(f"unknown policy {self.policy!r}")
        if not self.current:
            self.current = self._perspectives()[0]
        elif self.current not in self.situation.relations.perspectives:
            raise UnknownIdentifier(f"unknown perspective {self.current!r}")

    def _perspectives(self) -> list[str]:
        return sorted(self.situation.relations.perspectives)

    def _step(self) -> None:
        self.query_count += 1
        self.current = POLICY_TRANSITIONS[self.policy](
            self._perspectives(), self.current, self.seed, self.query_count
        )

    def ask_trump(self, s2: str, s1: str) -> QueryAnswer:
        """Does s2 trump s1, judged from the current perspective?"""
        self.situation.require_arguments({s2, s1})
        view = self.situation.relations.perspectives[self.current]
        answer = QueryAnswer("trump", (s2, s1), (s2, s1) in view, self.current)
        self._step()
        return answer

    def ask_support(self, s: str, t: str) -> QueryAnswer:
        """Does s support t?  Perspective-independent, but still a query."""
        self.situation.require_arguments({s})
        self.situation.require_proposition(t)
        answer = QueryAnswer(
            "support", (s, t), (s, t) in self.situation.support, self.current
        )
        self._step()
        return answer

    def reset(self, perspective: str) -> None:
        if perspective not in self.situation.relations.perspectives:
            raise UnknownIdentifier(f"unknown perspective {perspective!r}")
        self.current = perspective
        self.query_count = 0
