"""Analyst models and their validity checks.

A model is the analyst's guess at which arguments carry which propositions
and which counter-arguments answer which attacks.  Plain validity compares
the model's claims with the deliberated judgment; operational validity is
the query-checkable surrogate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    DecisionSituation,
    NotClearCut,
    Pair,
    UnknownIdentifier,
    ValidationReport,
    deliberated_judgment,
    is_clear_cut,
)
from .conditions import CheckResult, ConditionReport, check_cac, is_efficient

UNSUPPORTED_CLAIM = "unsupported-claim"
UNCOUNTERED_TRUMPER = "uncountered-trumper"
MISSING_COUNTER = "missing-counter-for-supporter"


@dataclass(frozen=True)
class Model:
    """Claimed support pairs (argument, proposition) and counter pairs (counter, countered)."""

    support_claims: frozenset[Pair]
    counter_claims: frozenset[Pair]

    @staticmethod
    def of(support: Iterable[Pair], counters: Iterable[Pair] = ()) -> "Model":
        return Model(
            frozenset((a, b) for a, b in support),
            frozenset((a, b) for a, b in counters),
        )

    def counters_of(self, target: str) -> tuple[str, ...]:
        return tuple(sorted(a for a, b in self.counter_claims if b == target))


@dataclass(frozen=True)
class Failure:
    kind: str
    subject: Pair


@dataclass(frozen=True)
class ValidationVerdict:
    verdict: str  # "valid" | "invalid"
    failures: tuple[Failure, ...] = ()
    # discharging counter-witnesses drawn from outside the checked gamma
    external_witnesses: tuple[Pair, ...] = ()

    @property
    def valid(self) -> bool:
        return self.verdict == "valid"


def validate_model(sit: DecisionSituation, m: Model) -> ValidationReport:
    problems: list[str] = []
    for s, t in sorted(m.support_claims):
        if s not in sit.arguments:
            problems.append(f"model support claim references unknown argument {s!r}")
        if t not in sit.propositions:
            problems.append(f"model support claim references unknown proposition {t!r}")
    for a, b in sorted(m.counter_claims):
        for x in (a, b):
            if x not in sit.arguments:
                problems.append(f"model counter claim references unknown argument {x!r}")
        if a == b:
            problems.append(f"model counter claim is a self-counter ({a!r})")
    return ValidationReport(not problems, tuple(problems))


def require_valid_model(sit: DecisionSituation, m: Model) -> None:
    report = validate_model(sit, m)
    if not report.ok:
        raise UnknownIdentifier("; ".join(report.violations))


def model_claims(sit: DecisionSituation, m: Model) -> frozenset[str]:
    """Propositions the model claims are supported."""
    return frozenset(t for _, t in m.support_claims)


def is_valid(sit: DecisionSituation, m: Model) -> bool:
    """True iff the model's claims coincide with the deliberated judgment."""
    return model_claims(sit, m) == deliberated_judgment(sit)


def is_gamma_operationally_valid(
    sit: DecisionSituation, gamma: Iterable[str], m: Model
) -> ValidationVerdict:
    """Operational validity with counter-argument probing restricted to gamma.

    Clause one: each claimed supporter genuinely supports its proposition,
    and every gamma argument that always trumps it is answered by a model
    counter that trumps it in at least one perspective.  Clause two: each
    unclaimed proposition has every gamma supporter countered likewise.
    All violations are enumerated.
    """
    g = frozenset(gamma)
    sit.require_arguments(g)
    d = sit.derived
    failures: list[Failure] = []
    external: list[Pair] = []
    claimed = model_claims(sit, m)

    def confirmed_counter(target: str) -> str | None:
        for cand in m.counters_of(target):
            if (cand, target) in d.trumps_exists:
                return cand
        return None

    for s, t in sorted(m.support_claims):
        if (s, t) not in sit.support:
            failures.append(Failure(UNSUPPORTED_CLAIM, (s, t)))
        for s_c in sorted(g):
            if (s_c, s) in d.not_trumps_exists:
                continue
            hit = confirmed_counter(s_c)
            if hit is None:
                failures.append(Failure(UNCOUNTERED_TRUMPER, (s, s_c)))
            elif hit not in g:
                external.append((hit, s_c))

    for t in sorted(sit.propositions - claimed):
        for s in sorted(g & sit.supporters_of(t)):
            hit = confirmed_counter(s)
            if hit is None:
                failures.append(Failure(MISSING_COUNTER, (t, s)))
            elif hit not in g:
                external.append((hit, s))

    verdict = "invalid" if failures else "valid"
    return ValidationVerdict(verdict, tuple(failures), tuple(external))


def is_operationally_valid(sit: DecisionSituation, m: Model) -> ValidationVerdict:
    """Operational validity with the counter quantifier over the whole pool."""
    return is_gamma_operationally_valid(sit, sit.arguments, m)


def synthesize_model(sit: DecisionSituation) -> Model:
    """Build a model from the judgment itself; requires a clear-cut situation.

    Justifiable propositions get their lowest decisive supporter; every
    supporter of an untenable proposition gets its lowest decisive
    always-trumper as a counter.  The output is operationally valid and
    valid by construction.
    """
    report = is_clear_cut(sit)
    if not report.clear_cut:
        raise NotClearCut(
            tuple(t for t, status in report.statuses if status == "neither")
        )
    d = sit.derived
    support: set[Pair] = set()
    counters: set[Pair] = set()
    for t, status in report.statuses:
        if status == "justifiable":
            pick = min(sorted(sit.supporters_of(t) & d.decisive))
            support.add((pick, t))
        else:
            for s in sorted(sit.supporters_of(t)):
                counter = min(sorted(d.forall_trumpers_of(s) & d.decisive))
                counters.add((counter, s))
    return Model(frozenset(support), frozenset(counters))


@dataclass(frozen=True)
class ExtractionResult:
    ok: bool
    gamma: frozenset[str] | None = None
    cac_report: ConditionReport | None = None
    efficiency_failure: CheckResult | None = None


def _extraction_pick(
    sit: DecisionSituation, candidates: frozenset[str]
) -> str:
    # prefer arguments whose trump stance is perspective-stable; an
    # ambivalently-trumping untrumped pick makes answerability unrepairable
    d = sit.derived
    ambivalent_sources = {a for a, _ in d.trumps_exists & d.not_trumps_exists}
    stable = sorted(candidates - ambivalent_sources)
    if stable:
        return stable[0]
    return min(sorted(candidates))


def extract_cac_subset(sit: DecisionSituation, chosen: Iterable[str]) -> ExtractionResult:
    """From an efficient set, pull the decisive arguments that settle the topic.

    Returns the extracted gamma together with its condition report when the
    input set is efficient, and the efficiency failure otherwise.  The
    companion theorem promises the extraction is CAC; the attached report
    makes that promise checkable instead of assumed.
    """
    chosen_set = frozenset(chosen)
    sit.require_arguments(chosen_set)
    eff = is_efficient(sit, chosen_set)
    if not eff.passed:
        return ExtractionResult(False, efficiency_failure=eff)
    d = sit.derived
    dec = chosen_set & d.decisive
    gamma: set[str] = set()
    for t, status in is_clear_cut(sit).statuses:
        if status == "justifiable":
            gamma.add(_extraction_pick(sit, sit.supporters_of(t) & dec))
        else:
            for s in sorted(sit.supporters_of(t)):
                gamma.add(_extraction_pick(sit, d.forall_trumpers_of(s) & dec))
    report = check_cac(sit, frozenset(gamma))
    return ExtractionResult(True, frozenset(gamma), report)
