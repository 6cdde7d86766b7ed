"""Finite decision situations and the base deliberated-judgment semantics.

A decision situation bundles a topic (propositions), a finite pool of
arguments, a support relation from arguments to propositions, and a trump
relation between arguments given either per perspective or directly as the
pair (trumps-in-some-perspective, not-trumps-in-some-perspective).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

Pair = tuple[str, str]

JUSTIFIABLE = "justifiable"
UNTENABLE = "untenable"
NEITHER = "neither"


class UnknownIdentifier(ValueError):
    """An operation referenced an identifier the situation does not declare."""


class NotClearCut(ValueError):
    """Raised by operations that require a clear-cut situation.

    ``neither`` carries the undecided propositions.
    """

    def __init__(self, neither: tuple[str, ...]):
        super().__init__(
            "situation is not clear-cut; undecided: " + ", ".join(neither)
        )
        self.neither = neither


def _pairset(pairs: Iterable[Pair]) -> frozenset[Pair]:
    return frozenset((a, b) for a, b in pairs)


@dataclass(frozen=True)
class PerspectiveEncoding:
    """Trump pairs per perspective; in each pair the first argument trumps the second."""

    perspectives: Mapping[str, frozenset[Pair]]

    @staticmethod
    def of(perspectives: Mapping[str, Iterable[Pair]]) -> "PerspectiveEncoding":
        return PerspectiveEncoding(
            {p: _pairset(v) for p, v in perspectives.items()}
        )


@dataclass(frozen=True)
class DirectEncoding:
    """Trump relation given directly.

    ``ambivalent`` is the overlap between trumping and not-trumping: pairs the
    individual both affirms and denies depending on their perspective.  The
    not-trumps relation is then the complement of ``trumps_exists`` united
    with ``ambivalent``.
    """

    trumps_exists: frozenset[Pair]
    ambivalent: frozenset[Pair]

    @staticmethod
    def of(trumps_exists: Iterable[Pair], ambivalent: Iterable[Pair] = ()) -> "DirectEncoding":
        return DirectEncoding(_pairset(trumps_exists), _pairset(ambivalent))


@dataclass(frozen=True)
class DerivedRelations:
    """The four trump relations plus the decisive-argument set.

    Conventions: for a relation R and argument s, the forward image R(s) is
    {x : s R x} and the preimage R^-1(s) is {x : x R s}; images of sets are
    unions of member images.
    """

    trumps_exists: frozenset[Pair]
    not_trumps_exists: frozenset[Pair]
    trumps_forall: frozenset[Pair]
    not_trumps_forall: frozenset[Pair]
    decisive: frozenset[str]

    @cached_property
    def _fwd_exists(self) -> dict[str, frozenset[str]]:
        return _index_forward(self.trumps_exists)

    @cached_property
    def _pre_exists(self) -> dict[str, frozenset[str]]:
        return _index_backward(self.trumps_exists)

    @cached_property
    def _fwd_forall(self) -> dict[str, frozenset[str]]:
        return _index_forward(self.trumps_forall)

    @cached_property
    def _pre_forall(self) -> dict[str, frozenset[str]]:
        return _index_backward(self.trumps_forall)

    def trumped_by(self, s: str) -> frozenset[str]:
        """Forward image of s under the exists-trump relation."""
        return self._fwd_exists.get(s, frozenset())

    def trumpers_of(self, s: str) -> frozenset[str]:
        """Preimage of s under the exists-trump relation."""
        return self._pre_exists.get(s, frozenset())

    def image_exists(self, args: Iterable[str]) -> frozenset[str]:
        out: set[str] = set()
        for s in args:
            out |= self._fwd_exists.get(s, frozenset())
        return frozenset(out)

    def image_forall(self, args: Iterable[str]) -> frozenset[str]:
        out: set[str] = set()
        for s in args:
            out |= self._fwd_forall.get(s, frozenset())
        return frozenset(out)

    def forall_trumpers_of(self, s: str) -> frozenset[str]:
        return self._pre_forall.get(s, frozenset())


def _index_forward(pairs: frozenset[Pair]) -> dict[str, frozenset[str]]:
    acc: dict[str, set[str]] = {}
    for a, b in pairs:
        acc.setdefault(a, set()).add(b)
    return {a: frozenset(v) for a, v in acc.items()}


def _index_backward(pairs: frozenset[Pair]) -> dict[str, frozenset[str]]:
    acc: dict[str, set[str]] = {}
    for a, b in pairs:
        acc.setdefault(b, set()).add(a)
    return {b: frozenset(v) for b, v in acc.items()}


@dataclass(frozen=True)
class DecisionSituation:
    propositions: frozenset[str]
    arguments: frozenset[str]
    support: frozenset[Pair]
    relations: PerspectiveEncoding | DirectEncoding

    @staticmethod
    def from_perspectives(
        propositions: Iterable[str],
        arguments: Iterable[str],
        support: Iterable[Pair],
        perspectives: Mapping[str, Iterable[Pair]],
    ) -> "DecisionSituation":
        return DecisionSituation(
            frozenset(propositions),
            frozenset(arguments),
            _pairset(support),
            PerspectiveEncoding.of(perspectives),
        )

    @staticmethod
    def direct(
        propositions: Iterable[str],
        arguments: Iterable[str],
        support: Iterable[Pair],
        trumps_exists: Iterable[Pair],
        ambivalent: Iterable[Pair] = (),
    ) -> "DecisionSituation":
        return DecisionSituation(
            frozenset(propositions),
            frozenset(arguments),
            _pairset(support),
            DirectEncoding.of(trumps_exists, ambivalent),
        )

    @cached_property
    def derived(self) -> DerivedRelations:
        return derive_relations(self)

    @cached_property
    def _supporters(self) -> dict[str, frozenset[str]]:
        return _index_backward(self.support)

    @cached_property
    def _supported(self) -> dict[str, frozenset[str]]:
        return _index_forward(self.support)

    def supporters_of(self, t: str) -> frozenset[str]:
        return self._supporters.get(t, frozenset())

    def supported_by(self, s: str) -> frozenset[str]:
        return self._supported.get(s, frozenset())

    def support_image(self, args: Iterable[str]) -> frozenset[str]:
        out: set[str] = set()
        for s in args:
            out |= self._supported.get(s, frozenset())
        return frozenset(out)

    def require_proposition(self, t: str) -> None:
        if t not in self.propositions:
            raise UnknownIdentifier(f"unknown proposition {t!r}")

    def require_arguments(self, args: Iterable[str]) -> None:
        missing = sorted(set(args) - self.arguments)
        if missing:
            raise UnknownIdentifier("unknown argument(s): " + ", ".join(missing))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...] = ()


def validate_situation(sit: DecisionSituation) -> ValidationReport:
    """Check well-formedness and return every violation found."""
    problems: list[str] = []
    args, props = sit.arguments, sit.propositions

    for label, ids in (("argument", args), ("proposition", props)):
        for x in ids:
            if not isinstance(x, str) or not x:
                problems.append(f"empty or non-string {label} identifier {x!r}")
    shared = sorted(args & props)
    if shared:
        problems.append(
            "identifiers used both as argument and proposition: " + ", ".join(shared)
        )

    for s, t in sorted(sit.support):
        if s not in args:
            problems.append(f"support references unknown argument {s!r}")
        if t not in props:
            problems.append(f"support references unknown proposition {t!r}")

    def check_trumps(pairs: Iterable[Pair], where: str) -> None:
        for a, b in sorted(pairs):
            for x in (a, b):
                if x not in args:
                    problems.append(f"{where} references unknown argument {x!r}")
            if a == b:
                problems.append(f"{where} contains self-trump pair ({a!r}, {b!r})")

    rel = sit.relations
    if isinstance(rel, PerspectiveEncoding):
        if not rel.perspectives:
            problems.append("perspective mapping is empty")
        for p in sorted(rel.perspectives):
            if not isinstance(p, str) or not p:
                problems.append(f"empty perspective identifier {p!r}")
            check_trumps(rel.perspectives[p], f"perspective {p!r}")
    else:
        check_trumps(rel.trumps_exists, "trumps_exists")
        check_trumps(rel.ambivalent, "ambivalent")
        stray = sorted(set(rel.ambivalent) - set(rel.trumps_exists))
        if stray:
            problems.append(
                "ambivalent pairs not contained in trumps_exists: "
                + ", ".join(f"({a},{b})" for a, b in stray)
            )

    return ValidationReport(not problems, tuple(problems))


def derive_relations(sit: DecisionSituation) -> DerivedRelations:
    """Compute the four trump relations and the decisive arguments.

    Requires a situation that passes :func:`validate_situation`.
    """
    args = sit.arguments
    all_pairs = frozenset((a, b) for a in args for b in args)
    rel = sit.relations

    if isinstance(rel, PerspectiveEncoding):
        views = list(rel.perspectives.values())
        exists: frozenset[Pair] = frozenset().union(*views) if views else frozenset()
        # a pair is denied somewhere iff some perspective lacks it
        forall = frozenset.intersection(*views) if views else frozenset()
        not_exists = all_pairs - forall
    else:
        exists = rel.trumps_exists
        not_exists = (all_pairs - exists) | rel.ambivalent
        forall = all_pairs - not_exists

    not_forall = all_pairs - exists
    trumped = {b for _, b in exists}
    decisive = frozenset(args - trumped)
    return DerivedRelations(exists, not_exists, forall, not_forall, decisive)


def to_direct_encoding(sit: DecisionSituation) -> DecisionSituation:
    """Re-encode a perspective-based situation as a direct one.

    The result has the same derived relations, hence the same semantics
    everywhere downstream.
    """
    if isinstance(sit.relations, DirectEncoding):
        return sit
    d = sit.derived
    ambivalent = d.trumps_exists & d.not_trumps_exists
    return DecisionSituation(
        sit.propositions,
        sit.arguments,
        sit.support,
        DirectEncoding(d.trumps_exists, ambivalent),
    )


def is_justifiable(sit: DecisionSituation, t: str) -> bool:
    """True iff some decisive argument supports t."""
    sit.require_proposition(t)
    decisive = sit.derived.decisive
    return any(s in decisive for s in sit.supporters_of(t))


def is_untenable(sit: DecisionSituation, t: str) -> bool:
    """True iff every supporter of t is always trumped by some decisive argument."""
    sit.require_proposition(t)
    d = sit.derived
    for s in sit.supporters_of(t):
        if not (d.forall_trumpers_of(s) & d.decisive):
            return False
    return True


def proposition_status(sit: DecisionSituation, t: str) -> str:
    if is_justifiable(sit, t):
        return JUSTIFIABLE
    if is_untenable(sit, t):
        return UNTENABLE
    return NEITHER


def deliberated_judgment(sit: DecisionSituation) -> frozenset[str]:
    """The set of justifiable propositions."""
    return frozenset(t for t in sit.propositions if is_justifiable(sit, t))


@dataclass(frozen=True)
class ClearCutReport:
    clear_cut: bool
    statuses: tuple[tuple[str, str], ...]

    def status_of(self, t: str) -> str:
        return dict(self.statuses)[t]


def is_clear_cut(sit: DecisionSituation) -> ClearCutReport:
    """Clear-cut iff no proposition is left neither justifiable nor untenable."""
    statuses = tuple(
        (t, proposition_status(sit, t)) for t in sorted(sit.propositions)
    )
    return ClearCutReport(
        all(status != NEITHER for _, status in statuses), statuses
    )
