"""Sufficiency conditions over argument subsets and the derived set classes.

Implements replacement, essential replacement, defense, the covering /
answerability / reinstatement / width / length checks, their combination
(the CAC verdict), efficiency, and the set-inclusion suite used to
regression-test the accompanying lemmas.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .core import (
    DecisionSituation,
    Pair,
    deliberated_judgment,
)

DEFENSE_TRUMPER_CAP = 20


class DefenseCapExceeded(RuntimeError):
    """An argument has more trumpers than the exact defense search accepts."""


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    witnesses: tuple = ()

    def __bool__(self) -> bool:
        return self.passed


def _gamma_set(sit: DecisionSituation, gamma: Iterable[str]) -> frozenset[str]:
    g = frozenset(gamma)
    sit.require_arguments(g)
    return g


def replaces(sit: DecisionSituation, replacing: Iterable[str], s: str) -> bool:
    """True iff the set covers everything s trumps and everything s supports."""
    rep = frozenset(replacing)
    sit.require_arguments(rep | {s})
    d = sit.derived
    return (
        d.trumped_by(s) <= d.image_exists(rep)
        and sit.supported_by(s) <= sit.support_image(rep)
    )


def essentially_replaces(
    sit: DecisionSituation, gamma: Iterable[str], replacing: Iterable[str], s: str
) -> bool:
    """Replacement with the trump obligation restricted to targets inside gamma."""
    g = _gamma_set(sit, gamma)
    rep = frozenset(replacing)
    sit.require_arguments(rep | {s})
    d = sit.derived
    return (
        (d.trumped_by(s) & g) <= d.image_exists(rep)
        and sit.supported_by(s) <= sit.support_image(rep)
    )


def finitely_defended(sit: DecisionSituation, gamma: Iterable[str], s: str) -> bool:
    """Every trumper of s is trumped by some decisive member of gamma.

    This is the image-based reading of defense; in a finite pool the
    defending coalition can always be taken to be all decisive gamma members.
    """
    g = _gamma_set(sit, gamma)
    d = sit.derived
    sit.require_arguments({s})
    g_dec = g & d.decisive
    return d.trumpers_of(s) <= d.image_exists(g_dec)


def is_defended(sit: DecisionSituation, gamma: Iterable[str], s: str) -> bool:
    """True iff each trumper of s is always trumped by a decisive member of gamma."""
    g = _gamma_set(sit, gamma)
    sit.require_arguments({s})
    d = sit.derived
    for s_c in d.trumpers_of(s):
        if not (d.forall_trumpers_of(s_c) & g & d.decisive):
            return False
    return True


def minimal_defense_size(
    sit: DecisionSituation, gamma: Iterable[str], s: str
) -> int | None:
    """Size of the smallest subset of gamma defending s, or None when undefended.

    Exact minimal-cover search; arguments with more than
    ``DEFENSE_TRUMPER_CAP`` trumpers are refused rather than guessed at.
    """
    g = _gamma_set(sit, gamma)
    sit.require_arguments({s})
    d = sit.derived
    trumpers = sorted(d.trumpers_of(s))
    if not trumpers:
        return 0
    if len(trumpers) > DEFENSE_TRUMPER_CAP:
        raise DefenseCapExceeded(
            f"{s!r} has {len(trumpers)} trumpers (cap {DEFENSE_TRUMPER_CAP})"
        )
    defender_sets = []
    for s_c in trumpers:
        ds = d.forall_trumpers_of(s_c) & g & d.decisive
        if not ds:
            return None
        defender_sets.append(ds)

    # greedy upper bound, then exact scan upward from 1
    remaining = list(defender_sets)
    greedy: set[str] = set()
    while remaining:
        best = max(
            sorted(set().union(*remaining)),
            key=lambda c: sum(1 for ds in remaining if c in ds),
        )
        greedy.add(best)
        remaining = [ds for ds in remaining if best not in ds]
    pool = sorted(set().union(*defender_sets))
    for size in range(1, len(greedy)):
        for combo in itertools.combinations(pool, size):
            cs = set(combo)
            if all(cs & ds for ds in defender_sets):
                return size
    return len(greedy)


def is_j_defended(sit: DecisionSituation, gamma: Iterable[str], s: str, j: int) -> bool:
    size = minimal_defense_size(sit, gamma, s)
    return size is not None and size <= j


@dataclass(frozen=True)
class GammaAnalysis:
    """All derived classes for a chosen argument subset."""

    gamma: frozenset[str]
    s_gamma_dec: frozenset[str]
    s_gamma_res: frozenset[str]
    s_gamma_def: frozenset[str]
    r_gamma_dec: frozenset[str]
    e_gamma_res: frozenset[str]
    e_gamma_dec: frozenset[str]
    q_relation: frozenset[Pair]
    width_witness: int
    length_witness: int | None


def q_relation(sit: DecisionSituation, gamma: Iterable[str]) -> frozenset[Pair]:
    """One- or two-step trump reachability, restricted to gamma on both ends."""
    g = _gamma_set(sit, gamma)
    d = sit.derived
    out: set[Pair] = set()
    for a in g:
        direct = d.trumped_by(a)
        two_step = d.image_exists(direct)
        for b in (direct | two_step) & g:
            out.add((a, b))
    return frozenset(out)


def _longest_path(pairs: frozenset[Pair]) -> int | None:
    """Edge count of the longest path, or None when the relation has a cycle."""
    succ: dict[str, list[str]] = {}
    nodes: set[str] = set()
    for a, b in pairs:
        succ.setdefault(a, []).append(b)
        nodes.update((a, b))
    depth: dict[str, int] = {}
    on_stack: set[str] = set()

    def visit(n: str) -> int | None:
        if n in on_stack:
            return None
        if n in depth:
            return depth[n]
        on_stack.add(n)
        best = 0
        for m in succ.get(n, ()):
            sub = visit(m)
            if sub is None:
                return None
            best = max(best, sub + 1)
        on_stack.discard(n)
        depth[n] = best
        return best

    longest = 0
    for n in sorted(nodes):
        got = visit(n)
        if got is None:
            return None
        longest = max(longest, got)
    return longest


def smallest_width_bound(sit: DecisionSituation, gamma: Iterable[str]) -> int:
    """Smallest j for which every defended gamma member is j-defended."""
    g = _gamma_set(sit, gamma)
    best = 0
    for s in g:
        size = minimal_defense_size(sit, g, s)
        if size is not None:
            best = max(best, size)
    return best


def smallest_length_bound(sit: DecisionSituation, gamma: Iterable[str]) -> int | None:
    """Smallest k bounding gamma's chain length, or None when Q is cyclic."""
    longest = _longest_path(q_relation(sit, gamma))
    if longest is None:
        return None
    return max(1, longest)


def gamma_analysis(sit: DecisionSituation, gamma: Iterable[str]) -> GammaAnalysis:
    g = _gamma_set(sit, gamma)
    d = sit.derived
    s_dec = g & d.decisive
    s_res = g - d.image_exists(s_dec)
    dec_image = d.image_exists(s_dec)
    s_def = frozenset(s for s in g if d.trumpers_of(s) <= dec_image)
    r_dec = frozenset(s for s in sit.arguments if replaces(sit, s_dec, s))
    e_res = frozenset(
        s for s in sit.arguments if essentially_replaces(sit, g, s_res, s)
    )
    e_dec = frozenset(
        s for s in sit.arguments if essentially_replaces(sit, g, s_dec, s)
    )
    return GammaAnalysis(
        gamma=g,
        s_gamma_dec=s_dec,
        s_gamma_res=s_res,
        s_gamma_def=s_def,
        r_gamma_dec=r_dec,
        e_gamma_res=e_res,
        e_gamma_dec=e_dec,
        q_relation=q_relation(sit, g),
        width_witness=smallest_width_bound(sit, g),
        length_witness=smallest_length_bound(sit, g),
    )


def is_unnecessary(sit: DecisionSituation, gamma: Iterable[str], s: str) -> bool:
    """Unnecessary: trumped by a resistant gamma member, or essentially replaceable."""
    g = _gamma_set(sit, gamma)
    sit.require_arguments({s})
    d = sit.derived
    s_dec = g & d.decisive
    s_res = g - d.image_exists(s_dec)
    if s in d.image_exists(s_res):
        return True
    return essentially_replaces(sit, g, s_res, s)


def is_covering(sit: DecisionSituation, gamma: Iterable[str]) -> CheckResult:
    """Pass iff every argument left outside gamma is unnecessary."""
    g = _gamma_set(sit, gamma)
    bad = tuple(
        s for s in sorted(sit.arguments - g) if not is_unnecessary(sit, g, s)
    )
    return CheckResult(not bad, bad)


def check_answerability(
    sit: DecisionSituation, gamma: Iterable[str] | None = None
) -> CheckResult:
    """Every ambivalently-trumping argument must itself be trumped.

    With ``gamma`` the trumping argument is restricted to gamma members;
    without it the whole argument pool is checked.  Witnesses are the
    ambivalent pairs whose trumper nothing trumps.
    """
    d = sit.derived
    g = sit.arguments if gamma is None else _gamma_set(sit, gamma)
    ambivalent = d.trumps_exists & d.not_trumps_exists
    bad = tuple(
        (s2, s1)
        for s2, s1 in sorted(ambivalent)
        if s2 in g and not d.trumpers_of(s2)
    )
    return CheckResult(not bad, bad)


def _replacer_exists(
    sit: DecisionSituation,
    candidates: Iterable[str],
    s1: str,
    forbidden_trumpers: frozenset[str],
) -> bool:
    d = sit.derived
    allowed = d.trumpers_of(s1) - forbidden_trumpers
    for s in sorted(candidates):
        if d.trumpers_of(s) <= allowed and replaces(sit, (s,), s1):
            return True
    return False


def check_closed_reinstatement(
    sit: DecisionSituation, gamma: Iterable[str] | None = None
) -> CheckResult:
    """Reinstatement closure.

    Whole-pool mode: for each chain s3 always-trumps s2 trumps s1 with s3
    decisive, some argument must replace s1 while shedding s2 as a trumper;
    witnesses are the failing (s1, s2, s3) triples.  Gamma mode: for each
    decisive s3 in gamma not trumping another member s1, some gamma member
    must replace s1 while avoiding every argument s3 always trumps;
    witnesses are the failing (s1, s3) pairs.
    """
    d = sit.derived
    if gamma is None:
        bad3: list[tuple[str, str, str]] = []
        for s2, s1 in sorted(d.trumps_exists):
            for s3 in sorted(d.forall_trumpers_of(s2) & d.decisive):
                if len({s1, s2, s3}) != 3:
                    continue
                if not _replacer_exists(sit, sit.arguments, s1, frozenset({s2})):
                    bad3.append((s1, s2, s3))
        return CheckResult(not bad3, tuple(bad3))

    g = _gamma_set(sit, gamma)
    bad2: list[tuple[str, str]] = []
    for s3 in sorted(g & d.decisive):
        shed = d.image_forall((s3,))
        for s1 in sorted(g - {s3} - d.trumped_by(s3)):
            if not _replacer_exists(sit, g, s1, shed):
                bad2.append((s1, s3))
    return CheckResult(not bad2, tuple(sorted(bad2)))


@dataclass(frozen=True)
class WidthCheck(CheckResult):
    max_trumper_count: int = 0


def check_width_bound(sit: DecisionSituation, gamma: Iterable[str], j: int) -> WidthCheck:
    """Pass iff every defended gamma member is defendable by at most j arguments.

    ``max_trumper_count`` reports the largest trumper in-degree in the pool,
    which in a finite closed world settles the global bounded-width question.
    """
    if j < 0:
        raise ValueError("j must be >= 0")
    g = _gamma_set(sit, gamma)
    d = sit.derived
    bad = []
    for s in sorted(g):
        size = minimal_defense_size(sit, g, s)
        if size is not None and size > j:
            bad.append((s, size))
    max_in = max((len(d.trumpers_of(s)) for s in sit.arguments), default=0)
    return WidthCheck(not bad, tuple(bad), max_in)


@dataclass(frozen=True)
class LengthCheck(CheckResult):
    acyclic_globally: bool = True


def check_length_bound(sit: DecisionSituation, gamma: Iterable[str], k: int) -> LengthCheck:
    """Pass iff no chain of more than k Q-steps links two gamma members.

    ``acyclic_globally`` reports whether the raw trump relation is acyclic,
    the finite-world reading of the global no-infinite-chain condition.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    g = _gamma_set(sit, gamma)
    q = q_relation(sit, g)
    longest = _longest_path(q)
    global_acyclic = _longest_path(sit.derived.trumps_exists) is not None
    if longest is None:
        witness = _find_cycle(q)
        return LengthCheck(False, (witness,), global_acyclic)
    if longest <= k:
        return LengthCheck(True, (), global_acyclic)
    return LengthCheck(False, (_find_path(q, longest),), global_acyclic)


def _find_cycle(pairs: frozenset[Pair]) -> tuple[str, ...]:
    succ: dict[str, list[str]] = {}
    for a, b in sorted(pairs):
        succ.setdefault(a, []).append(b)
    done: set[str] = set()

    def walk(n: str, trail: list[str]) -> tuple[str, ...] | None:
        if n in trail:
            return tuple(trail[trail.index(n):] + [n])
        if n in done:
            return None
        trail.append(n)
        for m in succ.get(n, ()):
            got = walk(m, trail)
            if got:
                return got
        trail.pop()
        done.add(n)
        return None

    for start in sorted(succ):
        got = walk(start, [])
        if got:
            return got
    return ()


def _find_path(pairs: frozenset[Pair], length: int) -> tuple[str, ...]:
    succ: dict[str, list[str]] = {}
    for a, b in sorted(pairs):
        succ.setdefault(a, []).append(b)

    def walk(n: str, left: int) -> tuple[str, ...] | None:
        if left == 0:
            return (n,)
        for m in succ.get(n, ()):
            tail = walk(m, left - 1)
            if tail:
                return (n,) + tail
        return None

    for start in sorted(succ):
        got = walk(start, length)
        if got:
            return got
    return ()


@dataclass(frozen=True)
class ConditionReport:
    """Per-condition verdicts for a gamma, plus the combined CAC verdict."""

    gamma: tuple[str, ...]
    answerability: CheckResult
    closed_reinstatement: CheckResult
    covering: CheckResult
    width: WidthCheck
    length: LengthCheck
    j: int
    k: int | None
    cac: bool


def check_cac(sit: DecisionSituation, gamma: Iterable[str]) -> ConditionReport:
    g = _gamma_set(sit, gamma)
    answer = check_answerability(sit, g)
    reinst = check_closed_reinstatement(sit, g)
    cover = is_covering(sit, g)
    # in a finite pool some width bound always exists; a length bound exists
    # exactly when the chain relation over gamma is acyclic
    j = smallest_width_bound(sit, g)
    k = smallest_length_bound(sit, g)
    width = check_width_bound(sit, g, j)
    if k is not None:
        length = check_length_bound(sit, g, k)
    else:
        q = q_relation(sit, g)
        acyclic = _longest_path(sit.derived.trumps_exists) is not None
        length = LengthCheck(False, (_find_cycle(q),), acyclic)
    cac = bool(answer) and bool(reinst) and bool(cover) and k is not None
    return ConditionReport(
        gamma=tuple(sorted(g)),
        answerability=answer,
        closed_reinstatement=reinst,
        covering=cover,
        width=width,
        length=length,
        j=j,
        k=k,
        cac=cac,
    )


def is_efficient(sit: DecisionSituation, chosen: Iterable[str]) -> CheckResult:
    """The chosen set settles the judgment through its decisive members.

    Pass iff the judgment equals the propositions supported by the chosen
    decisive arguments, and a proposition falls outside the judgment exactly
    when all its supporters are always trumped by those arguments.
    Witnesses are the offending propositions.
    """
    chosen_set = frozenset(chosen)
    sit.require_arguments(chosen_set)
    d = sit.derived
    judgment = deliberated_judgment(sit)
    dec = chosen_set & d.decisive
    claimed = sit.support_image(dec)
    silenced = d.image_forall(dec)
    bad = []
    for t in sorted(sit.propositions):
        if (t in judgment) != (t in claimed):
            bad.append(t)
        elif (t not in judgment) != (sit.supporters_of(t) <= silenced):
            bad.append(t)
    return CheckResult(not bad, tuple(bad))


@dataclass(frozen=True)
class LemmaCheck:
    hypothesis_holds: bool
    conclusion_holds: bool

    @property
    def honoured(self) -> bool:
        return self.conclusion_holds or not self.hypothesis_holds


@dataclass(frozen=True)
class LemmaSuiteReport:
    defended_replaceable: LemmaCheck
    resistant_split: LemmaCheck
    resistant_defended: LemmaCheck
    decisive_split: LemmaCheck
    chain: LemmaCheck

    def all_honoured(self) -> bool:
        return all(
            c.honoured
            for c in (
                self.defended_replaceable,
                self.resistant_split,
                self.resistant_defended,
                self.decisive_split,
                self.chain,
            )
        )


def lemma_suite(sit: DecisionSituation, gamma: Iterable[str]) -> LemmaSuiteReport:
    """Evaluate the appendix inclusions together with their hypotheses.

    Each entry pairs "did the hypothesis hold" with "did the conclusion
    hold"; a sound implementation never sees the first true and the second
    false.
    """
    g = _gamma_set(sit, gamma)
    d = sit.derived
    ga = gamma_analysis(sit, g)
    report = check_cac(sit, g)
    args = sit.arguments

    hyp1 = report.answerability.passed and report.closed_reinstatement.passed
    concl1 = ga.s_gamma_def <= ga.r_gamma_dec

    hyp2 = report.covering.passed
    concl2 = args == (ga.e_gamma_res | d.image_exists(ga.s_gamma_res))

    hyp34 = report.cac
    concl3 = ga.s_gamma_res <= ga.s_gamma_def
    concl4 = args == (ga.e_gamma_dec | d.image_exists(ga.s_gamma_dec))

    judgment = deliberated_judgment(sit)
    sup = sit.support_image
    chain_ok = (
        sup(ga.e_gamma_dec) <= sup(ga.s_gamma_dec)
        and sup(ga.s_gamma_dec) <= judgment
        and judgment <= sup(args - d.image_forall(ga.s_gamma_dec))
        and sup(args - d.image_forall(ga.s_gamma_dec)) <= sup(ga.e_gamma_dec)
    )

    return LemmaSuiteReport(
        defended_replaceable=LemmaCheck(hyp1, concl1),
        resistant_split=LemmaCheck(hyp2, concl2),
        resistant_defended=LemmaCheck(hyp34, concl3),
        decisive_split=LemmaCheck(hyp34, concl4),
        chain=LemmaCheck(hyp34, chain_ok),
    )
