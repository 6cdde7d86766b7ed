"""Seeded instance generation, CAC repair, and the theorem fuzz harness.

Every generated artefact is a pure function of its seed.  The fuzzer turns
the framework's theorems and lemmas into executable invariants: any
violation it reports is either an implementation bug or a genuine gap in a
proof, and each one carries a reproducer seed.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .agents import Agent
from .conditions import (
    check_answerability,
    check_cac,
    check_closed_reinstatement,
    check_length_bound,
    check_width_bound,
    finitely_defended,
    is_defended,
    is_efficient,
    lemma_suite,
)
from .core import (
    DecisionSituation,
    PerspectiveEncoding,
    deliberated_judgment,
    derive_relations,
    is_clear_cut,
    is_justifiable,
    is_untenable,
    proposition_status,
    to_direct_encoding,
    validate_situation,
)
from .dialogue import run_validation_dialogue
from .models import (
    Model,
    extract_cac_subset,
    is_gamma_operationally_valid,
    model_claims,
    synthesize_model,
)

PROFILES = ("free", "layered", "cac-enforced")
SYNTHETIC_PREFIX = "~r"


class CyclicTrumps(ValueError):
    """CAC repair requires an acyclic trump relation."""


class NonConvergence(RuntimeError):
    """The repair loop hit its synthetic-argument budget."""


@dataclass(frozen=True)
class GenParams:
    seed: int
    n_props: int = 3
    n_args: int = 8
    n_perspectives: int = 2
    support_density: float = 0.3
    trump_density: float = 0.15
    ambivalence_rate: float = 0.2
    profile: str = "free"

    def check(self) -> None:
        if min(self.n_props, self.n_args, self.n_perspectives) < 1:
            raise ValueError("sizes must be positive")
        for name in ("support_density", "trump_density", "ambivalence_rate"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")
        if self.profile not in PROFILES:
            raise ValueError(f"unknown profile {self.profile!r}")


def _draw_support(rng, args, props, density) -> list[tuple[str, str]]:
    return [
        (a, t) for a in args for t in props if rng.random() < density
    ]


def _draw_relation(rng, allowed, density) -> set[tuple[str, str]]:
    return {pair for pair in allowed if rng.random() < density}


def gen_random(params: GenParams) -> DecisionSituation:
    """Deterministic random situation; layered profiles are acyclic by construction."""
    params.check()
    rng = random.Random(params.seed)
    props = [f"t{i}" for i in range(1, params.n_props + 1)]
    args = [f"a{i:02d}" for i in range(1, params.n_args + 1)]
    perspectives = [f"p{i}" for i in range(1, params.n_perspectives + 1)]
    support = _draw_support(rng, args, props, params.support_density)

    if params.profile == "free":
        allowed = [(a, b) for a in args for b in args if a != b]
    else:
        n_layers = max(1, min(params.n_args, rng.randint(2, 4)))
        layer = {a: rng.randrange(n_layers) for a in args}
        allowed = [
            (a, b) for a in args for b in args if layer[a] > layer[b]
        ]

    if params.profile == "cac-enforced":
        # a single shared draw keeps every perspective identical, so the
        # repair loop only ever has reinstatement work to do; re-draw a few
        # times rather than fail if a draw still resists repair
        for attempt in range(4):
            draw_rng = random.Random(params.seed + attempt * 0x9E3779B1) if attempt else rng
            base = _draw_relation(draw_rng, allowed, params.trump_density)
            views = {p: set(base) for p in perspectives}
            sit = DecisionSituation.from_perspectives(props, args, support, views)
            try:
                return enforce_cac(sit)
            except NonConvergence:
                continue
        raise NonConvergence(f"cac-enforced generation failed for seed {params.seed}")

    views = {p: _draw_relation(rng, allowed, params.trump_density) for p in perspectives}
    if len(perspectives) > 1 and params.ambivalence_rate > 0:
        stable = sorted(set.intersection(*views.values())) if views else []
        for pair in stable:
            if rng.random() < params.ambivalence_rate:
                victim = perspectives[rng.randrange(len(perspectives))]
                views[victim].discard(pair)
    return DecisionSituation.from_perspectives(props, args, support, views)


# --- CAC repair -------------------------------------------------------------


def _fresh_name(sit: DecisionSituation, counter: int) -> str:
    name = f"{SYNTHETIC_PREFIX}{counter}"
    while name in sit.arguments:
        counter += 1
        name = f"{SYNTHETIC_PREFIX}{counter}"
    return name


def _add_decisive_trumper(sit: DecisionSituation, target: str, name: str) -> DecisionSituation:
    rel = sit.relations
    if isinstance(rel, PerspectiveEncoding):
        views = {p: set(v) | {(name, target)} for p, v in rel.perspectives.items()}
        return DecisionSituation.from_perspectives(
            sit.propositions, sit.arguments | {name}, sit.support, views
        )
    return DecisionSituation.direct(
        sit.propositions,
        sit.arguments | {name},
        sit.support,
        set(rel.trumps_exists) | {(name, target)},
        rel.ambivalent,
    )


def _add_replacer(sit: DecisionSituation, s1: str, s3: str, name: str) -> DecisionSituation:
    """Clone s1 with the trumpers s3 always beats stripped away.

    The clone's own trumps are copied into every perspective: an ambivalent
    clone that ends up untrumped would immediately raise a fresh
    answerability obligation whose repair destroys the clone's replacer
    role, and the loop would never close.
    """
    d = sit.derived
    shed = d.image_forall((s3,))
    outgoing = d.trumped_by(s1)
    support = set(sit.support) | {(name, t) for t in sit.supported_by(s1)}
    rel = sit.relations
    if isinstance(rel, PerspectiveEncoding):
        views = {}
        for p, view in rel.perspectives.items():
            edges = set(view) | {(name, b) for b in outgoing}
            for a, b in view:
                if b == s1 and a not in shed:
                    edges.add((a, name))
            views[p] = edges
        return DecisionSituation.from_perspectives(
            sit.propositions, sit.arguments | {name}, support, views
        )
    trumps = set(rel.trumps_exists) | {(name, b) for b in outgoing}
    ambivalent = set(rel.ambivalent)
    for a, b in rel.trumps_exists:
        if b == s1 and a not in shed:
            trumps.add((a, name))
            if (a, b) in rel.ambivalent:
                ambivalent.add((a, name))
    return DecisionSituation.direct(
        sit.propositions, sit.arguments | {name}, support, trumps, ambivalent
    )


def enforce_cac(sit: DecisionSituation) -> DecisionSituation:
    """Repair a situation until its full argument pool is CAC.

    Answerability failures get a fresh decisive trumper of the unstable
    argument; reinstatement failures get a fresh replacer that sheds the
    offending trumpers (the reinstatement pattern itself).  Idempotent on
    already-CAC input.  The number of synthetic arguments is bounded; the
    loop refuses cyclic input and reports non-convergence past the bound.
    """
    from .conditions import _longest_path  # DAG check shared with length bound

    if _longest_path(sit.derived.trumps_exists) is None:
        raise CyclicTrumps("trump relation contains a cycle")
    budget = 4 * max(1, len(sit.arguments))
    current = sit
    added = 0
    while True:
        report = check_cac(current, current.arguments)
        if report.cac:
            return current
        if added >= budget:
            raise NonConvergence(
                f"no CAC fixpoint after adding {added} synthetic arguments"
            )
        name = _fresh_name(current, added + 1)
        if not report.answerability.passed:
            unstable = report.answerability.witnesses[0][0]
            current = _add_decisive_trumper(current, unstable, name)
        elif not report.closed_reinstatement.passed:
            s1, s3 = report.closed_reinstatement.witnesses[0]
            current = _add_replacer(current, s1, s3, name)
        else:
            # covering and width cannot fail on the full pool; a length
            # failure here means the repairs built a cycle, which they never do
            raise NonConvergence("unrepairable condition failure")
        added += 1


# --- fuzz harness -------------------------------------------------------------


@dataclass(frozen=True)
class FuzzViolation:
    check: str
    profile: str
    seed: int
    detail: str


@dataclass
class FuzzReport:
    count: int
    master_seed: int
    profiles: tuple[str, ...]
    checks: tuple[str, ...]
    stats: Counter = field(default_factory=Counter)
    violations: list[FuzzViolation] = field(default_factory=list)

    def render(self) -> str:
        lines = [
            "fuzz report",
            "===========",
            f"count: {self.count}",
            f"master-seed: {self.master_seed}",
            "profiles: " + ",".join(self.profiles),
            "checks: " + ",".join(self.checks),
            "",
            "instance stats",
            "--------------",
        ]
        for key in sorted(self.stats):
            lines.append(f"{key}: {self.stats[key]}")
        lines += ["", "violations", "----------"]
        if not self.violations:
            lines.append("none")
        else:
            for v in self.violations:
                lines.append(
                    f"{v.check} profile={v.profile} seed={v.seed}: {v.detail}"
                )
        return "\n".join(lines) + "\n"


@dataclass
class FuzzContext:
    sit: DecisionSituation
    seed: int
    profile: str
    rng: random.Random
    stats: Counter
    _gammas: list[frozenset[str]] | None = None
    _models: list[Model] | None = None

    @property
    def gammas(self) -> list[frozenset[str]]:
        if self._gammas is None:
            args = sorted(self.sit.arguments)
            subsets = []
            for _ in range(2):
                subsets.append(
                    frozenset(a for a in args if self.rng.random() < 0.5)
                )
            self._gammas = [frozenset(args)] + subsets
        return self._gammas

    @property
    def models(self) -> list[Model]:
        if self._models is None:
            out: list[Model] = []
            if is_clear_cut(self.sit).clear_cut:
                synth = synthesize_model(self.sit)
                out.append(synth)
                for _ in range(20):
                    out.append(_mutate_model(self.sit, synth, self.rng))
            for _ in range(20):
                out.append(_random_model(self.sit, self.rng))
            self._models = out
        return self._models


def _random_model(sit: DecisionSituation, rng: random.Random) -> Model:
    args = sorted(sit.arguments)
    props = sorted(sit.propositions)
    support = [(a, t) for a in args for t in props if rng.random() < 0.15]
    counters = [
        (a, b) for a in args for b in args if a != b and rng.random() < 0.08
    ]
    return Model.of(support, counters)


def _mutate_model(sit: DecisionSituation, base: Model, rng: random.Random) -> Model:
    args = sorted(sit.arguments)
    props = sorted(sit.propositions)
    support = set(base.support_claims)
    counters = set(base.counter_claims)
    for _ in range(rng.randint(1, 3)):
        move = rng.randrange(4)
        if move == 0:
            support.add((rng.choice(args), rng.choice(props)))
        elif move == 1 and support:
            support.discard(rng.choice(sorted(support)))
        elif move == 2:
            a, b = rng.choice(args), rng.choice(args)
            if a != b:
                counters.add((a, b))
        elif counters:
            counters.discard(rng.choice(sorted(counters)))
    return Model.of(support, counters)


CheckFn = Callable[[FuzzContext], list[str]]


def _check_instance_valid(ctx: FuzzContext) -> list[str]:
    report = validate_situation(ctx.sit)
    return [] if report.ok else ["generated instance invalid: " + "; ".join(report.violations)]


def _check_mutual_exclusion(ctx: FuzzContext) -> list[str]:
    out = []
    for t in sorted(ctx.sit.propositions):
        if is_justifiable(ctx.sit, t) and is_untenable(ctx.sit, t):
            out.append(f"proposition {t} both justifiable and untenable")
    return out


def _check_encoding_equivalence(ctx: FuzzContext) -> list[str]:
    sit = ctx.sit
    direct = to_direct_encoding(sit)
    out = []
    a, b = derive_relations(sit), derive_relations(direct)
    if (a.trumps_exists, a.not_trumps_exists, a.trumps_forall, a.not_trumps_forall, a.decisive) != (
        b.trumps_exists, b.not_trumps_exists, b.trumps_forall, b.not_trumps_forall, b.decisive
    ):
        out.append("derived relations differ between encodings")
    if deliberated_judgment(sit) != deliberated_judgment(direct):
        out.append("judgment differs between encodings")
    for t in sorted(sit.propositions):
        if proposition_status(sit, t) != proposition_status(direct, t):
            out.append(f"status of {t} differs between encodings")
    ra, rb = check_cac(sit, sit.arguments), check_cac(direct, direct.arguments)
    if (ra.cac, ra.j, ra.k) != (rb.cac, rb.j, rb.k):
        out.append("full-pool condition report differs between encodings")
    return out


def _check_theorem1_reduction(ctx: FuzzContext) -> list[str]:
    sit = ctx.sit
    from .conditions import _longest_path

    acyclic = _longest_path(sit.derived.trumps_exists) is not None
    if not (
        acyclic
        and check_answerability(sit).passed
        and check_closed_reinstatement(sit).passed
    ):
        return []
    ctx.stats["global-conditions-hold"] += 1
    report = check_cac(sit, sit.arguments)
    if not report.cac:
        return ["global conditions hold but the full pool is not CAC"]
    return []


def _check_theorem3(ctx: FuzzContext) -> list[str]:
    out = []
    for g in ctx.gammas:
        report = check_cac(ctx.sit, g)
        if report.cac:
            ctx.stats["cac-gammas"] += 1
            if not is_efficient(ctx.sit, g).passed:
                out.append(f"CAC gamma {sorted(g)} is not efficient")
    return out


def _check_theorem2_bundle(ctx: FuzzContext) -> list[str]:
    sit = ctx.sit
    out = []
    judgment = deliberated_judgment(sit)
    for g in ctx.gammas:
        if not check_cac(sit, g).cac:
            continue
        if not is_clear_cut(sit).clear_cut:
            out.append(f"CAC gamma {sorted(g)} but situation not clear-cut")
            continue
        synth = synthesize_model(sit)
        if not is_gamma_operationally_valid(sit, g, synth).valid:
            out.append(f"synthesized model not operationally valid for {sorted(g)}")
        for i, m in enumerate(ctx.models):
            if is_gamma_operationally_valid(sit, g, m).valid:
                ctx.stats["operationally-valid-samples"] += 1
                if model_claims(sit, m) != judgment:
                    out.append(
                        f"operationally valid sample {i} disagrees with judgment for {sorted(g)}"
                    )
    return out


def _check_theorem4(ctx: FuzzContext) -> list[str]:
    sit = ctx.sit
    out = []
    judgment = deliberated_judgment(sit)
    for g in ctx.gammas:
        if not is_efficient(sit, g).passed:
            continue
        ctx.stats["efficient-gammas"] += 1
        for i, m in enumerate(ctx.models):
            if is_gamma_operationally_valid(sit, g, m).valid:
                if model_claims(sit, m) != judgment:
                    out.append(
                        f"efficient gamma {sorted(g)}: valid sample {i} disagrees with judgment"
                    )
    return out


def _check_theorem5(ctx: FuzzContext) -> list[str]:
    sit = ctx.sit
    out = []
    for chosen in ctx.gammas:
        eff = is_efficient(sit, chosen)
        extraction = extract_cac_subset(sit, chosen)
        if extraction.ok != eff.passed:
            out.append(
                f"extraction ok={extraction.ok} but efficiency={eff.passed} for {sorted(chosen)}"
            )
            continue
        if extraction.ok:
            ctx.stats["extractions"] += 1
            if not (extraction.gamma <= chosen):
                out.append("extraction left the chosen set")
    # converse direction: a CAC subset makes every superset efficient
    for g in ctx.gammas:
        if check_cac(sit, g).cac and not is_efficient(sit, sit.arguments).passed:
            out.append(f"CAC gamma {sorted(g)} but full pool not efficient")
    return out


def _check_theorem5_extraction_cac(ctx: FuzzContext) -> list[str]:
    # forward verification: the published construction promises the extracted
    # set is CAC; decisive picks with ambivalent outgoing trumps break the
    # answerability condition and no alternative subset exists in general
    sit = ctx.sit
    out = []
    for chosen in ctx.gammas:
        extraction = extract_cac_subset(sit, chosen)
        if extraction.ok and not extraction.cac_report.cac:
            out.append(f"extraction from {sorted(chosen)} is not CAC")
    return out


def _check_lemma_suite(ctx: FuzzContext) -> list[str]:
    out = []
    for g in ctx.gammas:
        report = lemma_suite(ctx.sit, g)
        for name in (
            "defended_replaceable",
            "resistant_split",
            "resistant_defended",
            "decisive_split",
        ):
            entry = getattr(report, name)
            if entry.hypothesis_holds and not entry.conclusion_holds:
                out.append(f"{name} fails on gamma {sorted(g)}")
    return out


def _check_theorem3_chain(ctx: FuzzContext) -> list[str]:
    out = []
    for g in ctx.gammas:
        report = lemma_suite(ctx.sit, g)
        if report.chain.hypothesis_holds and not report.chain.conclusion_holds:
            out.append(f"judgment chain fails on CAC gamma {sorted(g)}")
    return out


def _check_defense_equivalence(ctx: FuzzContext) -> list[str]:
    sit = ctx.sit
    out = []
    for g in ctx.gammas:
        if not check_answerability(sit, g).passed:
            continue
        for s in sorted(sit.arguments):
            if finitely_defended(sit, g, s) != is_defended(sit, g, s):
                out.append(f"defense readings disagree on {s} for gamma {sorted(g)}")
    return out


def _check_bound_minimality(ctx: FuzzContext) -> list[str]:
    sit = ctx.sit
    out = []
    g = frozenset(sit.arguments)
    report = check_cac(sit, g)
    if not check_width_bound(sit, g, report.j).passed:
        out.append("width witness does not certify")
    if report.j > 0 and check_width_bound(sit, g, report.j - 1).passed:
        out.append("width witness not minimal")
    if report.k is not None:
        if not check_length_bound(sit, g, report.k).passed:
            out.append("length witness does not certify")
        if report.k > 1 and check_length_bound(sit, g, report.k - 1).passed:
            out.append("length witness not minimal")
    return out


def _check_static_dialogue(ctx: FuzzContext) -> list[str]:
    sit = ctx.sit
    rel = sit.relations
    if not isinstance(rel, PerspectiveEncoding) or len(rel.perspectives) != 1:
        return []
    ctx.stats["single-perspective-instances"] += 1
    out = []
    gamma = ctx.gammas[1]
    for m in ctx.models[:6]:
        transcript = run_validation_dialogue(Agent(sit, "static"), m, gamma, budget=1)
        truth = is_gamma_operationally_valid(sit, gamma, m)
        if transcript.verdict == "inconclusive":
            out.append("static dialogue returned inconclusive")
        elif (transcript.verdict == "valid") != truth.valid:
            out.append(
                f"static dialogue verdict {transcript.verdict} disagrees with ground truth"
            )
    return out


DEFAULT_CHECKS: dict[str, CheckFn] = {
    "instance-valid": _check_instance_valid,
    "mutual-exclusion": _check_mutual_exclusion,
    "encoding-equivalence": _check_encoding_equivalence,
    "theorem1-reduction": _check_theorem1_reduction,
    "theorem3": _check_theorem3,
    "theorem2-bundle": _check_theorem2_bundle,
    "theorem4": _check_theorem4,
    "theorem5": _check_theorem5,
    "theorem5-extraction-cac": _check_theorem5_extraction_cac,
    "lemma-suite": _check_lemma_suite,
    "theorem3-chain": _check_theorem3_chain,
    "defense-equivalence": _check_defense_equivalence,
    "bound-minimality": _check_bound_minimality,
    "static-dialogue": _check_static_dialogue,
}


def fuzz_instance_params(seed: int, profile: str) -> GenParams:
    """Desk-scale parameters derived from a reproducer seed."""
    rng = random.Random(seed)
    return GenParams(
        seed=rng.getrandbits(63),
        n_props=rng.randint(1, 6),
        n_args=rng.randint(3, 12),
        n_perspectives=1 if profile == "cac-enforced" else rng.randint(1, 4),
        support_density=rng.uniform(0.15, 0.5),
        trump_density=rng.uniform(0.05, 0.3),
        ambivalence_rate=rng.uniform(0.0, 0.5),
        profile=profile,
    )


def fuzz_theorems(
    count: int,
    master_seed: int = 0,
    profiles: Sequence[str] = PROFILES,
    checks: Iterable[str] | None = None,
    extra_checks: dict[str, CheckFn] | None = None,
) -> FuzzReport:
    """Generate ``count`` instances and run the invariant suite on each."""
    if count < 1:
        raise ValueError("count must be >= 1")
    for p in profiles:
        if p not in PROFILES:
            raise ValueError(f"unknown profile {p!r}")
    registry = dict(DEFAULT_CHECKS)
    if extra_checks:
        registry.update(extra_checks)
    selected = tuple(checks) if checks is not None else tuple(registry)
    for name in selected:
        if name not in registry:
            raise ValueError(f"unknown check {name!r}")

    report = FuzzReport(
        count=count,
        master_seed=master_seed,
        profiles=tuple(profiles),
        checks=selected,
    )
    seed_rng = random.Random(master_seed)
    for index in range(count):
        instance_seed = seed_rng.getrandbits(63)
        profile = profiles[index % len(profiles)]
        params = fuzz_instance_params(instance_seed, profile)
        sit = gen_random(params)
        report.stats[f"instances-{profile}"] += 1
        if is_clear_cut(sit).clear_cut:
            report.stats["clear-cut-instances"] += 1
        ctx = FuzzContext(
            sit=sit,
            seed=instance_seed,
            profile=profile,
            rng=random.Random(instance_seed ^ 0x5DEECE66D),
            stats=report.stats,
        )
        for name in selected:
            for detail in registry[name](ctx):
                report.violations.append(
                    FuzzViolation(name, profile, instance_seed, detail)
                )
    return report
