"""Property tests over seeded random instances."""

import random

from hypothesis import given, settings, strategies as st

from deliberated.agents import Agent
from deliberated.conditions import (
    check_cac,
    check_length_bound,
    check_width_bound,
    is_efficient,
    lemma_suite,
    replaces,
    smallest_length_bound,
    smallest_width_bound,
)
from deliberated.core import (
    deliberated_judgment,
    derive_relations,
    is_clear_cut,
    is_justifiable,
    is_untenable,
    to_direct_encoding,
    validate_situation,
)
from deliberated.dialogue import replay_transcript, run_validation_dialogue
from deliberated.generate import GenParams, enforce_cac, gen_random
from deliberated.models import (
    extract_cac_subset,
    is_gamma_operationally_valid,
    is_valid,
    is_operationally_valid,
    model_claims,
    synthesize_model,
)

seeds = st.integers(min_value=0, max_value=2**40)
profiles = st.sampled_from(["free", "layered"])


def make_situation(seed, profile="free", n_perspectives=None):
    rng = random.Random(seed)
    return gen_random(
        GenParams(
            seed=seed,
            n_props=rng.randint(1, 4),
            n_args=rng.randint(2, 9),
            n_perspectives=n_perspectives or rng.randint(1, 3),
            support_density=rng.uniform(0.1, 0.5),
            trump_density=rng.uniform(0.05, 0.3),
            ambivalence_rate=rng.uniform(0.0, 0.5),
            profile=profile,
        )
    )


@given(seeds, profiles)
@settings(max_examples=80, deadline=None)
def test_generated_instances_wellformed(seed, profile):
    sit = make_situation(seed, profile)
    assert validate_situation(sit).ok


@given(seeds, profiles)
@settings(max_examples=80, deadline=None)
def test_relation_inclusions(seed, profile):
    sit = make_situation(seed, profile)
    d = derive_relations(sit)
    all_pairs = {(a, b) for a in sit.arguments for b in sit.arguments}
    assert d.trumps_forall <= d.trumps_exists
    assert d.not_trumps_forall <= d.not_trumps_exists
    assert not (d.trumps_forall & d.not_trumps_forall)
    assert (all_pairs - d.trumps_exists) <= d.not_trumps_exists
    assert d.trumps_forall == all_pairs - d.not_trumps_exists


@given(seeds, profiles)
@settings(max_examples=80, deadline=None)
def test_no_proposition_both_ways(seed, profile):
    sit = make_situation(seed, profile)
    for t in sit.propositions:
        assert not (is_justifiable(sit, t) and is_untenable(sit, t))


@given(seeds, profiles)
@settings(max_examples=60, deadline=None)
def test_encoding_equivalence(seed, profile):
    sit = make_situation(seed, profile)
    direct = to_direct_encoding(sit)
    assert derive_relations(sit) == derive_relations(direct)
    assert deliberated_judgment(sit) == deliberated_judgment(direct)


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_replacement_transitive(seed):
    sit = make_situation(seed)
    args = sorted(sit.arguments)
    for a in args:
        for b in args:
            if not replaces(sit, {b}, a):
                continue
            for c in args:
                if replaces(sit, {c}, b):
                    assert replaces(sit, {c}, a)


@given(seeds, profiles)
@settings(max_examples=50, deadline=None)
def test_synthesis_on_clear_cut(seed, profile):
    sit = make_situation(seed, profile)
    if not is_clear_cut(sit).clear_cut:
        return
    m = synthesize_model(sit)
    assert is_operationally_valid(sit, m).valid
    assert is_valid(sit, m)


@given(seeds, profiles)
@settings(max_examples=50, deadline=None)
def test_extraction_biconditional(seed, profile):
    sit = make_situation(seed, profile)
    rng = random.Random(seed + 1)
    pools = [frozenset(sit.arguments)]
    pools.append(frozenset(a for a in sit.arguments if rng.random() < 0.6))
    for pool in pools:
        result = extract_cac_subset(sit, pool)
        assert result.ok == is_efficient(sit, pool).passed
        if result.ok:
            assert result.gamma <= pool


@given(seeds, profiles)
@settings(max_examples=50, deadline=None)
def test_efficiency_propagates_to_supersets(seed, profile):
    sit = make_situation(seed, profile)
    rng = random.Random(seed + 2)
    subset = frozenset(a for a in sit.arguments if rng.random() < 0.7)
    if is_efficient(sit, subset).passed:
        assert is_efficient(sit, sit.arguments).passed


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_bound_monotonicity(seed):
    sit = make_situation(seed, "layered")
    g = sit.arguments
    j = smallest_width_bound(sit, g)
    assert check_width_bound(sit, g, j).passed
    assert check_width_bound(sit, g, j + 1).passed
    if j > 0:
        assert not check_width_bound(sit, g, j - 1).passed
    k = smallest_length_bound(sit, g)
    assert k is not None  # layered profiles are acyclic
    assert check_length_bound(sit, g, k).passed
    assert check_length_bound(sit, g, k + 1).passed
    if k > 1:
        assert not check_length_bound(sit, g, k - 1).passed


@given(seeds, profiles)
@settings(max_examples=50, deadline=None)
def test_answerable_decisive_arguments_trump_stably(seed, profile):
    from deliberated.conditions import check_answerability

    sit = make_situation(seed, profile)
    d = derive_relations(sit)
    rng = random.Random(seed + 6)
    gamma = frozenset(a for a in sit.arguments if rng.random() < 0.7)
    if not check_answerability(sit, gamma).passed:
        return
    for s in gamma & d.decisive:
        assert d.trumped_by(s) == frozenset(
            b for a, b in d.trumps_forall if a == s
        )


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_cac_gammas_settle_everything(seed):
    sit = make_situation(seed, "layered", n_perspectives=1)
    rng = random.Random(seed + 3)
    gamma = frozenset(a for a in sit.arguments if rng.random() < 0.8)
    if not check_cac(sit, gamma).cac:
        return
    assert is_clear_cut(sit).clear_cut
    assert is_efficient(sit, gamma).passed
    assert lemma_suite(sit, gamma).all_honoured()
    m = synthesize_model(sit)
    assert is_gamma_operationally_valid(sit, gamma, m).valid
    assert model_claims(sit, m) == deliberated_judgment(sit)


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_static_dialogue_agrees_with_ground_truth(seed):
    sit = make_situation(seed, "free", n_perspectives=1)
    rng = random.Random(seed + 4)
    support = [
        (a, t) for a in sit.arguments for t in sit.propositions if rng.random() < 0.2
    ]
    counters = [
        (a, b)
        for a in sit.arguments
        for b in sit.arguments
        if a != b and rng.random() < 0.1
    ]
    from deliberated.models import Model

    m = Model.of(support, counters)
    gamma = frozenset(a for a in sit.arguments if rng.random() < 0.7)
    transcript = run_validation_dialogue(Agent(sit, "static"), m, gamma, budget=1)
    truth = is_gamma_operationally_valid(sit, gamma, m)
    assert transcript.verdict != "inconclusive"
    assert (transcript.verdict == "valid") == truth.valid
    assert replay_transcript(sit, transcript)


@given(seeds, st.sampled_from(["static", "cyclic", "drift"]))
@settings(max_examples=40, deadline=None)
def test_dialogue_answers_sound_and_replayable(seed, policy):
    sit = make_situation(seed, "free")
    rng = random.Random(seed + 5)
    from deliberated.models import Model

    support = [
        (a, t) for a in sit.arguments for t in sit.propositions if rng.random() < 0.2
    ]
    counters = [
        (a, b)
        for a in sit.arguments
        for b in sit.arguments
        if a != b and rng.random() < 0.1
    ]
    m = Model.of(support, counters)
    transcript = run_validation_dialogue(
        Agent(sit, policy, seed=seed & 0xFFFF), m, sit.arguments, budget=2
    )
    d = derive_relations(sit)
    for e in transcript.entries:
        if e.kind == "trump":
            target = d.trumps_exists if e.answer else d.not_trumps_exists
            assert e.pair in target
        else:
            assert e.answer == (e.pair in sit.support)
    assert replay_transcript(sit, transcript)


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_enforce_cac_idempotent(seed):
    from deliberated.generate import NonConvergence

    sit = make_situation(seed, "layered")
    try:
        repaired = enforce_cac(sit)
    except NonConvergence:
        return  # bounded repair budget; an honest refusal, not a wrong answer
    assert check_cac(repaired, repaired.arguments).cac
    assert enforce_cac(repaired) is repaired
