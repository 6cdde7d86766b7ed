"""Deliberated-judgment engine.

Compute judgments over finite argumentative decision situations, check the
sufficiency conditions that make them observable, validate analyst models
through query dialogues, and fuzz the supporting theorems.
"""

from .core import (
    ClearCutReport,
    DecisionSituation,
    DerivedRelations,
    DirectEncoding,
    NotClearCut,
    PerspectiveEncoding,
    UnknownIdentifier,
    ValidationReport,
    deliberated_judgment,
    derive_relations,
    is_clear_cut,
    is_justifiable,
    is_untenable,
    proposition_status,
    to_direct_encoding,
    validate_situation,
)
from .conditions import (
    CheckResult,
    ConditionReport,
    GammaAnalysis,
    check_answerability,
    check_cac,
    check_closed_reinstatement,
    check_length_bound,
    check_width_bound,
    essentially_replaces,
    gamma_analysis,
    is_covering,
    is_defended,
    is_efficient,
    is_j_defended,
    is_unnecessary,
    lemma_suite,
    replaces,
)
from .models import (
    ExtractionResult,
    Model,
    ValidationVerdict,
    extract_cac_subset,
    is_gamma_operationally_valid,
    is_operationally_valid,
    is_valid,
    model_claims,
    synthesize_model,
)
from .agents import Agent, QueryAnswer
from .dialogue import (
    DialogueEngine,
    DialogueTranscript,
    replay_transcript,
    run_validation_dialogue,
)
from .generate import (
    GenParams,
    enforce_cac,
    fuzz_theorems,
    gen_random,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
