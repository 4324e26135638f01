"""Generalised induction models <B, S> over the naturals, analysed on bounded prefixes."""

from .closure import (
    ClosureTrace,
    NimVerdict,
    closure_trace,
    exhaustive_g_oracle,
    is_nim_bounded,
    minimal_closed_superset,
    step_count,
)
from .constructors import (
    ConstructionError,
    ConstructionResult,
    construct_b_for_s,
    construct_s_additive,
    construct_s_general,
    construct_s_multiplicative,
)
from .core import (
    AtLeast,
    Bound,
    Case,
    Cofinite,
    Exactly,
    FiniteSet,
    InductionModel,
    Interval,
    MinCompose,
    Multilinear,
    Piecewise,
    Primes,
    affine,
    constant,
    evaluate,
    materialize,
    max_identity,
    prime_omega,
)
from .modelio import ReductionRelation, parse_model, parse_relation, serialize_model, serialize_relation
from .reduction import (
    InjTable,
    ProofPlan,
    build_reduction,
    decide_equivalent,
    decide_reducible,
    emit_proof_plan,
    injective_version,
    verify_reduction,
)
from .structure import additive_witness, classify, multiplicative_witness, self_loop_search

__version__ = "0.1.0"

__all__ = [
    "AtLeast",
    "Bound",
    "Case",
    "ClosureTrace",
    "Cofinite",
    "ConstructionError",
    "ConstructionResult",
    "Exactly",
    "FiniteSet",
    "InductionModel",
    "InjTable",
    "Interval",
    "MinCompose",
    "Multilinear",
    "NimVerdict",
    "Piecewise",
    "Primes",
    "ProofPlan",
    "ReductionRelation",
    "additive_witness",
    "affine",
    "build_reduction",
    "classify",
    "closure_trace",
    "constant",
    "construct_b_for_s",
    "construct_s_additive",
    "construct_s_general",
    "construct_s_multiplicative",
    "decide_equivalent",
    "decide_reducible",
    "emit_proof_plan",
    "evaluate",
    "exhaustive_g_oracle",
    "injective_version",
    "is_nim_bounded",
    "materialize",
    "max_identity",
    "minimal_closed_superset",
    "multiplicative_witness",
    "parse_model",
    "parse_relation",
    "prime_omega",
    "self_loop_search",
    "serialize_model",
    "serialize_relation",
    "step_count",
    "verify_reduction",
]
