"""Injective versions, reductions between models, and proof plans.

Reducibility is decided from step counts alone; the explicit relation is
then built from the difference sets of the target's injective version and
re-checked condition by condition.  Relation images are compared on the
window ``[1, N]``; ``(N, M]`` is carrier margin only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .closure import ClosureTrace, canonical_tuples, closure_trace, image
from .core import Bound, ExtNat, InductionModel, steps_le, steps_eq
from .modelio import ReductionRelation

TIE_BREAK = "canonical tuples: lexicographically least over the sorted carrier"


class ReductionError(ValueError):
    pass


class RelationError(ValueError):
    """A supplied relation is not total on the target's bounded closure."""


# --------------------------------------------------------------------------
# injective version


@dataclass(frozen=True)
class InjTable:
    """``S_inj``: ``S`` on one canonical tuple per generated element, 0 elsewhere."""

    arity: int
    canonical: dict[int, tuple[int, ...]]
    _lookup: dict[tuple[int, ...], int] = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        lookup = {t: x for x, t in self.canonical.items()}
        if len(lookup) != len(self.canonical):
            raise ValueError("canonical tuples are not distinct")
        self._lookup.clear()
        self._lookup.update(lookup)

    def __call__(self, *t: int) -> int:
        return self._lookup.get(tuple(t), 0)

    def frontier_image(self, carrier, old, frontier):
        return {x for t, x in self._lookup.items()
                if all(v in carrier for v in t) and any(v in frontier for v in t)}


def injective_version(model: InductionModel, bound: Bound,
                      trace: ClosureTrace | None = None) -> InjTable:
    trace = trace or closure_trace(model, bound)
    canonical: dict[int, tuple[int, ...]] = {}
    for m in range(1, len(trace.levels)):
        targets = trace.diff(m)
        if not targets:
            break
        carrier = trace.cl(m - 1)
        old = trace.cl(m - 2) if m >= 2 else frozenset()
        canonical.update(canonical_tuples(model.gen, carrier, old, carrier - old, targets, bound.M))
    return InjTable(model.gen.arity, canonical)


def injective_model(model: InductionModel, bound: Bound, trace: ClosureTrace | None = None) -> InductionModel:
    return InductionModel(model.base, injective_version(model, bound, trace), model.name, model.note)


# --------------------------------------------------------------------------
# deciding


@dataclass(frozen=True)
class Reducibility:
    answer: str                 # "yes" | "no" | "unknown"
    n1: ExtNat
    n2: ExtNat
    assumption: str | None = None

    @property
    def reason(self) -> str:
        def show(n):
            return "presumed ω" if not n.is_finite else str(n.n)
        rel = {"yes": "<=", "no": ">", "unknown": "?"}[self.answer]
        text = f"n(m1)={show(self.n1)} {rel} n(m2)={show(self.n2)}"
        if self.answer == "no" and not self.n1.is_finite:
            text = f"n(m1) presumed ω > n(m2)={show(self.n2)}"
        return text


def _answer(value: bool | None) -> str:
    return "unknown" if value is None else ("yes" if value else "no")


def decide_reducible(m1: InductionModel, m2: InductionModel, bound: Bound) -> Reducibility:
    n1 = closure_trace(m1, bound).stabilized_at
    n2 = closure_trace(m2, bound).stabilized_at
    value, note = steps_le(n1, n2)
    return Reducibility(_answer(value), n1, n2, note)


def decide_equivalent(m1: InductionModel, m2: InductionModel, bound: Bound) -> Reducibility:
    n1 = closure_trace(m1, bound).stabilized_at
    n2 = closure_trace(m2, bound).stabilized_at
    value, note = steps_eq(n1, n2)
    return Reducibility(_answer(value), n1, n2, note)


# --------------------------------------------------------------------------
# building and verifying


def build_reduction(m1: InductionModel, m2: InductionModel, bound: Bound,
                    allow_unknown: bool = False) -> ReductionRelation:
    """``R(B_2) = B_1`` and ``R(D_i of m2's injective trace) = Cl_i(m1)``."""
    t1 = closure_trace(m1, bound)
    t2 = closure_trace(m2, bound)
    value, note = steps_le(t1.stabilized_at, t2.stabilized_at)
    if value is False:
        raise ReductionError(f"not reducible: n(m1)={t1.stabilized_at} > n(m2)={t2.stabilized_at}")
    provenance = "theorem-recipe"
    if value is None:
        if not allow_unknown:
            raise ReductionError(
                f"undecided at this bound: n(m1)={t1.stabilized_at}, n(m2)={t2.stabilized_at}")
        provenance += " (heuristic: step counts undecided at bound)"
    if note:
        provenance += f"; assumption: {note}"
    provenance += f"; {TIE_BREAK}"
    t2_inj = closure_trace(injective_model(m2, bound, t2), bound)
    images = {x: t1.base for x in t2.base}
    for i in range(1, len(t2_inj.levels)):
        for x in t2_inj.diff(i):
            images[x] = t1.cl(i)
    return ReductionRelation(images, provenance)


@dataclass(frozen=True)
class VerificationReport:
    covers: bool                       # condition 1
    base_to_base: bool                 # condition 2
    step_consistent: bool              # condition 3
    cover_diff: frozenset[int] = frozenset()
    base_diff: frozenset[int] = frozenset()
    step_counterexamples: tuple[int, ...] = ()
    warnings: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.covers and self.base_to_base and self.step_consistent


def verify_reduction(m1: InductionModel, m2: InductionModel, rel: ReductionRelation,
                     bound: Bound) -> VerificationReport:
    t1 = closure_trace(m1, bound)
    t2 = closure_trace(m2, bound)
    target = t2.closure
    missing = sorted(x for x in target if x not in rel)
    if missing:
        raise RelationError(f"relation is not total on the target closure; missing x in {missing[:10]}")
    window = frozenset(range(1, bound.N + 1))
    carrier = frozenset(range(1, bound.M + 1))
    R = {x: rel[x] & carrier for x in target}
    warnings = tuple(f"R({x}) is empty" for x in sorted(target) if not R[x])

    union = frozenset().union(*R.values())
    cover_diff = (union ^ t1.closure) & window
    base_union = frozenset().union(*(R[x] for x in t2.base))
    base_diff = (base_union ^ t1.base) & window

    inj = injective_version(m2, bound, t2)
    step_image = lru_cache(maxsize=None)(lambda u: frozenset(image(m1.gen, u, bound.M)))
    bad = []
    for x in sorted(target - t2.base):
        u = frozenset().union(*(R[n] for n in inj.canonical[x]))
        expected = step_image(u) | u
        if (expected ^ R[x]) & window:
            bad.append(x)
    return VerificationReport(not cover_diff, not base_diff, not bad,
                              cover_diff, base_diff, tuple(bad), warnings)


# --------------------------------------------------------------------------
# proof plans


@dataclass(frozen=True)
class StepObligation:
    target: int                        # x in Cl(m2) \ B2
    level: int
    via: tuple[int, ...]               # canonical generating tuple
    premises: tuple[frozenset[int], ...]
    conclusion: frozenset[int]         # R(x)
    derives: frozenset[int]            # R(x) minus the premises


@dataclass(frozen=True)
class ProofPlan:
    q_definition: str
    base_obligations: frozenset[int]
    step_obligations: tuple[StepObligation, ...]
    conclusion: str
    verified: bool
    provenance: str

    @property
    def productive_steps(self) -> tuple[StepObligation, ...]:
        return tuple(s for s in self.step_obligations if s.derives)


Q_DEFINITION = "Q(n) = ⋀_{x ∈ R(n)} P(x)"


def emit_proof_plan(m1: InductionModel, m2: InductionModel, rel: ReductionRelation,
                    bound: Bound, allow_unverified: bool = False) -> ProofPlan:
    """Obligations for proving ``P`` on ``Cl(m1)`` by inducting ``Q`` over m2.

    Refuses relations that fail verification unless ``allow_unverified``.
    """
    report = verify_reduction(m1, m2, rel, bound)
    if not report.passed and not allow_unverified:
        raise ReductionError("relation failed verification; refusing to emit a plan")
    t2 = closure_trace(m2, bound)
    inj = injective_version(m2, bound, t2)
    window = frozenset(range(1, bound.N + 1))
    base = frozenset().union(*(rel[x] for x in t2.base)) & window
    steps = []
    for x in sorted(t2.closure - t2.base, key=lambda x: (t2.l_table[x], x)):
        via = inj.canonical[x]
        premises = tuple(rel[n] & window for n in via)
        conclusion = rel[x] & window
        steps.append(StepObligation(x, t2.l_table[x], via, premises, conclusion,
                                    conclusion - frozenset().union(*premises)))
    conclusion = ("Q holds on all of Cl(m2) by m2's induction principle; since the union of "
                  "R over Cl(m2) is Cl(m1), P holds on every element of Cl(m1)")
    if not report.covers:
        conclusion += " [WARNING: the union of R does not cover Cl(m1) on the window]"
    return ProofPlan(Q_DEFINITION, base, tuple(steps), conclusion, report.passed, rel.provenance)
