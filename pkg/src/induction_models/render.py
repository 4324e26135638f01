"""Deterministic text and JSON renderings of every report type."""

from __future__ import annotations

import json

from .closure import ClosureTrace, NimVerdict
from .constructors import ConstructionResult
from .core import Bound, InductionModel
from .modelio import ReductionRelation, model_to_dict
from .reduction import ProofPlan, Reducibility, VerificationReport
from .structure import StructureReport

RLE_THRESHOLD = 20


def format_set(values) -> str:
    """Sorted list; above 20 elements consecutive runs collapse to ``a..b``."""
    xs = sorted(values)
    if len(xs) <= RLE_THRESHOLD:
        return "[" + ", ".join(map(str, xs)) + "]"
    parts = []
    i = 0
    while i < len(xs):
        j = i
        while j + 1 < len(xs) and xs[j + 1] == xs[j] + 1:
            j += 1
        if j - i >= 2:
            parts.append(f"{xs[i]}..{xs[j]}")
        else:
            parts.extend(str(v) for v in xs[i:j + 1])
        i = j + 1
    return "[" + ", ".join(parts) + "]"


def dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _model_label(model: InductionModel) -> str:
    return model.name or str(model)


def bound_dict(b: Bound) -> dict:
    return {"N": b.N, "M": b.M, "cutoff": b.cutoff}


def _bound_line(b: Bound) -> str:
    return f"bound: N={b.N} M={b.M} cutoff={b.cutoff}"


# --------------------------------------------------------------------------


def analysis_text(model: InductionModel, trace: ClosureTrace, verdict: NimVerdict) -> str:
    lines = [f"model: {_model_label(model)}", f"  base: {model.base}", f"  gen: {model.gen}",
             _bound_line(trace.bound), f"step count: {trace.stabilized_at}",
             f"covered: {'yes' if verdict.covered else 'no'}",
             f"missing: {format_set(verdict.missing)}", "levels:"]
    for lv in trace.levels:
        lines.append(f"  {lv.index}: D={format_set(lv.new)} Cl={format_set(lv.closure)}")
    l_items = sorted(trace.l_table.items())
    lines.append("l-table: " + ", ".join(f"{x}:{l}" for x, l in l_items if x <= trace.bound.N))
    lines.append(f"caveat: {verdict.caveat}")
    return "\n".join(lines) + "\n"


def analysis_dict(model: InductionModel, trace: ClosureTrace, verdict: NimVerdict) -> dict:
    return {
        "model": model_to_dict(model),
        "bound": bound_dict(trace.bound),
        "step_count": str(trace.stabilized_at),
        "covered": verdict.covered,
        "missing": sorted(verdict.missing),
        "levels": [{"i": lv.index, "power": sorted(lv.power), "closure": sorted(lv.closure),
                    "diff": sorted(lv.new)} for lv in trace.levels],
        "l_table": {str(x): l for x, l in sorted(trace.l_table.items())},
        "caveat": verdict.caveat,
    }


def structure_text(model: InductionModel, report: StructureReport) -> str:
    w = report.self_loop_witness
    lines = [f"gen: {model.gen}", f"arity: {model.gen.arity}",
             f"additive: {'yes' if report.additive else 'no'}",
             f"multiplicative: {'yes' if report.multiplicative else 'no'}"]
    if w is None:
        lines.append(f"self-loop witness: none up to {report.search_exhausted_to}")
    else:
        lines.append(f"self-loop witness: {w.tuple} -> {w.value}")
    return "\n".join(lines) + "\n"


def structure_dict(model: InductionModel, report: StructureReport) -> dict:
    w = report.self_loop_witness
    return {"arity": model.gen.arity, "additive": report.additive, "multiplicative": report.multiplicative,
            "self_loop_witness": None if w is None else {"tuple": list(w.tuple), "value": w.value},
            "search_exhausted_to": report.search_exhausted_to}


def construction_text(result: ConstructionResult, verdict: NimVerdict) -> str:
    params = ", ".join(f"{k}={v}" for k, v in sorted(result.parameters.items()))
    lines = [f"recipe: {result.recipe}", f"parameters: {params}",
             f"base: {result.model.base}", f"gen: {result.model.gen}",
             f"covered: {'yes' if verdict.covered else 'no'}",
             f"missing: {format_set(verdict.missing)}"]
    return "\n".join(lines) + "\n"


def construction_dict(result: ConstructionResult, verdict: NimVerdict) -> dict:
    params = {k: (list(v) if isinstance(v, tuple) else v) for k, v in sorted(result.parameters.items())}
    return {"recipe": result.recipe, "parameters": params, "model": model_to_dict(result.model),
            "covered": verdict.covered, "missing": sorted(verdict.missing)}


def reducibility_lines(verdict: Reducibility) -> list[str]:
    lines = [f"reducible: {verdict.answer}", f"n(m1): {verdict.n1}", f"n(m2): {verdict.n2}",
             f"reason: {verdict.reason}"]
    if verdict.assumption:
        lines.append(f"assumption: {verdict.assumption}")
    return lines


def relation_lines(rel: ReductionRelation, window: int | None = None) -> list[str]:
    lines = [f"provenance: {rel.provenance}", "relation:"]
    for x in sorted(rel.images):
        if window is not None and x > window:
            continue
        s = rel.images[x] if window is None else frozenset(v for v in rel.images[x] if v <= window)
        lines.append(f"  R({x}) = {format_set(s)}")
    return lines


def verification_lines(report: VerificationReport) -> list[str]:
    ok = lambda flag: "pass" if flag else "FAIL"
    lines = [f"condition 1 (union covers Cl(m1)): {ok(report.covers)}"]
    if not report.covers:
        lines.append(f"  differs at: {format_set(report.cover_diff)}")
    lines.append(f"condition 2 (base maps onto B1): {ok(report.base_to_base)}")
    if not report.base_to_base:
        lines.append(f"  differs at: {format_set(report.base_diff)}")
    lines.append(f"condition 3 (step consistency): {ok(report.step_consistent)}")
    if not report.step_consistent:
        lines.append(f"  counterexamples x: {format_set(report.step_counterexamples)}")
    lines.extend(f"warning: {w}" for w in report.warnings)
    lines.append(f"verified: {'yes' if report.passed else 'no'}")
    return lines


def verification_dict(report: VerificationReport) -> dict:
    return {"condition_1": report.covers, "condition_2": report.base_to_base,
            "condition_3": report.step_consistent, "cover_diff": sorted(report.cover_diff),
            "base_diff": sorted(report.base_diff),
            "step_counterexamples": list(report.step_counterexamples),
            "warnings": list(report.warnings), "verified": report.passed}


def plan_text(plan: ProofPlan) -> str:
    lines = [f"Q definition: {plan.q_definition}", f"verified relation: {'yes' if plan.verified else 'no'}",
             f"provenance: {plan.provenance}",
             f"base obligations: prove P(x) for x in {format_set(plan.base_obligations)}",
             "step obligations:"]
    for s in plan.step_obligations:
        prem = " ∧ ".join(f"Q({n})" for n in s.via)
        lines.append(f"  [{s.level}] x={s.target} via {s.via}: {prem} ⇒ Q({s.target}); "
                     f"R({s.target}) = {format_set(s.conclusion)}; new P-facts {format_set(s.derives)}")
    lines.append(f"conclusion: {plan.conclusion}")
    return "\n".join(lines) + "\n"


def plan_dict(plan: ProofPlan) -> dict:
    return {
        "q_definition": plan.q_definition,
        "verified": plan.verified,
        "provenance": plan.provenance,
        "base_obligations": sorted(plan.base_obligations),
        "step_obligations": [
            {"target": s.target, "level": s.level, "via": list(s.via),
             "premises": [sorted(p) for p in s.premises],
             "conclusion": sorted(s.conclusion), "derives": sorted(s.derives)}
            for s in plan.step_obligations],
        "conclusion": plan.conclusion,
    }
