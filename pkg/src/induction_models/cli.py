"""Command-line front end.

Exit status: 0 affirmative verdict, 1 negative verdict, 2 usage, I/O or
schema error.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from . import render
from .closure import closure_trace, is_nim_bounded
from .constructors import (
    ConstructionError,
    construct_b_for_s,
    construct_s_additive,
    construct_s_general,
    construct_s_multiplicative,
)
from .core import Bound, ModelError
from .modelio import (
    SchemaError,
    _loads,
    base_from_dict,
    gen_from_dict,
    load_model,
    load_relation,
    serialize_model,
    serialize_relation,
)
from .reduction import (
    ReductionError,
    RelationError,
    build_reduction,
    decide_reducible,
    emit_proof_plan,
    verify_reduction,
)
from .structure import analyze as analyze_structure


class Failure(Exception):
    """Usage or input problem: exit status 2."""


def _bound_options(fn):
    @click.option("--bound", "N", type=int, default=60, show_default=True, help="universe of interest [1, N]")
    @click.option("--cap", "M", type=int, default=None, help="materialisation cap (default 2N+16)")
    @click.option("--cutoff", type=int, default=64, show_default=True, help="maximum fixpoint rounds")
    @click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
    @click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None,
                  help="write the produced artifact (model, relation, report) here")
    @functools.wraps(fn)
    def wrapper(N, M, cutoff, **kwargs):
        try:
            bound = Bound(N, M, cutoff)
        except ModelError as exc:
            raise click.UsageError(str(exc))
        return fn(bound=bound, **kwargs)
    return wrapper


def _guard(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (Failure, SchemaError, RelationError, OSError, ModelError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
    return wrapper


def _load(path):
    try:
        return load_model(path)
    except SchemaError as exc:
        raise Failure(f"{path}: {exc}") from None


def _load_json(path):
    with open(path, encoding="utf-8") as fh:
        try:
            return _loads(fh.read())
        except SchemaError as exc:
            raise Failure(f"{path}: {exc}") from None


def _emit(text: str):
    click.echo(text, nl=False)


def _write(path: Path | None, text: str):
    if path is not None:
        path.write_text(text, encoding="utf-8")


@click.group()
def main():
    """Bounded analysis of induction models <B, S> over the naturals."""


@main.command()
@click.argument("model_file", type=click.Path(exists=True, dir_okay=False))
@_bound_options
@_guard
def analyze(model_file, bound, fmt, out):
    """Closure trace, step count and coverage verdict for a model."""
    model = _load(model_file)
    trace = closure_trace(model, bound)
    verdict = is_nim_bounded(model, bound, trace)
    if fmt == "json":
        text = render.dumps(render.analysis_dict(model, trace, verdict))
    else:
        text = render.analysis_text(model, trace, verdict)
    _emit(text)
    _write(out, text)
    sys.exit(0 if verdict.covered else 1)


@main.command()
@click.argument("model_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--search-cap", type=int, default=20, show_default=True)
@_bound_options
@_guard
def classify(model_file, search_cap, bound, fmt, out):
    """Additive / multiplicative flags and a non-self-loop witness search."""
    data = _load_json(model_file)
    model = _load(model_file) if "base" in data else None
    if model is None:
        from .core import FiniteSet, InductionModel
        model = InductionModel(FiniteSet((1,)), gen_from_dict(data.get("gen", data)))
    report = analyze_structure(model.gen, search_cap)
    if fmt == "json":
        text = render.dumps(render.structure_dict(model, report))
    else:
        text = render.structure_text(model, report)
    _emit(text)
    _write(out, text)
    sys.exit(0)


_CONSTRUCTORS = {
    "general": construct_s_general,
    "additive": construct_s_additive,
    "multiplicative": construct_s_multiplicative,
}


def _construction_output(result, bound, fmt, out):
    verdict = is_nim_bounded(result.model, bound)
    if fmt == "json":
        text = render.dumps(render.construction_dict(result, verdict))
    else:
        text = render.construction_text(result, verdict)
    _emit(text)
    _write(out, serialize_model(result.model))
    sys.exit(0 if verdict.covered else 1)


@main.command("construct-s")
@click.argument("base_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--structure", type=click.Choice(sorted(_CONSTRUCTORS)), default="general", show_default=True)
@click.option("--arity", "k", type=int, default=1, show_default=True)
@_bound_options
@_guard
def construct_s(base_file, structure, k, bound, fmt, out):
    """Build a generating function for the base set in BASE_FILE."""
    data = _load_json(base_file)
    if not isinstance(data, dict) or "base" not in data:
        raise Failure(f"{base_file}: field base: missing field")
    base = base_from_dict(data["base"])
    try:
        result = _CONSTRUCTORS[structure](base, k, cap=bound.M)
    except ConstructionError as exc:
        click.echo(f"refused: {exc}")
        sys.exit(1)
    _construction_output(result, bound, fmt, out)


@main.command("construct-b")
@click.argument("gen_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--search-cap", type=int, default=20, show_default=True)
@_bound_options
@_guard
def construct_b(gen_file, search_cap, bound, fmt, out):
    """Build a base set N \\ {a} for the generating function in GEN_FILE."""
    data = _load_json(gen_file)
    if not isinstance(data, dict) or "gen" not in data:
        raise Failure(f"{gen_file}: field gen: missing field")
    gen = gen_from_dict(data["gen"])
    try:
        result = construct_b_for_s(gen, search_cap)
    except ConstructionError as exc:
        click.echo(f"refused: {exc}")
        sys.exit(1)
    _construction_output(result, bound, fmt, out)


@main.command()
@click.argument("m1_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("m2_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--allow-unknown", is_flag=True, help="build the recipe relation even when undecided")
@_bound_options
@_guard
def reduce(m1_file, m2_file, allow_unknown, bound, fmt, out):
    """Decide whether M1 reduces to M2 and emit the relation if so."""
    m1, m2 = _load(m1_file), _load(m2_file)
    verdict = decide_reducible(m1, m2, bound)
    lines = [f"m1: {render._model_label(m1)}", f"m2: {render._model_label(m2)}",
             render._bound_line(bound)] + render.reducibility_lines(verdict)
    data = {"m1": render._model_label(m1), "m2": render._model_label(m2),
            "bound": render.bound_dict(bound), "reducible": verdict.answer,
            "n1": str(verdict.n1), "n2": str(verdict.n2), "reason": verdict.reason,
            "assumption": verdict.assumption}
    ok = False
    if verdict.answer == "yes" or (verdict.answer == "unknown" and allow_unknown):
        rel = build_reduction(m1, m2, bound, allow_unknown=allow_unknown)
        report = verify_reduction(m1, m2, rel, bound)
        ok = report.passed
        lines += render.relation_lines(rel, window=bound.N) + render.verification_lines(report)
        data["verification"] = render.verification_dict(report)
        data["relation"] = json.loads(serialize_relation(rel))
        _write(out, serialize_relation(rel))
    if fmt == "json":
        _emit(render.dumps(data))
    else:
        _emit("\n".join(lines) + "\n")
    sys.exit(0 if ok else 1)


@main.command("verify-reduction")
@click.argument("m1_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("m2_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("relation_file", type=click.Path(exists=True, dir_okay=False))
@_bound_options
@_guard
def verify_reduction_cmd(m1_file, m2_file, relation_file, bound, fmt, out):
    """Check the three reduction conditions for a supplied relation."""
    m1, m2 = _load(m1_file), _load(m2_file)
    try:
        rel = load_relation(relation_file)
    except SchemaError as exc:
        raise Failure(f"{relation_file}: {exc}") from None
    report = verify_reduction(m1, m2, rel, bound)
    if fmt == "json":
        text = render.dumps({"m1": render._model_label(m1), "m2": render._model_label(m2),
                             "bound": render.bound_dict(bound), **render.verification_dict(report)})
    else:
        text = "\n".join([f"m1: {render._model_label(m1)}", f"m2: {render._model_label(m2)}",
                          render._bound_line(bound)] + render.verification_lines(report)) + "\n"
    _emit(text)
    _write(out, text)
    sys.exit(0 if report.passed else 1)


@main.command()
@click.argument("m1_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("m2_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("relation_file", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--allow-unverified", is_flag=True, help="emit a plan even if the relation fails verification")
@_bound_options
@_guard
def plan(m1_file, m2_file, relation_file, allow_unverified, bound, fmt, out):
    """Proof-conversion plan: prove P via M1 from an induction over M2."""
    m1, m2 = _load(m1_file), _load(m2_file)
    if relation_file:
        try:
            rel = load_relation(relation_file)
        except SchemaError as exc:
            raise Failure(f"{relation_file}: {exc}") from None
    else:
        try:
            rel = build_reduction(m1, m2, bound)
        except ReductionError as exc:
            click.echo(f"refused: {exc}")
            sys.exit(1)
    try:
        proof = emit_proof_plan(m1, m2, rel, bound, allow_unverified=allow_unverified)
    except ReductionError as exc:
        click.echo(f"refused: {exc}")
        sys.exit(1)
    doc = render.dumps(render.plan_dict(proof))
    _emit(doc if fmt == "json" else render.plan_text(proof))
    _write(out, doc)
    sys.exit(0 if proof.verified else 1)


if __name__ == "__main__":
    main()
