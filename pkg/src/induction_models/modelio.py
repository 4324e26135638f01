"""JSON model and relation files.

Model file::

    {
      "name": "first-principle",            (optional)
      "note": "...",                        (optional)
      "base": {"kind": "finite", "elements": [1]},
      "gen":  {"kind": "multilinear", "arity": 1,
               "coeffs": [{"vars": [], "c": 1}, {"vars": [1], "c": 1}]}
    }

``base.kind`` is one of ``finite`` (elements), ``cofinite`` (excluded),
``primes`` (include_one), ``interval`` (lo, hi).  ``gen.kind`` is one of
``multilinear`` (arity, coeffs), ``piecewise`` (arity, cases, default; each
case is ``{"coord", "value", "body"}`` with a multilinear body),
``min_compose`` / ``max_compose`` (arity, inner unary function).

Relation file::

    {"provenance": "...", "relation": [{"x": 1, "set": [1, 2]}, ...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .core import (
    Case,
    Cofinite,
    FiniteSet,
    Interval,
    Multilinear,
    MinCompose,
    ModelError,
    Piecewise,
    Primes,
    InductionModel,
)


class SchemaError(ModelError):
    """A model or relation document does not match the file schema."""

    def __init__(self, message: str, path: str = "", line: int | None = None):
        self.path = path
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if path:
            where.append(f"field {path}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{exc.msg} (column {exc.colno})", line=exc.lineno) from None


def _field_line(text: str, path: str) -> int | None:
    """Best-effort line of the last key of ``path`` in the source text."""
    key = path.rsplit(".", 1)[-1].split("[", 1)[0]
    if not key:
        return None
    needle = f'"{key}"'
    for i, line in enumerate(text.splitlines(), 1):
        if needle in line:
            return i
    return None


def _obj(node, path):
    if not isinstance(node, dict):
        raise SchemaError("expected an object", path)
    return node


def _get(node, key, path, kind=None):
    if key not in node:
        raise SchemaError("missing field", f"{path}.{key}" if path else key)
    value = node[key]
    if kind is not None:
        ok = isinstance(value, kind) and not (kind is int and isinstance(value, bool))
        if not ok:
            raise SchemaError(f"expected {getattr(kind, '__name__', kind)}", f"{path}.{key}")
    return value


def _int_list(node, key, path):
    values = _get(node, key, path, list)
    for i, v in enumerate(values):
        if not isinstance(v, int) or isinstance(v, bool):
            raise SchemaError("expected an integer", f"{path}.{key}[{i}]")
    return values


def _wrap(path, fn, *args):
    try:
        return fn(*args)
    except SchemaError:
        raise
    except ModelError as exc:
        raise SchemaError(str(exc), path) from None


def base_from_dict(node, path="base"):
    node = _obj(node, path)
    kind = _get(node, "kind", path, str)
    if kind == "finite":
        return _wrap(path, FiniteSet, tuple(_int_list(node, "elements", path)))
    if kind == "cofinite":
        return _wrap(path, Cofinite, tuple(_int_list(node, "excluded", path)))
    if kind == "primes":
        return Primes(bool(_get(node, "include_one", path, bool)) if "include_one" in node else False)
    if kind == "interval":
        return _wrap(path, Interval, _get(node, "lo", path, int), _get(node, "hi", path, int))
    raise SchemaError(f"unknown base kind {kind!r}", f"{path}.kind")


def _multilinear(node, path, arity=None):
    node = _obj(node, path)
    kind = _get(node, "kind", path, str)
    if kind != "multilinear":
        raise SchemaError(f"expected a multilinear function, got {kind!r}", f"{path}.kind")
    k = _get(node, "arity", path, int)
    if arity is not None and k != arity:
        raise SchemaError(f"arity {k} differs from enclosing arity {arity}", f"{path}.arity")
    coeffs = []
    for i, term in enumerate(_get(node, "coeffs", path, list)):
        tpath = f"{path}.coeffs[{i}]"
        term = _obj(term, tpath)
        vars_ = _int_list(term, "vars", tpath)
        for j in vars_:
            if not 1 <= j <= k:
                raise SchemaError(f"variable index {j} outside 1..{k}", f"{tpath}.vars")
        coeffs.append((tuple(vars_), _get(term, "c", tpath, int)))
    return _wrap(path, Multilinear, k, coeffs)


def gen_from_dict(node, path="gen"):
    node = _obj(node, path)
    kind = _get(node, "kind", path, str)
    if kind == "multilinear":
        return _multilinear(node, path)
    if kind == "piecewise":
        k = _get(node, "arity", path, int)
        cases = []
        for i, c in enumerate(_get(node, "cases", path, list)):
            cpath = f"{path}.cases[{i}]"
            c = _obj(c, cpath)
            cases.append(Case(_get(c, "coord", cpath, int), _get(c, "value", cpath, int),
                              _multilinear(_get(c, "body", cpath), f"{cpath}.body", k)))
        default = _multilinear(_get(node, "default", path), f"{path}.default", k)
        return _wrap(path, Piecewise, k, tuple(cases), default)
    if kind in ("min_compose", "max_compose"):
        k = _get(node, "arity", path, int)
        inner = gen_from_dict(_get(node, "inner", path), f"{path}.inner")
        if isinstance(inner, MinCompose):
            raise SchemaError("inner function must be multilinear or piecewise", f"{path}.inner")
        return _wrap(path, MinCompose, inner, k, kind.split("_")[0])
    raise SchemaError(f"unknown gen kind {kind!r}", f"{path}.kind")


def model_from_dict(node) -> InductionModel:
    node = _obj(node, "")
    for key in node:
        if key not in ("name", "note", "base", "gen"):
            raise SchemaError("unknown field", key)
    name = node.get("name")
    note = node.get("note")
    if name is not None and not isinstance(name, str):
        raise SchemaError("expected str", "name")
    if note is not None and not isinstance(note, str):
        raise SchemaError("expected str", "note")
    return InductionModel(base_from_dict(_get(node, "base", "")),
                          gen_from_dict(_get(node, "gen", "")), name, note)


def parse_model(text: str) -> InductionModel:
    data = _loads(text)
    try:
        return model_from_dict(data)
    except SchemaError as exc:
        if exc.line is None and exc.path:
            line = _field_line(text, exc.path)
            if line is not None:
                raise SchemaError(str(exc).split(": ", 1)[-1], exc.path, line) from None
        raise


def base_to_dict(base) -> dict:
    if isinstance(base, FiniteSet):
        return {"kind": "finite", "elements": list(base.elements)}
    if isinstance(base, Cofinite):
        return {"kind": "cofinite", "excluded": list(base.excluded)}
    if isinstance(base, Primes):
        return {"kind": "primes", "include_one": base.include_one}
    if isinstance(base, Interval):
        return {"kind": "interval", "lo": base.lo, "hi": base.hi}
    raise TypeError(f"not a base set: {base!r}")


def gen_to_dict(gen) -> dict:
    if isinstance(gen, Multilinear):
        return {"kind": "multilinear", "arity": gen.arity,
                "coeffs": [{"vars": list(v), "c": c} for v, c in gen.coeffs]}
    if isinstance(gen, Piecewise):
        return {"kind": "piecewise", "arity": gen.arity,
                "cases": [{"coord": c.coord, "value": c.value, "body": gen_to_dict(c.body)}
                          for c in gen.cases],
                "default": gen_to_dict(gen.default)}
    if isinstance(gen, MinCompose):
        return {"kind": f"{gen.extremum}_compose", "arity": gen.arity, "inner": gen_to_dict(gen.inner)}
    raise TypeError(f"cannot serialise generating function {gen!r}")


def model_to_dict(model: InductionModel) -> dict:
    out: dict[str, Any] = {}
    if model.name is not None:
        out["name"] = model.name
    if model.note is not None:
        out["note"] = model.note
    out["base"] = base_to_dict(model.base)
    out["gen"] = gen_to_dict(model.gen)
    return out


def serialize_model(model: InductionModel) -> str:
    return json.dumps(model_to_dict(model), indent=2) + "\n"


def load_model(path) -> InductionModel:
    with open(path, encoding="utf-8") as fh:
        return parse_model(fh.read())


# --------------------------------------------------------------------------
# relations


@dataclass(frozen=True)
class ReductionRelation:
    """``R``: elements of the target closure to subsets of the source closure."""

    images: dict[int, frozenset[int]]
    provenance: str = "user-supplied"

    def __getitem__(self, x: int) -> frozenset[int]:
        return self.images[x]

    def __contains__(self, x: int) -> bool:
        return x in self.images

    def keys(self):
        return self.images.keys()


def relation_to_dict(rel: ReductionRelation) -> dict:
    return {"provenance": rel.provenance,
            "relation": [{"x": x, "set": sorted(rel.images[x])} for x in sorted(rel.images)]}


def serialize_relation(rel: ReductionRelation) -> str:
    # one pair per line keeps large relations diffable
    lines = ["{", f'  "provenance": {json.dumps(rel.provenance)},', '  "relation": [']
    pairs = [f'    {{"x": {x}, "set": {json.dumps(sorted(rel.images[x]))}}}' for x in sorted(rel.images)]
    lines.append(",\n".join(pairs))
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def parse_relation(text: str) -> ReductionRelation:
    data = _obj(_loads(text), "")
    provenance = data.get("provenance", "user-supplied")
    if not isinstance(provenance, str):
        raise SchemaError("expected str", "provenance")
    images: dict[int, frozenset[int]] = {}
    for i, pair in enumerate(_get(data, "relation", "", list)):
        ppath = f"relation[{i}]"
        pair = _obj(pair, ppath)
        x = _get(pair, "x", ppath, int)
        if x < 1:
            raise SchemaError("x must be a natural >= 1", f"{ppath}.x")
        if x in images:
            raise SchemaError(f"duplicate entry for x={x}", f"{ppath}.x")
        values = _int_list(pair, "set", ppath)
        if any(v < 1 for v in values):
            raise SchemaError("set members must be naturals >= 1", f"{ppath}.set")
        images[x] = frozenset(values)
    return ReductionRelation(images, provenance)


def load_relation(path) -> ReductionRelation:
    with open(path, encoding="utf-8") as fh:
        return parse_relation(fh.read())
