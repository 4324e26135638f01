"""Recipes that build a generating function for a base set, or a base set
for a generating function, so that the pair covers the naturals.

Where a recipe leaves a choice open (which element, which tuple) the
smallest candidate is taken so results are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .closure import NimVerdict, is_nim_bounded
from .core import (
    Bound,
    Case,
    Cofinite,
    GenFn,
    InductionModel,
    Multilinear,
    MinCompose,
    Piecewise,
    SetSpec,
    affine,
    constant,
    evaluate,
)


class ConstructionError(ValueError):
    """No model of the requested shape is produced for this input."""


OPEN_QUESTION = ("a multiplicative generating function for a single-element base "
                 "is an open question; no construction is known")


@dataclass(frozen=True)
class ConstructionResult:
    model: InductionModel
    recipe: str
    parameters: dict = field(default_factory=dict)

    def check(self, bound: Bound | None = None) -> NimVerdict:
        return is_nim_bounded(self.model, bound or Bound())


def _base_elements(base: SetSpec, count: int, cap: int) -> tuple[int, ...]:
    found = base.smallest(count, limit=cap)
    if not found:
        raise ConstructionError(f"base {base} has no element in [1, {cap}]")
    return found


def _checked(result: ConstructionResult, check: Bound | None) -> ConstructionResult:
    if check is not None:
        verdict = result.check(check)
        if not verdict.covered:
            raise ConstructionError(
                f"{result.recipe} model misses {sorted(verdict.missing)[:10]} at N={check.N}, M={check.M}")
    return result


def _unary_general(base: SetSpec, cap: int) -> tuple[GenFn, str, dict]:
    b = _base_elements(base, 1, cap)[0]
    if b == 1:
        return affine(1, 1), "successor", {}
    if base.is_finite:
        f = Piecewise(1, (Case(1, b, constant(1)), Case(1, b - 1, constant(b + 1))), affine(1, 1))
        return f, "finite-piecewise", {"b": b}
    return affine(-1, 1), "backward", {}


def construct_s_general(base: SetSpec, k: int = 1, *, cap: int = 10**6,
                        check: Bound | None = None) -> ConstructionResult:
    """Unary recipe by case on the base; lifted to arity k through ``min``."""
    if k < 1:
        raise ConstructionError("arity must be >= 1")
    f, recipe, params = _unary_general(base, cap)
    if k > 1:
        f = MinCompose(f, k)
        recipe = f"min-lift/{recipe}"
    params["k"] = k
    return _checked(ConstructionResult(InductionModel(base, f), recipe, params), check)


def additive_kary(k: int, q: int) -> Multilinear:
    """``x_1 + ... + x_{k-1} - (k-1) x_k + (q+1)``; ``k = 2`` gives ``x - y + q + 1``."""
    return affine(q + 1, *([1] * (k - 1)), -(k - 1))


def construct_s_additive(base: SetSpec, k: int = 2, *, cap: int = 10**6,
                         check: Bound | None = None) -> ConstructionResult:
    if k < 1:
        raise ConstructionError("arity must be >= 1")
    q = _base_elements(base, 1, cap)[0]
    if k == 1:
        if q == 1:
            f, recipe = affine(1, 1), "additive-unary/successor"
        elif not base.is_finite:
            f, recipe = affine(-1, 1), "additive-unary/backward"
        else:
            raise ConstructionError(
                "no unary additive generating function exists: the base neither "
                "contains 1 nor is infinite")
        params = {"k": 1}
    else:
        f = additive_kary(k, q)
        recipe = "additive-binary" if k == 2 else "additive-kary"
        params = {"k": k, "q": q}
    return _checked(ConstructionResult(InductionModel(base, f), recipe, params), check)


def multiplicative_kary(k: int, q: int) -> Multilinear:
    """Binary: ``xy + y - qy + 1``.  For ``k >= 3``:
    ``x_1...x_k + (x_{k-1} x_k + x_k - q x_k + 1) - q x_2...x_k``, which
    collapses to the binary form in ``(x_{k-1}, x_k)`` when ``x_1 = q``."""
    if k == 2:
        return Multilinear(2, [((1, 2), 1), ((2,), 1 - q), ((), 1)])
    full = tuple(range(1, k + 1))
    return Multilinear(k, [(full, 1), ((k - 1, k), 1), ((k,), 1 - q), ((), 1), (full[1:], -q)])


def construct_s_multiplicative(base: SetSpec, k: int = 2, *, cap: int = 10**6,
                               check: Bound | None = None) -> ConstructionResult:
    if k < 2:
        raise ConstructionError("the multiplicative recipe needs arity >= 2")
    elems = _base_elements(base, 2, cap)
    if len(elems) < 2:
        raise ConstructionError(OPEN_QUESTION)
    p, q = elems
    f = multiplicative_kary(k, q)
    recipe = "multiplicative-binary" if k == 2 else "multiplicative-kary"
    return _checked(ConstructionResult(InductionModel(base, f), recipe, {"k": k, "p": p, "q": q}), check)


def construct_b_for_s(f: GenFn, search_cap: int = 20, *,
                      check: Bound | None = None) -> ConstructionResult:
    """Base ``N \\ {a}`` where ``a = f(t)`` is natural and not a coordinate of
    ``t``; ``t`` is the lexicographically least such tuple."""
    for t in itertools.product(range(1, search_cap + 1), repeat=f.arity):
        a = evaluate(f, t)
        if a >= 1 and a not in t:
            model = InductionModel(Cofinite((a,)), f)
            return _checked(ConstructionResult(model, "cofinite-witness", {"a": a, "witness": t}), check)
    raise ConstructionError(
        f"no tuple in [1, {search_cap}]^{f.arity} has a natural image outside its coordinates")
