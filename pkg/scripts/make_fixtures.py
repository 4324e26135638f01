"""Write the model and relation fixtures shipped in fixtures/.

Relations are materialised up to CAP; verification clips them to the
cap of whatever bound it runs under.

    python scripts/make_fixtures.py [outdir]
"""

import sys
from pathlib import Path

from induction_models import (
    Case, Cofinite, FiniteSet, InductionModel, Interval, Multilinear, Piecewise, Primes,
    ReductionRelation, affine, constant, prime_omega, serialize_model, serialize_relation,
)
from induction_models.core import is_prime

CAP = 140

SUCC = affine(1, 1)
PRED = affine(-1, 1)
THIRD_S = Piecewise(1, (Case(1, 1, constant(10)), Case(1, 5, constant(10))), PRED)

MODELS = {
    "first-principle": InductionModel(FiniteSet((1,)), SUCC, "first-principle",
                                      "basic model of induction: P(1), P(k) => P(k+1)"),
    "strong-form": InductionModel(
        FiniteSet((1,)), SUCC, "strong-form",
        "strong induction carries P(1..k) => P(k+1); as a model it is <{1}, x+1> "
        "applied to Q(k) = P(1) and ... and P(k), hence equivalent to the first principle"),
    "backward-primes": InductionModel(Primes(False), PRED, "backward-primes",
                                      "backward induction from the primes"),
    "prime-induction": InductionModel(Primes(True), Multilinear(2, [((1, 2), 1)]), "prime-induction",
                                      "P on primes and 1, P(i) and P(j) => P(ij)"),
    "base2-succ": InductionModel(FiniteSet((2,)), SUCC, "base2-succ", "not an N-induction model: 1 is never reached"),
    "base2-plus2": InductionModel(FiniteSet((2,)), affine(2, 1), "base2-plus2", "closure is the even numbers"),
    "ex-equiv-third": InductionModel(Cofinite((2,)), THIRD_S, "ex-equiv-third",
                                     "B = N minus {2}; S(1) = S(5) = 10, otherwise x - 1; two steps"),
    "block-five": InductionModel(Interval(1, 5), affine(5, 1), "block-five", "<{1..5}, x+5>"),
}


def rel(images, provenance):
    return ReductionRelation({x: frozenset(v for v in s if 1 <= v <= CAP) for x, s in images.items()},
                             provenance)


def next_prime_above(x):
    p = x + 1
    while not is_prime(p):
        p += 1
    return p


def relations():
    xs = range(1, CAP + 1)
    primes = [p for p in range(2, 2 * CAP) if is_prime(p)]
    out = {}
    out["r-even"] = rel({x: range(2, 2 * x + 1, 2) for x in xs},
                        "user-supplied: R(x) = {2, 4, ..., 2x}; m1 = base2-plus2, m2 = first-principle")
    out["r-half"] = rel({x: range(1, x // 2 + 1) for x in xs if x % 2 == 0},
                        "user-supplied: R(x) = {x/2, ..., 1}; m1 = first-principle, m2 = base2-plus2")
    out["r-primes-blocks"] = rel(
        {x: {p - i for p in primes for i in range(0, (x - 1) // 5 + 1)} for x in xs},
        "user-supplied: {5n+1..5n+5} -> {p - i : 0 <= i <= n}; m1 = backward-primes, m2 = block-five")
    out["r-primes-blocks-literal"] = rel(
        {x: ({p for p in primes} if x <= 5 else
             {p - i for p in primes for i in range(1, (x - 1) // 5 + 1)}) for x in xs},
        "user-supplied: {5n+1..5n+5} -> {p - i : 1 <= i <= n} as literally written; "
        "m1 = backward-primes, m2 = block-five")
    out["r-blocks-primes"] = rel(
        {x: (range(1, 6) if is_prime(x) else range(1, 5 * (next_prime_above(x) - x + 1) + 1)) for x in xs},
        "user-supplied: P -> {1..5}, x -> [1, 5(p - x + 1)]; m1 = block-five, m2 = backward-primes")
    b = set(range(1, CAP + 1)) - {2}
    out["r-third"] = rel({x: (b if x == 1 else range(1, CAP + 1)) for x in xs},
                         "user-supplied: x -> Cl_{x-1}; m1 = ex-equiv-third, m2 = first-principle")
    out["r-omega"] = rel({n: ({1} if n == 1 else range(1, prime_omega(n) + 1)) for n in xs},
                         "user-supplied: R(1) = {1}, R(n) = [1, Omega(n)]; m1 = first-principle, "
                         "m2 = prime-induction")
    return out


def main(outdir="fixtures"):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, model in MODELS.items():
        (outdir / f"{name}.json").write_text(serialize_model(model), encoding="utf-8")
    for name, r in relations().items():
        (outdir / f"{name}.json").write_text(serialize_relation(r), encoding="utf-8")
    (outdir / "base-4.json").write_text('{"base": {"kind": "finite", "elements": [4]}}\n', encoding="utf-8")
    (outdir / "base-2-5.json").write_text('{"base": {"kind": "finite", "elements": [2, 5]}}\n', encoding="utf-8")
    (outdir / "base-1.json").write_text('{"base": {"kind": "finite", "elements": [1]}}\n', encoding="utf-8")
    (outdir / "gen-product.json").write_text(
        '{"gen": {"kind": "multilinear", "arity": 2, "coeffs": [{"vars": [1, 2], "c": 1}]}}\n', encoding="utf-8")


if __name__ == "__main__":
    main(*sys.argv[1:])
