"""Acceptance gate.  Run with ``pytest tests/test_acceptance.py -s`` to see
one PASS/FAIL line per criterion."""

import itertools
import random
import time

from induction_models import (
    AtLeast, Bound, Case, Cofinite, Exactly, FiniteSet, InductionModel, Multilinear, Piecewise, Primes,
    affine, build_reduction, closure_trace, constant, construct_b_for_s, construct_s_additive,
    construct_s_general, construct_s_multiplicative, evaluate, exhaustive_g_oracle, is_nim_bounded,
    minimal_closed_superset, verify_reduction,
)
from induction_models.constructors import ConstructionError
from induction_models.core import steps_le
from induction_models.modelio import load_model, load_relation
from induction_models.reduction import ReductionError, injective_model
from induction_models.structure import additive_witness, multiplicative_witness, self_loop_search

from conftest import FIXTURES, all_subsets, random_finite_base, random_model
from golden_cases import GOLDEN, cases, run


def report(n, title, ok, detail=""):
    line = f"criterion {n} [{title}]: {'PASS' if ok else 'FAIL'}"
    print("\n" + line + (f" ({detail})" if detail else ""))
    assert ok, line + (f": {detail}" if detail else "")


def fixture(name):
    return load_model(FIXTURES / f"{name}.json")


# 1 ------------------------------------------------------------------------

def test_criterion_1_definition_equivalence():
    rng = random.Random(1)
    tiny = Bound(10, 10)
    start = time.perf_counter()
    bad = []
    for i in range(200):
        m = random_model(rng, cap=10)
        if minimal_closed_superset(m, tiny) != closure_trace(m, tiny).closure or not exhaustive_g_oracle(m, tiny):
            bad.append(i)
    elapsed = time.perf_counter() - start
    report(1, "definition equivalence", not bad and elapsed <= 30,
           f"200 models, {len(bad)} mismatches, {elapsed:.1f}s")


# 2 ------------------------------------------------------------------------

def test_criterion_2_reference_verdicts():
    checks = {}
    v = is_nim_bounded(fixture("base2-succ"), Bound(60))
    checks["<{2},x+1> misses {1}"] = (not v.covered and v.missing == {1})
    checks["backward primes"] = is_nim_bounded(fixture("backward-primes"), Bound(50, 120)).covered
    checks["prime induction"] = is_nim_bounded(fixture("prime-induction"), Bound(100, 100)).covered
    checks["third example finite(2)"] = closure_trace(fixture("ex-equiv-third"), Bound(60)).stabilized_at == Exactly(2)
    checks["first principle at_least(64)"] = closure_trace(fixture("first-principle"), Bound(60)).stabilized_at == AtLeast(64)
    failed = [k for k, ok in checks.items() if not ok]
    report(2, "reference verdicts", not failed, "failed: " + ", ".join(failed) if failed else f"{len(checks)} verdicts")


# 3 ------------------------------------------------------------------------

def _random_function(rng):
    k = rng.randint(1, 2)
    return Multilinear(k, [(s, rng.randint(-3, 3)) for s in all_subsets(k)])


def _has_natural_witness(f, cap=20):
    return any((v := evaluate(f, t)) >= 1 and v not in t
               for t in itertools.product(range(1, cap + 1), repeat=f.arity))


def test_criterion_3_constructors():
    check = Bound(60, 136)
    rng = random.Random(3)
    bases = [FiniteSet(tuple(sorted(rng.sample(range(1, 31), rng.randint(1, 8))))) for _ in range(50)]
    bases += [Primes(), Cofinite((1, 2, 3)), Cofinite((2, 7, 11))]
    failures, runs = [], 0
    for base in bases:
        jobs = [("general", k) for k in (1, 2, 3)]
        for k in (1, 2, 3):
            if k > 1 or 1 in base.smallest(1, limit=check.M) or not base.is_finite:
                jobs.append(("additive", k))
        if len(base.smallest(2, limit=check.M)) >= 2:
            jobs += [("multiplicative", 2), ("multiplicative", 3)]
        for kind, k in jobs:
            fn = {"general": construct_s_general, "additive": construct_s_additive,
                  "multiplicative": construct_s_multiplicative}[kind]
            runs += 1
            try:
                fn(base, k, check=check)
            except ConstructionError as exc:
                failures.append(f"{kind} k={k} B={base}: {exc}")
    fns = []
    while len(fns) < 30:
        f = _random_function(rng)
        if self_loop_search(f, 20) is not None and _has_natural_witness(f):
            fns.append(f)
    for f in fns:
        runs += 1
        result = construct_b_for_s(f)
        n = closure_trace(result.model, check).stabilized_at
        if n != Exactly(2):
            failures.append(f"construct_b {f}: {n}")
    report(3, "constructor guarantee", not failures,
           f"{runs} constructions, {len(failures)} failures" + (f"; first: {failures[0]}" if failures else ""))


# 4 ------------------------------------------------------------------------

def test_criterion_4_structure_witnesses():
    rng = random.Random(4)
    failures, count = [], 0
    while count < 100:
        k = rng.randint(1, 3)
        f = affine(rng.randint(-6, 6), *[rng.choice([c for c in range(-6, 7) if c]) for _ in range(k)])
        if f == affine(0, 1):
            continue
        count += 1
        if not additive_witness(f).confirms() or self_loop_search(f, 20) is None:
            failures.append(str(f))
    count = 0
    while count < 100:
        k = rng.randint(1, 3)
        coeffs = [(s, rng.randint(-6, 6)) for s in all_subsets(k)[:-1]]
        coeffs.append((tuple(range(1, k + 1)), rng.choice([c for c in range(-6, 7) if c])))
        f = Multilinear(k, coeffs)
        if f == affine(0, 1):
            continue
        count += 1
        if not multiplicative_witness(f).confirms() or self_loop_search(f, 20) is None:
            failures.append(str(f))
    report(4, "structure witnesses", not failures, f"200 functions, {len(failures)} failures")


# 5 ------------------------------------------------------------------------

def _covered_corpus(rng, count, bound):
    out = [fixture("prime-induction"), fixture("ex-equiv-third")]
    while len(out) < count:
        r = rng.random()
        base = random_finite_base(rng, cap=20, max_size=5)
        try:
            if r < 0.3:
                m = construct_s_general(base, rng.randint(1, 3)).model
            elif r < 0.55:
                m = construct_s_additive(base, rng.randint(2, 3)).model
            elif r < 0.8:
                m = construct_s_multiplicative(base, rng.randint(2, 3)).model
            else:
                m = InductionModel(Cofinite(tuple(sorted(rng.sample(range(1, 15), rng.randint(0, 4))))),
                                   affine(-rng.randint(1, 2), 1))
        except ConstructionError:
            continue
        if is_nim_bounded(m, bound).covered:
            out.append(m)
    return out


def test_criterion_5_injective_version():
    bound = Bound(40, 40)
    failures = []
    for idx, m in enumerate(_covered_corpus(random.Random(5), 100, bound)):
        tr = closure_trace(m, bound)
        inj = closure_trace(injective_model(m, bound, tr), bound)
        depth = max(len(tr.levels), len(inj.levels))
        if any(inj.power(i) != tr.power(i) - tr.base for i in range(1, depth)):
            failures.append((idx, "power identity"))
        if inj.closure != tr.closure:
            failures.append((idx, "closure"))
        if tr.stabilized_at.is_finite and inj.stabilized_at.is_finite and tr.stabilized_at != inj.stabilized_at:
            failures.append((idx, "step count"))
        for x, l in tr.l_table.items():
            if any((x in inj.diff(m_)) != (m_ == l) for m_ in range(1, depth)) and l >= 1:
                failures.append((idx, f"l({x})"))
                break
    report(5, "injective version properties", not failures, f"100 models, {len(failures)} failures")


# 6 ------------------------------------------------------------------------

def _chain(k):
    """<{1}, 1 -> 2 -> ... -> k, else 1>: k - 1 steps, then nothing new."""
    cases = tuple(Case(1, i, constant(i + 1)) for i in range(1, k))
    return InductionModel(FiniteSet((1,)), Piecewise(1, cases, constant(1)), f"chain-{k}")


def step_count_corpus():
    pred = affine(-1, 1)
    return [
        InductionModel(Cofinite(()), pred, "naturals-pred"),
        InductionModel(FiniteSet((5,)), affine(-10, 1), "five-minus-ten"),
        InductionModel(Cofinite((1,)), pred, "cofinite-1"),
        fixture("ex-equiv-third"),
        InductionModel(Cofinite((4,)), Multilinear(2, [((1, 2), 1)]), "cofinite-4-product"),
        InductionModel(Cofinite((1, 2)), pred, "cofinite-2"),
        _chain(3),
        InductionModel(Cofinite((1, 2, 3)), pred, "cofinite-3"),
        _chain(4),
        InductionModel(Cofinite((1, 2, 3, 4)), pred, "cofinite-4"),
        _chain(5),
        InductionModel(FiniteSet((2,)), Multilinear(2, [((1, 2), 1)]), "two-powers-of-two"),
        fixture("first-principle"),
        fixture("base2-plus2"),
    ]


def test_criterion_6_reduction_round_trip():
    bound = Bound(60)
    corpus = step_count_corpus()
    steps = [closure_trace(m, bound).stabilized_at for m in corpus]
    finite = sorted(n.n for n in steps if n.is_finite)
    problems = []
    if len(finite) != 12 or not set(finite) <= set(range(1, 6)) or set(finite) != set(range(1, 6)):
        problems.append(f"corpus step counts {finite}")
    if sum(not n.is_finite for n in steps) != 2:
        problems.append("expected two presumed-omega models")

    built = {}
    for (i, m1), (j, m2) in itertools.product(enumerate(corpus), repeat=2):
        expected, _ = steps_le(steps[i], steps[j])
        try:
            rel = build_reduction(m1, m2, bound)
        except ReductionError:
            if expected:
                problems.append(f"{m1.name} -> {m2.name} refused")
            continue
        if not expected:
            problems.append(f"{m1.name} -> {m2.name} built although n1 > n2")
        built[i, j] = rel
        if not verify_reduction(m1, m2, rel, bound).passed:
            problems.append(f"{m1.name} -> {m2.name} fails verification")

    n = len(corpus)
    for a, b, c in itertools.product(range(n), repeat=3):
        if (a, b) in built and (b, c) in built and (a, c) not in built:
            problems.append(f"transitivity {a}->{b}->{c}")
    sink = next(i for i, m in enumerate(corpus) if m.name == "first-principle")
    problems += [f"{m.name} does not reduce to <{{1}}, x+1>" for i, m in enumerate(corpus) if (i, sink) not in built]
    third = next(i for i, m in enumerate(corpus) if m.name == "ex-equiv-third")
    if (sink, third) in built:
        problems.append("negative pair accepted")
    report(6, "reduction round trip", not problems,
           f"{len(built)} relations built and verified over {n * n} pairs" if not problems else "; ".join(problems[:5]))


# 7 ------------------------------------------------------------------------

WORKED = [
    ("base2-plus2", "first-principle", "r-even", Bound(60)),
    ("first-principle", "base2-plus2", "r-half", Bound(60)),
    ("backward-primes", "block-five", "r-primes-blocks", Bound(60, 140)),
    ("ex-equiv-third", "first-principle", "r-third", Bound(60)),
]


def test_criterion_7_worked_relations():
    failed = []
    for m1, m2, rel, bound in WORKED:
        r = verify_reduction(fixture(m1), fixture(m2), load_relation(FIXTURES / f"{rel}.json"), bound)
        if not r.passed:
            failed.append(rel)
    literal = verify_reduction(fixture("backward-primes"), fixture("block-five"),
                               load_relation(FIXTURES / "r-primes-blocks-literal.json"), Bound(60, 140))
    note = f"literal 1 <= i <= n block form fails step consistency at {list(literal.step_counterexamples[:5])}"
    report(7, "worked relations", not failed,
           (f"failed: {failed}; " if failed else f"{len(WORKED)} relations verified; ") + note)


# 8 ------------------------------------------------------------------------

def test_criterion_8_cli_golden():
    mismatched = []
    all_cases = cases()
    for name, code, args in all_cases:
        first, second = run(args), run(args)
        golden = (GOLDEN / f"{name}.txt").read_text(encoding="utf-8")
        if first != second or first != (code, golden):
            mismatched.append(name)
    report(8, "CLI golden files", not mismatched,
           f"{len(all_cases)} commands byte-identical" if not mismatched else f"mismatched: {mismatched}")
