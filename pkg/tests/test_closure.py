import random

import pytest
from hypothesis import given, settings

from induction_models import (
    AtLeast, Bound, Cofinite, Exactly, FiniteSet, InductionModel, Multilinear, Primes, affine,
    closure_trace, exhaustive_g_oracle, is_nim_bounded, minimal_closed_superset, step_count,
)
from induction_models.modelio import load_model

from conftest import FIXTURES, finite_bases, multilinears, random_model
from oracles import bfs_levels, least_closed_superset, naive_trace

SUCC = InductionModel(FiniteSet((1,)), affine(1, 1))
PRODUCTS = InductionModel(Primes(True), Multilinear(2, [((1, 2), 1)]))


def third():
    return load_model(FIXTURES / "ex-equiv-third.json")


def test_successor_chain():
    tr = closure_trace(SUCC, Bound(5, 5, 10))
    for i in range(1, 5):
        assert tr.diff(i) == {i + 1}
    assert tr.diff(5) == frozenset()
    assert tr.closure == frozenset(range(1, 6))
    assert tr.stabilized_at == Exactly(5)


def test_third_example_two_steps():
    tr = closure_trace(third(), Bound(20, 20))
    assert tr.diff(1) == {2}
    assert tr.diff(2) == frozenset()
    assert tr.stabilized_at == Exactly(2)


def test_prime_products_levels_match_bfs():
    tr = closure_trace(PRODUCTS, Bound(30, 30))
    assert (tr.l_table[4], tr.l_table[8], tr.l_table[12]) == (1, 2, 2)
    assert tr.l_table == bfs_levels(PRODUCTS.gen, PRODUCTS.base.materialize(30), 30)


def test_step_counts():
    assert step_count(third(), Bound()) == Exactly(2)
    assert step_count(SUCC, Bound(60, cutoff=50)) == AtLeast(50)


def test_not_covered_reports_missing():
    v = is_nim_bounded(InductionModel(FiniteSet((2,)), affine(1, 1)), Bound(10))
    assert not v.covered and v.missing == {1}
    assert v.caveat


def test_backward_primes_covered():
    assert is_nim_bounded(InductionModel(Primes(), affine(-1, 1)), Bound(50, 120)).covered


def test_prime_induction_covered():
    assert is_nim_bounded(PRODUCTS, Bound(100, 100)).covered


def test_minimal_closed_superset_examples():
    assert minimal_closed_superset(SUCC, Bound(5, 5)) == frozenset(range(1, 6))
    evens = InductionModel(FiniteSet((2,)), affine(2, 1))
    assert minimal_closed_superset(evens, Bound(10, 10)) == {2, 4, 6, 8, 10}


def test_exhaustive_oracle_examples():
    assert exhaustive_g_oracle(SUCC, Bound(6, 6))
    assert exhaustive_g_oracle(InductionModel(FiniteSet((2,)), affine(1, 1)), Bound(6, 6))


def test_exhaustive_oracle_rejects_large_cap():
    with pytest.raises(ValueError):
        exhaustive_g_oracle(SUCC, Bound(20, 20))


def test_exhaustive_oracle_detects_wrong_closure(monkeypatch):
    import induction_models.closure as closure

    real = closure.closure_trace

    def broken(model, bound):
        tr = real(model, bound)
        levels = list(tr.levels)
        last = levels[-1]
        levels[-1] = type(last)(last.index, last.power, last.closure - {3}, last.new - {3})
        return type(tr)(tr.bound, levels, tr.l_table, tr.stabilized_at)

    monkeypatch.setattr(closure, "closure_trace", broken)
    assert not closure.exhaustive_g_oracle(SUCC, Bound(6, 6))


@pytest.mark.parametrize("seed", range(40))
def test_semi_naive_matches_naive(seed):
    rng = random.Random(seed)
    model = random_model(rng, cap=12)
    bound = Bound(12, 20, 30)
    tr = closure_trace(model, bound)
    ref = naive_trace(model.gen, model.base.materialize(20), 20, 30)
    assert len(tr.levels) == len(ref)
    for lv, (power, cl, new) in zip(tr.levels[1:], ref[1:]):
        assert (lv.power, lv.closure, lv.new) == (power, cl, new)


@settings(max_examples=60, deadline=None)
@given(multilinears(max_arity=2), finite_bases(cap=10))
def test_closure_equals_least_fixpoint(gen, base):
    model = InductionModel(base, gen)
    bound = Bound(10, 10, 40)
    tr = closure_trace(model, bound)
    expected = least_closed_superset(gen, base.materialize(10), 10)
    assert tr.closure == expected
    assert minimal_closed_superset(model, bound) == expected


@settings(max_examples=60, deadline=None)
@given(multilinears(max_arity=3), finite_bases(cap=15))
def test_trace_invariants(gen, base):
    tr = closure_trace(InductionModel(base, gen), Bound(15, 25, 40))
    seen = set(tr.base)
    for i in range(1, len(tr.levels)):
        d = tr.diff(i)
        assert not (d & seen)
        assert tr.cl(i) == tr.cl(i - 1) | tr.power(i)
        seen |= d
    assert seen == tr.closure
    assert tr.stabilized_at.is_finite
    n = tr.stabilized_at.n
    assert tr.cl(n - 1) == tr.closure
    for x, l in tr.l_table.items():
        assert x in tr.cl(l) and (l == 0 or x not in tr.cl(l - 1))


def test_exact_path_for_huge_coefficients():
    big = 10**30
    gen = Multilinear(2, [((1, 2), big), ((1,), 1 - big), ((2,), -big), ((), big + 1)])   # big(x-1)(y-1) + x + 1
    model = InductionModel(FiniteSet((1,)), gen)
    tr = closure_trace(model, Bound(20, 20))
    ref = naive_trace(gen, {1}, 20, 64)
    assert tr.closure == ref[-1][1]
    assert tr.closure == frozenset(range(1, 21))


def test_cofinite_base_trace():
    tr = closure_trace(InductionModel(Cofinite((1,)), affine(-1, 1)), Bound(10))
    assert tr.stabilized_at == Exactly(2)
    assert tr.diff(1) == {1}
