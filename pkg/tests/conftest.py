import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from induction_models import (
    Case, FiniteSet, InductionModel, Multilinear, Piecewise,
)

sys.path.insert(0, str(Path(__file__).parent))

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def all_subsets(k):
    out = [()]
    for j in range(1, k + 1):
        out += [s + (j,) for s in out]
    return out


@st.composite
def multilinears(draw, max_arity=2, lo=-3, hi=3):
    k = draw(st.integers(1, max_arity))
    coeffs = [(s, draw(st.integers(lo, hi))) for s in all_subsets(k)]
    return Multilinear(k, coeffs)


@st.composite
def finite_bases(draw, cap=10, max_size=4):
    els = draw(st.sets(st.integers(1, cap), min_size=1, max_size=max_size))
    return FiniteSet(tuple(sorted(els)))


def random_multilinear(rng, max_arity=2, lo=-3, hi=3):
    k = rng.randint(1, max_arity)
    return Multilinear(k, [(s, rng.randint(lo, hi)) for s in all_subsets(k)])


def random_piecewise(rng, lo=-3, hi=3):
    k = rng.randint(1, 2)
    cases = []
    used = set()
    for _ in range(rng.randint(1, 3)):
        key = (rng.randint(1, k), rng.randint(1, 8))
        if key in used:
            continue
        used.add(key)
        cases.append(Case(key[0], key[1], Multilinear(k, [(s, rng.randint(lo, hi)) for s in all_subsets(k)])))
    return Piecewise(k, tuple(cases), Multilinear(k, [(s, rng.randint(lo, hi)) for s in all_subsets(k)]))


def random_finite_base(rng, cap=10, max_size=4):
    return FiniteSet(tuple(sorted(rng.sample(range(1, cap + 1), rng.randint(1, max_size)))))


def random_model(rng, cap=10):
    gen = random_multilinear(rng) if rng.random() < 0.75 else random_piecewise(rng)
    return InductionModel(random_finite_base(rng, cap), gen)
