"""Additive / multiplicative classification and non-self-loop witnesses.

Self-loop is only ever refuted here: a search can exhibit a tuple whose
image is not one of its coordinates, but it can never prove that none
exists.  The two known self-loops (identity and max) ship as fixtures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import GenFn, Multilinear, evaluate, is_prime

MULTIPLICATIVE_SEARCH_LIMIT = 10**4


class NotApplicable(ValueError):
    """The witness construction's precondition does not hold."""


@dataclass(frozen=True)
class Witness:
    tuple: tuple[int, ...]
    value: int

    def confirms(self) -> bool:
        return self.value not in self.tuple


@dataclass(frozen=True)
class StructureReport:
    additive: bool
    multiplicative: bool
    self_loop_witness: Witness | None = None
    search_exhausted_to: int = 0


def is_additive(f: GenFn) -> bool:
    if not isinstance(f, Multilinear):
        return False
    if any(len(v) >= 2 for v, _ in f.coeffs):
        return False
    return all(f.coefficient((i,)) != 0 for i in range(1, f.arity + 1))


def is_multiplicative(f: GenFn) -> bool:
    return isinstance(f, Multilinear) and f.coefficient(range(1, f.arity + 1)) != 0


def classify(f: GenFn) -> StructureReport:
    return StructureReport(is_additive(f), is_multiplicative(f))


def self_loop_search(f: GenFn, search_cap: int) -> Witness | None:
    """Lexicographically least tuple in ``[1, search_cap]^k`` whose image
    is not among its coordinates, or None."""
    if search_cap < 1:
        raise ValueError("search_cap must be >= 1")
    for t in itertools.product(range(1, search_cap + 1), repeat=f.arity):
        v = evaluate(f, t)
        if v not in t:
            return Witness(t, v)
    return None


def analyze(f: GenFn, search_cap: int = 20) -> StructureReport:
    flags = classify(f)
    return StructureReport(flags.additive, flags.multiplicative,
                           self_loop_search(f, search_cap), search_cap)


def _is_identity(f: Multilinear) -> bool:
    return f.arity == 1 and f.coeffs == (((1,), 1),)


def additive_witness(f: GenFn) -> Witness:
    """Non-self-loop witness for an additive ``a_0 + sum a_i x_i``.

    All-ones when the coefficients do not sum to 1; otherwise a 2 at the
    first position whose coefficient is outside {0, 1}.  If every linear
    coefficient is 1 (then ``a_0 = 1 - k`` with ``k >= 2``) the all-twos
    tuple maps to ``k + 1``.
    """
    if not is_additive(f):
        raise NotApplicable("function does not have additive structure")
    if _is_identity(f):
        raise NotApplicable("the unary identity is a self-loop")
    k = f.arity
    a = [f.coefficient(())] + [f.coefficient((i,)) for i in range(1, k + 1)]
    if sum(a) != 1:
        t = (1,) * k
    else:
        pos = next((l for l in range(1, k + 1) if a[l] not in (0, 1)), None)
        t = (2,) * k if pos is None else tuple(2 if i == pos else 1 for i in range(1, k + 1))
    return Witness(t, evaluate(f, t))


def smallest_prime_not_dividing(n: int) -> int:
    p = 2
    while n % p == 0:
        p += 1
        while not is_prime(p):
            p += 1
    return p


def diagonal_slope(f: Multilinear, m: int) -> int:
    """``g(m) = sum_{|I|>=1} a_I m^(|I|-1)``, so ``f(m,...,m) = a_0 + m g(m)``."""
    return sum(c * m ** (len(v) - 1) for v, c in f.coeffs if v)


def multiplicative_witness(f: GenFn) -> Witness:
    """Diagonal witness ``(m, ..., m)`` for a multiplicative ``f``.

    ``a_0 = 1``: m = 2 (image is odd).  ``a_0`` outside {0, 1}: m is the
    least prime not dividing ``a_0`` (image is ``a_0`` mod m, non-zero).
    ``a_0 = 0``: the least m with ``g(m) != 1``.
    """
    if not is_multiplicative(f):
        raise NotApplicable("function does not have multiplicative structure")
    if _is_identity(f):
        raise NotApplicable("the unary identity is a self-loop")
    a0 = f.coefficient(())
    if a0 == 1:
        m = 2
    elif a0 != 0:
        m = smallest_prime_not_dividing(abs(a0))
    else:
        m = next((m for m in range(1, MULTIPLICATIVE_SEARCH_LIMIT + 1) if diagonal_slope(f, m) != 1), None)
        if m is None:
            raise NotApplicable(f"no m <= {MULTIPLICATIVE_SEARCH_LIMIT} with g(m) != 1")
    t = (m,) * f.arity
    return Witness(t, evaluate(f, t))
