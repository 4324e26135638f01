"""Generating functions, base sets and the bounded universe they live in.

Everything here is an immutable value.  Generating functions evaluate with
exact Python integers; the closure engine additionally uses a vectorised
int64 path when :meth:`magnitude` proves the values cannot overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

import numpy as np

# Largest magnitude the int64 fast path accepts (leaves headroom for sums).
INT64_SAFE = 2**62


class ModelError(ValueError):
    """Malformed generating function, base set or bound."""


class EmptyBaseError(ModelError):
    """The base set has no element inside the working cap."""


# --------------------------------------------------------------------------
# generating functions


def _normalize_coeffs(arity, coeffs):
    items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
    table: dict[tuple[int, ...], int] = {}
    for vars_, c in items:
        vars_ = tuple(vars_)
        if len(set(vars_)) != len(vars_):
            raise ModelError(f"repeated variable in monomial {vars_}")
        for j in vars_:
            if not isinstance(j, int) or not 1 <= j <= arity:
                raise ModelError(f"variable index {j} outside 1..{arity}")
        if not isinstance(c, int):
            raise ModelError(f"coefficient {c!r} is not an integer")
        key = tuple(sorted(vars_))
        table[key] = table.get(key, 0) + c
    return tuple(sorted(((k, c) for k, c in table.items() if c != 0),
                        key=lambda kc: (len(kc[0]), kc[0])))


@dataclass(frozen=True)
class Multilinear:
    """``sum_I a_I * prod_{j in I} x_j`` over subsets ``I`` of ``1..arity``.

    ``coeffs`` may be given as a mapping or as ``(vars, c)`` pairs; it is
    stored normalised (sorted, merged, zeros dropped) so equal polynomials
    compare equal.
    """

    arity: int
    coeffs: tuple[tuple[tuple[int, ...], int], ...] = ()

    def __post_init__(self):
        if not isinstance(self.arity, int) or self.arity < 1:
            raise ModelError(f"arity must be >= 1, got {self.arity!r}")
        object.__setattr__(self, "coeffs", _normalize_coeffs(self.arity, self.coeffs))

    def coefficient(self, vars_: Iterable[int] = ()) -> int:
        key = tuple(sorted(vars_))
        for k, c in self.coeffs:
            if k == key:
                return c
        return 0

    def __call__(self, *t: int) -> int:
        return evaluate(self, t)

    def _eval(self, t):
        total = 0
        for vars_, c in self.coeffs:
            term = c
            for j in vars_:
                term *= t[j - 1]
            total += term
        return total

    def _eval_columns(self, cols):
        out = np.zeros(len(cols[0]), dtype=cols[0].dtype)
        for vars_, c in self.coeffs:
            term = np.full(len(cols[0]), c, dtype=cols[0].dtype)
            for j in vars_:
                term = term * cols[j - 1]
            out = out + term
        return out

    def magnitude(self, maxval: int) -> int:
        return sum(abs(c) * maxval ** len(v) for v, c in self.coeffs)

    def __str__(self):
        return _poly_str(self)


def affine(const: int, *linear: int) -> Multilinear:
    """``const + linear[0]*x1 + linear[1]*x2 + ...``."""
    coeffs = [((), const)] + [((i + 1,), a) for i, a in enumerate(linear)]
    return Multilinear(max(1, len(linear)), coeffs)


def constant(value: int, arity: int = 1) -> Multilinear:
    return Multilinear(arity, [((), value)])


@dataclass(frozen=True)
class Case:
    coord: int
    value: int
    body: Multilinear


@dataclass(frozen=True)
class Piecewise:
    """First case whose guard ``x_coord == value`` holds wins, else ``default``."""

    arity: int
    cases: tuple[Case, ...]
    default: Multilinear

    def __post_init__(self):
        if not isinstance(self.arity, int) or self.arity < 1:
            raise ModelError(f"arity must be >= 1, got {self.arity!r}")
        object.__setattr__(self, "cases", tuple(self.cases))
        seen = set()
        for case in self.cases:
            if not 1 <= case.coord <= self.arity:
                raise ModelError(f"guard coordinate {case.coord} outside 1..{self.arity}")
            if (case.coord, case.value) in seen:
                raise ModelError(f"duplicate guard x{case.coord} = {case.value}")
            seen.add((case.coord, case.value))
            if case.body.arity != self.arity:
                raise ModelError("case body arity differs from the function arity")
        if self.default.arity != self.arity:
            raise ModelError("default body arity differs from the function arity")

    def __call__(self, *t: int) -> int:
        return evaluate(self, t)

    def _eval(self, t):
        for case in self.cases:
            if t[case.coord - 1] == case.value:
                return case.body._eval(t)
        return self.default._eval(t)

    def _eval_columns(self, cols):
        out = self.default._eval_columns(cols)
        # reverse so that earlier cases overwrite later ones
        for case in reversed(self.cases):
            hit = cols[case.coord - 1] == case.value
            if hit.any():
                out = np.where(hit, case.body._eval_columns(cols), out)
        return out

    def magnitude(self, maxval: int) -> int:
        return max([self.default.magnitude(maxval)] + [c.body.magnitude(maxval) for c in self.cases])

    def __str__(self):
        parts = [f"x{c.coord}={c.value} -> {c.body}" for c in self.cases]
        parts.append(f"else -> {self.default}")
        return "piecewise(" + "; ".join(parts) + ")"


@dataclass(frozen=True)
class MinCompose:
    """A unary ``inner`` applied to the smallest (or largest) coordinate."""

    inner: Union[Multilinear, Piecewise]
    arity: int
    extremum: str = "min"

    def __post_init__(self):
        if not isinstance(self.arity, int) or self.arity < 1:
            raise ModelError(f"arity must be >= 1, got {self.arity!r}")
        if self.inner.arity != 1:
            raise ModelError("min_compose needs a unary inner function")
        if self.extremum not in ("min", "max"):
            raise ModelError(f"extremum must be 'min' or 'max', got {self.extremum!r}")

    def __call__(self, *t: int) -> int:
        return evaluate(self, t)

    def _eval(self, t):
        pick = min(t) if self.extremum == "min" else max(t)
        return self.inner._eval((pick,))

    def _eval_columns(self, cols):
        reduce = np.minimum.reduce if self.extremum == "min" else np.maximum.reduce
        return self.inner._eval_columns([reduce(cols)])

    def magnitude(self, maxval: int) -> int:
        return self.inner.magnitude(maxval)

    def __str__(self):
        args = ",".join(f"x{j}" for j in range(1, self.arity + 1))
        return f"({self.inner})[x1 := {self.extremum}({args})]"


GenFn = Union[Multilinear, Piecewise, MinCompose]


def evaluate(f: GenFn, t) -> int:
    """Exact value of ``f`` at the tuple ``t`` of naturals."""
    t = tuple(t)
    if len(t) != f.arity:
        raise ModelError(f"arity mismatch: function takes {f.arity} arguments, got {len(t)}")
    for x in t:
        if not isinstance(x, (int, np.integer)) or x < 1:
            raise ModelError(f"coordinates must be naturals >= 1, got {x!r}")
    return int(f._eval(tuple(int(x) for x in t)))


def max_identity(arity: int) -> MinCompose:
    """``max(x_1, ..., x_k)``, the standard non-unary self-loop."""
    return MinCompose(affine(0, 1), arity, extremum="max")


def _poly_str(p: Multilinear) -> str:
    if not p.coeffs:
        return "0"
    out = []
    for vars_, c in p.coeffs:
        mono = "*".join(f"x{j}" for j in vars_)
        if not mono:
            piece = str(abs(c))
        elif abs(c) == 1:
            piece = mono
        else:
            piece = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        out.append((sign, piece))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, piece in out[1:]:
        text += f" {sign} {piece}"
    return text


# --------------------------------------------------------------------------
# base sets


def _strictly_sorted_naturals(values, what):
    values = tuple(values)
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise ModelError(f"{what} must be naturals >= 1, got {v!r}")
    if any(a >= b for a, b in zip(values, values[1:])):
        raise ModelError(f"{what} must be strictly increasing")
    return values


class _SetSpec:
    def materialize(self, cap: int) -> frozenset[int]:
        """``{x in [1, cap] : x in self}``; raises if that is empty."""
        if cap < 1:
            raise ModelError(f"cap must be >= 1, got {cap}")
        out = self.elements_upto(cap)
        if not out:
            raise EmptyBaseError(f"{self} has no element in [1, {cap}]")
        return out

    def elements_upto(self, cap: int) -> frozenset[int]:
        return frozenset(x for x in range(1, cap + 1) if self.contains(x))

    def smallest(self, count: int, limit: int = 10**6) -> tuple[int, ...]:
        """The ``count`` smallest members (fewer if the set runs out)."""
        found = []
        x = 1
        while len(found) < count and x <= limit:
            if self.contains(x):
                found.append(x)
            x += 1
            if self.is_finite and x > self.upper:
                break
        return tuple(found)


@dataclass(frozen=True)
class FiniteSet(_SetSpec):
    elements: tuple[int, ...]

    def __post_init__(self):
        els = _strictly_sorted_naturals(self.elements, "finite set elements")
        if not els:
            raise ModelError("finite base set must be non-empty")
        object.__setattr__(self, "elements", els)

    is_finite = True

    @property
    def upper(self):
        return self.elements[-1]

    def contains(self, x: int) -> bool:
        return x in self.elements

    def elements_upto(self, cap):
        return frozenset(x for x in self.elements if x <= cap)

    def __str__(self):
        return "{" + ", ".join(map(str, self.elements)) + "}"


@dataclass(frozen=True)
class Cofinite(_SetSpec):
    excluded: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "excluded", _strictly_sorted_naturals(self.excluded, "excluded elements"))

    is_finite = False

    def contains(self, x: int) -> bool:
        return x >= 1 and x not in self.excluded

    def __str__(self):
        if not self.excluded:
            return "N"
        return "N \\ {" + ", ".join(map(str, self.excluded)) + "}"


@dataclass(frozen=True)
class Primes(_SetSpec):
    include_one: bool = False

    is_finite = False

    def contains(self, x: int) -> bool:
        return is_prime(x) or (self.include_one and x == 1)

    def elements_upto(self, cap):
        out = set(primes_upto(cap))
        if self.include_one and cap >= 1:
            out.add(1)
        return frozenset(out)

    def __str__(self):
        return "P u {1}" if self.include_one else "P"


@dataclass(frozen=True)
class Interval(_SetSpec):
    lo: int
    hi: int

    def __post_init__(self):
        if not (isinstance(self.lo, int) and isinstance(self.hi, int)) or not 1 <= self.lo <= self.hi:
            raise ModelError(f"interval needs 1 <= lo <= hi, got [{self.lo}, {self.hi}]")

    is_finite = True

    @property
    def upper(self):
        return self.hi

    def contains(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def elements_upto(self, cap):
        return frozenset(range(self.lo, min(self.hi, cap) + 1))

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


SetSpec = Union[FiniteSet, Cofinite, Primes, Interval]


def materialize(s: SetSpec, cap: int) -> frozenset[int]:
    return s.materialize(cap)


# --------------------------------------------------------------------------
# number theory helpers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def prime_omega(n: int) -> int:
    """Number of prime factors of ``n`` counted with multiplicity."""
    if n < 1:
        raise ValueError(f"prime_omega needs n >= 1, got {n}")
    count, d = 0, 2
    while d * d <= n:
        while n % d == 0:
            n //= d
            count += 1
        d += 1
    return count + (1 if n > 1 else 0)


# --------------------------------------------------------------------------
# models, bounds, step counts


@dataclass(frozen=True)
class InductionModel:
    base: SetSpec
    gen: GenFn
    name: str | None = None
    note: str | None = None

    def __str__(self):
        return f"<{self.base}, {self.gen}>"


@dataclass(frozen=True)
class Bound:
    """Universe of interest ``[1, N]``, materialisation cap ``M`` and
    the maximum number of fixpoint rounds.  ``M`` defaults to ``2N + 16``."""

    N: int = 60
    M: int | None = None
    cutoff: int = 64

    def __post_init__(self):
        if self.M is None:
            object.__setattr__(self, "M", 2 * self.N + 16)
        if not 1 <= self.N <= self.M:
            raise ModelError(f"bound needs 1 <= N <= M, got N={self.N}, M={self.M}")
        if self.cutoff < 1:
            raise ModelError(f"cutoff must be >= 1, got {self.cutoff}")


@dataclass(frozen=True, order=True)
class Exactly:
    """A decided step count."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ModelError("step counts start at 1")

    is_finite = True

    def __str__(self):
        return f"finite({self.n})"


@dataclass(frozen=True)
class AtLeast:
    """No empty difference set up to ``cutoff`` rounds: presumed aleph-0."""

    cutoff: int

    is_finite = False

    def __str__(self):
        return f"at_least({self.cutoff})"


ExtNat = Union[Exactly, AtLeast]

PRESUMED_OMEGA = "step counts that reached the cutoff are presumed equal to aleph-0"


def steps_le(a: ExtNat, b: ExtNat) -> tuple[bool | None, str | None]:
    """Three-valued ``a <= b``; returns ``(answer, assumption)``.

    ``answer`` is None when the bound cannot decide.  The assumption is set
    when the answer relies on treating two cut-off counts as equal.
    """
    if isinstance(a, Exactly) and isinstance(b, Exactly):
        return a.n <= b.n, None
    if isinstance(a, Exactly):
        # b > b.cutoff is known
        return (True, None) if a.n <= b.cutoff else (None, None)
    if isinstance(b, Exactly):
        return (False, None) if b.n <= a.cutoff else (None, None)
    return True, PRESUMED_OMEGA


def steps_eq(a: ExtNat, b: ExtNat) -> tuple[bool | None, str | None]:
    ab, note1 = steps_le(a, b)
    ba, note2 = steps_le(b, a)
    if ab is False or ba is False:
        return False, None
    if ab is None or ba is None:
        return None, None
    return True, note1 or note2
