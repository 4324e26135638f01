"""Bounded closure computation for induction models.

All sets live inside ``[1, M]``: generated values outside that window are
dropped, the same way values outside the naturals are dropped in the
unbounded definition.  Consequently a bounded closure may under-approximate
the true one when elements above ``M`` would generate elements below ``N``;
every verdict carries that caveat.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import INT64_SAFE, AtLeast, Bound, Exactly, ExtNat, InductionModel

CAVEAT = ("bounded semantics: values outside [1, M] are discarded, so coverage of "
          "[1, N] is certified only relative to the cap M and the cutoff")

# Above this many tuples a cartesian block is split along its first axis.
_CHUNK = 1 << 20


@dataclass(frozen=True)
class Level:
    index: int
    power: frozenset[int]     # S^i(B)
    closure: frozenset[int]   # Cl_i
    new: frozenset[int]       # D_i  (D_0 is B by convention)


@dataclass(frozen=True)
class ClosureTrace:
    bound: Bound
    levels: tuple[Level, ...]
    l_table: dict[int, int]
    stabilized_at: ExtNat

    @property
    def base(self) -> frozenset[int]:
        return self.levels[0].power

    @property
    def closure(self) -> frozenset[int]:
        return self.levels[-1].closure

    def cl(self, i: int) -> frozenset[int]:
        """``Cl_i``; saturates at the last computed level."""
        return self.levels[min(i, len(self.levels) - 1)].closure

    def power(self, i: int) -> frozenset[int]:
        return self.levels[min(i, len(self.levels) - 1)].power

    def diff(self, i: int) -> frozenset[int]:
        return self.levels[i].new if i < len(self.levels) else frozenset()


@dataclass(frozen=True)
class NimVerdict:
    covered: bool
    missing: frozenset[int]
    caveat: str = CAVEAT


# --------------------------------------------------------------------------
# tuple enumeration


def _product_columns(sets: list[np.ndarray]) -> Iterator[list[np.ndarray]]:
    """Column arrays of the cartesian product, in lexicographic order."""
    if any(len(s) == 0 for s in sets):
        return
    size = 1
    for s in sets:
        size *= len(s)
    if size <= _CHUNK or len(sets) == 1:
        grids = np.meshgrid(*sets, indexing="ij")
        yield [g.ravel() for g in grids]
        return
    head, rest = sets[0], sets[1:]
    for v in head:
        for cols in _product_columns(rest):
            yield [np.full(len(cols[0]), v, dtype=cols[0].dtype)] + cols


def frontier_columns(arity: int, carrier, old, frontier, dtype=np.int64) -> Iterator[list[np.ndarray]]:
    """Tuples over ``carrier`` with at least one coordinate in ``frontier``.

    ``old`` must be ``carrier - frontier``.  The blocks are disjoint: block
    ``j`` has its first frontier coordinate at position ``j``.
    """
    as_arr = lambda s: np.array(sorted(s), dtype=dtype)
    c, o, f = as_arr(carrier), as_arr(old), as_arr(frontier)
    for j in range(arity):
        yield from _product_columns([o] * j + [f] + [c] * (arity - j - 1))


def _values(gen, cols, exact: bool):
    if not exact:
        return gen._eval_columns(cols)
    return np.array([gen._eval(tuple(int(v) for v in row)) for row in zip(*cols)], dtype=object)


def _is_int64_safe(gen, cap: int) -> bool:
    magnitude = getattr(gen, "magnitude", None)
    return magnitude is not None and magnitude(cap) < INT64_SAFE


def frontier_image(gen, carrier, old, frontier, cap: int) -> set[int]:
    """Values in ``[1, cap]`` of ``gen`` on tuples over ``carrier`` touching ``frontier``."""
    special = getattr(gen, "frontier_image", None)
    if special is not None:
        return {v for v in special(carrier, old, frontier) if 1 <= v <= cap}
    exact = not _is_int64_safe(gen, cap)
    dtype = object if exact else np.int64
    out: set[int] = set()
    for cols in frontier_columns(gen.arity, carrier, old, frontier, dtype):
        vals = _values(gen, cols, exact)
        keep = vals[(vals >= 1) & (vals <= cap)]
        out.update(int(v) for v in np.unique(keep))
    return out


def image(gen, carrier, cap: int) -> set[int]:
    """``S(carrier)`` clipped to ``[1, cap]``."""
    return frontier_image(gen, carrier, frozenset(), carrier, cap)


def canonical_tuples(gen, carrier, old, frontier, targets, cap: int) -> dict[int, tuple[int, ...]]:
    """Lexicographically least tuple over ``carrier`` reaching each target.

    Only tuples touching ``frontier`` are scanned, which is sufficient when
    every target is new at this level.
    """
    targets = frozenset(targets)
    if not targets:
        return {}
    exact = not _is_int64_safe(gen, cap)
    dtype = object if exact else np.int64
    target_arr = np.array(sorted(targets), dtype=dtype)
    best: dict[int, tuple[int, ...]] = {}
    for cols in frontier_columns(gen.arity, carrier, old, frontier, dtype):
        vals = _values(gen, cols, exact)
        hit = np.isin(vals, target_arr)
        if not hit.any():
            continue
        rows = np.stack([c[hit] for c in cols], axis=1)
        hv = vals[hit]
        for v in np.unique(hv):
            sel = rows[hv == v]
            order = np.lexsort(sel.T[::-1])
            cand = tuple(int(a) for a in sel[order[0]])
            v = int(v)
            if v not in best or cand < best[v]:
                best[v] = cand
    return best


# --------------------------------------------------------------------------
# closure trace


def closure_trace(model: InductionModel, bound: Bound) -> ClosureTrace:
    """Powers, closures and difference sets up to stabilisation or the cutoff.

    Semi-naive: for ``i >= 2`` only tuples touching ``D_{i-1}`` are
    evaluated, since the rest reproduce ``S^{i-1}``.
    """
    cap = bound.M
    base = model.base.materialize(cap)
    gen = model.gen
    levels = [Level(0, base, base, base)]
    l_table = {x: 0 for x in base}
    power: frozenset[int] = frozenset()
    cl, old, frontier = base, frozenset(), base
    stabilized: ExtNat = AtLeast(bound.cutoff)
    for i in range(1, bound.cutoff + 1):
        power = power | frontier_image(gen, cl, old, frontier, cap)
        new = power - cl
        old, cl = cl, cl | power
        levels.append(Level(i, power, cl, new))
        for x in new:
            l_table[x] = i
        if not new:
            stabilized = Exactly(i)
            break
        frontier = new
    return ClosureTrace(bound, tuple(levels), l_table, stabilized)


def step_count(model: InductionModel, bound: Bound) -> ExtNat:
    return closure_trace(model, bound).stabilized_at


def is_nim_bounded(model: InductionModel, bound: Bound, trace: ClosureTrace | None = None) -> NimVerdict:
    trace = trace or closure_trace(model, bound)
    missing = frozenset(range(1, bound.N + 1)) - trace.closure
    return NimVerdict(not missing, missing)


def minimal_closed_superset(model: InductionModel, bound: Bound) -> frozenset[int]:
    """Least ``G`` in ``[1, M]`` containing the base and closed under ``S``.

    Worklist fixpoint with exact scalar evaluation; each tuple over the
    final set is evaluated once, when its last coordinate is processed.
    Independent of :func:`closure_trace` and ignores the cutoff.
    """
    cap = bound.M
    gen = model.gen
    k = gen.arity
    found = set(model.base.materialize(cap))
    queue = sorted(found)
    done: list[int] = []
    while queue:
        y = queue.pop(0)
        done.append(y)
        earlier = [v for v in done if v != y]
        for j in range(k):
            pools = [earlier] * j + [[y]] + [done] * (k - j - 1)
            for t in itertools.product(*pools):
                v = gen(*t)
                if 1 <= v <= cap and v not in found:
                    found.add(v)
                    queue.append(v)
    return frozenset(found)


def exhaustive_g_oracle(model: InductionModel, tiny: Bound, max_cap: int = 14) -> bool:
    """Check by subset enumeration that the traced closure is the least
    closed superset of the base within ``[1, M]``."""
    cap = tiny.M
    if cap > max_cap:
        raise ValueError(f"exhaustive enumeration needs M <= {max_cap}, got {cap}")
    gen = model.gen
    bit = lambda x: 1 << (x - 1)
    rules = set()
    for t in itertools.product(range(1, cap + 1), repeat=gen.arity):
        v = gen(*t)
        if 1 <= v <= cap:
            req = 0
            for x in t:
                req |= bit(x)
            rules.add((req, bit(v)))
    base_mask = sum(bit(x) for x in model.base.materialize(cap))
    cl_mask = sum(bit(x) for x in closure_trace(model, tiny).closure)

    subsets = np.arange(1 << cap, dtype=np.int64)
    subsets = subsets[(subsets & base_mask) == base_mask]
    closed = np.ones(len(subsets), dtype=bool)
    for req, out in rules:
        closed &= ~(((subsets & req) == req) & ((subsets & out) == 0))
    every_closed_contains_cl = bool(np.all((subsets[closed] & cl_mask) == cl_mask))
    cl_is_closed = all((cl_mask & req) != req or (cl_mask & out) for req, out in rules)
    return every_closed_contains_cl and cl_is_closed and (cl_mask & base_mask) == base_mask
