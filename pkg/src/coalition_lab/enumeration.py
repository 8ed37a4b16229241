"""Enumeration of coalition structures up to slot relabeling.

``set_partitions`` walks restricted-growth strings, one structure per set
partition.  ``value_partitions`` additionally collapses structures that differ
only by permuting equal-valued agents, which is what makes instances with many
repeated values tractable.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import groupby
from typing import Iterator, Sequence

from .core import CoalitionStructure, GameInstance, StateSpaceTooLarge

DEFAULT_CAP = 14


def default_cap() -> int:
    """Largest ``n`` accepted by brute force; ``COALITION_LAB_CAP`` overrides it."""
    raw = os.environ.get("COALITION_LAB_CAP")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_CAP


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def count_partitions(n: int, k: int, exact: bool = False) -> int:
    if exact:
        return stirling2(n, k)
    return sum(stirling2(n, j) for j in range(1, k + 1))


def set_partitions(n: int, k: int, exact: bool = False) -> Iterator[tuple[int, ...]]:
    """Restricted-growth strings of length ``n`` with at most (or exactly) ``k`` blocks."""
    a = [0] * n

    def rec(i: int, used: int):
        if i == n:
            if not exact or used == k:
                yield tuple(a)
            return
        if exact and k - used > n - i:
            return
        for b in range(min(used + 1, k)):
            a[i] = b
            yield from rec(i + 1, used if b < used else used + 1)

    if n == 0:
        return
    a[0] = 0
    yield from rec(1, 1)


def _bounded_compositions(total: int, bounds: Sequence[int | None]) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into ``len(bounds)`` parts; ``bounds[i]`` caps part ``i``
    by the previous part when set (the marker is the index of the slot it must not exceed)."""
    k = len(bounds)
    parts = [0] * k

    def rec(i: int, left: int):
        if i == k - 1:
            cap = parts[bounds[i]] if bounds[i] is not None else left
            if left <= cap:
                parts[i] = left
                yield tuple(parts)
            return
        cap = parts[bounds[i]] if bounds[i] is not None else left
        for c in range(min(cap, left), -1, -1):
            parts[i] = c
            yield from rec(i + 1, left - c)

    yield from rec(0, total)


def value_partitions(values: Sequence, k: int, exact: bool = False) -> Iterator[tuple[int, ...]]:
    """One representative assignment per structure up to slot relabeling and
    permutation of equal-valued agents.  ``values`` must be sorted."""
    groups = [len(list(grp)) for _, grp in groupby(values)]
    starts = [sum(groups[:j]) for j in range(len(groups))]
    n = len(values)

    def rec(j: int, vectors: list[tuple[int, ...]]):
        if j == len(groups):
            if exact and any(not any(vec) for vec in vectors):
                return
            a = [0] * n
            for g_idx, start in enumerate(starts):
                pos = start
                for slot, vec in enumerate(vectors):
                    for _ in range(vec[g_idx]):
                        a[pos] = slot
                        pos += 1
            yield tuple(a)
            return
        bounds = [None] + [s - 1 if vectors[s] == vectors[s - 1] else None for s in range(1, k)]
        for comp in _bounded_compositions(groups[j], bounds):
            yield from rec(j + 1, [vec + (c,) for vec, c in zip(vectors, comp)])

    yield from rec(0, [() for _ in range(k)])


def structures(g: GameInstance, prune_symmetric: bool = False,
               cap: int | None = None) -> Iterator[CoalitionStructure]:
    """Every feasible structure of ``g`` once (up to relabeling).

    Jump games: partitions into at most ``k`` blocks, unused slots left empty.
    Swap games: partitions whose block sizes realize ``fixed_sizes``.
    """
    cap = default_cap() if cap is None else cap
    if g.n > cap:
        raise StateSpaceTooLarge(f"n={g.n} exceeds the enumeration cap {cap}")
    if g.is_swap:
        target = sorted(g.fixed_sizes)
        gen = (value_partitions(g.values, g.k, exact=True) if prune_symmetric
               else set_partitions(g.n, g.k, exact=True))
        for a in gen:
            s = CoalitionStructure(a, g.k)
            if sorted(s.occupancy()) == target:
                yield s
    else:
        gen = (value_partitions(g.values, g.k) if prune_symmetric
               else set_partitions(g.n, g.k))
        for a in gen:
            yield CoalitionStructure(a, g.k)
