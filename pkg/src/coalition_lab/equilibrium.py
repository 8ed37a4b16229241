"""Stability predicates, sortedness, the sorted-equilibrium construction and a
brute-force checker for the monotone cost-function axioms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .core import (CoalitionLabError, CoalitionStructure, CostModel, GameInstance, Isolation,
                   PreconditionViolated, format_rational)
from .costs import ValueCost, cost_in, value_cost
from .dynamics import Move, MoveKind, improving_jumps, improving_swaps


class NotSorted(CoalitionLabError, ValueError):
    code = "NOT_SORTED"


class EnumerationTooLarge(CoalitionLabError, RuntimeError):
    code = "ENUMERATION_TOO_LARGE"


class ConstructionInvariantBroken(CoalitionLabError, RuntimeError):
    """A right-improving move appeared during the left-move construction."""

    code = "RIGHT_MOVE_DURING_CONSTRUCTION"


def is_jump_stable(s: CoalitionStructure, g: GameInstance) -> bool:
    return not improving_jumps(s, g)


def is_swap_stable(s: CoalitionStructure, g: GameInstance) -> bool:
    return not improving_swaps(s, g)


def is_stable(s: CoalitionStructure, g: GameInstance) -> bool:
    return is_swap_stable(s, g) if g.is_swap else is_jump_stable(s, g)


# ---------------------------------------------------------------------------
# Sorted structures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SortedView:
    """Nonempty coalitions listed left to right by value."""

    blocks: tuple[tuple[int, ...], ...]
    slot_of_block: tuple[int, ...]
    boundaries: tuple[int, ...]
    """Cut positions: block ``b`` ends after ``boundaries[b]`` agents of the value order."""

    def leftmost(self, b: int, g: GameInstance) -> int:
        lo = min(g.values[i] for i in self.blocks[b])
        return min(i for i in self.blocks[b] if g.values[i] == lo)

    def rightmost(self, b: int, g: GameInstance) -> int:
        hi = max(g.values[i] for i in self.blocks[b])
        return max(i for i in self.blocks[b] if g.values[i] == hi)


def is_sorted(s: CoalitionStructure, g: GameInstance) -> SortedView | None:
    """Return the left-to-right view if the coalitions occupy consecutive value
    ranges (touching only at shared end values), otherwise ``None``."""
    v = g.values
    entries = []
    for slot, members in enumerate(s.slots):
        if members:
            vals = [v[i] for i in members]
            entries.append((min(vals), max(vals), slot, members))
    entries.sort(key=lambda e: (e[0], e[1], e[2]))
    for left, right in zip(entries, entries[1:]):
        if left[1] > right[0]:
            return None
    cuts, total = [], 0
    for e in entries[:-1]:
        total += len(e[3])
        cuts.append(total)
    return SortedView(tuple(e[3] for e in entries), tuple(e[2] for e in entries), tuple(cuts))


def _extremal_moves(s: CoalitionStructure, g: GameInstance, direction: int) -> list[Move]:
    if g.is_swap:
        raise PreconditionViolated("extremal jumps are defined for jump games")
    view = is_sorted(s, g)
    if view is None:
        raise NotSorted("structure is not sorted")
    moves = []
    nb = len(view.blocks)
    for b in range(nb):
        t = b + direction
        if not 0 <= t < nb:
            continue
        agent = view.leftmost(b, g) if direction < 0 else view.rightmost(b, g)
        before = cost_in(agent, view.blocks[b], g)
        after = cost_in(agent, view.blocks[t], g)
        if after < before:
            moves.append(Move(MoveKind.JUMP, agent, view.slot_of_block[b],
                              view.slot_of_block[t], before, after))
    return moves


def left_improving_moves(s: CoalitionStructure, g: GameInstance) -> list[Move]:
    """Leftmost agent of a block moving into the block to its left, block order."""
    return _extremal_moves(s, g, -1)


def right_improving_moves(s: CoalitionStructure, g: GameInstance) -> list[Move]:
    """Rightmost agent of a block moving into the block to its right, block order."""
    return _extremal_moves(s, g, +1)


def right_heavy_start(g: GameInstance) -> CoalitionStructure:
    """The ``k-1`` lowest agents alone, everybody else together in the last slot."""
    assignment = [min(i, g.k - 1) for i in range(g.n)]
    return CoalitionStructure(tuple(assignment), g.k)


def construct_sorted_pne(g: GameInstance) -> tuple[CoalitionStructure, tuple[Move, ...]]:
    """Sorted jump equilibrium reached from the right-heavy start by left moves only.

    Among simultaneous left-improving moves the lowest block goes first.  After
    every move the structure is re-checked for right-improving moves, which a
    monotone cost model never produces.
    """
    if g.is_swap:
        raise PreconditionViolated("the construction applies to jump games")
    if g.isolation is not Isolation.HIS:
        raise PreconditionViolated("the construction needs happy-in-isolation agents")
    s = right_heavy_start(g)
    trace: list[Move] = []
    limit = g.k * g.n
    while True:
        moves = left_improving_moves(s, g)
        if not moves:
            return s, tuple(trace)
        if len(trace) >= limit:
            raise ConstructionInvariantBroken(f"no equilibrium after {limit} left moves")
        s = moves[0].apply(s)
        trace.append(moves[0])
        if right_improving_moves(s, g):
            raise ConstructionInvariantBroken(f"right-improving move after step {len(trace)}")


# ---------------------------------------------------------------------------
# Monotone cost-function axioms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonotonicityWitness:
    """A concrete configuration violating one axiom."""

    axiom: str
    C: tuple[Fraction, ...]
    D: tuple[Fraction, ...] = ()
    x: Fraction | None = None
    y: Fraction | None = None
    c: Fraction | None = None
    detail: str = ""

    def is_violation(self, f: ValueCost) -> bool:
        """Re-evaluate the configuration under ``f``."""
        C, D = list(self.C), list(self.D)
        if self.axiom == "i":
            return f(self.y, C) > f(self.x, C)
        if self.axiom == "ii":
            a, b, c = f(self.x, C), f(self.x, C + D), f(self.x, D)
            return not (a <= b <= c)
        c_cost_C = f(self.c, _without(C, self.c))
        if not c_cost_C > f(self.c, D):
            return False
        if max(C) <= min(D):
            r = max(C)
            return not f(r, _without(C, r)) > f(r, D)
        lo = min(C)
        return not f(lo, _without(C, lo)) > f(lo, D)

    def to_dict(self) -> dict:
        out = {"axiom": self.axiom, "C": [format_rational(v) for v in self.C]}
        if self.D:
            out["D"] = [format_rational(v) for v in self.D]
        for name in ("x", "y", "c"):
            val = getattr(self, name)
            if val is not None:
                out[name] = format_rational(val)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class MonotonicityReport:
    checked: dict[str, int]
    witnesses: dict[str, MonotonicityWitness | None]

    def passed(self, axiom: str) -> bool:
        return self.witnesses[axiom] is None

    @property
    def all_pass(self) -> bool:
        return all(w is None for w in self.witnesses.values())

    def to_dict(self) -> dict:
        return {
            f"axiom_{ax}": ({"status": "PASS", "checked": self.checked[ax]} if w is None else
                            {"status": "FAIL", "checked": self.checked[ax], "witness": w.to_dict()})
            for ax, w in self.witnesses.items()
        }


def _without(vals: list, v) -> list:
    out = list(vals)
    out.remove(v)
    return out


def _submultisets(distinct: Sequence[Fraction], mult: Sequence[int],
                  max_size: int) -> list[tuple[int, ...]]:
    out = []
    for counts in product(*(range(m + 1) for m in mult)):
        if 1 <= sum(counts) <= max_size:
            out.append(counts)
    return out


def _expand(distinct, counts) -> list[Fraction]:
    return [v for v, c in zip(distinct, counts) for _ in range(c)]


DEFAULT_MONOTONE_CAP = 5_000_000


def verify_monotone(model: CostModel | None, ground_values: Sequence,
                    max_coalition_size: int, cost: ValueCost | None = None,
                    cap: int = DEFAULT_MONOTONE_CAP) -> MonotonicityReport:
    """Check the three monotonicity axioms on every configuration drawn from
    ``ground_values`` (a multiset; coalitions use each value at most as often
    as it occurs).  ``cost`` overrides the model's cost function.

    Axiom (iii) is only checked for value-disjoint coalitions lying on one side
    of each other.  The first violation of each axiom is kept as a witness.
    """
    f = cost if cost is not None else value_cost(model)
    ground = sorted(Fraction(v) for v in ground_values)
    distinct = sorted(set(ground))
    mult = [ground.count(v) for v in distinct]
    subs = _submultisets(distinct, mult, max_coalition_size)
    work = len(subs) * len(subs) * max(len(distinct), 1) ** 2
    if work > cap:
        raise EnumerationTooLarge(f"about {work} configurations exceed the cap of {cap}")
    sets = [(counts, _expand(distinct, counts)) for counts in subs]
    checked = {"i": 0, "ii": 0, "iii": 0}
    witness: dict[str, MonotonicityWitness | None] = {"i": None, "ii": None, "iii": None}

    def room(counts, extra):
        return [m - c for m, c in zip(mult, counts)] if extra is None else \
            [m - c - e for m, c, e in zip(mult, counts, extra)]

    # (i): outsiders on the same side, the nearer one is no worse off
    for counts, C in sets:
        if witness["i"] is not None:
            break
        free = room(counts, None)
        lo, hi = C[0], C[-1]
        for xi, x in enumerate(distinct):
            if free[xi] < 1:
                continue
            for yi, y in enumerate(distinct):
                if free[yi] - (xi == yi) < 1:
                    continue
                if not (x <= y <= lo or hi <= y <= x):
                    continue
                checked["i"] += 1
                fy, fx = f(y, C), f(x, C)
                if fy > fx:
                    witness["i"] = MonotonicityWitness(
                        "i", tuple(C), x=x, y=y,
                        detail=f"cost(y,C)={format_rational(fy)} > cost(x,C)={format_rational(fx)}")
                    break
            if witness["i"] is not None:
                break

    # (ii): C between x and D, so joining D to C lands in between
    for (cc, C), (dc, D) in product(sets, sets):
        if witness["ii"] is not None:
            break
        free = room(cc, dc)
        if min(free) < 0:
            continue
        for xi, x in enumerate(distinct):
            if free[xi] < 1:
                continue
            if not (x <= C[0] <= C[-1] <= D[0] or D[-1] <= C[0] <= C[-1] <= x):
                continue
            checked["ii"] += 1
            a, b, c = f(x, C), f(x, sorted(C + D)), f(x, D)
            if not (a <= b <= c):
                witness["ii"] = MonotonicityWitness(
                    "ii", tuple(C), tuple(D), x=x,
                    detail=f"costs {format_rational(a)}, {format_rational(b)}, {format_rational(c)}")
                break

    # (iii): if some member prefers D, the member facing D prefers it too
    for (cc, C), (dc, D) in product(sets, sets):
        if witness["iii"] is not None:
            break
        if any(a and b for a, b in zip(cc, dc)) or min(room(cc, dc)) < 0:
            continue
        if C[-1] <= D[0]:
            ext = C[-1]
        elif D[-1] <= C[0]:
            ext = C[0]
        else:
            continue
        ext_gain = f(ext, _without(C, ext)) > f(ext, D)
        for c in sorted(set(C)):
            checked["iii"] += 1
            if f(c, _without(C, c)) > f(c, D) and not ext_gain:
                witness["iii"] = MonotonicityWitness(
                    "iii", tuple(C), tuple(D), c=c,
                    detail=f"member {format_rational(c)} gains by moving but extremal "
                           f"member {format_rational(ext)} does not")
                break
    return MonotonicityReport(checked, witness)
