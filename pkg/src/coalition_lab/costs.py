"""Agent and social costs under the Average, Maximum and Cutoff models.

All costs are exact.  Internally values are pre-scaled to integers by the
instance's common denominator, so the inner loops never touch Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .core import (UNHAPPY, CoalitionStructure, CostModel, CostValue, CostVariant,
                   GameInstance, Isolation)


def within_threshold(dist, lam) -> bool:
    """Friendship test for the Cutoff model; the threshold itself counts as a friend."""
    return dist <= lam


@dataclass(frozen=True)
class FriendEnemySplit:
    friends: frozenset[int]
    enemies: frozenset[int]


def distance(i: int, j: int, g: GameInstance) -> Fraction:
    return abs(g.values[i] - g.values[j])


def friends_enemies(i: int, coalition: Iterable[int], g: GameInstance) -> FriendEnemySplit:
    """Split ``coalition`` (without ``i``) into friends and enemies of agent ``i``."""
    if g.model is not CostVariant.CUTOFF:
        raise ValueError("friends and enemies are only defined for the cutoff model")
    lam = g.cost_model.lam
    friends, enemies = set(), set()
    for j in coalition:
        if j == i:
            continue
        (friends if within_threshold(distance(i, j, g), lam) else enemies).add(j)
    return FriendEnemySplit(frozenset(friends), frozenset(enemies))


def _isolated(g: GameInstance) -> CostValue:
    return Fraction(0) if g.isolation is Isolation.HIS else UNHAPPY


def scaled_cost(x: int, others: Sequence[int], g: GameInstance) -> CostValue:
    """Cost of an agent with scaled value ``x`` sharing a coalition with ``others``."""
    m = len(others)
    if m == 0:
        return _isolated(g)
    variant = g.model
    if variant is CostVariant.AVERAGE:
        return Fraction(sum(abs(x - o) for o in others), m * g.scale)
    if variant is CostVariant.MAXIMUM:
        return Fraction(max(abs(x - o) for o in others), g.scale)
    lam = g.scaled_lambda
    enemies = sum(1 for o in others if not within_threshold(abs(x - o), lam))
    return Fraction(enemies, m)


def cost_in(i: int, others: Iterable[int], g: GameInstance) -> CostValue:
    """Cost of agent ``i`` if its co-members were exactly ``others`` (``i`` skipped)."""
    v = g.scaled_values
    return scaled_cost(v[i], [v[j] for j in others if j != i], g)


def agent_cost(i: int, s: CoalitionStructure, g: GameInstance) -> CostValue:
    return cost_in(i, s.slots[s.assignment[i]], g)


def hypothetical_cost(i: int, target: int, s: CoalitionStructure, g: GameInstance) -> CostValue:
    """Cost of agent ``i`` after joining slot ``target``.

    The divisor is the target's occupancy before the move.
    """
    if target == s.assignment[i]:
        raise ValueError("target slot is the agent's current slot")
    return cost_in(i, s.slots[target], g)


def agent_costs(s: CoalitionStructure, g: GameInstance) -> list[CostValue]:
    return [agent_cost(i, s, g) for i in range(g.n)]


def block_cost(members: Sequence[int], g: GameInstance) -> CostValue:
    """Sum of the costs of all members of one coalition."""
    if not members:
        return Fraction(0)
    if len(members) == 1:
        return _isolated(g)
    v = g.scaled_values
    vals = sorted(v[i] for i in members)
    m = len(vals)
    variant = g.model
    if variant is CostVariant.AVERAGE:
        # sum over ordered pairs of |a-b|, via the sorted prefix trick
        pair_sum = sum((2 * idx - m + 1) * x for idx, x in enumerate(vals))
        return Fraction(2 * pair_sum, (m - 1) * g.scale)
    if variant is CostVariant.MAXIMUM:
        lo, hi = vals[0], vals[-1]
        return Fraction(sum(max(x - lo, hi - x) for x in vals), g.scale)
    lam = g.scaled_lambda
    enemies = 0
    for a in range(m):
        for b in range(a + 1, m):
            if not within_threshold(vals[b] - vals[a], lam):
                enemies += 2
    return Fraction(enemies, m - 1)


def social_cost(s: CoalitionStructure, g: GameInstance) -> CostValue:
    """Sum of all agent costs; UNHAPPY as soon as one agent is isolated under UIS."""
    total: CostValue = Fraction(0)
    for block in s.slots:
        total = total + block_cost(block, g)
    return total


# ---------------------------------------------------------------------------
# Cost functions over bare value multisets (used by the monotonicity checker)
# ---------------------------------------------------------------------------

ValueCost = Callable[[Fraction, Sequence[Fraction]], Fraction]


def value_cost(model: CostModel) -> ValueCost:
    """``f(x, others)``: cost of value ``x`` against the multiset ``others``.

    An empty ``others`` means isolation and costs 0.
    """
    variant = model.variant

    def f(x: Fraction, others: Sequence[Fraction]) -> Fraction:
        if not others:
            return Fraction(0)
        if variant is CostVariant.AVERAGE:
            return Fraction(sum(abs(x - o) for o in others)) / len(others)
        if variant is CostVariant.MAXIMUM:
            return Fraction(max(abs(x - o) for o in others))
        enemies = sum(1 for o in others if not within_threshold(abs(x - o), model.lam))
        return Fraction(enemies, len(others))

    f.__name__ = f"{variant.value}_cost"
    return f
