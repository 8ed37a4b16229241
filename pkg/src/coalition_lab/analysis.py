"""Equilibrium census with per-instance Price of Anarchy and Price of Stability."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import (UNHAPPY, CoalitionStructure, CostValue, GameInstance, PreconditionViolated,
                   brace, canonical_form, format_cost, format_rational, structure_to_dict)
from .enumeration import structures
from .equilibrium import is_stable
from .optimum import cost_evaluator


class Concept(enum.Enum):
    JUMP = "jump"
    SWAP = "swap"


@dataclass(frozen=True)
class EquilibriumCensus:
    equilibria: tuple[tuple[CoalitionStructure, CostValue], ...]
    optima: tuple[CoalitionStructure, ...]
    opt_cost: CostValue
    enumerated_count: int

    @property
    def worst_cost(self) -> CostValue | None:
        return max((c for _, c in self.equilibria), default=None)

    @property
    def best_cost(self) -> CostValue | None:
        return min((c for _, c in self.equilibria), default=None)

    def is_equilibrium(self, s: CoalitionStructure) -> bool:
        key = canonical_form(s)
        return any(canonical_form(e) == key for e, _ in self.equilibria)

    def to_dict(self, g: GameInstance) -> dict:
        return {
            "enumerated_count": self.enumerated_count,
            "opt_cost": format_cost(self.opt_cost),
            "optima": [brace(s, g) for s in self.optima],
            "equilibrium_count": len(self.equilibria),
            "worst_cost": None if self.worst_cost is None else format_cost(self.worst_cost),
            "best_cost": None if self.best_cost is None else format_cost(self.best_cost),
            "equilibria": [dict(structure_to_dict(s, g), cost=format_cost(c))
                           for s, c in self.equilibria],
        }


def census(g: GameInstance, concept: Concept | None = None, prune_symmetric: bool = False,
           cap: int | None = None) -> EquilibriumCensus:
    """Classify every structure of ``g``: cost, stability and the optimum.

    The stability notion follows the game: swaps when sizes are fixed, jumps
    otherwise.  With ``prune_symmetric`` one structure per value pattern is kept.
    """
    expected = Concept.SWAP if g.is_swap else Concept.JUMP
    if concept is not None and concept is not expected:
        raise PreconditionViolated(f"{concept.value} stability does not fit a "
                                   f"{expected.value} game")
    evaluate = cost_evaluator(g)
    eqs = []
    best: CostValue | None = None
    optima: list[CoalitionStructure] = []
    count = 0
    for s in structures(g, prune_symmetric, cap):
        count += 1
        c = evaluate(s)
        if best is None or c < best:
            best, optima = c, [s]
        elif c == best:
            optima.append(s)
        if is_stable(s, g):
            eqs.append((s, c))
    return EquilibriumCensus(tuple(eqs), tuple(optima), best, count)


class RatioKind(enum.Enum):
    FINITE = "finite"
    UNBOUNDED = "unbounded"
    UNDEFINED_ALL_ZERO = "undefined_all_zero"


@dataclass(frozen=True)
class Ratio:
    kind: RatioKind
    value: Fraction | None = None

    def __str__(self) -> str:
        if self.kind is RatioKind.UNBOUNDED:
            return "unbounded"
        if self.kind is RatioKind.UNDEFINED_ALL_ZERO:
            return "1"
        return format_rational(self.value)

    @property
    def as_number(self) -> Fraction | None:
        """Finite value, with the all-zero case counted as 1; ``None`` when unbounded."""
        if self.kind is RatioKind.UNBOUNDED:
            return None
        return Fraction(1) if self.kind is RatioKind.UNDEFINED_ALL_ZERO else self.value


def ratio(eq_cost: CostValue, opt_cost: CostValue) -> Ratio:
    if opt_cost is UNHAPPY:
        raise PreconditionViolated("every structure leaves some agent unhappy")
    if eq_cost is UNHAPPY:
        return Ratio(RatioKind.UNBOUNDED)
    if opt_cost == 0:
        return Ratio(RatioKind.UNBOUNDED) if eq_cost > 0 else Ratio(RatioKind.UNDEFINED_ALL_ZERO)
    return Ratio(RatioKind.FINITE, eq_cost / opt_cost)


def _need_equilibria(c: EquilibriumCensus) -> None:
    if not c.equilibria:
        raise PreconditionViolated("the instance has no equilibrium", "NO_EQUILIBRIUM")


def poa(c: EquilibriumCensus) -> Ratio:
    _need_equilibria(c)
    return ratio(c.worst_cost, c.opt_cost)


def pos(c: EquilibriumCensus) -> Ratio:
    _need_equilibria(c)
    return ratio(c.best_cost, c.opt_cost)
