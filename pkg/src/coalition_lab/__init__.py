"""Exact analysis of one-dimensional distance-based coalition formation games.

Agents are points on the line; an agent's cost in a coalition is the average
or maximum distance to its co-members, or the share of co-members beyond a
threshold.  Everything is computed with :class:`fractions.Fraction`.
"""

from .analysis import Concept, EquilibriumCensus, Ratio, RatioKind, census, poa, pos, ratio
from .core import (AVERAGE, MAXIMUM, UNHAPPY, CoalitionLabError, CoalitionStructure, CostModel,
                   CostVariant, GameInstance, InvalidInstance, InvalidStructure, Isolation,
                   PreconditionViolated, StateSpaceTooLarge, brace, canonical_form,
                   make_instance, structure_from_values, validate_instance, value_form)
from .costs import agent_cost, agent_costs, social_cost
from .dynamics import (DynamicsPolicy, Move, MoveNotImproving, PolicyKind, ScriptStep, Verdict,
                       improving_jumps, improving_swaps, potential, run_dynamics, verify_fip)
from .equilibrium import (construct_sorted_pne, is_jump_stable, is_sorted, is_stable,
                          is_swap_stable, verify_monotone)
from .optimum import (alpha_decompose, brute_force_optimum, lambda_block_cover,
                      structural_optimum_checks)

__all__ = [
    "AVERAGE", "MAXIMUM", "UNHAPPY", "CoalitionLabError", "CoalitionStructure", "Concept",
    "CostModel", "CostVariant", "DynamicsPolicy", "EquilibriumCensus", "GameInstance",
    "InvalidInstance", "InvalidStructure", "Isolation", "Move", "MoveNotImproving",
    "PolicyKind", "PreconditionViolated", "Ratio", "RatioKind", "ScriptStep",
    "StateSpaceTooLarge", "Verdict", "agent_cost", "agent_costs", "alpha_decompose", "brace",
    "brute_force_optimum", "canonical_form", "census", "construct_sorted_pne",
    "improving_jumps", "improving_swaps", "is_jump_stable", "is_sorted", "is_stable",
    "is_swap_stable", "lambda_block_cover", "make_instance", "poa", "pos", "potential",
    "ratio", "run_dynamics", "social_cost", "structural_optimum_checks",
    "structure_from_values", "validate_instance", "value_form", "verify_fip",
    "verify_monotone",
]
