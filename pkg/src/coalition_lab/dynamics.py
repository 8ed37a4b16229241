"""Improving jumps and swaps, move dynamics with cycle detection, potentials, FIP."""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (UNHAPPY, CanonicalKey, CoalitionLabError, CoalitionStructure, CostValue,
                   CostVariant, GameInstance, Isolation, PreconditionViolated,
                   StateSpaceTooLarge, canonical_form, format_cost, parse_cost)
from .costs import agent_cost, cost_in, social_cost
from .enumeration import count_partitions, default_cap, stirling2, structures


class MoveNotImproving(CoalitionLabError, ValueError):
    code = "SCRIPTED_MOVE_NOT_IMPROVING"


class MoveKind(enum.Enum):
    JUMP = "jump"
    SWAP = "swap"


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    mover: int
    source_slot: int
    target_slot: int
    cost_before: CostValue
    cost_after: CostValue
    partner: int | None = None
    partner_cost_before: CostValue | None = None
    partner_cost_after: CostValue | None = None

    def apply(self, s: CoalitionStructure) -> CoalitionStructure:
        if self.kind is MoveKind.JUMP:
            return s.jump(self.mover, self.target_slot)
        return s.swap(self.mover, self.partner)


MoveTrace = tuple[Move, ...]


def improving_jumps(s: CoalitionStructure, g: GameInstance) -> list[Move]:
    """All strictly improving jumps, ordered by (agent, target slot)."""
    if g.is_swap:
        raise PreconditionViolated("jumps are not moves of a swap game")
    slots = s.slots
    moves = []
    for i in range(g.n):
        src = s.assignment[i]
        before = cost_in(i, slots[src], g)
        if before == 0:
            continue
        for t in range(g.k):
            if t == src:
                continue
            after = cost_in(i, slots[t], g)
            if after < before:
                moves.append(Move(MoveKind.JUMP, i, src, t, before, after))
    return moves


def swap_move(a: int, b: int, s: CoalitionStructure, g: GameInstance) -> Move | None:
    """The swap of ``a`` and ``b`` if it strictly helps both, else ``None``."""
    if a > b:
        a, b = b, a
    sa, sb = s.assignment[a], s.assignment[b]
    slots = s.slots
    a_before = cost_in(a, slots[sa], g)
    a_after = cost_in(a, [j for j in slots[sb] if j != b], g)
    if not a_after < a_before:
        return None
    b_before = cost_in(b, slots[sb], g)
    b_after = cost_in(b, [j for j in slots[sa] if j != a], g)
    if not b_after < b_before:
        return None
    return Move(MoveKind.SWAP, a, sa, sb, a_before, a_after, b, b_before, b_after)


def improving_swaps(s: CoalitionStructure, g: GameInstance) -> list[Move]:
    """All pairs in different slots that both strictly gain, ordered by (lower, higher) index."""
    if not g.is_swap:
        raise PreconditionViolated("swaps are only defined for swap games")
    moves = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if s.assignment[a] != s.assignment[b]:
                m = swap_move(a, b, s, g)
                if m is not None:
                    moves.append(m)
    return moves


def improving_moves(s: CoalitionStructure, g: GameInstance) -> list[Move]:
    return improving_swaps(s, g) if g.is_swap else improving_jumps(s, g)


# ---------------------------------------------------------------------------
# Dynamics
# ---------------------------------------------------------------------------

class PolicyKind(enum.Enum):
    FIRST_IMPROVING = "first"
    BEST_RESPONSE = "best"
    SCRIPTED = "scripted"


@dataclass(frozen=True)
class ScriptStep:
    """A requested move: ``target`` for a jump, ``partner`` for a swap."""

    mover: int
    target: int | None = None
    partner: int | None = None


@dataclass(frozen=True)
class DynamicsPolicy:
    kind: PolicyKind = PolicyKind.FIRST_IMPROVING
    max_steps: int = 10_000
    script: tuple[ScriptStep, ...] = ()

    def __post_init__(self):
        if self.max_steps < 0:
            raise ValueError("max_steps must be non-negative")
        if self.kind is PolicyKind.SCRIPTED and not self.script:
            raise ValueError("a scripted policy needs a script")

    @classmethod
    def scripted(cls, steps: Iterable[ScriptStep], max_steps: int | None = None):
        steps = tuple(steps)
        return cls(PolicyKind.SCRIPTED, len(steps) if max_steps is None else max_steps, steps)


class Verdict(enum.Enum):
    CONVERGED = "converged"
    CYCLE_DETECTED = "cycle_detected"
    STEP_LIMIT = "step_limit"


@dataclass(frozen=True)
class DynamicsOutcome:
    terminal: CoalitionStructure
    trace: MoveTrace
    verdict: Verdict
    cycle_start: int | None = None
    """Number of moves made when the repeated state was first visited."""


def _best_response(moves: list[Move]) -> Move:
    mover = min(min(m.mover, m.partner) if m.partner is not None else m.mover for m in moves)
    own = [m for m in moves if m.mover == mover or m.partner == mover]

    def own_after(m: Move):
        return m.cost_after if m.mover == mover else m.partner_cost_after

    def tie_key(m: Move):
        target = m.target_slot if m.mover == mover else m.source_slot
        partner = m.partner if m.mover == mover else m.mover
        return (target, -1 if partner is None else partner)

    best = min(own_after(m) for m in own)
    return min((m for m in own if own_after(m) == best), key=tie_key)


def _scripted_move(step: ScriptStep, s: CoalitionStructure, g: GameInstance) -> Move:
    if g.is_swap:
        if step.partner is None:
            raise MoveNotImproving(f"swap step for agent {step.mover + 1} has no partner")
        a, b = sorted((step.mover, step.partner))
        m = None if s.assignment[a] == s.assignment[b] else swap_move(a, b, s, g)
        if m is None:
            raise MoveNotImproving(f"swap of agents {a + 1} and {b + 1} is not improving")
        return m
    if step.target is None:
        raise MoveNotImproving(f"jump step for agent {step.mover + 1} has no target slot")
    src = s.assignment[step.mover]
    if step.target == src:
        raise MoveNotImproving(f"agent {step.mover + 1} is already in slot {src + 1}")
    before = agent_cost(step.mover, s, g)
    after = cost_in(step.mover, s.slots[step.target], g)
    if not after < before:
        raise MoveNotImproving(
            f"jump of agent {step.mover + 1} to slot {step.target + 1} is not improving "
            f"({format_cost(before)} -> {format_cost(after)})")
    return Move(MoveKind.JUMP, step.mover, src, step.target, before, after)


def run_dynamics(s0: CoalitionStructure, g: GameInstance,
                 policy: DynamicsPolicy = DynamicsPolicy()) -> DynamicsOutcome:
    """Apply improving moves until convergence, a revisited state, or the step limit.

    States are compared by :func:`canonical_form`, so a cycle is reported as
    soon as a structure recurs up to slot relabeling.  A scripted run that
    exhausts its script without converging reports ``STEP_LIMIT``.
    """
    s = s0
    visited = {canonical_form(s): 0}
    trace: list[Move] = []
    while True:
        if policy.kind is PolicyKind.SCRIPTED:
            if len(trace) >= policy.max_steps or len(trace) >= len(policy.script):
                verdict = Verdict.STEP_LIMIT if improving_moves(s, g) else Verdict.CONVERGED
                return DynamicsOutcome(s, tuple(trace), verdict)
            move = _scripted_move(policy.script[len(trace)], s, g)
        else:
            moves = improving_moves(s, g)
            if not moves:
                return DynamicsOutcome(s, tuple(trace), Verdict.CONVERGED)
            if len(trace) >= policy.max_steps:
                return DynamicsOutcome(s, tuple(trace), Verdict.STEP_LIMIT)
            move = moves[0] if policy.kind is PolicyKind.FIRST_IMPROVING else _best_response(moves)
        s = move.apply(s)
        trace.append(move)
        key = canonical_form(s)
        if key in visited:
            return DynamicsOutcome(s, tuple(trace), Verdict.CYCLE_DETECTED, visited[key])
        visited[key] = len(trace)


# ---------------------------------------------------------------------------
# Potentials
# ---------------------------------------------------------------------------

class PotentialKind(enum.Enum):
    SOCIAL_COST = "social_cost"
    MAX_JUMP_LEX = "max_jump_lex"


@dataclass(frozen=True, order=True)
class LexPotential:
    """Compared lexicographically: occupied-slot count first (always 0 under HIS),
    then the non-increasingly sorted cost vector."""

    nonempty_count: int
    sorted_costs: tuple[Fraction, ...]


def potential(s: CoalitionStructure, g: GameInstance,
              which: PotentialKind = PotentialKind.SOCIAL_COST):
    if which is PotentialKind.SOCIAL_COST:
        return social_cost(s, g)
    if g.model is not CostVariant.MAXIMUM:
        raise PreconditionViolated("the lexicographic potential needs the maximum model",
                                   "KIND_MODEL_MISMATCH")
    costs = []
    for i in range(g.n):
        c = agent_cost(i, s, g)
        costs.append(Fraction(0) if c is UNHAPPY else c)
    count = s.nonempty_count() if g.isolation is Isolation.UIS else 0
    return LexPotential(count, tuple(sorted(costs, reverse=True)))


# ---------------------------------------------------------------------------
# Finite improvement property
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FipResult:
    holds: bool
    states: int
    edges: int
    cycle: tuple[CanonicalKey, ...] | None = None


DEFAULT_STATE_CAP = 250_000


def verify_fip(g: GameInstance, state_cap: int = DEFAULT_STATE_CAP) -> FipResult:
    """Build the graph of all structures and improving moves; look for a directed cycle."""
    if g.is_swap:
        total = stirling2(g.n, g.k)
    else:
        total = count_partitions(g.n, g.k)
    if total > state_cap:
        raise StateSpaceTooLarge(f"{total} states exceed the cap of {state_cap}")
    index: dict[CanonicalKey, int] = {}
    states: list[CoalitionStructure] = []
    for s in structures(g, cap=max(default_cap(), g.n)):
        index[canonical_form(s)] = len(states)
        states.append(s)
    succ: list[list[int]] = []
    edges = 0
    for s in states:
        out = sorted({index[canonical_form(m.apply(s))] for m in improving_moves(s, g)})
        succ.append(out)
        edges += len(out)

    color = [0] * len(states)  # 0 new, 1 on stack, 2 done
    for root in range(len(states)):
        if color[root]:
            continue
        stack = [(root, iter(succ[root]))]
        path = [root]
        color[root] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = 2
                stack.pop()
                path.pop()
            elif color[nxt] == 1:
                cyc = path[path.index(nxt):]
                keys = tuple(canonical_form(states[v]) for v in cyc)
                return FipResult(False, len(states), edges, keys)
            elif color[nxt] == 0:
                color[nxt] = 1
                stack.append((nxt, iter(succ[nxt])))
                path.append(nxt)
    return FipResult(True, len(states), edges)


# ---------------------------------------------------------------------------
# Trace serialization
# ---------------------------------------------------------------------------

TRACE_FIELDS = ["step", "mover", "partner", "source_slot", "target_slot",
                "cost_before", "cost_after", "partner_cost_before", "partner_cost_after"]


def trace_to_csv(trace: Sequence[Move]) -> str:
    """Agents and slots are written 1-based; costs as ``p/q`` strings."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TRACE_FIELDS)
    for step, m in enumerate(trace, 1):
        w.writerow([
            step, m.mover + 1, "" if m.partner is None else m.partner + 1,
            m.source_slot + 1, m.target_slot + 1,
            format_cost(m.cost_before), format_cost(m.cost_after),
            "" if m.partner_cost_before is None else format_cost(m.partner_cost_before),
            "" if m.partner_cost_after is None else format_cost(m.partner_cost_after),
        ])
    return buf.getvalue()


def trace_from_csv(text: str) -> list[Move]:
    moves = []
    for row in csv.DictReader(io.StringIO(text)):
        partner = int(row["partner"]) - 1 if row.get("partner") else None
        moves.append(Move(
            MoveKind.SWAP if partner is not None else MoveKind.JUMP,
            int(row["mover"]) - 1, int(row["source_slot"]) - 1, int(row["target_slot"]) - 1,
            parse_cost(row["cost_before"]), parse_cost(row["cost_after"]), partner,
            parse_cost(row["partner_cost_before"]) if row.get("partner_cost_before") else None,
            parse_cost(row["partner_cost_after"]) if row.get("partner_cost_after") else None,
        ))
    return moves


def script_from_moves(moves: Iterable[Move]) -> list[ScriptStep]:
    return [ScriptStep(m.mover, None if m.kind is MoveKind.SWAP else m.target_slot, m.partner)
            for m in moves]
