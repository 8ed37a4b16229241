"""Exhaustive social optima, greedy λ-block covers and the two-coalition
gap decomposition of Average social cost."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .core import (CoalitionStructure, CostValue, CostVariant, GameInstance,
                   PreconditionViolated, brace, canonical_form, format_cost, format_rational,
                   structure_to_dict)
from .costs import block_cost
from .enumeration import structures
from .equilibrium import is_sorted


class ModelMismatch(PreconditionViolated):
    code = "MODEL_MISMATCH"


def cost_evaluator(g: GameInstance) -> Callable[[CoalitionStructure], CostValue]:
    """Social cost with block costs memoized by value multiset (one cache per call)."""
    cache: dict[tuple, CostValue] = {}
    v = g.scaled_values

    def evaluate(s: CoalitionStructure) -> CostValue:
        total: CostValue = Fraction(0)
        for block in s.slots:
            if not block:
                continue
            key = tuple(sorted(v[i] for i in block))
            c = cache.get(key)
            if c is None:
                c = cache[key] = block_cost(block, g)
            total = total + c
        return total

    return evaluate


@dataclass(frozen=True)
class OptimumResult:
    optima: tuple[CoalitionStructure, ...]
    opt_cost: CostValue
    any_sorted: bool
    enumerated_count: int

    def to_dict(self, g: GameInstance) -> dict:
        return {
            "opt_cost": format_cost(self.opt_cost),
            "any_sorted": self.any_sorted,
            "enumerated_count": self.enumerated_count,
            "optima": [structure_to_dict(s, g) for s in self.optima],
        }


def brute_force_optimum(g: GameInstance, prune_symmetric: bool = False,
                        cap: int | None = None) -> OptimumResult:
    """All minimum-cost structures.

    With ``prune_symmetric`` structures that differ only by exchanging
    equal-valued agents are visited once, so ``optima`` holds one
    representative per value pattern.
    """
    evaluate = cost_evaluator(g)
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
    optima.sort(key=canonical_form)
    return OptimumResult(tuple(optima), best, any(is_sorted(s, g) for s in optima), count)


# ---------------------------------------------------------------------------
# λ-block covers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockCover:
    blocks: tuple[tuple[Fraction, Fraction], ...]
    """Closed intervals ``[start, start + λ]``."""
    k: int

    @property
    def count(self) -> int:
        return len(self.blocks)

    @property
    def nice(self) -> bool:
        return self.count <= self.k

    def to_dict(self) -> dict:
        return {"count": self.count, "nice": self.nice,
                "blocks": [[format_rational(a), format_rational(b)] for a, b in self.blocks]}


def lambda_block_cover(g: GameInstance) -> BlockCover:
    """Fewest intervals of length λ covering every value (left-to-right greedy)."""
    if g.model is not CostVariant.CUTOFF:
        raise ModelMismatch("λ-blocks need the cutoff model")
    lam = g.cost_model.lam
    blocks = []
    end = None
    for v in g.values:
        if end is None or v > end:
            end = v + lam
            blocks.append((v, end))
    return BlockCover(tuple(blocks), g.k)


# ---------------------------------------------------------------------------
# Gap decomposition for two Average coalitions
# ---------------------------------------------------------------------------

def alpha(i: int, delta: int, m: int, n: int) -> Fraction:
    """Weight of the ``i``-th gap (1-based) when ``delta`` of the first ``i``
    agents sit in the coalition of size ``m``."""
    return (Fraction(2 * delta * (m - delta), m - 1)
            + Fraction(2 * (i - delta) * (n - m - i + delta), n - m - 1))


@dataclass(frozen=True)
class AlphaDecomposition:
    m: int
    small_slot: int
    d: tuple[Fraction, ...]
    delta: tuple[int, ...]
    alpha: tuple[Fraction, ...]

    def total(self) -> Fraction:
        return sum((a * x for a, x in zip(self.alpha, self.d)), Fraction(0))

    def to_dict(self) -> dict:
        return {"m": self.m, "small_slot": self.small_slot + 1,
                "d": [format_rational(x) for x in self.d], "delta": list(self.delta),
                "alpha": [format_rational(a) for a in self.alpha],
                "total": format_rational(self.total())}


def _require_two_average(g: GameInstance) -> None:
    if g.model is not CostVariant.AVERAGE or g.k != 2:
        raise PreconditionViolated("needs the average model with two coalitions")


def alpha_decompose(s: CoalitionStructure, g: GameInstance) -> AlphaDecomposition:
    """Write the social cost as a weighted sum of consecutive value gaps.

    The smaller coalition (the lower slot on a tie) plays the counted role.
    """
    _require_two_average(g)
    sizes = s.occupancy()
    if min(sizes) < 2:
        raise PreconditionViolated("both coalitions need at least two agents")
    small = 0 if sizes[0] <= sizes[1] else 1
    m, n = sizes[small], g.n
    d, deltas, alphas = [], [], []
    inside = 0
    for i in range(1, n):
        inside += s.assignment[i - 1] == small
        d.append(g.values[i] - g.values[i - 1])
        deltas.append(inside)
        alphas.append(alpha(i, inside, m, n))
    return AlphaDecomposition(m, small, tuple(d), tuple(deltas), tuple(alphas))


def edge_structure(n: int, m: int, left: bool) -> CoalitionStructure:
    """Sorted two-coalition structure whose size-``m`` coalition (slot 0) holds
    the first (``left``) or last ``m`` agents."""
    members = range(m) if left else range(n - m, n)
    assignment = [1] * n
    for i in members:
        assignment[i] = 0
    return CoalitionStructure(tuple(assignment), 2)


@dataclass
class StructuralReport:
    instance_values: tuple[Fraction, ...]
    opt_cost: CostValue
    optima_checked: int
    isolated_violations: list[str]
    edge_violations: list[str]
    middle_run_violations: list[str]
    skipped: list[str]
    all_optima_unsorted: bool

    @property
    def violations(self) -> int:
        return (len(self.isolated_violations) + len(self.edge_violations)
                + len(self.middle_run_violations))

    def to_dict(self) -> dict:
        return {
            "values": [format_rational(v) for v in self.instance_values],
            "opt_cost": format_cost(self.opt_cost),
            "optima_checked": self.optima_checked,
            "isolated_agent": self.isolated_violations,
            "edge_dominance": self.edge_violations,
            "middle_run": self.middle_run_violations,
            "skipped": self.skipped,
            "all_optima_unsorted": self.all_optima_unsorted,
        }


def isolated_agents(s: CoalitionStructure) -> list[int]:
    """Interior agents whose both index-neighbours sit in another slot."""
    a = s.assignment
    return [i for i in range(1, len(a) - 1) if a[i - 1] != a[i] and a[i + 1] != a[i]]


def structural_optimum_checks(g: GameInstance, cap: int | None = None) -> StructuralReport:
    """Test known shape properties of two-coalition Average optima.

    * no optimum has an isolated interior agent (distinct values only: with
      ties, relabeling equal agents produces spurious isolation);
    * a small coalition within the lower (upper) half is matched by the
      sorted structure taking the first (last) ``m`` agents;
    * a small coalition forming a consecutive run across the middle is beaten
      by one of those two sorted structures (distinct values only).

    Optima with a singleton coalition are outside the gap decomposition and
    are only checked for isolated agents.
    """
    _require_two_average(g)
    opt = brute_force_optimum(g, cap=cap)
    evaluate = cost_evaluator(g)
    n = g.n
    half = n // 2
    distinct = len(set(g.values)) == n
    iso, edge, mid, skipped = [], [], [], []
    for s in opt.optima:
        label = brace(s, g)
        sizes = s.occupancy()
        if distinct:
            bad = isolated_agents(s)
            if bad:
                iso.append(f"{label}: agents {[i + 1 for i in bad]}")
        if min(sizes) < 2:
            skipped.append(f"{label}: singleton coalition")
            continue
        small = 0 if sizes[0] <= sizes[1] else 1
        m = sizes[small]
        members = [i for i in range(n) if s.assignment[i] == small]
        cost = opt.opt_cost
        left_cost = evaluate(edge_structure(n, m, True))
        right_cost = evaluate(edge_structure(n, m, False))
        if members[-1] < half and left_cost > cost:
            edge.append(f"{label}: left-packed structure costs {format_cost(left_cost)}")
        if members[0] >= n - half and right_cost > cost:
            edge.append(f"{label}: right-packed structure costs {format_cost(right_cost)}")
        run = members[-1] - members[0] + 1 == m
        if distinct and run and members[0] < half <= members[-1]:
            if not min(left_cost, right_cost) < cost:
                mid.append(f"{label}: edge structures cost {format_cost(left_cost)}, "
                           f"{format_cost(right_cost)}")
    unsorted = bool(opt.optima) and not any(is_sorted(s, g) for s in opt.optima)
    return StructuralReport(g.values, opt.opt_cost, len(opt.optima), iso, edge, mid,
                            skipped, unsorted)
