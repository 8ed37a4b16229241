"""Domain types shared by the whole package.

Agents are identified by their position in the sorted value order (0-based
internally, 1-based in every external format).  Coalition slots are labeled
``0..k-1`` internally; all game semantics are invariant under relabeling, see
:func:`canonical_form`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable, Sequence


class CoalitionLabError(Exception):
    """Base class; ``code`` is a stable machine-readable error identifier."""

    code = "ERROR"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class InvalidInstance(CoalitionLabError, ValueError):
    code = "INVALID_INSTANCE"


class InvalidStructure(CoalitionLabError, ValueError):
    code = "INVALID_STRUCTURE"


class PreconditionViolated(CoalitionLabError, ValueError):
    code = "PRECONDITION_VIOLATED"


class StateSpaceTooLarge(CoalitionLabError, RuntimeError):
    code = "STATE_SPACE_TOO_LARGE"


# ---------------------------------------------------------------------------
# Rationals
# ---------------------------------------------------------------------------

def parse_rational(text: Any) -> Fraction:
    """Parse ``"p/q"``, an integer, or a finite decimal string exactly.

    Floats are rejected because they carry binary rounding error.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"rationals must be given as strings or integers, got {text!r}")
    s = text.strip()
    try:
        value = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc
    return value


def format_rational(x: Fraction | int) -> str:
    """Render as ``"p/q"`` (or ``"p"`` for integers); inverse of :func:`parse_rational`."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Cost values
# ---------------------------------------------------------------------------

class _Unhappy:
    """Top element of the cost lattice: the cost of an isolated agent under UIS."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNHAPPY"

    def __str__(self) -> str:
        return "unhappy"

    def __reduce__(self):
        return (_Unhappy, ())

    def __hash__(self) -> int:
        return hash("coalition_lab.UNHAPPY")

    def __eq__(self, other) -> bool:
        return other is self

    def __ne__(self, other) -> bool:
        return other is not self

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


UNHAPPY = _Unhappy()

CostValue = Fraction | _Unhappy


def format_cost(c: CostValue) -> str:
    return "unhappy" if c is UNHAPPY else format_rational(c)


def parse_cost(text: str) -> CostValue:
    return UNHAPPY if text.strip().lower() == "unhappy" else parse_rational(text)


# ---------------------------------------------------------------------------
# Models
# ---------------------------------------------------------------------------

class CostVariant(enum.Enum):
    AVERAGE = "avg"
    MAXIMUM = "max"
    CUTOFF = "cutoff"


class Isolation(enum.Enum):
    HIS = "his"
    UIS = "uis"


@dataclass(frozen=True)
class CostModel:
    variant: CostVariant
    lam: Fraction | None = None

    def __post_init__(self):
        if self.variant is CostVariant.CUTOFF:
            if self.lam is None:
                raise InvalidInstance("cutoff model needs a threshold", "NON_POSITIVE_LAMBDA")
            object.__setattr__(self, "lam", Fraction(self.lam))
            if self.lam <= 0:
                raise InvalidInstance(f"threshold must be positive, got {self.lam}",
                                      "NON_POSITIVE_LAMBDA")
        elif self.lam is not None:
            raise InvalidInstance(f"{self.variant.name} takes no threshold")

    @classmethod
    def average(cls) -> CostModel:
        return cls(CostVariant.AVERAGE)

    @classmethod
    def maximum(cls) -> CostModel:
        return cls(CostVariant.MAXIMUM)

    @classmethod
    def cutoff(cls, lam) -> CostModel:
        return cls(CostVariant.CUTOFF, Fraction(lam))

    def __str__(self) -> str:
        if self.variant is CostVariant.CUTOFF:
            return f"cutoff[{format_rational(self.lam)}]"
        return self.variant.value


AVERAGE = CostModel.average()
MAXIMUM = CostModel.maximum()


@dataclass(frozen=True)
class GameInstance:
    """A jump game (``fixed_sizes is None``) or a swap game (fixed coalition sizes).

    Use :func:`make_instance` or :func:`validate_instance` rather than the
    constructor when the values may be unsorted.
    """

    values: tuple[Fraction, ...]
    k: int
    cost_model: CostModel = AVERAGE
    isolation: Isolation = Isolation.HIS
    fixed_sizes: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if self.fixed_sizes is not None:
            object.__setattr__(self, "fixed_sizes", tuple(int(s) for s in self.fixed_sizes))
        n = len(self.values)
        if n == 0:
            raise InvalidInstance("an instance needs at least one agent", "EMPTY_VALUES")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise InvalidInstance("values must be sorted non-decreasingly", "UNSORTED_VALUES")
        if not isinstance(self.k, int) or self.k < 1:
            raise InvalidInstance(f"k must be a positive integer, got {self.k!r}", "INVALID_K")
        if self.k > n:
            raise InvalidInstance(f"k={self.k} exceeds n={n}", "K_EXCEEDS_N")
        if self.fixed_sizes is not None:
            if len(self.fixed_sizes) != self.k:
                raise InvalidInstance(
                    f"{len(self.fixed_sizes)} sizes given for k={self.k}", "SIZES_SUM_MISMATCH")
            if any(s < 1 for s in self.fixed_sizes):
                raise InvalidInstance("coalition sizes must be positive", "SIZES_SUM_MISMATCH")
            if sum(self.fixed_sizes) != n:
                raise InvalidInstance(
                    f"sizes sum to {sum(self.fixed_sizes)}, expected n={n}", "SIZES_SUM_MISMATCH")

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def is_swap(self) -> bool:
        return self.fixed_sizes is not None

    @property
    def model(self) -> CostVariant:
        return self.cost_model.variant

    @cached_property
    def scale(self) -> int:
        """Common denominator of all values and the threshold."""
        dens = [v.denominator for v in self.values]
        if self.cost_model.lam is not None:
            dens.append(self.cost_model.lam.denominator)
        return math.lcm(*dens)

    @cached_property
    def scaled_values(self) -> tuple[int, ...]:
        """Values multiplied by :attr:`scale`; integer arithmetic in hot loops."""
        s = self.scale
        return tuple(int(v * s) for v in self.values)

    @cached_property
    def scaled_lambda(self) -> int | None:
        lam = self.cost_model.lam
        return None if lam is None else int(lam * self.scale)

    def with_model(self, cost_model: CostModel | None = None,
                   isolation: Isolation | None = None) -> GameInstance:
        return GameInstance(self.values, self.k,
                            cost_model if cost_model is not None else self.cost_model,
                            isolation if isolation is not None else self.isolation,
                            self.fixed_sizes)

    def describe(self) -> str:
        kind = "swap" if self.is_swap else f"jump-{self.isolation.value}"
        return f"{self.cost_model}-{kind} n={self.n} k={self.k}"


def make_instance(values: Iterable, k: int, cost_model: CostModel = AVERAGE,
                  isolation: Isolation = Isolation.HIS,
                  fixed_sizes: Sequence[int] | None = None) -> GameInstance:
    """Build an instance from possibly unsorted values (ints, Fractions or strings)."""
    vals = [v if isinstance(v, (int, Fraction)) else parse_rational(v) for v in values]
    return GameInstance(tuple(sorted(Fraction(v) for v in vals)), k, cost_model, isolation,
                        None if fixed_sizes is None else tuple(fixed_sizes))


# ---------------------------------------------------------------------------
# Coalition structures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoalitionStructure:
    """Assignment of every agent to one of ``k`` labeled slots (0-based)."""

    assignment: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        for a in self.assignment:
            if not 0 <= a < self.k:
                raise InvalidStructure(f"slot {a} outside 0..{self.k - 1}")

    @classmethod
    def from_blocks(cls, blocks: Sequence[Iterable[int]], k: int | None = None,
                    n: int | None = None) -> CoalitionStructure:
        """Blocks of agent indices; block ``i`` becomes slot ``i``."""
        blocks = [list(b) for b in blocks]
        k = len(blocks) if k is None else k
        if len(blocks) > k:
            raise InvalidStructure(f"{len(blocks)} blocks do not fit into k={k} slots")
        agents = [a for b in blocks for a in b]
        n = len(agents) if n is None else n
        if sorted(agents) != list(range(n)):
            raise InvalidStructure("blocks must partition the agents 0..n-1")
        assignment = [0] * n
        for slot, block in enumerate(blocks):
            for a in block:
                assignment[a] = slot
        return cls(tuple(assignment), k)

    @property
    def n(self) -> int:
        return len(self.assignment)

    def members(self, slot: int) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.assignment) if s == slot)

    @cached_property
    def slots(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for i, s in enumerate(self.assignment):
            out[s].append(i)
        return tuple(tuple(b) for b in out)

    def occupancy(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.slots)

    def nonempty_count(self) -> int:
        return sum(1 for b in self.slots if b)

    def jump(self, agent: int, target: int) -> CoalitionStructure:
        a = list(self.assignment)
        a[agent] = target
        return CoalitionStructure(tuple(a), self.k)

    def swap(self, a: int, b: int) -> CoalitionStructure:
        x = list(self.assignment)
        x[a], x[b] = x[b], x[a]
        return CoalitionStructure(tuple(x), self.k)


def validate_structure(s: CoalitionStructure, g: GameInstance) -> None:
    if s.n != g.n:
        raise InvalidStructure(f"structure has {s.n} agents, instance has {g.n}")
    if s.k != g.k:
        raise InvalidStructure(f"structure has k={s.k}, instance has k={g.k}")
    if g.is_swap and sorted(s.occupancy()) != sorted(g.fixed_sizes):
        raise InvalidStructure(
            f"occupancies {sorted(s.occupancy())} do not match sizes {sorted(g.fixed_sizes)}")


CanonicalKey = tuple[int, tuple[tuple[int, ...], ...]]


def canonical_form(s: CoalitionStructure) -> CanonicalKey:
    """Label-free key: ``(k, sorted tuple of sorted member tuples of nonempty slots)``."""
    return (s.k, tuple(sorted(b for b in s.slots if b)))


def from_canonical(key: CanonicalKey, n: int) -> CoalitionStructure:
    k, blocks = key
    return CoalitionStructure.from_blocks(blocks, k, n)


def value_form(s: CoalitionStructure, g: GameInstance) -> tuple[tuple[Fraction, ...], ...]:
    """Key that also forgets which of several equal-valued agents sits where."""
    return tuple(sorted(tuple(g.values[i] for i in b) for b in s.slots if b))


def brace(s: CoalitionStructure, g: GameInstance) -> str:
    """Human-readable brace notation, e.g. ``{{1,1,3,3},{2,2,2,2,2}}``; empty slots omitted."""
    parts = ["{" + ",".join(format_rational(g.values[i]) for i in b) + "}"
             for b in s.slots if b]
    return "{" + ",".join(parts) + "}"


def structure_from_values(coalitions: Sequence[Sequence], g: GameInstance) -> CoalitionStructure:
    """Map coalitions given as value lists onto agents.

    Equal-valued agents are handed out in index order, coalition by coalition.
    Fewer than ``k`` coalitions leaves the trailing slots empty.
    """
    pools: dict[Fraction, list[int]] = {}
    for i, v in enumerate(g.values):
        pools.setdefault(v, []).append(i)
    cursor = {v: 0 for v in pools}
    blocks = []
    for coalition in coalitions:
        block = []
        for raw in coalition:
            v = raw if isinstance(raw, Fraction) else (
                Fraction(raw) if isinstance(raw, int) else parse_rational(raw))
            if v not in pools or cursor[v] >= len(pools[v]):
                raise InvalidStructure(f"value {format_rational(v)} is not available in the instance")
            block.append(pools[v][cursor[v]])
            cursor[v] += 1
        blocks.append(block)
    if any(cursor[v] != len(pools[v]) for v in pools):
        raise InvalidStructure("coalitions do not cover every agent exactly once")
    return CoalitionStructure.from_blocks(blocks, g.k, g.n)


# ---------------------------------------------------------------------------
# External instance descriptions
# ---------------------------------------------------------------------------

_COST_NAMES = {"avg": CostVariant.AVERAGE, "average": CostVariant.AVERAGE,
               "max": CostVariant.MAXIMUM, "maximum": CostVariant.MAXIMUM,
               "cutoff": CostVariant.CUTOFF}


def validate_instance(raw: dict) -> GameInstance:
    """Turn a parsed instance description into a :class:`GameInstance`.

    ``raw`` has the keys ``values``, ``k``, optional ``sizes``, ``cost``
    (``avg``/``max``/``cutoff``), ``lambda`` (cutoff only) and ``isolation``
    (``his``/``uis``, default ``his``).  Values are sorted; the sort is stable,
    so equal values keep their input order as agent identity.
    """
    if not isinstance(raw, dict):
        raise InvalidInstance("instance description must be a mapping")
    values = raw.get("values")
    if not values:
        raise InvalidInstance("values missing or empty", "EMPTY_VALUES")
    try:
        parsed = [parse_rational(v) for v in values]
    except ValueError as exc:
        raise InvalidInstance(str(exc), "BAD_RATIONAL") from exc
    k = raw.get("k")
    if isinstance(k, bool) or not isinstance(k, int):
        raise InvalidInstance(f"k must be an integer, got {k!r}", "INVALID_K")
    cost_name = str(raw.get("cost", "avg")).lower()
    if cost_name not in _COST_NAMES:
        raise InvalidInstance(f"unknown cost function {cost_name!r}", "UNKNOWN_COST")
    variant = _COST_NAMES[cost_name]
    lam = raw.get("lambda")
    if variant is CostVariant.CUTOFF:
        if lam is None:
            raise InvalidInstance("cutoff needs 'lambda'", "NON_POSITIVE_LAMBDA")
        try:
            lam = parse_rational(lam)
        except ValueError as exc:
            raise InvalidInstance(str(exc), "BAD_RATIONAL") from exc
        model = CostModel(variant, lam)
    else:
        if lam is not None:
            raise InvalidInstance(f"'lambda' is only valid for cutoff, not {cost_name}")
        model = CostModel(variant)
    iso_name = str(raw.get("isolation", "his")).lower()
    try:
        isolation = Isolation(iso_name)
    except ValueError as exc:
        raise InvalidInstance(f"unknown isolation mode {iso_name!r}", "UNKNOWN_ISOLATION") from exc
    sizes = raw.get("sizes")
    if sizes is not None:
        if not isinstance(sizes, list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in sizes):
            raise InvalidInstance("sizes must be a list of integers", "SIZES_SUM_MISMATCH")
        sizes = tuple(sizes)
    return GameInstance(tuple(sorted(parsed)), k, model, isolation, sizes)


def instance_to_dict(g: GameInstance) -> dict:
    """Inverse of :func:`validate_instance` (values already sorted)."""
    out: dict[str, Any] = {
        "values": [format_rational(v) for v in g.values],
        "k": g.k,
        "cost": g.cost_model.variant.value,
        "isolation": g.isolation.value,
    }
    if g.cost_model.lam is not None:
        out["lambda"] = format_rational(g.cost_model.lam)
    if g.fixed_sizes is not None:
        out["sizes"] = list(g.fixed_sizes)
    return out


def structure_to_dict(s: CoalitionStructure, g: GameInstance) -> dict:
    return {
        "assignment": [a + 1 for a in s.assignment],
        "coalitions": [[format_rational(g.values[i]) for i in b] for b in s.slots],
        "brace": brace(s, g),
    }


def structure_from_dict(raw, g: GameInstance) -> CoalitionStructure:
    """Accepts ``{"assignment": [...]}`` (1-based slots, sorted agent order),
    ``{"coalitions": [[values...], ...]}``, or a bare list of either form."""
    if isinstance(raw, dict):
        if "assignment" in raw:
            raw = raw["assignment"]
        elif "coalitions" in raw:
            return structure_from_values(raw["coalitions"], g)
        else:
            raise InvalidStructure("structure needs 'assignment' or 'coalitions'")
    if not isinstance(raw, list) or not raw:
        raise InvalidStructure("structure must be a non-empty list")
    if all(isinstance(x, list) for x in raw):
        return structure_from_values(raw, g)
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
        raise InvalidStructure("assignment entries must be integers")
    s = CoalitionStructure(tuple(x - 1 for x in raw), g.k)
    validate_structure(s, g)
    return s


__all__ = [
    "AVERAGE", "MAXIMUM", "UNHAPPY", "CanonicalKey", "CoalitionLabError",
    "CoalitionStructure", "CostModel", "CostValue", "CostVariant", "GameInstance",
    "InvalidInstance", "InvalidStructure", "Isolation", "PreconditionViolated",
    "StateSpaceTooLarge", "brace", "canonical_form", "format_cost", "format_rational",
    "from_canonical", "instance_to_dict", "make_instance", "parse_cost", "parse_rational",
    "structure_from_dict", "structure_from_values", "structure_to_dict",
    "validate_instance", "validate_structure", "value_form",
]
