"""``coalition-lab`` command line.

Every command reads a JSON instance file and writes a JSON report (or CSV where
``--format csv`` is offered) to stdout or ``--out``.  Rationals are always
serialized as ``"p/q"`` strings.  Exit status: 0 on success, including
mathematical findings such as an unstable structure; 2 on malformed input or
an unmet precondition; 3 when an enumeration cap is exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from .analysis import census, poa, pos
from .core import (CoalitionLabError, CoalitionStructure, CostModel, CostVariant, GameInstance,
                   InvalidInstance, StateSpaceTooLarge, format_cost,
                   format_rational, instance_to_dict, make_instance, parse_rational,
                   structure_from_dict, structure_to_dict, validate_instance)
from .costs import agent_costs, social_cost
from .dynamics import (DynamicsPolicy, PolicyKind, ScriptStep, improving_moves, run_dynamics,
                       script_from_moves, trace_from_csv, trace_to_csv)
from .equilibrium import (EnumerationTooLarge, construct_sorted_pne, is_jump_stable,
                          is_sorted, is_swap_stable, verify_monotone)
from .optimum import brute_force_optimum, lambda_block_cover, structural_optimum_checks
from .suite import paper_suite

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFRA = 3


class UsageError(CoalitionLabError, ValueError):
    code = "USAGE"


# ---------------------------------------------------------------------------
# Input
# ---------------------------------------------------------------------------

def _read_json(path: str, what: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {what} file {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} file {path} is not valid JSON: {exc}") from exc


def load_instance(path: str) -> tuple[GameInstance, dict]:
    raw = _read_json(path, "instance")
    return validate_instance(raw), raw


def default_structure(g: GameInstance) -> CoalitionStructure:
    """Grand coalition for jump games; slots filled consecutively by size for swap games."""
    if not g.is_swap:
        return CoalitionStructure((0,) * g.n, g.k)
    assignment = []
    for slot, size in enumerate(g.fixed_sizes):
        assignment.extend([slot] * size)
    return CoalitionStructure(tuple(assignment), g.k)


def initial_structure(g: GameInstance, raw: dict, path: str | None) -> CoalitionStructure:
    if path is not None:
        return structure_from_dict(_read_json(path, "structure"), g)
    if raw.get("initial") is not None:
        return structure_from_dict(raw["initial"], g)
    return default_structure(g)


def load_script(path: str) -> list[ScriptStep]:
    """A CSV trace (as written by ``dynamics --format csv``) or a JSON list of
    ``{"mover", "target"}`` / ``{"mover", "partner"}`` objects, all 1-based."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read script file {path}: {exc.strerror}") from exc
    if not text.lstrip().startswith("["):
        try:
            return script_from_moves(trace_from_csv(text))
        except (KeyError, ValueError) as exc:
            raise UsageError(f"script file {path} is neither a JSON list nor a trace CSV") from exc
    steps = []
    for entry in json.loads(text):
        if not isinstance(entry, dict) or "mover" not in entry:
            raise UsageError(f"bad script entry {entry!r}")
        target, partner = entry.get("target"), entry.get("partner")
        steps.append(ScriptStep(int(entry["mover"]) - 1,
                                None if target is None else int(target) - 1,
                                None if partner is None else int(partner) - 1))
    return steps


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_check(args) -> dict:
    g, raw = load_instance(args.instance)
    s = initial_structure(g, raw, args.structure)
    moves = improving_moves(s, g)
    out = {
        "structure": structure_to_dict(s, g),
        "sorted": is_sorted(s, g) is not None,
        "social_cost": format_cost(social_cost(s, g)),
        "agent_costs": [format_cost(c) for c in agent_costs(s, g)],
        "improving_moves": len(moves),
    }
    if g.is_swap:
        out["swap_stable"] = is_swap_stable(s, g)
    else:
        out["jump_stable"] = is_jump_stable(s, g)
    out["verdict"] = "stable" if not moves else "unstable"
    return out


def _trace_rows(trace) -> list[dict]:
    rows = []
    for step, m in enumerate(trace, 1):
        row = {"step": step, "mover": m.mover + 1, "source_slot": m.source_slot + 1,
               "target_slot": m.target_slot + 1, "cost_before": format_cost(m.cost_before),
               "cost_after": format_cost(m.cost_after)}
        if m.partner is not None:
            row.update(partner=m.partner + 1,
                       partner_cost_before=format_cost(m.partner_cost_before),
                       partner_cost_after=format_cost(m.partner_cost_after))
        rows.append(row)
    return rows


def cmd_dynamics(args):
    g, raw = load_instance(args.instance)
    s0 = initial_structure(g, raw, args.structure)
    if args.script:
        policy = DynamicsPolicy.scripted(load_script(args.script), args.max_steps)
    else:
        kind = PolicyKind(args.policy)
        policy = DynamicsPolicy(kind, 10_000 if args.max_steps is None else args.max_steps)
    result = run_dynamics(s0, g, policy)
    if args.format == "csv":
        print(f"verdict: {result.verdict.name}", file=sys.stderr)
        return trace_to_csv(result.trace)
    return {
        "verdict": result.verdict.name,
        "moves": len(result.trace),
        "cycle_start": result.cycle_start,
        "initial": structure_to_dict(s0, g),
        "terminal": structure_to_dict(result.terminal, g),
        "terminal_cost": format_cost(social_cost(result.terminal, g)),
        "trace": _trace_rows(result.trace),
    }


def cmd_construct(args) -> dict:
    g, _ = load_instance(args.instance)
    s, trace = construct_sorted_pne(g)
    return {
        "structure": structure_to_dict(s, g),
        "social_cost": format_cost(social_cost(s, g)),
        "moves": len(trace),
        "move_bound": g.k * g.n,
        "trace": _trace_rows(trace),
    }


def _random_average_instance(rng: random.Random) -> GameInstance:
    n = rng.randint(4, 10)
    values = sorted(rng.sample(range(0, 40), n))
    return make_instance(values, 2, CostModel.average())


def cmd_optimum(args) -> dict:
    if args.probe is not None:
        return _probe(args)
    if args.instance is None:
        raise UsageError("optimum needs an instance file or --probe N")
    g, _ = load_instance(args.instance)
    out = {"instance": instance_to_dict(g)}
    out.update(brute_force_optimum(g, args.prune, args.cap).to_dict(g))
    if g.model is CostVariant.CUTOFF:
        out["lambda_cover"] = lambda_block_cover(g).to_dict()
    if args.structural:
        out["structural"] = structural_optimum_checks(g, args.cap).to_dict()
    return out


def _probe(args) -> dict:
    """Structural checks on random distinct-value Average instances with two coalitions."""
    rng = random.Random(args.seed)
    violations, unsorted, reports = 0, [], []
    for _ in range(args.probe):
        g = _random_average_instance(rng)
        rep = structural_optimum_checks(g, args.cap)
        violations += rep.violations
        if rep.all_optima_unsorted:
            unsorted.append([format_rational(v) for v in g.values])
        if rep.violations:
            reports.append(rep.to_dict())
    return {"instances": args.probe, "seed": args.seed, "violations": violations,
            "all_optima_unsorted": len(unsorted), "unsorted_instances": unsorted,
            "violating_instances": reports}


def cmd_analyze(args) -> dict:
    g, _ = load_instance(args.instance)
    c = census(g, prune_symmetric=args.prune, cap=args.cap)
    out = {"instance": instance_to_dict(g)}
    out.update(c.to_dict(g))
    for name, fn in (("poa", poa), ("pos", pos)):
        try:
            out[name] = str(fn(c))
        except CoalitionLabError as exc:
            out[name] = None
            out[f"{name}_note"] = str(exc)
    return out


def _parse_ground(text: str) -> list[Fraction]:
    try:
        return [parse_rational(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_verify_monotone(args) -> dict:
    variant = {"avg": CostVariant.AVERAGE, "max": CostVariant.MAXIMUM,
               "cutoff": CostVariant.CUTOFF}[args.cost]
    if variant is CostVariant.CUTOFF:
        try:
            model = CostModel.cutoff(parse_rational(args.lam))
        except ValueError as exc:
            raise InvalidInstance(str(exc), "BAD_RATIONAL") from exc
    else:
        model = CostModel(variant)
    ground = _parse_ground(args.ground)
    report = verify_monotone(model, ground, args.max_size)
    return {"model": str(model), "ground": [format_rational(v) for v in ground],
            "max_coalition_size": args.max_size, "all_pass": report.all_pass,
            **report.to_dict()}


def cmd_paper_suite(args):
    report = paper_suite()
    if args.format == "csv":
        return report.summary_csv()
    return report.to_dict()


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def _non_negative(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--cap", type=int, default=None,
                        help="largest n for exhaustive enumeration (default: COALITION_LAB_CAP or 14)")

    p = argparse.ArgumentParser(prog="coalition-lab",
                                description="Exact analysis of distance-based coalition formation games.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="costs, sortedness and stability of a structure")
    c.add_argument("instance")
    c.add_argument("structure", nargs="?",
                   help="structure JSON (default: the instance's 'initial' entry)")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("dynamics", parents=[common], help="run improving-move dynamics")
    d.add_argument("instance")
    d.add_argument("--structure", help="start structure JSON")
    d.add_argument("--policy", choices=["first", "best"], default="first")
    d.add_argument("--max-steps", type=_non_negative, default=None)
    d.add_argument("--script", help="replay moves from a JSON list or trace CSV")
    d.add_argument("--format", choices=["json", "csv"], default="json")
    d.set_defaults(func=cmd_dynamics)

    k = sub.add_parser("construct", parents=[common], help="build a sorted jump equilibrium")
    k.add_argument("instance")
    k.set_defaults(func=cmd_construct)

    o = sub.add_parser("optimum", parents=[common], help="exhaustive social optimum")
    o.add_argument("instance", nargs="?")
    o.add_argument("--prune", action="store_true", help="one structure per equal-value pattern")
    o.add_argument("--structural", action="store_true",
                   help="shape checks for two-coalition Average optima")
    o.add_argument("--probe", type=int, metavar="N",
                   help="run the shape checks on N random instances instead")
    o.add_argument("--seed", type=int, default=0)
    o.set_defaults(func=cmd_optimum)

    a = sub.add_parser("analyze", parents=[common], help="equilibrium census with PoA and PoS")
    a.add_argument("instance")
    a.add_argument("--prune", action="store_true")
    a.set_defaults(func=cmd_analyze)

    m = sub.add_parser("verify-monotone", parents=[common], help="check the monotone cost axioms")
    m.add_argument("--cost", choices=["avg", "max", "cutoff"], default="avg")
    m.add_argument("--lambda", dest="lam", default="1")
    m.add_argument("--ground", default="0,1,2,3,4,5,6", help="comma-separated multiset")
    m.add_argument("--max-size", type=int, default=3)
    m.set_defaults(func=cmd_verify_monotone)

    s = sub.add_parser("paper-suite", parents=[common], help="run the reproduction fixtures")
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_paper_suite)
    return p


def _emit(payload, out: str | None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = args.func(args)
    except (StateSpaceTooLarge, EnumerationTooLarge) as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INFRA
    except CoalitionLabError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(payload, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
