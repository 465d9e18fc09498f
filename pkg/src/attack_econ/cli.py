"""
Command-line interface.

    attack-econ eval       --alpha A --t T [params]       one CSV row
    attack-econ sweep      [params] [grid flags] --out F  (alpha, t) grid as CSV
    attack-econ breakeven  --alpha A [params]             closed-form crossing times
    attack-econ mc         --config F --samples N --seed S --t T
    attack-econ archetypes                                preset listing

Parameters come from ``--config`` (a scenario file), then ``--archetype``,
then the explicit flags, later sources winning. Exit status is 2 for
invalid parameters and 3 for file or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .archetypes import builtin_archetypes
from .chart import render_svg
from .errors import ParameterError, ScenarioFileError
from .montecarlo import run_mc
from .payoff import (
    Indicator,
    break_even_vs_phase_one,
    break_even_vs_zero,
    check_value,
    optimal_action,
    phase_one_payoff,
    phase_two_payoff,
)
from .scenario import ScenarioConfig, load_scenario, resolve
from .sweep import SweepSpec, run_sweep

EXIT_PARAMS = 2
EXIT_FILE = 3

CSV_HEADER = "alpha,t,pi1,pi2,action"
BREAKEVEN_HEADER = "alpha,t_star_vs_phase_one,t_star_vs_zero"
MC_HEADER = "n,seed,mean_pi1,mean_pi2,ci95_pi2,p_no_attack,p_phase_one,p_two_phase"

# flag dest -> ScenarioParams field
_PARAM_FLAGS = {"alpha": "alpha", "V": "V", "p2": "p2", "delta": "delta", "c1": "c1", "c2": "c2"}


def fmt(x: float) -> str:
    return f"{x:.6f}"


def fmt_root(x) -> str:
    if x is None:
        return "NONE"
    if isinstance(x, Indicator):
        return x.value
    return fmt(x)


def _param_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    group = parent.add_argument_group("scenario parameters")
    group.add_argument("--config", metavar="PATH", help="scenario JSON file")
    group.add_argument("--archetype", metavar="NAME", help="attacker preset applied over the config values")
    group.add_argument("--alpha", type=float, help="fraction of V extractable in phase one")
    group.add_argument("--t", type=float, help="phase-two completion time")
    group.add_argument("--V", type=float, help="total value of the target to the attacker")
    group.add_argument("--p2", type=float, help="phase-two success probability")
    group.add_argument("--delta", type=float, help="discount rate per unit time")
    group.add_argument("--c1", type=float, help="phase-one cost")
    group.add_argument("--c2", type=float, help="phase-two upfront cost")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="attack-econ", description="Two-phase attacker economics")
    sub = parser.add_subparsers(dest="command", required=True)
    parent = _param_parent()

    sub.add_parser("eval", parents=[parent], help="payoffs and best action at one (alpha, t)")

    sweep = sub.add_parser("sweep", parents=[parent], help="payoff grid over alpha and t")
    sweep.add_argument("--alpha-min", type=float, default=0.0)
    sweep.add_argument("--alpha-max", type=float, default=1.0)
    sweep.add_argument("--alpha-steps", type=int, default=11)
    sweep.add_argument("--t-min", type=float, default=0.0)
    sweep.add_argument("--t-max", type=float, default=5.0)
    sweep.add_argument("--t-steps", type=int, default=11)
    sweep.add_argument("--out", metavar="PATH", help="CSV output file (default: stdout)")
    sweep.add_argument("--svg", metavar="PATH", help="also write a payoff chart")

    sub.add_parser("breakeven", parents=[parent], help="closed-form break-even times")

    mc = sub.add_parser("mc", parents=[parent], help="Monte Carlo over the config's distributions")
    mc.add_argument("--samples", type=int, required=True)
    mc.add_argument("--seed", type=int, required=True)

    sub.add_parser("archetypes", help="list attacker presets")
    return parser


def _config(args, fill: dict | None = None) -> ScenarioConfig:
    cfg = load_scenario(args.config) if args.config else ScenarioConfig()
    base = dict(fill or {})
    base.update(cfg.base)
    overrides = dict(cfg.overrides)
    for flag, name in _PARAM_FLAGS.items():
        value = getattr(args, flag)
        if value is not None:
            overrides[name] = value
    return ScenarioConfig(
        base=base,
        archetype=args.archetype if args.archetype is not None else cfg.archetype,
        overrides=overrides,
        distributions=cfg.distributions,
        t=args.t if args.t is not None else cfg.t,
    )


def _require_t(cfg: ScenarioConfig) -> float:
    if cfg.t is None:
        raise ParameterError("t is required (--t or \"t\" in the config)", "t")
    return cfg.t


def cmd_eval(args, out) -> None:
    cfg = _config(args)
    params = resolve(cfg)
    t = _require_t(cfg)
    pi1 = phase_one_payoff(params)
    pi2 = phase_two_payoff(params, t)
    action = optimal_action(params, t)
    out.write(CSV_HEADER + "\n")
    out.write(f"{fmt(params.alpha)},{fmt(t)},{fmt(pi1)},{fmt(pi2)},{action.value}\n")


def sweep_csv(grid) -> str:
    lines = [CSV_HEADER]
    for c in grid.cells:
        lines.append(f"{fmt(c.alpha)},{fmt(c.t)},{fmt(c.pi1)},{fmt(c.pi2)},{c.action.value}")
    return "\n".join(lines) + "\n"


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise ScenarioFileError(f"cannot write {path}: {exc.strerror or exc}") from None


def cmd_sweep(args, out) -> None:
    # alpha is swept, so the base scenario does not need one.
    params = resolve(_config(args, fill={"alpha": 0.0}))
    spec = SweepSpec(
        base=params,
        alpha_min=args.alpha_min,
        alpha_max=args.alpha_max,
        alpha_steps=args.alpha_steps,
        t_min=args.t_min,
        t_max=args.t_max,
        t_steps=args.t_steps,
    )
    grid = run_sweep(spec)
    text = sweep_csv(grid)
    if args.out:
        _write(args.out, text)
    else:
        out.write(text)
    if args.svg:
        _write(args.svg, render_svg(grid))


def cmd_breakeven(args, out) -> None:
    params = resolve(_config(args))
    out.write(BREAKEVEN_HEADER + "\n")
    t_star = fmt_root(break_even_vs_phase_one(params))
    t_zero = fmt_root(break_even_vs_zero(params))
    out.write(f"{fmt(params.alpha)},{t_star},{t_zero}\n")


def cmd_mc(args, out) -> None:
    cfg = _config(args)
    t = _require_t(cfg)
    result = run_mc(cfg, t, args.samples, args.seed)
    out.write(MC_HEADER + "\n")
    out.write(
        ",".join(
            [
                str(result.n),
                str(result.seed),
                fmt(result.mean_pi1),
                fmt(result.mean_pi2),
                fmt(result.ci95_pi2),
                fmt(result.p_no_attack),
                fmt(result.p_phase_one),
                fmt(result.p_two_phase),
            ]
        )
        + "\n"
    )


def cmd_archetypes(args, out) -> None:
    for a in sorted(builtin_archetypes(), key=lambda a: a.delta):
        out.write(f"{a.name:<14}delta={fmt(a.delta)}  p2={fmt(a.p2)}  {a.description}\n")


_COMMANDS = {
    "eval": cmd_eval,
    "sweep": cmd_sweep,
    "breakeven": cmd_breakeven,
    "mc": cmd_mc,
    "archetypes": cmd_archetypes,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "t", None) is not None:
            check_value("t", args.t)
        _COMMANDS[args.command](args, sys.stdout)
    except ParameterError as exc:
        print(f"attack-econ: error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except ScenarioFileError as exc:
        print(f"attack-econ: error: {exc}", file=sys.stderr)
        return EXIT_FILE
    return 0


if __name__ == "__main__":
    sys.exit(main())
