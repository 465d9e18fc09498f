"""Economics of staged (two-phase) attacks: payoffs, break-even times,
attacker action regions, archetypes and Monte Carlo uncertainty."""

from .archetypes import Archetype, AttackClass, builtin_archetypes, get_archetype
from .distributions import ParamDistribution
from .errors import ParameterError, ScenarioFileError
from .montecarlo import MCResult, run_mc
from .payoff import (
    AttackerAction,
    Indicator,
    ScenarioParams,
    StageSpec,
    break_even_vs_phase_one,
    break_even_vs_zero,
    limiting_payoff,
    multi_stage_payoff,
    optimal_action,
    payoff_time_gradient,
    phase_one_payoff,
    phase_two_increment,
    phase_two_payoff,
)
from .scenario import ScenarioConfig, dump_scenario, load_scenario, resolve
from .sweep import RegionCell, SweepGrid, SweepSpec, action_frontier, run_sweep

__version__ = "0.1.0"
