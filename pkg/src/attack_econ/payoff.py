"""
Payoffs of a two-phase ("tailored") attack.

An attacker values the total havoc it can cause as ``V``. Phase one (the
perimeter compromise, usually done with commodified tooling) succeeds with
certainty and yields ``alpha * V`` at cost ``c1``. Phase two (reconnaissance
plus the strike on the control systems) succeeds with probability ``p2``,
yields the remaining ``(1 - alpha) * V`` discounted by ``exp(-delta * t)``,
and costs ``c2`` paid upfront::

    pi1 = alpha*V - c1
    pi2 = alpha*V - c1 + p2*(1 - alpha)*V*exp(-delta*t) - c2

A three-stage ICS intrusion (penetrate, analyze, strike) maps onto this
model with stage 1 as phase one and stages 2 and 3 folded into phase two.

All functions are pure. Money and time are plain floats in whatever
consistent units the caller picks.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Sequence

from .errors import ParameterError

__all__ = [
    "AttackerAction",
    "Indicator",
    "ScenarioParams",
    "StageSpec",
    "break_even_vs_phase_one",
    "break_even_vs_zero",
    "classify",
    "limiting_payoff",
    "multi_stage_payoff",
    "optimal_action",
    "payoff_time_gradient",
    "phase_one_payoff",
    "phase_two_gain",
    "phase_two_increment",
    "phase_two_payoff",
]

PARAM_NAMES = ("V", "alpha", "p2", "delta", "c1", "c2")

# Upper bound per parameter; every lower bound is 0.
_UPPER = {"V": math.inf, "alpha": 1.0, "p2": 1.0, "delta": math.inf, "c1": math.inf, "c2": math.inf}


def check_value(name: str, value, upper: float = math.inf) -> float:
    """Coerce ``value`` to float and check ``0 <= value <= upper``."""
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParameterError(f"{name} must be a number, got {value!r}", name)
    value = float(value)
    if not math.isfinite(value):
        raise ParameterError(f"{name} must be finite, got {value!r}", name)
    if value < 0.0 or value > upper:
        hi = "inf)" if math.isinf(upper) else f"{upper:g}]"
        raise ParameterError(f"{name} must be in [0, {hi}, got {value!r}", name)
    return value


def check_param(name: str, value) -> float:
    return check_value(name, value, _UPPER[name])


def _check_time(t) -> float:
    return check_value("t", t)


class AttackerAction(str, enum.Enum):
    NO_ATTACK = "NoAttack"
    PHASE_ONE_ONLY = "PhaseOneOnly"
    TWO_PHASE = "TwoPhase"

    def __str__(self) -> str:
        return self.value


class Indicator(enum.Enum):
    """Non-numeric outcomes of limit and break-even queries.

    ``ALWAYS``: the compared quantity stays positive for every t >= 0, so
    there is no finite crossing. ``NON_CONVERGENT``: the payoff does not
    decay with t (zero discount rate with a live phase-two gain).
    """

    ALWAYS = "ALWAYS"
    NON_CONVERGENT = "NON_CONVERGENT"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ScenarioParams:
    """Economic parameters of a two-phase attack. Validated on construction."""

    V: float
    alpha: float
    p2: float
    delta: float
    c1: float
    c2: float

    def __post_init__(self):
        for name in PARAM_NAMES:
            object.__setattr__(self, name, check_param(name, getattr(self, name)))

    def with_alpha(self, alpha: float) -> ScenarioParams:
        return replace(self, alpha=alpha)

    def scaled(self, factor: float) -> ScenarioParams:
        """Same scenario with every money quantity (V, c1, c2) times ``factor``."""
        return replace(self, V=self.V * factor, c1=self.c1 * factor, c2=self.c2 * factor)

    def as_dict(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in PARAM_NAMES}


def phase_one_payoff(params: ScenarioParams) -> float:
    return params.alpha * params.V - params.c1


def phase_two_gain(params: ScenarioParams) -> float:
    """Undiscounted expected phase-two value, ``p2 * (1 - alpha) * V``."""
    return params.p2 * (1.0 - params.alpha) * params.V


def phase_two_increment(params: ScenarioParams, t: float) -> float:
    """What phase two adds on top of phase one when it completes at time ``t``.

    The cost ``c2`` is paid upfront and is not discounted.
    """
    t = _check_time(t)
    return phase_two_gain(params) * math.exp(-params.delta * t) - params.c2


def phase_two_payoff(params: ScenarioParams, t: float) -> float:
    # Built from the two pieces so that pi2 == pi1 + increment holds bit for bit.
    return phase_one_payoff(params) + phase_two_increment(params, t)


def limiting_payoff(params: ScenarioParams) -> float | Indicator:
    """Two-phase payoff as t goes to infinity, i.e. ``pi1 - c2``.

    With ``delta == 0`` and a positive phase-two gain the discounted term
    never decays and :attr:`Indicator.NON_CONVERGENT` is returned instead.
    """
    if params.delta == 0.0 and phase_two_gain(params) > 0.0:
        return Indicator.NON_CONVERGENT
    return phase_one_payoff(params) - params.c2


def payoff_time_gradient(params: ScenarioParams, t: float) -> float:
    """d(pi2)/dt, in money per unit time."""
    t = _check_time(t)
    return -params.delta * phase_two_gain(params) * math.exp(-params.delta * t)


def _log_ratio(a: float, b: float) -> float:
    ratio = a / b
    if math.isfinite(ratio):
        return math.log(ratio)
    # b is tiny (possibly subnormal); the quotient overflows but the logs do not
    return math.log(a) - math.log(b)


def _root_or_always(root: float) -> float | Indicator:
    # Overflow means a positive but tiny delta: no float t reaches the crossing.
    return root if math.isfinite(root) else Indicator.ALWAYS


def break_even_vs_phase_one(params: ScenarioParams) -> float | Indicator | None:
    """Time at which a two-phase attack stops beating phase one alone.

    Returns the unique ``t* >= 0`` where the phase-two increment is zero.
    ``None`` means two-phase never strictly wins (not even at t=0).
    :attr:`Indicator.ALWAYS` means it wins for every t: either there is no
    discounting, or ``c2 == 0`` so the increment only approaches zero.
    """
    gain = phase_two_gain(params)
    if gain <= params.c2:
        return None
    if params.delta == 0.0 or params.c2 == 0.0:
        return Indicator.ALWAYS
    return _root_or_always(_log_ratio(gain, params.c2) / params.delta)


def break_even_vs_zero(params: ScenarioParams) -> float | Indicator | None:
    """Time at which the two-phase payoff drops to zero.

    ``pi2(t) = gain*exp(-delta*t) - need`` with ``need = c1 + c2 - alpha*V``.
    Returns the root when ``0 < need < gain``, :attr:`Indicator.ALWAYS` when
    pi2 stays positive for every t, and ``None`` when pi2 <= 0 already at t=0.
    """
    gain = phase_two_gain(params)
    need = params.c1 + params.c2 - params.alpha * params.V
    if params.delta == 0.0:
        return Indicator.ALWAYS if gain - need > 0.0 else None
    if need < 0.0 or (need == 0.0 and gain > 0.0):
        return Indicator.ALWAYS
    if need >= gain:
        return None
    return _root_or_always(_log_ratio(gain, need) / params.delta)


def optimal_action(params: ScenarioParams, t: float) -> AttackerAction:
    """Best response of the attacker at completion time ``t``.

    Acting requires a strictly positive payoff. At equal positive payoffs
    the attacker stops after phase one (less effort for the same profit).
    """
    pi1 = phase_one_payoff(params)
    pi2 = phase_two_payoff(params, t)
    return classify(pi1, pi2)


def classify(pi1: float, pi2: float) -> AttackerAction:
    if max(pi1, pi2) <= 0.0:
        return AttackerAction.NO_ATTACK
    if pi2 > pi1:
        return AttackerAction.TWO_PHASE
    return AttackerAction.PHASE_ONE_ONLY


@dataclass(frozen=True)
class StageSpec:
    """One stage of an N-stage attack.

    ``p`` is the success probability given the attacker reached this stage,
    ``duration`` the time the stage adds before its value is realized.
    """

    alpha: float
    p: float
    cost: float
    duration: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_value("alpha", self.alpha, 1.0))
        object.__setattr__(self, "p", check_value("p", self.p, 1.0))
        object.__setattr__(self, "cost", check_value("cost", self.cost))
        object.__setattr__(self, "duration", check_value("duration", self.duration))


# Slack for fractions that are meant to sum to one, e.g. alpha + (1 - alpha).
_FRACTION_SLACK = 1e-12


def multi_stage_payoff(V: float, delta: float, stages: Sequence[StageSpec]) -> float:
    """Expected profit of a sequence of stages.

    Stage k pays ``alpha_k * V`` with the probability of surviving stages
    1..k, discounted over the cumulative duration. Every stage cost is
    charged upfront and undiscounted. With stages ``(alpha, 1, c1, 0)`` and
    ``(1 - alpha, p2, c2, t)`` this is exactly the two-phase payoff.
    """
    V = check_param("V", V)
    delta = check_param("delta", delta)
    if not stages:
        raise ParameterError("at least one stage is required", "stages")
    for stage in stages:
        if not isinstance(stage, StageSpec):
            raise ParameterError(f"expected StageSpec, got {stage!r}", "stages")
    if sum(s.alpha for s in stages) > 1.0 + _FRACTION_SLACK:
        raise ParameterError("stage alphas must sum to at most 1", "alpha")

    total = 0.0
    reach = 1.0
    elapsed = 0.0
    for stage in stages:
        reach *= stage.p
        elapsed += stage.duration
        total += reach * stage.alpha * V * math.exp(-delta * elapsed) - stage.cost
    return total
