"""
Monte Carlo propagation of parameter uncertainty.

Every draw is evaluated with the scalar payoff functions, so a draw that
happens to equal a fixed scenario reproduces its deterministic payoffs
bit for bit. Results depend only on (config, t, n, seed).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import asdict, dataclass, replace

import numpy as np

from .errors import ParameterError
from .payoff import (
    PARAM_NAMES,
    AttackerAction,
    check_value,
    classify,
    phase_one_payoff,
    phase_two_payoff,
)
from .scenario import ScenarioConfig, resolve

Z95 = 1.96


@dataclass(frozen=True)
class MCResult:
    n: int
    seed: int
    mean_pi1: float
    mean_pi2: float
    ci95_pi2: float  # half-width, normal approximation
    p_no_attack: float
    p_phase_one: float
    p_two_phase: float

    @property
    def stderr_pi2(self) -> float:
        return self.ci95_pi2 / Z95

    def to_dict(self) -> dict:
        return asdict(self)


def _mean_and_var(xs: list[float]) -> tuple[float, float]:
    # Shift by the first sample: exact for constant data, stable otherwise.
    n = len(xs)
    x0 = xs[0]
    mean = x0 + math.fsum(x - x0 for x in xs) / n
    if n < 2:
        return mean, 0.0
    var = math.fsum((x - mean) ** 2 for x in xs) / (n - 1)
    return mean, var


def run_mc(config: ScenarioConfig, t: float, n: int, seed: int) -> MCResult:
    """Estimate expected payoffs and action probabilities at time ``t``.

    Parameters without a distribution stay at their resolved values.
    Distributions are sampled in a fixed parameter order from one
    ``numpy.random.default_rng(seed)`` stream.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParameterError(f"sample count must be an integer >= 1, got {n!r}", "samples")
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise ParameterError(f"seed must be a non-negative integer, got {seed!r}", "seed")
    t = check_value("t", t)
    base = resolve(config)

    rng = np.random.default_rng(seed)
    by_target = {d.target: d for d in config.distributions}
    columns = {}
    for name in PARAM_NAMES:
        if name in by_target:
            columns[name] = by_target[name].sample(rng, n).tolist()

    pi1s, pi2s = [], []
    actions: Counter = Counter()
    for i in range(n):
        params = replace(base, **{k: col[i] for k, col in columns.items()}) if columns else base
        pi1 = phase_one_payoff(params)
        pi2 = phase_two_payoff(params, t)
        pi1s.append(pi1)
        pi2s.append(pi2)
        actions[classify(pi1, pi2)] += 1

    mean_pi1, _ = _mean_and_var(pi1s)
    mean_pi2, var_pi2 = _mean_and_var(pi2s)
    return MCResult(
        n=n,
        seed=seed,
        mean_pi1=mean_pi1,
        mean_pi2=mean_pi2,
        ci95_pi2=Z95 * math.sqrt(var_pi2 / n),
        p_no_attack=actions[AttackerAction.NO_ATTACK] / n,
        p_phase_one=actions[AttackerAction.PHASE_ONE_ONLY] / n,
        p_two_phase=actions[AttackerAction.TWO_PHASE] / n,
    )
