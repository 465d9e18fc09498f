"""Payoffs and attacker actions over an (alpha, t) lattice."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .errors import ParameterError
from .payoff import (
    AttackerAction,
    ScenarioParams,
    check_value,
    classify,
    phase_one_payoff,
    phase_two_payoff,
)


@dataclass(frozen=True)
class SweepSpec:
    """Lattice definition. ``base.alpha`` is ignored; alpha is swept.

    Both axes include their endpoints and are uniformly spaced.
    """

    base: ScenarioParams
    alpha_min: float = 0.0
    alpha_max: float = 1.0
    alpha_steps: int = 11
    t_min: float = 0.0
    t_max: float = 5.0
    t_steps: int = 11

    def __post_init__(self):
        if not isinstance(self.base, ScenarioParams):
            raise ParameterError("base must be ScenarioParams", "base")
        for name, upper in (("alpha_min", 1.0), ("alpha_max", 1.0), ("t_min", float("inf")), ("t_max", float("inf"))):
            object.__setattr__(self, name, check_value(name, getattr(self, name), upper))
        if self.alpha_min > self.alpha_max:
            raise ParameterError("alpha_min must not exceed alpha_max", "alpha_min")
        if self.t_min > self.t_max:
            raise ParameterError("t_min must not exceed t_max", "t_min")
        for name in ("alpha_steps", "t_steps"):
            steps = getattr(self, name)
            if isinstance(steps, bool) or not isinstance(steps, int) or steps < 2:
                raise ParameterError(f"{name} must be an integer >= 2, got {steps!r}", name)

    def alphas(self) -> list[float]:
        return _axis(self.alpha_min, self.alpha_max, self.alpha_steps)

    def times(self) -> list[float]:
        return _axis(self.t_min, self.t_max, self.t_steps)


def _axis(lo: float, hi: float, steps: int) -> list[float]:
    # i*(hi-lo) is formed before dividing so that e.g. 3/10 rounds once.
    return [lo + i * (hi - lo) / (steps - 1) for i in range(steps)]


@dataclass(frozen=True)
class RegionCell:
    alpha: float
    t: float
    pi1: float
    pi2: float
    action: AttackerAction


@dataclass(frozen=True)
class SweepGrid:
    """Cells in row-major order: alpha ascending outer, t ascending inner."""

    spec: SweepSpec
    cells: tuple[RegionCell, ...]

    def rows(self) -> Iterator[tuple[RegionCell, ...]]:
        n = self.spec.t_steps
        for i in range(self.spec.alpha_steps):
            yield self.cells[i * n:(i + 1) * n]


def _row(base: ScenarioParams, alpha: float, times: list[float]) -> list[RegionCell]:
    params = base.with_alpha(alpha)
    pi1 = phase_one_payoff(params)
    out = []
    for t in times:
        pi2 = phase_two_payoff(params, t)
        out.append(RegionCell(alpha, t, pi1, pi2, classify(pi1, pi2)))
    return out


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepGrid:
    """Evaluate every lattice point.

    With ``workers > 1`` rows are computed on a thread pool; the result is
    identical to the serial run since rows are reassembled in alpha order.
    """
    alphas, times = spec.alphas(), spec.times()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda a: _row(spec.base, a, times), alphas))
    else:
        rows = [_row(spec.base, a, times) for a in alphas]
    return SweepGrid(spec, tuple(cell for row in rows for cell in row))


def action_frontier(grid: SweepGrid) -> list[tuple[float, float | None]]:
    """Per alpha row, the largest grid t at which two-phase is optimal.

    ``None`` when the row has no two-phase cell. Frontiers are grid points,
    not interpolated; use the closed-form break-even times for exact values.
    """
    frontier = []
    for row in grid.rows():
        last = None
        for cell in row:
            if cell.action is AttackerAction.TWO_PHASE:
                last = cell.t
        frontier.append((row[0].alpha, last))
    return frontier
