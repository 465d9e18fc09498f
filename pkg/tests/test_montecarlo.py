import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from attack_econ import (
    ParamDistribution,
    ParameterError,
    ScenarioConfig,
    ScenarioParams,
    optimal_action,
    phase_one_payoff,
    phase_two_payoff,
    run_mc,
)
from attack_econ.payoff import PARAM_NAMES
from oracles import pi2_plain


def all_points(p):
    return tuple(ParamDistribution.point(name, getattr(p, name)) for name in PARAM_NAMES)


def label_probs(r):
    return {"NoAttack": r.p_no_attack, "PhaseOneOnly": r.p_phase_one, "TwoPhase": r.p_two_phase}


def test_point_mass_fig2(fig2):
    r = run_mc(ScenarioConfig.from_params(fig2, distributions=all_points(fig2)), t=0.0, n=25, seed=3)
    assert r.mean_pi2 == 600.0
    assert r.mean_pi1 == 400.0
    assert r.p_two_phase == 1.0 and r.p_phase_one == 0.0 and r.p_no_attack == 0.0
    assert r.ci95_pi2 == 0.0
    assert r.n == 25 and r.seed == 3


@settings(max_examples=40, deadline=None)
@given(
    st.builds(
        ScenarioParams,
        V=st.floats(0, 1e5),
        alpha=st.floats(0, 1),
        p2=st.floats(0, 1),
        delta=st.floats(0, 3),
        c1=st.floats(0, 1e5),
        c2=st.floats(0, 1e5),
    ),
    st.floats(0, 10),
    st.integers(1, 50),
)
def test_degenerate_sampling_is_exact(p, t, n):
    r = run_mc(ScenarioConfig.from_params(p, distributions=all_points(p)), t=t, n=n, seed=0)
    assert r.mean_pi1 == phase_one_payoff(p)
    assert r.mean_pi2 == phase_two_payoff(p, t)
    probs = label_probs(r)
    assert probs[optimal_action(p, t).value] == 1.0
    assert sum(probs.values()) == 1.0


def test_uniform_p2_mean(fig2):
    cfg = ScenarioConfig.from_params(fig2.with_alpha(0.0), distributions=(ParamDistribution.uniform("p2", 0.0, 1.0),))
    r = run_mc(cfg, t=0.0, n=200_000, seed=11)
    # pi2 = -300 + 1000*p2 is linear in p2, so E[pi2] = -300 + 1000*0.5
    assert abs(r.mean_pi2 - 200.0) <= 3 * r.stderr_pi2
    assert abs(r.mean_pi2 - 200.0) <= 5.0
    # P(pi2 > 0) = P(p2 > 0.3)
    assert r.p_two_phase == pytest.approx(0.7, abs=0.005)
    assert r.mean_pi1 == -100.0


def test_uniform_delta_against_integral_and_quadrature(fig2):
    cfg = ScenarioConfig.from_params(fig2.with_alpha(0.0), distributions=(ParamDistribution.uniform("delta", 0.4, 1.2),))
    r = run_mc(cfg, t=1.0, n=200_000, seed=5)
    exact = -300 + 800 * (math.exp(-0.4) - math.exp(-1.2)) / 0.8
    assert exact == pytest.approx(69.1258341, abs=1e-6)
    assert abs(r.mean_pi2 - exact) <= 5.0

    m = 10_000
    width = 0.8 / m
    quad = sum(pi2_plain(1000, 0, 0.8, 0.4 + (i + 0.5) * width, 100, 200, 1.0) for i in range(m)) / m
    assert quad == pytest.approx(exact, abs=1e-6)
    assert abs(r.mean_pi2 - quad) <= 3 * r.stderr_pi2


def test_beta_alpha_mean(fig2):
    cfg = ScenarioConfig.from_params(fig2, distributions=(ParamDistribution.beta("alpha", 2.0, 5.0),))
    t = 0.5
    r = run_mc(cfg, t=t, n=100_000, seed=2024)
    disc = 0.8 * 1000 * math.exp(-0.8 * t)
    mean_alpha = 2.0 / 7.0
    exact = mean_alpha * (1000 - disc) + disc - 300
    assert abs(r.mean_pi2 - exact) <= 3 * r.stderr_pi2
    sd_alpha = math.sqrt(2.0 * 5.0 / (7.0**2 * 8.0))
    assert abs(r.mean_pi1 - (mean_alpha * 1000 - 100)) <= 3 * 1000 * sd_alpha / math.sqrt(r.n)


def test_seed_determinism(fig2):
    cfg = ScenarioConfig.from_params(
        fig2,
        distributions=(ParamDistribution.uniform("p2", 0.2, 0.9), ParamDistribution.beta("alpha", 2, 2)),
    )
    a = run_mc(cfg, t=1.0, n=5000, seed=99)
    b = run_mc(cfg, t=1.0, n=5000, seed=99)
    assert json.dumps(a.to_dict()) == json.dumps(b.to_dict())
    c = run_mc(cfg, t=1.0, n=5000, seed=100)
    assert c != a


def test_distribution_order_does_not_matter(fig2):
    d1 = (ParamDistribution.uniform("p2", 0.2, 0.9), ParamDistribution.uniform("delta", 0.1, 2.0))
    a = run_mc(ScenarioConfig.from_params(fig2, distributions=d1), t=1.0, n=2000, seed=1)
    b = run_mc(ScenarioConfig.from_params(fig2, distributions=d1[::-1]), t=1.0, n=2000, seed=1)
    assert a == b


def test_probability_simplex(fig2):
    cfg = ScenarioConfig.from_params(
        fig2,
        distributions=(
            ParamDistribution.uniform("alpha", 0.0, 1.0),
            ParamDistribution.uniform("delta", 0.0, 3.0),
            ParamDistribution.uniform("c2", 0.0, 800.0),
        ),
    )
    r = run_mc(cfg, t=2.0, n=20_000, seed=8)
    probs = label_probs(r).values()
    assert all(0.0 <= q <= 1.0 for q in probs)
    assert abs(sum(probs) - 1.0) <= 1e-12
    assert min(probs) > 0.0  # all three regions are hit


def test_sampled_values_stay_in_bounds():
    import numpy as np

    rng = np.random.default_rng(0)
    for d in (ParamDistribution.uniform("alpha", 0.0, 1.0), ParamDistribution.beta("p2", 0.5, 0.5)):
        xs = d.sample(rng, 100_000)
        assert xs.min() >= 0.0 and xs.max() <= 1.0


@pytest.mark.parametrize("n", [0, -5, 2.5, True])
def test_bad_sample_count(fig2, n):
    with pytest.raises(ParameterError):
        run_mc(ScenarioConfig.from_params(fig2), t=0.0, n=n, seed=0)


def test_bad_seed_and_time(fig2):
    cfg = ScenarioConfig.from_params(fig2)
    with pytest.raises(ParameterError):
        run_mc(cfg, t=0.0, n=10, seed=-1)
    with pytest.raises(ParameterError):
        run_mc(cfg, t=-1.0, n=10, seed=0)


def test_bad_distributions():
    with pytest.raises(ParameterError):
        ParamDistribution.uniform("p2", 0.9, 0.1)
    with pytest.raises(ParameterError):
        ParamDistribution.point("alpha", 2.0)
    with pytest.raises(ParameterError):
        ParamDistribution.beta("p2", -1.0, 1.0)
    with pytest.raises(ParameterError):
        ParamDistribution("gamma", "point", 1.0, 1.0)
    with pytest.raises(ParameterError):
        ScenarioConfig(distributions=(ParamDistribution.point("V", 1.0), ParamDistribution.point("V", 2.0)))
