import dataclasses
import os

import pytest

from coopetition.config import ParallelConfig
from coopetition.engine import coopetition_engine
from coopetition.engine.coopetition_engine import (CoopetitionEngine,
                                                   run_campaign, run_trial)
from coopetition.scenarios import get_builtin_scenario

ALGORITHMS = ["C1c-coalition", "C2a-strongest", "C4c-weakest", "rr",
              "maxsnr", "shapley"]


@pytest.fixture
def scenario3():
    return dataclasses.replace(get_builtin_scenario("3"), trials=3)


@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_run_trial(scenario3, algorithm: str):
    result = run_trial(scenario3, 0, algorithm)
    assert not result.failed
    assert result == run_trial(scenario3, 0, algorithm)
    assert len(result.sc_counts) == 8
    assert sum(result.sc_counts) <= 300
    metrics = result.metrics
    assert len(metrics.per_player_rate) == 8
    assert metrics.network_se > 0.0
    assert 1.0 / 8 <= metrics.jain <= 1.0
    assert metrics.sc_utilization == sum(result.sc_counts) / 300
    if result.algorithm.endswith("coalition"):
        assert result.num_stages >= 1
        assert result.num_iterations == 0


def test_run_trial_default_algorithm(scenario3):
    result = run_trial(scenario3, 1)
    assert result.algorithm == "C1c-coalition"
    assert result == run_trial(scenario3, 1, "C1c-coalition")
    assert result != run_trial(scenario3, 2, "C1c-coalition")


def test_max_snr_uses_every_subcarrier(scenario3):
    for index in range(3):
        result = run_trial(scenario3, index, "maxsnr")
        assert result.metrics.sc_utilization == 1.0


def test_failed_trial_is_recorded(scenario3, monkeypatch):

    def fail(*args, **kwargs):
        raise ValueError("demands diverged")

    monkeypatch.setattr(coopetition_engine, "play_competition", fail)
    result = run_trial(scenario3, 0, "C1a-coalition")
    assert result.failed
    assert result.metrics is None
    assert result.flags == ["error:demands diverged"]
    # Baselines do not play the competition.
    assert not run_trial(scenario3, 0, "rr").failed


def test_results_do_not_depend_on_algorithm_order(scenario3):
    engine = CoopetitionEngine(ParallelConfig(), log_stats=False)
    forward = engine.run([scenario3], ["C3c-coalition", "maxsnr"],
                         use_tqdm=False)
    backward = engine.run([scenario3], ["maxsnr", "C3c-coalition"],
                          use_tqdm=False)
    assert len(forward) == 6
    key = lambda r: (r.algorithm, r.trial_index)  # noqa: E731
    assert sorted(forward, key=key) == sorted(backward, key=key)
    assert [r.trial_index for r in forward[:3]] == [0, 1, 2]


def test_engine_rejects_unknown_tags_before_running(scenario3):
    engine = CoopetitionEngine(ParallelConfig(), log_stats=False)
    with pytest.raises(ValueError, match="Unknown algorithm tag"):
        engine.run([scenario3], ["rr", "bogus"], use_tqdm=False)
    assert engine.num_done == 0


def test_run_campaign_is_reproducible(scenario3, tmp_path):
    specs = [scenario3, dataclasses.replace(get_builtin_scenario("1"),
                                            trials=2)]
    algorithms = ["C1c-coalition", "rr"]
    first = os.path.join(str(tmp_path), "first")
    second = os.path.join(str(tmp_path), "second")
    summary = run_campaign(specs, algorithms, first)
    run_campaign(specs, algorithms, second)

    assert [(r.scenario, r.algorithm, r.count) for r in summary] == [
        ("scenario3", "C1c-coalition", 3),
        ("scenario3", "rr", 3),
        ("scenario1", "C1c-coalition", 2),
        ("scenario1", "rr", 2),
    ]
    names = sorted(os.listdir(first))
    assert names == [
        "summary.csv", "trials.csv", "tradeoff_scenario1.csv",
        "tradeoff_scenario3.csv"
    ]
    for name in names:
        with open(os.path.join(first, name), "rb") as f1, open(
                os.path.join(second, name), "rb") as f2:
            assert f1.read() == f2.read()
