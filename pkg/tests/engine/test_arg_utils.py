import argparse
import json
import os

import pytest

from coopetition.config import IntraOrder, PowerPolicyType
from coopetition.engine.arg_utils import CampaignArgs


def _parse(argv):
    parser = CampaignArgs.add_cli_args(argparse.ArgumentParser())
    return CampaignArgs.from_cli_args(parser.parse_args(argv))


def test_defaults():
    args = _parse([])
    assert args == CampaignArgs()
    specs, algorithms, parallel = args.create_campaign_configs()
    assert [s.name for s in specs] == ["scenario1"]
    assert specs[0].trials == 1000
    assert algorithms == ["C1c-coalition"]
    assert not parallel.worker_use_ray


def test_overrides():
    args = _parse([
        "--scenario", "4", "--game", "c3", "--mode", "adaptive", "--order",
        "weakest", "--trials", "7", "--seed", "11", "--mu", "0.6",
        "--intra-order", "flexibility", "--power", "equal", "--total-power",
        "2.0", "--min-fraction", "0.25"
    ])
    specs, algorithms, _ = args.create_campaign_configs()
    spec = specs[0]
    assert algorithms == ["C3a-weakest"]
    assert spec.name == "scenario4"
    assert spec.trials == 7
    assert spec.seed == 11
    assert spec.coalition.quota == 0.6
    assert spec.coalition.intra_order == IntraOrder.FLEXIBILITY_DESCENDING
    assert spec.power_policy.policy == PowerPolicyType.EQUAL_PER_PLAYER
    assert spec.power_policy.total_power == 2.0
    assert spec.game.min_fraction == 0.25


def test_algorithm_selection():
    assert _parse(["--baseline", "maxsnr"]).algorithm_tags() == ["maxsnr"]
    args = _parse(["--algorithms", "rr", "C2a-strongest", "--baseline",
                   "maxsnr"])
    assert args.algorithm_tags() == ["rr", "C2a-strongest"]
    tags = _parse(["--all-algorithms"]).algorithm_tags()
    assert len(tags) == 33


def test_all_scenarios():
    specs, _, _ = _parse(["--scenario", "all",
                          "--trials", "2"]).create_campaign_configs()
    assert len(specs) == 5
    assert all(s.trials == 2 for s in specs)


def test_scenario_file(tmp_path):
    path = os.path.join(str(tmp_path), "small.json")
    with open(path, "w", encoding="utf-8") as f:
        json.dump(
            {
                "name": "small",
                "num_players": 2,
                "random_snr_db": [5.0, 10.0],
                "num_subcarriers": 16,
                "trials": 4,
            }, f)
    specs, _, _ = _parse(["--scenario", path]).create_campaign_configs()
    assert specs[0].name == "small"
    assert specs[0].grid.num_subcarriers == 16
    assert specs[0].trials == 4


def test_unknown_scenario():
    with pytest.raises(ValueError, match="Unknown scenario"):
        _parse(["--scenario", "9"]).create_campaign_configs()


def _write_scenario(tmp_path, **fields) -> str:
    path = os.path.join(str(tmp_path), "own_game.json")
    content = {
        "name": "own_game",
        "num_players": 3,
        "random_snr_db": [5.0, 20.0],
        "num_subcarriers": 24,
        "trials": 2,
    }
    content.update(fields)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(content, f)
    return path


def test_scenario_file_selects_its_own_algorithm(tmp_path):
    path = _write_scenario(tmp_path,
                           game_type="c5",
                           mode="adaptive",
                           order_rule="weakest")
    _, algorithms, _ = _parse(["--scenario",
                               path]).create_campaign_configs()
    assert algorithms == ["C5a-weakest"]

    # Each flag overrides only its own part of the tag.
    _, algorithms, _ = _parse(["--scenario", path, "--game",
                               "c2"]).create_campaign_configs()
    assert algorithms == ["C2a-weakest"]
    _, algorithms, _ = _parse(["--scenario", path, "--mode", "classic",
                               "--order",
                               "coalition"]).create_campaign_configs()
    assert algorithms == ["C5c-coalition"]


def test_all_scenarios_share_one_default_tag():
    args = _parse(["--scenario", "all", "--order", "strongest"])
    assert args.algorithm_tags() == ["C1c-strongest"]
