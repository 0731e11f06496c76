"""JSON scenario files.

Field names mirror `ScenarioSpec`; the game, coalition, grid and power
settings are flattened to top-level keys.
"""
import os
from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from coopetition.channel.profiles import TapProfile, get_tap_profile
from coopetition.config import (CoalitionConfig, GameConfig, GridConfig,
                                PowerPolicy)
from coopetition.player import PlayerProfile
from coopetition.pricing_params import PricingParams
from coopetition.scenarios import DEFAULT_TARGET_BEP, ScenarioSpec


class PlayerProfileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    revenue_param: float = 1.0
    target_bep: float = DEFAULT_TARGET_BEP
    avg_snr_db: float = 15.0


class PricingModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    fixed_cost: float = 0.0
    unit_cost: float = 1.0
    delta_x: float = 0.5
    delta_y: float = 0.5
    max_adapt_iters: int = 64
    bandwidth_unit_hz: float = 1e6


class TapProfileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    delays_ns: List[float]
    powers_db: List[float]


class ScenarioFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    num_players: int
    player_profiles: Optional[List[PlayerProfileModel]] = None
    random_snr_db: Optional[Tuple[float, float]] = None
    revenue_params: Optional[List[float]] = None
    target_bep: float = DEFAULT_TARGET_BEP
    game_type: str = "c1"
    mode: str = "classic"
    min_fraction: float = 0.5
    order_rule: Literal["coalition", "strongest", "weakest"] = "coalition"
    quota: float = 0.5
    intra_order: str = "strength"
    pricing: PricingModel = Field(default_factory=PricingModel)
    power_policy: str = "proportional"
    total_power: float = 1.0
    num_subcarriers: int = 300
    subcarrier_spacing_hz: float = 15e3
    tap_profile: Union[str, TapProfileModel] = "EVA"
    beta: float = 30.0
    trials: int = 1000
    seed: int = 0

    def to_spec(self) -> ScenarioSpec:
        game = GameConfig(self.game_type, self.mode, self.min_fraction)
        no_coalition_order = ("none" if self.order_rule == "coalition" else
                              self.order_rule)
        if isinstance(self.tap_profile, str):
            tap_profile = get_tap_profile(self.tap_profile)
        else:
            tap_profile = TapProfile(tuple(self.tap_profile.delays_ns),
                                     tuple(self.tap_profile.powers_db))
        players = None
        if self.player_profiles is not None:
            players = [PlayerProfile(**p.model_dump())
                       for p in self.player_profiles]
        return ScenarioSpec(
            name=self.name,
            num_players=self.num_players,
            player_profiles=players,
            random_snr_db=self.random_snr_db,
            revenue_params=self.revenue_params,
            target_bep=self.target_bep,
            game=game,
            coalition=CoalitionConfig(self.quota, self.intra_order,
                                      no_coalition_order),
            pricing=PricingParams(exponent=game.exponent,
                                  **self.pricing.model_dump()),
            power_policy=PowerPolicy(self.power_policy, self.total_power),
            grid=GridConfig(self.num_subcarriers, self.subcarrier_spacing_hz),
            tap_profile=tap_profile,
            beta=self.beta,
            trials=self.trials,
            seed=self.seed,
        )


def load_scenario_file(path: str) -> ScenarioSpec:
    """Reads and validates a JSON scenario file."""
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise OSError(f"Failed to read scenario file {path}: {e}") from e
    try:
        return ScenarioFile.model_validate_json(text).to_spec()
    except ValidationError as e:
        raise ValueError(
            f"Invalid scenario file {os.path.basename(path)} ({path}): "
            f"{e}") from e
    except ValueError as e:
        raise ValueError(f"Invalid scenario file {path}: {e}") from e
