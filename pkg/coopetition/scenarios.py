"""Network scenarios of the Monte-Carlo campaign."""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from coopetition.channel.channel_model import DEFAULT_BETA
from coopetition.channel.profiles import EVA, TapProfile
from coopetition.config import (CoalitionConfig, GameConfig, GridConfig,
                                NoCoalitionOrder, PowerPolicy)
from coopetition.player import PlayerProfile
from coopetition.pricing_params import PricingParams
from coopetition.utils import make_rng

DEFAULT_TARGET_BEP = 1e-4
RANDOM_SNR_RANGE_DB = (5.0, 26.0)


@dataclass
class ScenarioSpec:
    """A network scenario and the default algorithm run on it.

    Players are either listed explicitly in `player_profiles` or drawn per
    trial with an average SNR uniform in `random_snr_db` (dB) and the given
    `revenue_params` (all 1 when omitted).
    """
    name: str
    num_players: int
    player_profiles: Optional[List[PlayerProfile]] = None
    random_snr_db: Optional[Tuple[float, float]] = None
    revenue_params: Optional[List[float]] = None
    target_bep: float = DEFAULT_TARGET_BEP
    game: GameConfig = field(default_factory=GameConfig)
    coalition: CoalitionConfig = field(default_factory=CoalitionConfig)
    pricing: PricingParams = field(default_factory=PricingParams)
    power_policy: PowerPolicy = field(default_factory=PowerPolicy)
    grid: GridConfig = field(default_factory=GridConfig)
    tap_profile: TapProfile = EVA
    beta: float = DEFAULT_BETA
    trials: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.num_players < 1:
            raise ValueError("num_players must be at least 1, got "
                             f"{self.num_players}.")
        if self.trials < 1:
            raise ValueError(
                f"trials must be at least 1, got {self.trials}.")
        if not self.beta > 0.0:
            raise ValueError(f"beta must be positive, got {self.beta}.")
        if (self.player_profiles is None) == (self.random_snr_db is None):
            raise ValueError("Exactly one of player_profiles and "
                             "random_snr_db must be given.")
        if self.player_profiles is not None:
            self._check_length("player_profiles", self.player_profiles)
        if self.random_snr_db is not None:
            low, high = self.random_snr_db
            if not low < high:
                raise ValueError("random_snr_db must be a range [lo, hi] "
                                 f"with lo < hi, got {self.random_snr_db}.")
        if self.revenue_params is not None:
            self._check_length("revenue_params", self.revenue_params)

    def _check_length(self, name: str, values: Sequence) -> None:
        if len(values) != self.num_players:
            raise ValueError(f"{name} has {len(values)} entries for "
                             f"{self.num_players} players.")

    @property
    def default_algorithm(self) -> str:
        order = self.coalition.no_coalition_order
        rule = "coalition" if order == NoCoalitionOrder.NONE else order.value
        return f"{self.game.tag}-{rule}"

    def players_for_trial(self, seed: int) -> List[PlayerProfile]:
        if self.player_profiles is not None:
            return list(self.player_profiles)
        assert self.random_snr_db is not None
        low, high = self.random_snr_db
        snr_db = make_rng(seed).uniform(low, high, size=self.num_players)
        revenue = self.revenue_params or [1.0] * self.num_players
        return [
            PlayerProfile(revenue_param=float(r),
                          target_bep=self.target_bep,
                          avg_snr_db=float(s))
            for r, s in zip(revenue, snr_db)
        ]


def _fixed_players(snr_db: Sequence[float]) -> List[PlayerProfile]:
    return [
        PlayerProfile(revenue_param=1.0,
                      target_bep=DEFAULT_TARGET_BEP,
                      avg_snr_db=s) for s in snr_db
    ]


def builtin_scenarios() -> List[ScenarioSpec]:
    """The five reference scenarios on K=300 subcarriers of 15 kHz."""
    return [
        ScenarioSpec(name="scenario1",
                     num_players=8,
                     player_profiles=_fixed_players([15.0] * 8)),
        ScenarioSpec(name="scenario2",
                     num_players=8,
                     player_profiles=_fixed_players([10.0] * 4 +
                                                    [20.0] * 4)),
        ScenarioSpec(name="scenario3",
                     num_players=8,
                     random_snr_db=RANDOM_SNR_RANGE_DB),
        ScenarioSpec(name="scenario4",
                     num_players=12,
                     random_snr_db=RANDOM_SNR_RANGE_DB),
        ScenarioSpec(name="scenario5",
                     num_players=8,
                     random_snr_db=RANDOM_SNR_RANGE_DB,
                     revenue_params=[0.8, 0.8, 1.6, 1.6, 2.4, 2.4, 3.2,
                                     3.2]),
    ]


def get_builtin_scenario(name: str) -> ScenarioSpec:
    """Looks a built-in scenario up by name ("scenario3") or number ("3")."""
    key = name if name.startswith("scenario") else f"scenario{name}"
    for spec in builtin_scenarios():
        if spec.name == key:
            return spec
    raise ValueError(f"Unknown scenario: {name}. Must be 1-5 or a "
                     "scenario file.")
