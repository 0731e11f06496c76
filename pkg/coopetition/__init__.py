"""coopetition: competition and cooperation for spectrum sharing in OFDMA
cognitive-radio networks"""

from coopetition.channel import (ChannelRealization, TapProfile,
                                 effective_snr, generate_channel,
                                 make_triplets)
from coopetition.config import (CoalitionConfig, GameConfig, GameMode,
                                GameType, GridConfig, IntraOrder,
                                NoCoalitionOrder, ParallelConfig, PowerPolicy,
                                PowerPolicyType, ShapleyConfig)
from coopetition.engine import (CampaignArgs, CoopetitionEngine, run_campaign,
                                run_trial)
from coopetition.outputs import (AcquisitionOrder, Assignment, DemandVector,
                                 PowerAllocation, SubcarrierMap, TrialMetrics,
                                 TrialResult)
from coopetition.player import PlayerProfile, Triplet
from coopetition.pricing_params import PricingParams
from coopetition.scenarios import ScenarioSpec, builtin_scenarios

__version__ = "0.1.0"

__all__ = [
    "ChannelRealization",
    "TapProfile",
    "effective_snr",
    "generate_channel",
    "make_triplets",
    "CoalitionConfig",
    "GameConfig",
    "GameMode",
    "GameType",
    "GridConfig",
    "IntraOrder",
    "NoCoalitionOrder",
    "ParallelConfig",
    "PowerPolicy",
    "PowerPolicyType",
    "ShapleyConfig",
    "CampaignArgs",
    "CoopetitionEngine",
    "run_campaign",
    "run_trial",
    "AcquisitionOrder",
    "Assignment",
    "DemandVector",
    "PowerAllocation",
    "SubcarrierMap",
    "TrialMetrics",
    "TrialResult",
    "PlayerProfile",
    "Triplet",
    "PricingParams",
    "ScenarioSpec",
    "builtin_scenarios",
]
