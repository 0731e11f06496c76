from coopetition.engine.algorithms import (all_algorithm_tags,
                                           parse_algorithm_tag)
from coopetition.engine.arg_utils import CampaignArgs
from coopetition.engine.coopetition_engine import (CoopetitionEngine,
                                                   run_campaign, run_trial)
from coopetition.engine.metrics import (complexity_estimate,
                                        expected_coalition_stages, jain_index,
                                        network_spectral_efficiency)

__all__ = [
    "all_algorithm_tags",
    "parse_algorithm_tag",
    "CampaignArgs",
    "CoopetitionEngine",
    "run_campaign",
    "run_trial",
    "complexity_estimate",
    "expected_coalition_stages",
    "jain_index",
    "network_spectral_efficiency",
]
