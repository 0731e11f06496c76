from coopetition.core.allocator import (acquire_subcarriers, allocate_budgets,
                                        allocate_power, player_rate,
                                        player_rates, water_fill, water_level)
from coopetition.core.coalition import (Coalition, CoalitionFormation,
                                        coalition_flexibility,
                                        coalition_strength, form_coalitions,
                                        no_coalition_order, player_flexibility)
from coopetition.core.cournot import (classic_scaling, monopoly_demand,
                                      oligopoly_equilibrium,
                                      parameter_adaptation, play_competition,
                                      profit, spectral_efficiency_estimate)
from coopetition.core.policy import PolicyFactory

__all__ = [
    "acquire_subcarriers",
    "allocate_budgets",
    "allocate_power",
    "player_rate",
    "player_rates",
    "water_fill",
    "water_level",
    "Coalition",
    "CoalitionFormation",
    "coalition_flexibility",
    "coalition_strength",
    "form_coalitions",
    "no_coalition_order",
    "player_flexibility",
    "classic_scaling",
    "monopoly_demand",
    "oligopoly_equilibrium",
    "parameter_adaptation",
    "play_competition",
    "profit",
    "spectral_efficiency_estimate",
    "PolicyFactory",
]
