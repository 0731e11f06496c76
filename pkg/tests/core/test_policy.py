import pytest

from coopetition.config import CoalitionConfig
from coopetition.core.policy import (Coalitions, PolicyFactory,
                                     StrongestFirst, WeakestFirst)


def test_policy_factory():
    assert PolicyFactory.policy_names() == [
        "coalition", "strongest", "weakest"
    ]
    config = CoalitionConfig(0.6)
    policy = PolicyFactory.get_policy("coalition", config=config)
    assert isinstance(policy, Coalitions)
    assert policy.config is config
    assert isinstance(PolicyFactory.get_policy("strongest"), StrongestFirst)
    assert isinstance(PolicyFactory.get_policy("weakest", config=config),
                      WeakestFirst)
    with pytest.raises(ValueError, match="Unknown order rule"):
        PolicyFactory.get_policy("random")


def test_policies_order_players():
    sc_counts = [3, 1, 2]
    esnr = [1.0, 1.0, 1.0]
    strongest = PolicyFactory.get_policy("strongest")
    assert strongest.get_order(sc_counts, esnr,
                               300).player_sequence == [0, 2, 1]
    weakest = PolicyFactory.get_policy("weakest")
    assert weakest.get_order(sc_counts, esnr,
                             300).player_sequence == [1, 2, 0]
    coalitions = PolicyFactory.get_policy("coalition")
    order = coalitions.get_order(sc_counts, esnr, 300)
    # 3 + 1 is the weakest strength above half of 6.
    assert order.player_sequence == [0, 1, 2]
    assert order.stage_of_player == {0: 1, 1: 1, 2: 2}
