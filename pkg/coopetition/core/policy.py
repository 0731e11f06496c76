from typing import Optional, Sequence

from coopetition.config import CoalitionConfig, NoCoalitionOrder
from coopetition.core.coalition import form_coalitions, no_coalition_order
from coopetition.outputs import AcquisitionOrder


class Policy:
    """Decides the order in which players acquire their subcarriers."""

    def get_order(
        self,
        sc_counts: Sequence[int],
        esnr: Sequence[float],
        num_subcarriers: int,
    ) -> AcquisitionOrder:
        raise NotImplementedError


class Coalitions(Policy):

    def __init__(self, config: Optional[CoalitionConfig] = None) -> None:
        self.config = config or CoalitionConfig()

    def get_order(
        self,
        sc_counts: Sequence[int],
        esnr: Sequence[float],
        num_subcarriers: int,
    ) -> AcquisitionOrder:
        return form_coalitions(sc_counts, esnr, num_subcarriers, self.config)


class StrongestFirst(Policy):

    rule = NoCoalitionOrder.STRONGEST_FIRST

    def __init__(self, config: Optional[CoalitionConfig] = None) -> None:
        # Accepts the coalition config so all policies share one signature.
        del config

    def get_order(
        self,
        sc_counts: Sequence[int],
        esnr: Sequence[float],
        num_subcarriers: int,
    ) -> AcquisitionOrder:
        return no_coalition_order(sc_counts, esnr, self.rule)


class WeakestFirst(StrongestFirst):

    rule = NoCoalitionOrder.WEAKEST_FIRST


class PolicyFactory:

    _POLICY_REGISTRY = {
        'coalition': Coalitions,
        'strongest': StrongestFirst,
        'weakest': WeakestFirst,
    }

    @classmethod
    def get_policy(cls, policy_name: str, **kwargs) -> Policy:
        try:
            policy_cls = cls._POLICY_REGISTRY[policy_name]
        except KeyError:
            raise ValueError(
                f"Unknown order rule: {policy_name}. Must be one of "
                f"{sorted(cls._POLICY_REGISTRY)}.") from None
        return policy_cls(**kwargs)

    @classmethod
    def policy_names(cls):
        return list(cls._POLICY_REGISTRY)

