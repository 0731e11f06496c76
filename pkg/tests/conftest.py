from typing import Callable, List, Sequence

import numpy as np
import pytest

from coopetition.channel import ChannelRealization
from coopetition.player import Triplet, snr_gap
from coopetition.pricing_params import PricingParams

TARGET_BEP = 1e-4


def _revenue_triplets(revenues: Sequence[float]) -> List[Triplet]:
    # α·γ = 1 gives η = log2(2) = 1, so r·η is the revenue itself.
    esnr = 1.0 / snr_gap(TARGET_BEP)
    return [Triplet(esnr, float(r), TARGET_BEP) for r in revenues]


def _random_channel(num_players: int, num_subcarriers: int,
                    seed: int) -> ChannelRealization:
    rng = np.random.default_rng(seed)
    return ChannelRealization(
        rng.exponential(30.0, size=(num_players, num_subcarriers)))


@pytest.fixture
def revenue_triplets() -> Callable[[Sequence[float]], List[Triplet]]:
    """Builds triplets whose marginal revenue r·η equals the given values
    (up to rounding)."""
    return _revenue_triplets


@pytest.fixture
def unit_pricing() -> PricingParams:
    """Default pricing with demands counted in Hz."""
    return PricingParams(bandwidth_unit_hz=1.0)


@pytest.fixture
def random_channel() -> Callable[[int, int, int], ChannelRealization]:
    return _random_channel
