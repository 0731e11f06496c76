"""The post-processing phase: subcarrier acquisition and power allocation."""
from typing import List, Sequence

import numpy as np

from coopetition.channel.channel_model import ChannelRealization
from coopetition.config import PowerPolicy, PowerPolicyType
from coopetition.logger import init_logger
from coopetition.outputs import (AcquisitionOrder, PowerAllocation,
                                 SubcarrierMap)
from coopetition.utils import ArrayLike, stable_argsort_desc

logger = init_logger(__name__)


def acquire_subcarriers(
    order: AcquisitionOrder,
    sc_counts: Sequence[int],
    channel: ChannelRealization,
) -> SubcarrierMap:
    """Players take turns in `order`; each claims its s_i free subcarriers
    with the highest own SNR (ties go to the lower subcarrier index)."""
    num_subcarriers = channel.num_subcarriers
    if sum(sc_counts) > num_subcarriers:
        raise ValueError(f"Counts sum to {sum(sc_counts)}, more than the "
                         f"{num_subcarriers} subcarriers.")
    sc_map = SubcarrierMap.empty(num_subcarriers)
    taken = np.zeros(num_subcarriers, dtype=bool)
    for i in order.player_sequence:
        count = int(sc_counts[i])
        if count == 0:
            continue
        free = np.flatnonzero(~taken)
        best = free[stable_argsort_desc(channel.row(i)[free])[:count]]
        sc_map.owner[best] = i
        taken[best] = True
    return sc_map


def allocate_budgets(sc_counts: Sequence[int],
                     policy: PowerPolicy) -> np.ndarray:
    """Splits the total power among the players holding subcarriers."""
    counts = np.asarray(sc_counts, dtype=np.float64)
    budgets = np.zeros(len(counts))
    active = counts > 0
    if not active.any():
        return budgets
    if policy.policy == PowerPolicyType.EQUAL_PER_PLAYER:
        budgets[active] = policy.total_power / np.count_nonzero(active)
    else:
        budgets = policy.total_power * counts / counts.sum()
    return budgets


def water_level(own_gains: ArrayLike, budget: float) -> float:
    """Water level ν of the single-link water-filling solution.

    The channels are sorted by gain; the active set is the longest prefix
    whose worst channel still lies below the level the budget reaches when
    spread over that prefix.
    """
    gains = np.asarray(own_gains, dtype=np.float64)
    if gains.size == 0:
        raise ValueError("own_gains must not be empty.")
    if np.any(gains <= 0.0):
        raise ValueError("non-positive gain")
    if budget < 0.0:
        raise ValueError(f"budget must be non-negative, got {budget}.")
    inverse = np.sort(1.0 / gains)
    levels = (budget + np.cumsum(inverse)) / np.arange(1, gains.size + 1)
    invalid = np.flatnonzero(levels <= inverse)
    num_active = gains.size if invalid.size == 0 else max(int(invalid[0]), 1)
    return float(levels[num_active - 1])


def water_fill(own_gains: ArrayLike, budget: float) -> np.ndarray:
    """Powers p_k = max(0, ν - 1/g_k) that spend `budget` exactly."""
    gains = np.asarray(own_gains, dtype=np.float64)
    level = water_level(gains, budget)
    return np.maximum(0.0, level - 1.0 / gains)


def allocate_power(
    sc_map: SubcarrierMap,
    channel: ChannelRealization,
    policy: PowerPolicy,
) -> PowerAllocation:
    """Budgets per player, water-filled over each player's subcarriers.

    Gains are g_k = γ_k,i / p_ref. Subcarriers with zero SNR get no power.
    """
    num_players = channel.num_players
    p_ref = policy.reference_power(channel.num_subcarriers)
    budgets = allocate_budgets(sc_map.counts(num_players), policy)
    power = np.zeros_like(channel.snr_linear)
    for i in range(num_players):
        owned = sc_map.owned_by(i)
        if owned.size == 0 or budgets[i] == 0.0:
            continue
        gains = channel.row(i)[owned] / p_ref
        usable = gains > 0.0
        if not usable.any():
            logger.debug(f"Player {i} owns only zero-SNR subcarriers.")
            continue
        power[i, owned[usable]] = water_fill(gains[usable], budgets[i])
    return PowerAllocation(power, budgets)


def player_rate(
    owned: Sequence[int],
    powers: ArrayLike,
    snr_row: ArrayLike,
    alpha: float,
    subcarrier_spacing_hz: float,
    reference_power: float,
) -> float:
    """R_i = Σ_k Δf·log2(1 + α·γ_k·p_k / p_ref) over the owned subcarriers.

    `powers` is aligned with `owned`.
    """
    owned = np.asarray(owned, dtype=np.int64)
    if owned.size == 0:
        return 0.0
    snr = np.asarray(snr_row, dtype=np.float64)[owned]
    powers = np.asarray(powers, dtype=np.float64)
    return float(subcarrier_spacing_hz * np.sum(
        np.log2(1.0 + alpha * snr * powers / reference_power)))


def player_rates(
    sc_map: SubcarrierMap,
    allocation: PowerAllocation,
    channel: ChannelRealization,
    alphas: Sequence[float],
    subcarrier_spacing_hz: float,
    reference_power: float,
) -> List[float]:
    rates = []
    for i in range(channel.num_players):
        owned = sc_map.owned_by(i)
        rates.append(
            player_rate(owned, allocation.power[i, owned], channel.row(i),
                        alphas[i], subcarrier_spacing_hz, reference_power))
    return rates
