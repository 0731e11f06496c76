"""Reference allocators the coopetition results are compared against."""
import math
from typing import List, Sequence, Tuple

import numpy as np

from coopetition.channel.channel_model import ChannelRealization
from coopetition.config import GridConfig, NoCoalitionOrder, ShapleyConfig
from coopetition.core.allocator import acquire_subcarriers
from coopetition.core.coalition import no_coalition_order
from coopetition.logger import init_logger
from coopetition.outputs import SubcarrierMap
from coopetition.player import Triplet, snr_gap

logger = init_logger(__name__)


def _check_grid(channel: ChannelRealization, grid: GridConfig) -> None:
    if channel.num_subcarriers != grid.num_subcarriers:
        raise ValueError(
            f"Channel has {channel.num_subcarriers} subcarriers but the grid "
            f"has {grid.num_subcarriers}.")


def round_robin(channel: ChannelRealization, grid: GridConfig,
                num_players: int) -> SubcarrierMap:
    """Subcarrier k goes to player k mod I."""
    if num_players < 1:
        raise ValueError(
            f"num_players must be at least 1, got {num_players}.")
    _check_grid(channel, grid)
    return SubcarrierMap(np.arange(grid.num_subcarriers) % num_players)


def max_snr(channel: ChannelRealization, grid: GridConfig) -> SubcarrierMap:
    """Every subcarrier goes to the player seeing the highest SNR on it."""
    _check_grid(channel, grid)
    return SubcarrierMap(np.argmax(channel.snr_linear, axis=0))


def _equal_power_rates(snr: np.ndarray, alpha: float,
                       subcarrier_spacing_hz: float) -> np.ndarray:
    # At the reference power the per-subcarrier gain is just γ.
    return subcarrier_spacing_hz * np.log2(1.0 + alpha * snr)


def bankruptcy_claims(
    triplets: Sequence[Triplet],
    channel: ChannelRealization,
    grid: GridConfig,
) -> Tuple[np.ndarray, float]:
    """Claims and estate of the bankruptcy game.

    A claim is the rate a player gets on its floor(K / I) best subcarriers;
    the estate is the MaxSNR sum-rate. Both use equal per-subcarrier power.
    """
    num_players = channel.num_players
    alphas = [snr_gap(t.target_bep) for t in triplets]
    share = grid.num_subcarriers // num_players
    claims = np.zeros(num_players)
    for i in range(num_players):
        best = np.sort(channel.row(i))[::-1][:share]
        claims[i] = _equal_power_rates(best, alphas[i],
                                       grid.subcarrier_spacing_hz).sum()
    owner = max_snr(channel, grid).owner
    snr = channel.snr_linear[owner, np.arange(grid.num_subcarriers)]
    estate = float(
        np.sum(
            _equal_power_rates(snr, np.asarray(alphas)[owner],
                               grid.subcarrier_spacing_hz)))
    return claims, estate


def shapley_values(claims: Sequence[float], estate: float) -> np.ndarray:
    """Exact Shapley values of v(S) = max(0, E - Σ_{j∉S} c_j).

    The characteristic function is tabulated for all 2^I coalitions, and
    every marginal contribution is weighted by s!(I-s-1)!/I!.
    """
    claims = np.asarray(claims, dtype=np.float64)
    num = len(claims)
    claim_sum = np.zeros(1 << num)
    size = np.zeros(1 << num, dtype=np.int64)
    for j in range(num):
        claim_sum[1 << j:1 << (j + 1)] = claim_sum[:1 << j] + claims[j]
        size[1 << j:1 << (j + 1)] = size[:1 << j] + 1
    value = np.maximum(0.0, estate - (claims.sum() - claim_sum))
    weights = np.array(
        [1.0 / (num * math.comb(num - 1, s)) for s in range(num)])

    masks = np.arange(1 << num)
    phi = np.zeros(num)
    for i in range(num):
        without = masks[(masks >> i) & 1 == 0]
        marginal = value[without | (1 << i)] - value[without]
        phi[i] = np.sum(weights[size[without]] * marginal)
    return phi


def shapley_allocation(
    triplets: Sequence[Triplet],
    channel: ChannelRealization,
    grid: GridConfig,
    cfg: ShapleyConfig,
) -> Tuple[SubcarrierMap, List[int]]:
    """Counts proportional to the Shapley values, acquired strongest first.
    """
    if cfg.num_players != channel.num_players:
        raise ValueError(
            f"ShapleyConfig is for {cfg.num_players} players but the "
            f"channel has {channel.num_players}.")
    _check_grid(channel, grid)
    claims, estate = bankruptcy_claims(triplets, channel, grid)
    phi = shapley_values(claims, estate)
    total = phi.sum()
    if total > 0.0:
        counts = np.floor(grid.num_subcarriers * phi / total).astype(
            np.int64).tolist()
    else:
        counts = [0] * len(phi)
    logger.debug(f"Shapley values {phi.tolist()} -> s={counts}")
    order = no_coalition_order(counts, [t.esnr_linear for t in triplets],
                               NoCoalitionOrder.STRONGEST_FIRST)
    return acquire_subcarriers(order, counts, channel), counts
