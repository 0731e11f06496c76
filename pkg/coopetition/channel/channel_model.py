"""Frequency-selective channel realizations and the effective SNR."""
from typing import List, Sequence

import numpy as np

from coopetition.channel.profiles import TapProfile
from coopetition.config import GridConfig
from coopetition.logger import init_logger
from coopetition.player import PlayerProfile, Triplet
from coopetition.utils import ArrayLike, db_to_linear, make_rng

logger = init_logger(__name__)

# Exponential mapping parameter of the eSNR.
DEFAULT_BETA = 30.0


class ChannelRealization:
    """Per-subcarrier linear SNRs of every player in one trial.

    Args:
        snr_linear: I x K matrix of SNRs measured at the reference
            per-subcarrier power.
    """

    def __init__(self, snr_linear: np.ndarray) -> None:
        snr_linear = np.asarray(snr_linear, dtype=np.float64)
        if snr_linear.ndim != 2:
            raise ValueError("snr_linear must be a 2-D matrix, got shape "
                             f"{snr_linear.shape}.")
        if np.any(snr_linear < 0.0):
            raise ValueError("negative SNR in channel realization")
        self.snr_linear = snr_linear

    @property
    def num_players(self) -> int:
        return self.snr_linear.shape[0]

    @property
    def num_subcarriers(self) -> int:
        return self.snr_linear.shape[1]

    def row(self, player: int) -> np.ndarray:
        return self.snr_linear[player]

    def __repr__(self) -> str:
        return (f"ChannelRealization(num_players={self.num_players}, "
                f"num_subcarriers={self.num_subcarriers})")


def _frequency_response(profile: TapProfile, frequencies: np.ndarray,
                        rng: np.random.Generator) -> np.ndarray:
    # Circularly-symmetric complex Gaussian taps with variance p_l.
    scale = np.sqrt(profile.linear_powers / 2.0)
    taps = scale * (rng.standard_normal(profile.num_taps) +
                    1j * rng.standard_normal(profile.num_taps))
    phase = np.exp(-2j * np.pi * np.outer(frequencies, profile.delays_s))
    return phase @ taps


def generate_channel(
    profile: TapProfile,
    grid: GridConfig,
    players: Sequence[PlayerProfile],
    seed: int,
) -> ChannelRealization:
    """Draws one static channel per player and normalises every row to the
    player's average SNR.

    Players draw their taps from one generator in index order, so the
    realization is a pure function of the arguments.
    """
    if len(players) == 0:
        raise ValueError("no players")
    rng = make_rng(seed)
    frequencies = grid.subcarrier_frequencies()
    rows = np.empty((len(players), grid.num_subcarriers))
    for i, player in enumerate(players):
        gain = np.abs(_frequency_response(profile, frequencies, rng))**2
        target = db_to_linear(player.avg_snr_db)
        mean = gain.mean()
        if mean > 0.0:
            rows[i] = gain * (target / mean)
        else:
            rows[i] = target
    return ChannelRealization(rows)


def effective_snr(snr_row: ArrayLike, beta: float = DEFAULT_BETA) -> float:
    """Exponential effective SNR: -β·ln(mean_k exp(-γ_k/β)).

    Evaluated relative to the smallest SNR so that the exponentials never
    underflow for large SNRs.
    """
    snr = np.asarray(snr_row, dtype=np.float64)
    if snr.size == 0:
        raise ValueError("snr_row must not be empty.")
    if not beta > 0.0:
        raise ValueError(f"beta must be positive, got {beta}.")
    if np.any(snr < 0.0):
        raise ValueError("negative SNR")
    low = snr.min()
    mean_exp = np.mean(np.exp(-(snr - low) / beta))
    value = low - beta * np.log(mean_exp)
    # Rounding can step outside [min, max] for nearly constant rows.
    return float(np.clip(value, low, snr.max()))


def make_triplets(
    channel: ChannelRealization,
    players: Sequence[PlayerProfile],
    beta: float = DEFAULT_BETA,
) -> List[Triplet]:
    if channel.num_players != len(players):
        raise ValueError(
            f"Channel has {channel.num_players} rows but {len(players)} "
            "players were given.")
    triplets = []
    for i, player in enumerate(players):
        esnr = effective_snr(channel.row(i), beta)
        triplets.append(
            Triplet(esnr_linear=esnr,
                    revenue_param=player.revenue_param,
                    target_bep=player.target_bep))
    logger.debug(f"eSNR (linear): {[t.esnr_linear for t in triplets]}")
    return triplets
