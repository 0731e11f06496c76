"""Trial metrics and the worst-case operation count of the methodology."""
import math
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from coopetition.config import GameConfig, GameMode
from coopetition.outputs import TrialMetrics
from coopetition.utils import ArrayLike

ALL_ZERO_RATES = "all_zero_rates"

# Newton-Raphson iterations assumed for the τ-th root of the monopoly games.
DEFAULT_NEWTON_ITERATIONS = 5
# Adaptation iterations the reference parameters need for eight players.
DEFAULT_OMEGA = 5


def network_spectral_efficiency(rates: ArrayLike,
                                bandwidth_hz: float) -> float:
    """Sum rate per Hz of the available bandwidth."""
    if not bandwidth_hz > 0.0:
        raise ValueError(
            f"bandwidth_hz must be positive, got {bandwidth_hz}.")
    return float(np.sum(rates)) / bandwidth_hz


def jain_index(rates: ArrayLike) -> float:
    """(Σ R)² / (I·Σ R²); 1 when every rate is zero."""
    rates = np.asarray(rates, dtype=np.float64)
    if rates.size == 0:
        raise ValueError("rates must not be empty.")
    if np.any(rates < 0.0):
        raise ValueError(f"rates must be non-negative, got {rates}.")
    square_sum = float(np.sum(rates**2))
    if square_sum == 0.0:
        return 1.0
    return float(np.sum(rates))**2 / (rates.size * square_sum)


def compute_trial_metrics(
    rates: Sequence[float],
    sc_counts: Sequence[int],
    num_subcarriers: int,
    bandwidth_hz: float,
) -> TrialMetrics:
    flags: List[str] = []
    if not any(r > 0.0 for r in rates):
        flags.append(ALL_ZERO_RATES)
    return TrialMetrics(
        per_player_rate=rates,
        network_se=network_spectral_efficiency(rates, bandwidth_hz),
        jain=jain_index(rates),
        sc_utilization=sum(sc_counts) / num_subcarriers,
        flags=flags,
    )


def _remaining_share(quota: float) -> Fraction:
    # Decimal string keeps quotas like 0.3 exact.
    share = 1 - Fraction(str(quota))
    if not 0 < share < 1:
        raise ValueError(f"quota must be in (0, 1), got {quota}.")
    return share


def expected_coalition_stages(num_players: int, quota: float) -> int:
    """Smallest N with (1-μ)^N·I ≤ 1, i.e. ceil(-log_{1-μ} I)."""
    if num_players < 1:
        raise ValueError(
            f"num_players must be at least 1, got {num_players}.")
    share = _remaining_share(quota)
    stages = 0
    while share**stages * num_players > 1:
        stages += 1
    return stages


def _competition_operations(num_players: int, game: GameConfig, omega: int,
                            newton_iterations: int) -> int:
    if game.mode == GameMode.CLASSIC:
        operations = (3 * num_players + 5) * num_players
    else:
        operations = ((3 * num_players + 2) * omega * num_players +
                      3 * num_players)
    tau = game.exponent
    if tau > 1:
        # Every iteration costs ln(τ) multiplications and one division.
        operations += (num_players * newton_iterations *
                       (math.ceil(math.log(tau)) + 1))
    return operations


def complexity_estimate(
    num_players: int,
    num_subcarriers: int,
    quota: float,
    game: GameConfig,
    omega: int = DEFAULT_OMEGA,
    newton_iterations: int = DEFAULT_NEWTON_ITERATIONS,
) -> int:
    """Worst-case count of real operations for equal players.

    The count adds the competition cost, the strength evaluations of all
    coalitions at every stage and the flexibility evaluations of the
    majority coalitions, with L^(n) = ceil((1-μ)^n·I) players left at stage
    n. Evaluated exactly and rounded up.
    """
    share = _remaining_share(quota)
    mu = 1 - share
    total = Fraction(
        _competition_operations(num_players, game, omega, newton_iterations))
    for n in range(1, expected_coalition_stages(num_players, quota) + 1):
        players_left = math.ceil(share**n * num_players)
        for size in range(1, players_left + 1):
            total += 2 * math.comb(players_left, size) * size + 1
        majority = math.ceil(mu * players_left)
        total += math.comb(players_left, majority) * (
            1 + (mu * num_subcarriers)**2 * share**(2 * n))
    return math.ceil(total)
