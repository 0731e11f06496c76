import itertools
import math

import numpy as np
import pytest

from coopetition.baselines import (bankruptcy_claims, max_snr, round_robin,
                                   shapley_allocation, shapley_values)
from coopetition.channel import ChannelRealization, effective_snr
from coopetition.config import GridConfig, ShapleyConfig
from coopetition.player import Triplet

SEEDS = list(range(10))


def _triplets(channel: ChannelRealization):
    return [
        Triplet(effective_snr(channel.row(i)), 1.0, 1e-4)
        for i in range(channel.num_players)
    ]


def _permutation_shapley(claims, estate):
    num = len(claims)

    def value(members):
        outside = sum(claims[j] for j in range(num) if j not in members)
        return max(0.0, estate - outside)

    phi = np.zeros(num)
    orders = list(itertools.permutations(range(num)))
    for order in orders:
        members = set()
        for i in order:
            before = value(members)
            members.add(i)
            phi[i] += value(members) - before
    return phi / len(orders)


def test_round_robin():
    channel = ChannelRealization(np.ones((2, 4)))
    grid = GridConfig(4)
    assert round_robin(channel, grid, 2).owner.tolist() == [0, 1, 0, 1]
    channel = ChannelRealization(np.ones((2, 5)))
    assert round_robin(channel, GridConfig(5), 2).counts(2) == [3, 2]
    channel = ChannelRealization(np.ones((1, 5)))
    assert round_robin(channel, GridConfig(5), 1).counts(1) == [5]
    with pytest.raises(ValueError, match="subcarriers"):
        round_robin(channel, GridConfig(6), 1)


def test_max_snr():
    channel = ChannelRealization(np.array([[9.0, 1.0], [8.0, 2.0]]))
    assert max_snr(channel, GridConfig(2)).owner.tolist() == [0, 1]
    channel = ChannelRealization(np.full((3, 4), 7.0))
    assert max_snr(channel, GridConfig(4)).owner.tolist() == [0, 0, 0, 0]


@pytest.mark.parametrize("seed", SEEDS)
def test_max_snr_maximizes_the_sum_rate(seed: int, random_channel):
    num_subcarriers = 2 + seed % 7
    channel = random_channel(2, num_subcarriers, seed)
    owner = max_snr(channel, GridConfig(num_subcarriers)).owner
    columns = np.arange(num_subcarriers)

    def sum_rate(owners) -> float:
        snr = channel.snr_linear[np.asarray(owners), columns]
        return float(np.sum(np.log2(1.0 + 0.2 * snr)))

    best = sum_rate(owner)
    for owners in itertools.product([0, 1], repeat=num_subcarriers):
        assert sum_rate(owners) <= best + 1e-12


def test_shapley_values_single_player():
    np.testing.assert_allclose(shapley_values([3.0], 10.0), [10.0])


@pytest.mark.parametrize("seed", SEEDS)
def test_shapley_values_match_permutations(seed: int):
    rng = np.random.default_rng(seed)
    num = int(rng.integers(2, 7))
    claims = rng.uniform(0.0, 10.0, size=num)
    estate = float(rng.uniform(0.2, 1.2) * claims.sum())
    phi = shapley_values(claims, estate)
    np.testing.assert_allclose(phi,
                               _permutation_shapley(claims, estate),
                               rtol=1e-9,
                               atol=1e-12)
    # Efficiency: the grand coalition gets the whole estate.
    assert phi.sum() == pytest.approx(estate, rel=1e-9)


def test_shapley_axioms():
    phi = shapley_values([4.0, 4.0, 1.0], 6.0)
    assert phi[0] == pytest.approx(phi[1], rel=1e-12)
    # A player without a claim is a null player.
    phi = shapley_values([0.0, 5.0, 5.0], 8.0)
    assert phi[0] == pytest.approx(0.0, abs=1e-12)
    assert phi[1] == pytest.approx(4.0)


def test_bankruptcy_claims():
    channel = ChannelRealization(np.array([[3.0, 1.0, 2.0, 5.0],
                                           [1.0, 1.0, 1.0, 1.0]]))
    grid = GridConfig(4)
    alpha = 1.5 / math.log(0.2 / 1e-4)
    claims, estate = bankruptcy_claims(_triplets(channel), channel, grid)
    rate = lambda snr: 15e3 * math.log2(1.0 + alpha * snr)  # noqa: E731
    assert claims[0] == pytest.approx(rate(5.0) + rate(3.0))
    assert claims[1] == pytest.approx(2 * rate(1.0))
    assert estate == pytest.approx(
        rate(3.0) + rate(1.0) + rate(2.0) + rate(5.0))


def test_shapley_allocation_single_player(random_channel):
    channel = random_channel(1, 12, 3)
    grid = GridConfig(12)
    sc_map, counts = shapley_allocation(_triplets(channel), channel, grid,
                                        ShapleyConfig(1))
    assert counts == [12]
    assert sc_map.num_assigned() == 12


def test_shapley_allocation_symmetric_players():
    channel = ChannelRealization(np.tile([4.0, 9.0, 1.0, 6.0, 2.0], (2, 1)))
    grid = GridConfig(5)
    sc_map, counts = shapley_allocation(_triplets(channel), channel, grid,
                                        ShapleyConfig(2))
    assert abs(counts[0] - counts[1]) <= 1
    assert sum(counts) <= 5
    assert sc_map.counts(2) == counts


@pytest.mark.parametrize("seed", SEEDS)
def test_shapley_allocation_is_feasible(seed: int, random_channel):
    channel = random_channel(6, 60, seed)
    grid = GridConfig(60)
    sc_map, counts = shapley_allocation(_triplets(channel), channel, grid,
                                        ShapleyConfig(6))
    assert sum(counts) <= 60
    assert sc_map.counts(6) == counts
    with pytest.raises(ValueError, match="ShapleyConfig is for 5 players"):
        shapley_allocation(_triplets(channel), channel, grid,
                           ShapleyConfig(5))
