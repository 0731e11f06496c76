import itertools
import math
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np
import pytest

from coopetition.config import CoalitionConfig, NoCoalitionOrder
from coopetition.core.coalition import (CoalitionFormation,
                                        coalition_flexibility,
                                        coalition_strength, form_coalitions,
                                        no_coalition_order,
                                        order_by_flexibility,
                                        order_by_strength, player_flexibility)

SEEDS = list(range(20))
# 20 seeds x 3 quotas x 4 instances.
ORACLE_INSTANCES_PER_SEED = 4


def _oracle(sc_counts: Sequence[int], esnr: Sequence[float],
            quota: float) -> Tuple[List[int], Dict[int, int]]:
    """Enumerates every subset of the remaining players at each stage and
    commits the weakest winning one (highest mean eSNR, then smallest index
    set, on ties)."""
    remaining = [i for i, s in enumerate(sc_counts) if s > 0]
    sequence: List[int] = []
    stage_of_player: Dict[int, int] = {}
    stage = 0
    while remaining:
        stage += 1
        total = sum(sc_counts[i] for i in remaining)
        winning = [
            members for size in range(1, len(remaining) + 1)
            for members in itertools.combinations(remaining, size)
            if sum(sc_counts[i] for i in members) > quota * total
        ]
        best = min(winning,
                   key=lambda m: (sum(sc_counts[i] for i in m), -sum(
                       Fraction(esnr[i]) for i in m) / len(m), m))
        ordered = sorted(best, key=lambda i: (-sc_counts[i], -esnr[i], i))
        for i in ordered:
            sequence.append(i)
            stage_of_player[i] = stage
        remaining = [i for i in remaining if i not in best]
    idle = sorted((i for i, s in enumerate(sc_counts) if s == 0),
                  key=lambda i: (-esnr[i], i))
    if idle:
        stage += 1
        for i in idle:
            sequence.append(i)
            stage_of_player[i] = stage
    return sequence, stage_of_player


def _random_counts(rng: np.random.Generator, num_players: int,
                   num_subcarriers: int) -> List[int]:
    counts = rng.integers(0, 40, size=num_players)
    if counts.sum() > num_subcarriers:
        counts = counts * num_subcarriers // counts.sum()
    return counts.tolist()


def test_coalition_strength():
    assert coalition_strength([0, 2], [5, 4, 3]) == 8
    assert coalition_strength([], [5, 4, 3]) == 0
    assert coalition_strength([0, 1, 2], [5, 4, 3]) == 12
    with pytest.raises(ValueError, match="Duplicate"):
        coalition_strength([0, 0], [5, 4, 3])


def test_player_flexibility():
    assert player_flexibility(10, 6) == 210
    assert player_flexibility(0, 0) == 1
    assert player_flexibility(7, 0) == 1
    assert player_flexibility(5, 6) == 0


def test_coalition_flexibility():
    assert coalition_flexibility(300, 150) == math.comb(300, 150)
    assert coalition_flexibility(10, 6) == 210
    assert coalition_flexibility(10, 7) == 120
    assert coalition_flexibility(10, 0) == 1
    assert coalition_flexibility(10, 11) == 0


@pytest.mark.parametrize("seed", SEEDS)
def test_weaker_majority_is_more_flexible(seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(500):
        sc_left = int(rng.integers(2, 301))
        low = sc_left // 2 + 1
        if low >= sc_left:
            continue
        weak, strong = sorted(
            rng.choice(np.arange(low, sc_left + 1), size=2, replace=False))
        assert coalition_flexibility(sc_left, int(weak)) > \
            coalition_flexibility(sc_left, int(strong))


def test_form_coalitions_example():
    order = form_coalitions([5, 4, 3, 2, 1], [10.0] * 5, 300,
                            CoalitionConfig(0.5))
    # {5, 3} is the first of the weakest winning coalitions (strength 8).
    assert order.player_sequence == [0, 2, 1, 3, 4]
    assert order.stage_of_player == {0: 1, 2: 1, 1: 2, 3: 3, 4: 4}
    assert order.num_stages == 4


def test_form_coalitions_small_cases():
    order = form_coalitions([7], [3.0], 300, CoalitionConfig())
    assert order.player_sequence == [0]
    assert order.num_stages == 1

    order = form_coalitions([1, 1], [3.0, 3.0], 300, CoalitionConfig())
    assert order.player_sequence == [0, 1]
    assert order.stage_of_player == {0: 1, 1: 1}


def test_form_coalitions_prefers_higher_mean_esnr():
    # {0, 2} and {1, 2} both have strength 5; {1, 2} sees the better channel.
    order = form_coalitions([3, 3, 2], [1.0, 9.0, 5.0], 300,
                            CoalitionConfig())
    assert order.player_sequence[:2] == [1, 2]
    assert order.stage_of_player[0] == 2


def test_idle_players_acquire_last():
    order = form_coalitions([0, 3, 0, 2], [1.0, 2.0, 5.0, 3.0], 300,
                            CoalitionConfig())
    assert order.player_sequence == [1, 3, 2, 0]
    assert order.stage_of_player == {1: 1, 3: 2, 2: 3, 0: 3}


def test_coalition_formation_records_coalitions():
    formation = CoalitionFormation([5, 4, 3, 2, 1], [10.0] * 5, 300,
                                   CoalitionConfig())
    coalitions = formation.form()
    assert [c.members for c in coalitions] == [(0, 2), (1, ), (3, ), (4, )]
    assert [c.strength for c in coalitions] == [8, 4, 2, 1]
    assert coalitions[0].flexibility == math.comb(300, 8)
    assert coalitions[1].flexibility == math.comb(292, 4)
    assert [c.stage for c in coalitions] == [1, 2, 3, 4]
    assert formation.form() is coalitions


def test_coalition_formation_validation():
    with pytest.raises(ValueError, match="more than"):
        form_coalitions([200, 200], [1.0, 1.0], 300, CoalitionConfig())
    with pytest.raises(ValueError, match="eSNR"):
        form_coalitions([1, 2], [1.0], 300, CoalitionConfig())
    with pytest.raises(ValueError, match="non-negative"):
        form_coalitions([1, -2], [1.0, 1.0], 300, CoalitionConfig())


@pytest.mark.parametrize("seed", SEEDS)
@pytest.mark.parametrize("quota", [0.3, 0.5, 0.7])
def test_form_coalitions_matches_oracle(seed: int, quota: float):
    rng = np.random.default_rng(seed)
    for instance in range(ORACLE_INSTANCES_PER_SEED):
        num_players = int(rng.integers(1, 11))
        counts = _random_counts(rng, num_players, 300)
        esnr = rng.uniform(1.0, 100.0, size=num_players).tolist()
        if instance % 4 == 0:
            # Equal channels make the index tie-break decide.
            esnr = [10.0] * num_players
        order = form_coalitions(counts, esnr, 300, CoalitionConfig(quota))
        sequence, stages = _oracle(counts, esnr, quota)
        assert order.player_sequence == sequence
        assert order.stage_of_player == stages
        assert order.num_stages <= num_players


@pytest.mark.parametrize("seed", SEEDS)
def test_common_scaling_keeps_the_coalitions(seed: int):
    rng = np.random.default_rng(seed)
    num_players = int(rng.integers(2, 9))
    counts = rng.integers(1, 20, size=num_players).tolist()
    esnr = rng.uniform(1.0, 100.0, size=num_players).tolist()
    scaled = [3 * s for s in counts]
    order = form_coalitions(counts, esnr, 1000, CoalitionConfig())
    scaled_order = form_coalitions(scaled, esnr, 1000, CoalitionConfig())
    assert order.player_sequence == scaled_order.player_sequence
    assert order.stage_of_player == scaled_order.stage_of_player


@pytest.mark.parametrize("seed", SEEDS)
def test_intra_orders_agree(seed: int):
    rng = np.random.default_rng(seed)
    num_players = int(rng.integers(1, 9))
    counts = _random_counts(rng, num_players, 300)
    esnr = rng.uniform(1.0, 100.0, size=num_players).tolist()
    players = list(range(num_players))
    assert order_by_flexibility(players, counts, esnr,
                                300) == order_by_strength(
                                    players, counts, esnr)
    by_strength = form_coalitions(counts, esnr, 300,
                                  CoalitionConfig(intra_order="strength"))
    by_flexibility = form_coalitions(
        counts, esnr, 300, CoalitionConfig(intra_order="flexibility"))
    assert by_strength.player_sequence == by_flexibility.player_sequence


def test_order_by_strength_ties():
    assert order_by_strength([0, 1, 2], [2, 2, 3], [1.0, 5.0, 1.0]) == \
        [2, 1, 0]
    assert order_by_strength([0, 1, 2], [2, 2, 2], [1.0, 1.0, 1.0]) == \
        [0, 1, 2]


def test_no_coalition_order():
    strongest = no_coalition_order([3, 1, 2], [1.0, 1.0, 1.0],
                                   NoCoalitionOrder.STRONGEST_FIRST)
    assert strongest.player_sequence == [0, 2, 1]
    assert strongest.num_stages == 3
    weakest = no_coalition_order([3, 1, 2], [1.0, 1.0, 1.0],
                                 NoCoalitionOrder.WEAKEST_FIRST)
    assert weakest.player_sequence == [1, 2, 0]
    equal = no_coalition_order([4, 4, 4], [2.0, 2.0, 2.0],
                               NoCoalitionOrder.STRONGEST_FIRST)
    assert equal.player_sequence == [0, 1, 2]
    ties = no_coalition_order([4, 4], [1.0, 3.0],
                              NoCoalitionOrder.WEAKEST_FIRST)
    assert ties.player_sequence == [1, 0]
    with pytest.raises(ValueError, match="strongest or weakest"):
        no_coalition_order([1, 2], [1.0, 1.0], NoCoalitionOrder.NONE)


def test_flexibility_order_departs_from_strength_on_overflow():
    # C(6, 3) = 20 beats C(6, 5) = 6 once the counts overflow the grid.
    assert order_by_flexibility([0, 1], [5, 3], [1.0, 1.0], 6) == [1, 0]
    assert order_by_strength([0, 1], [5, 3], [1.0, 1.0]) == [0, 1]
    # C(8, 5) = C(8, 3): the strength key decides.
    assert order_by_flexibility([0, 1], [5, 3], [1.0, 1.0], 8) == [0, 1]


def test_rescind_filter_catches_a_weak_member_first():
    formation = CoalitionFormation([4, 2], [1.0, 1.0], 10, CoalitionConfig())
    baseline = formation._turns([0, 1], 10)
    assert baseline == {0: (0, 210), 1: (1, 15)}
    # Player 0 moves back a turn and drops to C(8, 4) = 70 choices.
    assert formation._is_rescinded([1, 0], baseline, 10)
    assert not formation._is_rescinded([0, 1], baseline, 10)
