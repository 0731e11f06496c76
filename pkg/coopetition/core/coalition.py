"""The cooperation phase: weighted-majority coalition formation.

Players weigh in with the subcarrier counts they won in the competition. At
every stage the remaining players consider all coalitions whose strength
exceeds the quota of the remaining strength and commit the weakest one: it
exceeds the quota by the smallest margin and so leaves the most ways to
place its subcarriers. Committed coalitions acquire subcarriers in stage
order, so weak members of a strong coalition pick their subcarriers early.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from coopetition.config import CoalitionConfig, IntraOrder, NoCoalitionOrder
from coopetition.logger import init_logger
from coopetition.outputs import AcquisitionOrder
from coopetition.utils import check_distinct

logger = init_logger(__name__)

# Stages enumerate every subset of the remaining players.
MAX_COALITION_PLAYERS = 16


def coalition_strength(members: Sequence[int],
                       sc_counts: Sequence[int]) -> int:
    check_distinct(members)
    return sum(int(sc_counts[i]) for i in members)


def player_flexibility(sc_left: int, sc_count: int) -> int:
    """Number of ways a player can pick `sc_count` of `sc_left` subcarriers.
    """
    return math.comb(sc_left, sc_count) if sc_count <= sc_left else 0


def coalition_flexibility(sc_left: int, strength: int) -> int:
    return math.comb(sc_left, strength) if strength <= sc_left else 0


@dataclass(frozen=True)
class Coalition:
    """A committed coalition.

    Args:
        members: Player indices in acquisition order.
        strength: Sum of the members' subcarrier counts.
        flexibility: Ways to place `strength` subcarriers among those left
            when the coalition was formed.
        stage: Stage the coalition was formed in, starting at 1.
    """
    members: Tuple[int, ...]
    strength: int
    flexibility: int
    stage: int


def _strength_key(i: int, sc_counts: Sequence[int],
                  esnr: Sequence[float]) -> Tuple[int, float, int]:
    return (-sc_counts[i], -esnr[i], i)


def order_by_strength(players: Sequence[int], sc_counts: Sequence[int],
                      esnr: Sequence[float]) -> List[int]:
    """Strongest first; ties by higher eSNR, then lower index."""
    return sorted(players, key=lambda i: _strength_key(i, sc_counts, esnr))


def order_by_flexibility(players: Sequence[int], sc_counts: Sequence[int],
                         esnr: Sequence[float], sc_left: int) -> List[int]:
    """Greedy order: each turn goes to the member with the most placement
    choices among the subcarriers still left. Matches the strength order
    whenever the counts fit into `sc_left`.
    """
    pending = list(players)
    ordered = []
    while pending:
        best = min(pending,
                   key=lambda i: (-player_flexibility(sc_left, sc_counts[i]),
                                  ) + _strength_key(i, sc_counts, esnr))
        pending.remove(best)
        ordered.append(best)
        sc_left -= sc_counts[best]
    return ordered


class CoalitionFormation:
    """Runs the stage-wise coalition formation for one ComP result.

    Every node runs this locally on the broadcast data and arrives at the same
    coalitions, so all choices are resolved deterministically.
    """

    def __init__(
        self,
        sc_counts: Sequence[int],
        esnr: Sequence[float],
        num_subcarriers: int,
        config: CoalitionConfig,
    ) -> None:
        if len(sc_counts) != len(esnr):
            raise ValueError(
                f"Got {len(sc_counts)} subcarrier counts but {len(esnr)} "
                "eSNR values.")
        if any(s < 0 for s in sc_counts):
            raise ValueError(
                f"Subcarrier counts must be non-negative, got {sc_counts}.")
        if sum(sc_counts) > num_subcarriers:
            raise ValueError(f"Counts sum to {sum(sc_counts)}, more than "
                             f"the {num_subcarriers} subcarriers.")
        self.sc_counts = [int(s) for s in sc_counts]
        self.esnr = [float(e) for e in esnr]
        self.num_subcarriers = num_subcarriers
        self.config = config
        self._coalitions: Optional[List[Coalition]] = None

    def _intra_order(self, members: Sequence[int], sc_left: int) -> List[int]:
        if self.config.intra_order == IntraOrder.FLEXIBILITY_DESCENDING:
            return order_by_flexibility(members, self.sc_counts, self.esnr,
                                        sc_left)
        return order_by_strength(members, self.sc_counts, self.esnr)

    def _turns(self, ordered: Sequence[int],
               sc_left: int) -> Dict[int, Tuple[int, int]]:
        """Position and flexibility of every player in a turn sequence."""
        turns = {}
        for position, i in enumerate(ordered):
            turns[i] = (position,
                        player_flexibility(sc_left, self.sc_counts[i]))
            sc_left -= self.sc_counts[i]
        return turns

    def _is_rescinded(self, ordered: Sequence[int],
                      baseline: Dict[int, Tuple[int, int]],
                      sc_left: int) -> bool:
        # A member leaves if both its turn and its choices get worse than in
        # the plain strength order of the remaining players. Members ordered
        # by strength never fall behind that order, so only orders that put a
        # weaker member first can trip this.
        for i, (position, flex) in self._turns(ordered, sc_left).items():
            base_position, base_flex = baseline[i]
            if position > base_position and flex < base_flex:
                return True
        return False

    def _mean_esnr(self, members: Sequence[int]) -> Fraction:
        return sum((Fraction(self.esnr[i]) for i in members),
                   Fraction(0)) / len(members)

    def _select(self, remaining: List[int], sc_left: int) -> List[int]:
        num = len(remaining)
        weights = np.array([self.sc_counts[i] for i in remaining],
                           dtype=np.int64)
        # strengths[mask] = Σ weights of the players in `mask`.
        strengths = np.zeros(1 << num, dtype=np.int64)
        for j in range(num):
            strengths[1 << j:1 << (j + 1)] = strengths[:1 << j] + weights[j]
        total = int(strengths[-1])
        winning = np.flatnonzero(strengths > self.config.quota * total)

        by_strength: Dict[int, List[int]] = {}
        for mask in winning.tolist():
            by_strength.setdefault(int(strengths[mask]), []).append(mask)

        baseline = self._turns(
            order_by_strength(remaining, self.sc_counts, self.esnr), sc_left)
        fallback: Optional[List[int]] = None
        # The weakest winning coalitions keep the most placement choices.
        for strength in sorted(by_strength):
            candidates = [[remaining[j] for j in range(num) if mask >> j & 1]
                          for mask in by_strength[strength]]
            candidates.sort(key=lambda c: (-self._mean_esnr(c), tuple(c)))
            for members in candidates:
                ordered = self._intra_order(members, sc_left)
                if fallback is None:
                    fallback = ordered
                if not self._is_rescinded(ordered, baseline, sc_left):
                    return ordered
        # Every candidate was rescinded; fall back to the unfiltered choice.
        assert fallback is not None
        return fallback

    def form(self) -> List[Coalition]:
        """Coalitions of the players with non-zero counts, in stage order."""
        if self._coalitions is not None:
            return self._coalitions
        remaining = [i for i, s in enumerate(self.sc_counts) if s > 0]
        if len(remaining) > MAX_COALITION_PLAYERS:
            raise ValueError(
                f"Coalition formation supports up to {MAX_COALITION_PLAYERS} "
                f"active players, got {len(remaining)}.")
        coalitions: List[Coalition] = []
        sc_left = self.num_subcarriers
        while remaining:
            members = self._select(remaining, sc_left)
            strength = coalition_strength(members, self.sc_counts)
            coalition = Coalition(
                members=tuple(members),
                strength=strength,
                flexibility=coalition_flexibility(sc_left, strength),
                stage=len(coalitions) + 1,
            )
            coalitions.append(coalition)
            logger.debug(f"Stage {coalition.stage}: coalition "
                         f"{list(coalition.members)} with strength "
                         f"{strength} of {sc_left} subcarriers left.")
            sc_left -= strength
            remaining = [i for i in remaining if i not in coalition.members]
        self._coalitions = coalitions
        return coalitions

    def acquisition_order(self) -> AcquisitionOrder:
        stages = [list(c.members) for c in self.form()]
        idle = [i for i, s in enumerate(self.sc_counts) if s == 0]
        if idle:
            stages.append(sorted(idle, key=lambda i: (-self.esnr[i], i)))
        return AcquisitionOrder.from_stages(stages)


def form_coalitions(
    sc_counts: Sequence[int],
    esnr: Sequence[float],
    num_subcarriers: int,
    config: CoalitionConfig,
) -> AcquisitionOrder:
    return CoalitionFormation(sc_counts, esnr, num_subcarriers,
                              config).acquisition_order()


def no_coalition_order(
    sc_counts: Sequence[int],
    esnr: Sequence[float],
    rule: NoCoalitionOrder,
) -> AcquisitionOrder:
    """Every player acquires alone, sorted by its count.

    Ties go to the higher eSNR, then to the lower index.
    """
    if rule == NoCoalitionOrder.NONE:
        raise ValueError("no_coalition_order needs the strongest or weakest "
                         "rule.")
    sign = -1 if rule == NoCoalitionOrder.STRONGEST_FIRST else 1
    players = sorted(range(len(sc_counts)),
                     key=lambda i: (sign * sc_counts[i], -esnr[i], i))
    return AcquisitionOrder.from_stages([[i] for i in players])
