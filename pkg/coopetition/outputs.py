from typing import Dict, List, Optional, Sequence

import numpy as np

from coopetition.pricing_params import PricingParams
from coopetition.utils import UNASSIGNED


class DemandVector:
    """Bandwidth demands b_i* of the competition phase.

    Args:
        demands_hz: Demand of every player in Hz.
    """

    def __init__(self, demands_hz: Sequence[float]) -> None:
        self.demands_hz = np.asarray(demands_hz, dtype=np.float64)
        self.total_hz = float(self.demands_hz.sum())

    @property
    def num_players(self) -> int:
        return len(self.demands_hz)

    def clamp(self, bandwidth_hz: float) -> "DemandVector":
        """Clips every demand to [0, B]."""
        return DemandVector(np.clip(self.demands_hz, 0.0, bandwidth_hz))

    def __repr__(self) -> str:
        return (f"DemandVector(demands_hz={self.demands_hz.tolist()}, "
                f"total_hz={self.total_hz})")


class Assignment:
    """The competition phase result: subcarrier counts s_i per player.

    Args:
        sc_counts: Number of subcarriers assigned to every player.
        pricing_used: Pricing parameters of the final solve.
        demands: Clamped demands the counts were floored from.
        num_iterations: Parameter adaptation loop iterations (ω). Zero for
            the classic scaling.
    """

    def __init__(
        self,
        sc_counts: Sequence[int],
        pricing_used: PricingParams,
        demands: Optional[DemandVector] = None,
        num_iterations: int = 0,
    ) -> None:
        self.sc_counts = [int(s) for s in sc_counts]
        self.pricing_used = pricing_used
        self.demands = demands
        self.num_iterations = num_iterations

    @property
    def total(self) -> int:
        return sum(self.sc_counts)

    def __repr__(self) -> str:
        return (f"Assignment(sc_counts={self.sc_counts}, "
                f"pricing_used={self.pricing_used}, "
                f"num_iterations={self.num_iterations})")


class AcquisitionOrder:
    """The global turn sequence in which players claim subcarriers.

    Args:
        player_sequence: Permutation of all player indices.
        stage_of_player: Stage (starting at 1) every player acquires in.
    """

    def __init__(
        self,
        player_sequence: Sequence[int],
        stage_of_player: Dict[int, int],
    ) -> None:
        self.player_sequence = [int(i) for i in player_sequence]
        self.stage_of_player = dict(stage_of_player)
        self._verify()

    def _verify(self) -> None:
        num_players = len(self.player_sequence)
        if sorted(self.player_sequence) != list(range(num_players)):
            raise ValueError("player_sequence must be a permutation of "
                             f"0..{num_players - 1}, got "
                             f"{self.player_sequence}.")
        if set(self.stage_of_player) != set(self.player_sequence):
            raise ValueError("stage_of_player must cover every player.")
        stages = sorted(set(self.stage_of_player.values()))
        if stages and stages != list(range(1, len(stages) + 1)):
            raise ValueError(
                f"Stages must be contiguous from 1, got {stages}.")

    @classmethod
    def from_stages(cls,
                    stages: Sequence[Sequence[int]]) -> "AcquisitionOrder":
        sequence: List[int] = []
        stage_of_player: Dict[int, int] = {}
        for stage, members in enumerate(stages, start=1):
            for i in members:
                sequence.append(i)
                stage_of_player[i] = stage
        return cls(sequence, stage_of_player)

    @property
    def num_stages(self) -> int:
        return len(set(self.stage_of_player.values()))

    def __repr__(self) -> str:
        return (f"AcquisitionOrder(player_sequence={self.player_sequence}, "
                f"num_stages={self.num_stages})")


class SubcarrierMap:
    """Owner of every subcarrier; UNASSIGNED marks free ones."""

    def __init__(self, owner: Sequence[int]) -> None:
        self.owner = np.asarray(owner, dtype=np.int64)

    @classmethod
    def empty(cls, num_subcarriers: int) -> "SubcarrierMap":
        return cls(np.full(num_subcarriers, UNASSIGNED, dtype=np.int64))

    @property
    def num_subcarriers(self) -> int:
        return len(self.owner)

    def owned_by(self, player: int) -> np.ndarray:
        return np.flatnonzero(self.owner == player)

    def counts(self, num_players: int) -> List[int]:
        assigned = self.owner[self.owner != UNASSIGNED]
        return np.bincount(assigned, minlength=num_players).tolist()

    def num_assigned(self) -> int:
        return int(np.count_nonzero(self.owner != UNASSIGNED))

    def __repr__(self) -> str:
        return f"SubcarrierMap(owner={self.owner.tolist()})"


class PowerAllocation:
    """Per-subcarrier transmit powers.

    Args:
        power: I x K matrix; row i is non-zero only on player i's
            subcarriers.
        budgets: Power budget of every player.
    """

    def __init__(self, power: np.ndarray, budgets: Sequence[float]) -> None:
        self.power = power
        self.budgets = np.asarray(budgets, dtype=np.float64)

    def __repr__(self) -> str:
        return (f"PowerAllocation(budgets={self.budgets.tolist()}, "
                f"shape={self.power.shape})")


class TrialMetrics:
    """Network-level metrics of one trial.

    Args:
        per_player_rate: Rate of every player in bit/s.
        network_se: Network spectral efficiency in bit/s/Hz.
        jain: Jain's fairness index of the rates.
        sc_utilization: Fraction of subcarriers assigned.
        flags: Markers of degenerate trials, e.g. "all_zero_rates".
    """

    def __init__(
        self,
        per_player_rate: Sequence[float],
        network_se: float,
        jain: float,
        sc_utilization: float,
        flags: Optional[List[str]] = None,
    ) -> None:
        self.per_player_rate = [float(r) for r in per_player_rate]
        self.network_se = network_se
        self.jain = jain
        self.sc_utilization = sc_utilization
        self.flags = flags or []

    def __repr__(self) -> str:
        return (f"TrialMetrics(network_se={self.network_se}, "
                f"jain={self.jain}, "
                f"sc_utilization={self.sc_utilization}, "
                f"flags={self.flags})")


class TrialResult:
    """The output of one Monte-Carlo trial of one algorithm.

    A failed trial carries the error message and no metrics.
    """

    def __init__(
        self,
        scenario: str,
        algorithm: str,
        trial_index: int,
        sc_counts: Optional[List[int]] = None,
        metrics: Optional[TrialMetrics] = None,
        num_stages: Optional[int] = None,
        num_iterations: Optional[int] = None,
        error: Optional[str] = None,
    ) -> None:
        self.scenario = scenario
        self.algorithm = algorithm
        self.trial_index = trial_index
        self.sc_counts = sc_counts
        self.metrics = metrics
        self.num_stages = num_stages
        self.num_iterations = num_iterations
        self.error = error

    @property
    def failed(self) -> bool:
        return self.error is not None

    @property
    def flags(self) -> List[str]:
        if self.error is not None:
            return [f"error:{self.error}"]
        assert self.metrics is not None
        return self.metrics.flags

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TrialResult):
            return NotImplemented
        return self._key() == other._key()

    def _key(self):
        metrics = None
        if self.metrics is not None:
            metrics = (tuple(self.metrics.per_player_rate),
                       self.metrics.network_se, self.metrics.jain,
                       self.metrics.sc_utilization, tuple(self.metrics.flags))
        return (self.scenario, self.algorithm, self.trial_index,
                None if self.sc_counts is None else tuple(self.sc_counts),
                metrics, self.num_stages, self.num_iterations, self.error)

    def __repr__(self) -> str:
        return (f"TrialResult(scenario={self.scenario!r}, "
                f"algorithm={self.algorithm!r}, "
                f"trial_index={self.trial_index}, "
                f"sc_counts={self.sc_counts}, "
                f"metrics={self.metrics}, "
                f"error={self.error!r})")
