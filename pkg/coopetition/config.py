import enum
from typing import Optional, Type, TypeVar, Union

import numpy as np

from coopetition.logger import init_logger

logger = init_logger(__name__)

E = TypeVar("E", bound=enum.Enum)

# Exact Shapley values enumerate 2^I coalitions.
MAX_SHAPLEY_PLAYERS = 20


def _coerce_enum(enum_cls: Type[E], value: Union[str, E], field: str) -> E:
    if isinstance(value, enum_cls):
        return value
    try:
        return enum_cls(str(value).lower())
    except ValueError:
        choices = [member.value for member in enum_cls]
        raise ValueError(f"Unknown {field}: {value}. Must be one of "
                         f"{choices}.") from None


class GameType(enum.Enum):
    """Cournot game types. C1/C2 are oligopolies, C3-C5 monopoly games."""
    C1 = "c1"
    C2 = "c2"
    C3 = "c3"
    C4 = "c4"
    C5 = "c5"

    @property
    def exponent(self) -> int:
        """Cost exponent τ the game type is played with."""
        return _GAME_EXPONENT[self]

    @property
    def is_oligopoly(self) -> bool:
        return self in (GameType.C1, GameType.C2)


_GAME_EXPONENT = {
    GameType.C1: 1,
    GameType.C2: 1,
    GameType.C3: 1,
    GameType.C4: 2,
    GameType.C5: 3,
}


class GameMode(enum.Enum):
    CLASSIC = "classic"
    ADAPTIVE = "adaptive"

    @property
    def suffix(self) -> str:
        return self.value[0]


class IntraOrder(enum.Enum):
    """Order in which members of a coalition acquire subcarriers."""
    STRENGTH_DESCENDING = "strength"
    FLEXIBILITY_DESCENDING = "flexibility"


class NoCoalitionOrder(enum.Enum):
    NONE = "none"
    STRONGEST_FIRST = "strongest"
    WEAKEST_FIRST = "weakest"


class PowerPolicyType(enum.Enum):
    EQUAL_PER_PLAYER = "equal"
    PROPORTIONAL_TO_ASSETS = "proportional"


class GridConfig:
    """Configuration of the OFDMA subcarrier grid.

    Args:
        num_subcarriers: Number of available subcarriers K.
        subcarrier_spacing_hz: Subcarrier spacing Δf in Hz.
        bandwidth_hz: Total bandwidth B. Derived as K·Δf when omitted; when
            given it must match K·Δf within one ulp.
    """

    def __init__(
        self,
        num_subcarriers: int = 300,
        subcarrier_spacing_hz: float = 15e3,
        bandwidth_hz: Optional[float] = None,
    ) -> None:
        self.num_subcarriers = num_subcarriers
        self.subcarrier_spacing_hz = float(subcarrier_spacing_hz)
        derived = num_subcarriers * self.subcarrier_spacing_hz
        self.bandwidth_hz = derived if bandwidth_hz is None else float(
            bandwidth_hz)
        self._verify_args(derived)

    def _verify_args(self, derived: float) -> None:
        if (not isinstance(self.num_subcarriers, (int, np.integer))
                or self.num_subcarriers < 1):
            raise ValueError("num_subcarriers must be a positive integer, "
                             f"got {self.num_subcarriers}.")
        if self.subcarrier_spacing_hz <= 0.0:
            raise ValueError("subcarrier_spacing_hz must be positive, got "
                             f"{self.subcarrier_spacing_hz}.")
        if abs(self.bandwidth_hz - derived) > np.spacing(derived):
            raise ValueError(
                f"bandwidth_hz ({self.bandwidth_hz}) must equal "
                f"num_subcarriers x subcarrier_spacing_hz ({derived}).")

    def subcarrier_frequencies(self) -> np.ndarray:
        """Baseband frequencies f_k = k·Δf, k = 0..K-1."""
        return np.arange(self.num_subcarriers) * self.subcarrier_spacing_hz

    def __repr__(self) -> str:
        return (f"GridConfig(num_subcarriers={self.num_subcarriers}, "
                f"subcarrier_spacing_hz={self.subcarrier_spacing_hz}, "
                f"bandwidth_hz={self.bandwidth_hz})")


class GameConfig:
    """Configuration of the competition phase.

    Args:
        game_type: Cournot game type C1-C5.
        mode: Scale the equilibrium onto the grid (classic) or raise the
            price until the demands fit the grid (adaptive).
        min_fraction: Type-2 floor as a fraction of the equal share K/I.
            Only used by C2.
    """

    def __init__(
        self,
        game_type: Union[str, GameType] = GameType.C1,
        mode: Union[str, GameMode] = GameMode.CLASSIC,
        min_fraction: float = 0.5,
    ) -> None:
        self.game_type = _coerce_enum(GameType, game_type, "game type")
        self.mode = _coerce_enum(GameMode, mode, "game mode")
        self.min_fraction = min_fraction
        self._verify_args()

    def _verify_args(self) -> None:
        if not 0.0 <= self.min_fraction < 1.0:
            raise ValueError("min_fraction must be in [0, 1), got "
                             f"{self.min_fraction}.")

    @property
    def exponent(self) -> int:
        return self.game_type.exponent

    @property
    def tag(self) -> str:
        """Short name such as "C3a"."""
        return f"{self.game_type.name}{self.mode.suffix}"

    def __repr__(self) -> str:
        return (f"GameConfig(game_type={self.game_type.name}, "
                f"mode={self.mode.value}, "
                f"min_fraction={self.min_fraction})")


class CoalitionConfig:
    """Configuration of the cooperation phase.

    Args:
        quota: Weighted-majority quota μ in (0, 1).
        intra_order: Acquisition order inside a coalition.
        no_coalition_order: When not NONE, coalition formation is skipped
            and players acquire subcarriers in plain strength order.
    """

    def __init__(
        self,
        quota: float = 0.5,
        intra_order: Union[str, IntraOrder] = IntraOrder.STRENGTH_DESCENDING,
        no_coalition_order: Union[str, NoCoalitionOrder] = NoCoalitionOrder.
        NONE,
    ) -> None:
        self.quota = quota
        self.intra_order = _coerce_enum(IntraOrder, intra_order,
                                        "intra-coalition order")
        self.no_coalition_order = _coerce_enum(NoCoalitionOrder,
                                               no_coalition_order,
                                               "no-coalition order")
        self._verify_args()

    def _verify_args(self) -> None:
        if not 0.0 < self.quota < 1.0:
            raise ValueError(f"quota must be in (0, 1), got {self.quota}.")

    def __repr__(self) -> str:
        return (f"CoalitionConfig(quota={self.quota}, "
                f"intra_order={self.intra_order.value}, "
                f"no_coalition_order={self.no_coalition_order.value})")


class PowerPolicy:
    """Per-player power budgets of the post-processing phase.

    Args:
        policy: Equal budget per active player, or budgets proportional to
            the number of acquired subcarriers.
        total_power: Total transmit power shared by all players (relative
            units).
    """

    def __init__(
        self,
        policy: Union[str, PowerPolicyType] = PowerPolicyType.
        PROPORTIONAL_TO_ASSETS,
        total_power: float = 1.0,
    ) -> None:
        self.policy = _coerce_enum(PowerPolicyType, policy, "power policy")
        self.total_power = total_power
        self._verify_args()

    def _verify_args(self) -> None:
        if not self.total_power > 0.0:
            raise ValueError("total_power must be positive, got "
                             f"{self.total_power}.")

    def reference_power(self, num_subcarriers: int) -> float:
        """Per-subcarrier power p_ref at which channel SNRs are measured."""
        return self.total_power / num_subcarriers

    def __repr__(self) -> str:
        return (f"PowerPolicy(policy={self.policy.value}, "
                f"total_power={self.total_power})")


class ShapleyConfig:
    """Configuration of the Shapley-value baseline.

    The estate is the MaxSNR sum-rate and the claims are equal-share rates;
    neither rule is configurable.
    """

    ESTATE_RULE = "max_snr_sum_rate"
    CLAIM_RULE = "equal_share_rate"

    def __init__(
        self,
        num_players: int,
        estate_rule: str = ESTATE_RULE,
        claim_rule: str = CLAIM_RULE,
    ) -> None:
        self.num_players = num_players
        self.estate_rule = estate_rule
        self.claim_rule = claim_rule
        self._verify_args()

    def _verify_args(self) -> None:
        if self.estate_rule != self.ESTATE_RULE:
            raise ValueError(f"Unknown estate rule: {self.estate_rule}. "
                             f"Must be '{self.ESTATE_RULE}'.")
        if self.claim_rule != self.CLAIM_RULE:
            raise ValueError(f"Unknown claim rule: {self.claim_rule}. "
                             f"Must be '{self.CLAIM_RULE}'.")
        if not 1 <= self.num_players <= MAX_SHAPLEY_PLAYERS:
            raise ValueError(
                f"Exact Shapley values support 1 to {MAX_SHAPLEY_PLAYERS} "
                f"players, got {self.num_players}.")


class ParallelConfig:
    """Configuration for executing trials.

    Args:
        worker_use_ray: Run trials as Ray tasks instead of in-process.
        num_workers: Number of CPUs to reserve in the Ray runtime. None lets
            Ray decide.
    """

    def __init__(
        self,
        worker_use_ray: bool = False,
        num_workers: Optional[int] = None,
    ) -> None:
        self.worker_use_ray = worker_use_ray
        self.num_workers = num_workers
        self._verify_args()

    def _verify_args(self) -> None:
        if self.num_workers is not None and self.num_workers < 1:
            raise ValueError("num_workers must be at least 1, got "
                             f"{self.num_workers}.")
        if self.num_workers is not None and not self.worker_use_ray:
            logger.warning("num_workers is ignored unless worker_use_ray "
                           "is set.")
