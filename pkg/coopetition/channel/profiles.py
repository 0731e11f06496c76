"""Tapped-delay-line power delay profiles."""
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from coopetition.utils import db_to_linear


@dataclass(frozen=True)
class TapProfile:
    """A power delay profile.

    Args:
        delays_ns: Tap delays in nanoseconds, strictly increasing.
        powers_db: Relative tap powers in dB.
    """
    delays_ns: Tuple[float, ...]
    powers_db: Tuple[float, ...]

    def __post_init__(self):
        # Accept lists from scenario files but store tuples.
        object.__setattr__(self, "delays_ns",
                           tuple(float(d) for d in self.delays_ns))
        object.__setattr__(self, "powers_db",
                           tuple(float(p) for p in self.powers_db))
        if len(self.delays_ns) == 0:
            raise ValueError("A tap profile needs at least one tap.")
        if len(self.delays_ns) != len(self.powers_db):
            raise ValueError(
                f"delays_ns and powers_db must have equal lengths, got "
                f"{len(self.delays_ns)} and {len(self.powers_db)}.")
        if self.delays_ns[0] < 0.0:
            raise ValueError("Tap delays must be non-negative, got "
                             f"{self.delays_ns[0]}.")
        if any(b <= a for a, b in zip(self.delays_ns, self.delays_ns[1:])):
            raise ValueError("Tap delays must be strictly increasing, got "
                             f"{list(self.delays_ns)}.")

    @property
    def num_taps(self) -> int:
        return len(self.delays_ns)

    @property
    def delays_s(self) -> np.ndarray:
        return np.asarray(self.delays_ns) * 1e-9

    @property
    def linear_powers(self) -> np.ndarray:
        return db_to_linear(np.asarray(self.powers_db))


# LTE Extended Vehicular A.
EVA = TapProfile(
    delays_ns=(0, 30, 150, 310, 370, 710, 1090, 1730, 2510),
    powers_db=(0.0, -1.5, -1.4, -3.6, -0.6, -9.1, -7.0, -12.0, -16.9),
)

FLAT = TapProfile(delays_ns=(0, ), powers_db=(0.0, ))

_TAP_PROFILE_REGISTRY: Dict[str, TapProfile] = {
    "EVA": EVA,
    "FLAT": FLAT,
}


def get_tap_profile(name: str) -> TapProfile:
    try:
        return _TAP_PROFILE_REGISTRY[name.upper()]
    except KeyError:
        raise ValueError(f"Unknown tap profile: {name}. Must be one of "
                         f"{sorted(_TAP_PROFILE_REGISTRY)}.") from None
