"""Per-node data: the private profile and the broadcast triplet."""
import math
from dataclasses import dataclass

# ln(0.2 / P_e) must stay positive.
MAX_TARGET_BEP = 0.2


def _verify_target_bep(target_bep: float) -> None:
    if not 0.0 < target_bep < MAX_TARGET_BEP:
        raise ValueError(f"target_bep must be in (0, {MAX_TARGET_BEP}), "
                         f"got {target_bep}.")


@dataclass(frozen=True)
class PlayerProfile:
    """A cognitive-radio node as configured by its scenario.

    Args:
        revenue_param: Revenue parameter r_i (traffic priority), monetary
            units per bit/s.
        target_bep: Target bit-error probability P_e,i.
        avg_snr_db: Mean per-subcarrier SNR the channel is normalised to.
    """
    revenue_param: float = 1.0
    target_bep: float = 1e-4
    avg_snr_db: float = 15.0

    def __post_init__(self):
        if not self.revenue_param > 0.0:
            raise ValueError("revenue_param must be positive, got "
                             f"{self.revenue_param}.")
        _verify_target_bep(self.target_bep)


@dataclass(frozen=True)
class Triplet:
    """The (eSNR, revenue parameter, target BEP) broadcast of one node.

    This is the only information nodes exchange before the competition.
    """
    esnr_linear: float
    revenue_param: float
    target_bep: float

    def __post_init__(self):
        if not self.esnr_linear > 0.0:
            raise ValueError("esnr_linear must be positive, got "
                             f"{self.esnr_linear}.")
        if not self.revenue_param > 0.0:
            raise ValueError("revenue_param must be positive, got "
                             f"{self.revenue_param}.")


def snr_gap(target_bep: float) -> float:
    """SNR gap α = 1.5 / ln(0.2 / P_e) of M-QAM at the target BEP."""
    if not 0.0 < target_bep < MAX_TARGET_BEP:
        raise ValueError(f"alpha undefined for target_bep={target_bep}")
    return 1.5 / math.log(MAX_TARGET_BEP / target_bep)
