from coopetition.channel.channel_model import (DEFAULT_BETA,
                                               ChannelRealization,
                                               effective_snr,
                                               generate_channel,
                                               make_triplets)
from coopetition.channel.profiles import (EVA, FLAT, TapProfile,
                                          get_tap_profile)

__all__ = [
    "DEFAULT_BETA",
    "ChannelRealization",
    "effective_snr",
    "generate_channel",
    "make_triplets",
    "EVA",
    "FLAT",
    "TapProfile",
    "get_tap_profile",
]
