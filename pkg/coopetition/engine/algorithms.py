"""Algorithm tags: "<game><mode>-<order>" for coopetition, or a baseline."""
from dataclasses import dataclass
from typing import List, Optional

from coopetition.config import GameConfig, GameMode, GameType
from coopetition.core.policy import PolicyFactory

BASELINE_TAGS = ("rr", "maxsnr", "shapley")
# Cooperative bargaining baseline that is not provided.
NBS_TAG = "nbs"


@dataclass(frozen=True)
class Algorithm:
    tag: str
    game_type: Optional[GameType] = None
    mode: Optional[GameMode] = None
    order: Optional[str] = None
    baseline: Optional[str] = None

    @property
    def is_baseline(self) -> bool:
        return self.baseline is not None

    def game_config(self, min_fraction: float) -> GameConfig:
        assert self.game_type is not None and self.mode is not None
        return GameConfig(self.game_type, self.mode, min_fraction)


def parse_algorithm_tag(tag: str) -> Algorithm:
    """Parses tags such as "C3a-coalition", "c1c-weakest" or "maxsnr"."""
    name = tag.strip()
    if name.lower() == NBS_TAG:
        raise NotImplementedError(
            "The NBS baseline is not provided: its bargaining model is not "
            "defined by the methodology this package implements.")
    if name.lower() in BASELINE_TAGS:
        return Algorithm(tag=name.lower(), baseline=name.lower())

    game, _, order = name.partition("-")
    if len(game) != 3 or not order:
        raise ValueError(f"Unknown algorithm tag: {tag}. Expected "
                         "'<C1-C5><c|a>-<order>' or one of "
                         f"{list(BASELINE_TAGS)}.")
    try:
        game_type = GameType(game[:2].lower())
    except ValueError:
        raise ValueError(f"Unknown game type in tag {tag}: {game[:2]}. "
                         "Must be C1-C5.") from None
    modes = {mode.suffix: mode for mode in GameMode}
    if game[2].lower() not in modes:
        raise ValueError(f"Unknown game mode suffix in tag {tag}: "
                         f"{game[2]}. Must be 'c' or 'a'.")
    mode = modes[game[2].lower()]
    order = order.lower()
    if order not in PolicyFactory.policy_names():
        raise ValueError(f"Unknown order rule in tag {tag}: {order}. Must "
                         f"be one of {PolicyFactory.policy_names()}.")
    return Algorithm(tag=f"{game_type.name}{mode.suffix}-{order}",
                     game_type=game_type,
                     mode=mode,
                     order=order)


def all_algorithm_tags() -> List[str]:
    """The 30 coopetition tags followed by the baselines."""
    tags = []
    for game_type in GameType:
        for mode in GameMode:
            for order in PolicyFactory.policy_names():
                tags.append(f"{game_type.name}{mode.suffix}-{order}")
    return tags + list(BASELINE_TAGS)
