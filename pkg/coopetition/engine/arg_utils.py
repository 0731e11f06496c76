import argparse
import dataclasses
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from coopetition.config import (CoalitionConfig, GameConfig, GameMode,
                                GameType, IntraOrder, ParallelConfig,
                                PowerPolicy, PowerPolicyType)
from coopetition.core.policy import PolicyFactory
from coopetition.engine.algorithms import (BASELINE_TAGS, NBS_TAG,
                                           all_algorithm_tags)
from coopetition.scenarios import (ScenarioSpec, builtin_scenarios,
                                   get_builtin_scenario)


def _choices(enum_cls) -> List[str]:
    return [member.value for member in enum_cls]


@dataclass
class CampaignArgs:
    """Arguments for a coopetition campaign.

    Scenario-level knobs left at None keep the value of the scenario.
    """
    scenario: str = "1"
    game: Optional[str] = None
    mode: Optional[str] = None
    order: Optional[str] = None
    baseline: Optional[str] = None
    algorithms: Optional[List[str]] = None
    all_algorithms: bool = False
    trials: Optional[int] = None
    seed: Optional[int] = None
    mu: Optional[float] = None
    min_fraction: Optional[float] = None
    intra_order: Optional[str] = None
    power: Optional[str] = None
    total_power: Optional[float] = None
    out: str = "results"
    worker_use_ray: bool = False
    num_workers: Optional[int] = None
    disable_log_stats: bool = False
    no_tqdm: bool = False

    @staticmethod
    def add_cli_args(
            parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
        """Shared CLI arguments for coopetition campaigns."""

        # Scenario arguments
        parser.add_argument(
            '--scenario',
            type=str,
            default=CampaignArgs.scenario,
            help='built-in scenario 1-5, "all" for the five built-in '
            'scenarios, or the path of a JSON scenario file')
        parser.add_argument('--trials',
                            type=int,
                            default=CampaignArgs.trials,
                            help='number of Monte-Carlo trials per '
                            'algorithm (default: from the scenario, 1000 '
                            'for the built-ins)')
        parser.add_argument('--seed',
                            type=int,
                            default=CampaignArgs.seed,
                            help='campaign seed (default: from the scenario)')
        # Algorithm arguments
        parser.add_argument('--game',
                            type=str,
                            default=CampaignArgs.game,
                            choices=_choices(GameType),
                            help='Cournot game type (default: from the '
                            'scenario)')
        parser.add_argument('--mode',
                            type=str,
                            default=CampaignArgs.mode,
                            choices=_choices(GameMode),
                            help='classic solution scaling or parameter '
                            'adaptation (default: from the scenario)')
        parser.add_argument('--order',
                            type=str,
                            default=CampaignArgs.order,
                            choices=PolicyFactory.policy_names(),
                            help='subcarrier acquisition order rule '
                            '(default: from the scenario)')
        parser.add_argument('--baseline',
                            type=str,
                            default=CampaignArgs.baseline,
                            choices=list(BASELINE_TAGS) + [NBS_TAG],
                            help='run a reference allocator instead of '
                            'coopetition')
        parser.add_argument('--algorithms',
                            type=str,
                            nargs='+',
                            default=CampaignArgs.algorithms,
                            help='algorithm tags such as C3a-coalition or '
                            'maxsnr; overrides --game/--mode/--order/'
                            '--baseline')
        parser.add_argument('--all-algorithms',
                            action='store_true',
                            help='run every coopetition mode and baseline')
        parser.add_argument('--mu',
                            type=float,
                            default=CampaignArgs.mu,
                            help='weighted-majority quota in (0, 1)')
        parser.add_argument('--min-fraction',
                            type=float,
                            default=CampaignArgs.min_fraction,
                            help='type-2 minimum assignment as a fraction '
                            'of the equal share K/I')
        parser.add_argument('--intra-order',
                            type=str,
                            default=CampaignArgs.intra_order,
                            choices=_choices(IntraOrder),
                            help='acquisition order inside a coalition')
        # Power arguments
        parser.add_argument('--power',
                            type=str,
                            default=CampaignArgs.power,
                            choices=_choices(PowerPolicyType),
                            help='per-player power budget policy')
        parser.add_argument('--total-power',
                            type=float,
                            default=CampaignArgs.total_power,
                            help='total transmit power in relative units')
        # Execution arguments
        parser.add_argument('--out',
                            type=str,
                            default=CampaignArgs.out,
                            help='output directory of the CSV files')
        parser.add_argument('--worker-use-ray',
                            action='store_true',
                            help='run trials as Ray tasks')
        parser.add_argument('--num-workers',
                            type=int,
                            default=CampaignArgs.num_workers,
                            help='number of CPUs reserved for Ray workers')
        parser.add_argument('--disable-log-stats',
                            action='store_true',
                            help='disable periodic campaign statistics')
        parser.add_argument('--no-tqdm',
                            action='store_true',
                            help='disable the progress bar')
        return parser

    @classmethod
    def from_cli_args(cls, args: argparse.Namespace) -> 'CampaignArgs':
        # Get the list of attributes of this dataclass.
        attrs = [attr.name for attr in dataclasses.fields(cls)]
        # Set the attributes from the parsed arguments.
        campaign_args = cls(**{attr: getattr(args, attr) for attr in attrs})
        return campaign_args

    def _load_scenarios(self) -> List[ScenarioSpec]:
        if self.scenario == "all":
            return builtin_scenarios()
        if self.scenario.endswith(".json"):
            # Imported here to keep pydantic out of library imports.
            from coopetition.entrypoints.scenario_file import (
                load_scenario_file)
            return [load_scenario_file(self.scenario)]
        return [get_builtin_scenario(self.scenario)]

    def _override(self, spec: ScenarioSpec) -> ScenarioSpec:
        coalition = spec.coalition
        if self.mu is not None or self.intra_order is not None:
            coalition = CoalitionConfig(
                quota=coalition.quota if self.mu is None else self.mu,
                intra_order=coalition.intra_order
                if self.intra_order is None else self.intra_order,
                no_coalition_order=coalition.no_coalition_order)
        game = spec.game
        if self.min_fraction is not None:
            game = GameConfig(game.game_type, game.mode, self.min_fraction)
        power = spec.power_policy
        if self.power is not None or self.total_power is not None:
            power = PowerPolicy(
                policy=power.policy if self.power is None else self.power,
                total_power=power.total_power
                if self.total_power is None else self.total_power)
        return dataclasses.replace(
            spec,
            coalition=coalition,
            game=game,
            power_policy=power,
            trials=spec.trials if self.trials is None else self.trials,
            seed=spec.seed if self.seed is None else self.seed,
        )

    def _scenario_tag(self, spec: ScenarioSpec) -> str:
        game = GameConfig(
            spec.game.game_type if self.game is None else self.game,
            spec.game.mode if self.mode is None else self.mode)
        _, _, order = spec.default_algorithm.partition("-")
        return f"{game.tag}-{order if self.order is None else self.order}"

    def algorithm_tags(
            self,
            specs: Optional[Sequence[ScenarioSpec]] = None) -> List[str]:
        """Tags to run. Without explicit algorithms every scenario runs its
        own game, mode and order, each overridable by --game/--mode/--order.
        """
        if self.all_algorithms:
            return all_algorithm_tags()
        if self.algorithms:
            return list(self.algorithms)
        if self.baseline is not None:
            return [self.baseline]
        if specs is None:
            specs = [self._override(s) for s in self._load_scenarios()]
        tags: List[str] = []
        for spec in specs:
            tag = self._scenario_tag(spec)
            if tag not in tags:
                tags.append(tag)
        return tags

    def create_parallel_config(self) -> ParallelConfig:
        return ParallelConfig(self.worker_use_ray, self.num_workers)

    def create_campaign_configs(
        self,
    ) -> Tuple[List[ScenarioSpec], List[str], ParallelConfig]:
        specs = [self._override(spec) for spec in self._load_scenarios()]
        return specs, self.algorithm_tags(specs), self.create_parallel_config()
