import time
from typing import TYPE_CHECKING, List, Optional, Sequence

from tqdm import tqdm

from coopetition.baselines import max_snr, round_robin, shapley_allocation
from coopetition.channel.channel_model import generate_channel, make_triplets
from coopetition.config import ParallelConfig, ShapleyConfig
from coopetition.core.allocator import (acquire_subcarriers, allocate_power,
                                        player_rates)
from coopetition.core.cournot import play_competition
from coopetition.core.policy import PolicyFactory
from coopetition.engine.algorithms import Algorithm, parse_algorithm_tag
from coopetition.engine.metrics import (compute_trial_metrics,
                                        expected_coalition_stages)
from coopetition.engine.ray_utils import initialize_cluster, run_trials_ray
from coopetition.engine.report import SummaryRow, summarize, write_campaign
from coopetition.logger import init_logger
from coopetition.outputs import TrialResult
from coopetition.player import snr_gap
from coopetition.scenarios import ScenarioSpec
from coopetition.utils import mix_seed

if TYPE_CHECKING:
    from coopetition.engine.arg_utils import CampaignArgs

logger = init_logger(__name__)

_LOGGING_INTERVAL_SEC = 5

# Child seed indices below a trial seed.
_PLAYERS_STREAM = 0
_CHANNEL_STREAM = 1


def _run_algorithm(spec: ScenarioSpec, algorithm: Algorithm,
                   trial_index: int, trial_seed: int) -> TrialResult:
    grid = spec.grid
    players = spec.players_for_trial(mix_seed(trial_seed, _PLAYERS_STREAM))
    # PRP: channel estimation and the broadcast triplets.
    channel = generate_channel(spec.tap_profile, grid, players,
                               mix_seed(trial_seed, _CHANNEL_STREAM))
    triplets = make_triplets(channel, players, spec.beta)
    esnr = [t.esnr_linear for t in triplets]

    num_stages = None
    num_iterations = None
    if algorithm.baseline == "rr":
        sc_map = round_robin(channel, grid, len(players))
    elif algorithm.baseline == "maxsnr":
        sc_map = max_snr(channel, grid)
    elif algorithm.baseline == "shapley":
        sc_map, _ = shapley_allocation(triplets, channel, grid,
                                       ShapleyConfig(len(players)))
    else:
        # ComP: subcarrier counts.
        game = algorithm.game_config(spec.game.min_fraction)
        pricing = spec.pricing.replace(exponent=game.exponent)
        assignment = play_competition(triplets, game, pricing, grid)
        num_iterations = assignment.num_iterations
        # CooP: acquisition order.
        assert algorithm.order is not None
        policy = PolicyFactory.get_policy(algorithm.order,
                                          config=spec.coalition)
        order = policy.get_order(assignment.sc_counts, esnr,
                                 grid.num_subcarriers)
        num_stages = order.num_stages
        if algorithm.order == "coalition":
            expected = expected_coalition_stages(len(players),
                                                 spec.coalition.quota)
            logger.debug(f"{spec.name}/{algorithm.tag}/{trial_index}: "
                         f"{num_stages} stages, {expected} expected for "
                         "equal players.")
        sc_map = acquire_subcarriers(order, assignment.sc_counts, channel)

    # PPP: power allocation and rates.
    sc_counts = sc_map.counts(len(players))
    allocation = allocate_power(sc_map, channel, spec.power_policy)
    rates = player_rates(sc_map, allocation, channel,
                         [snr_gap(p.target_bep) for p in players],
                         grid.subcarrier_spacing_hz,
                         spec.power_policy.reference_power(
                             grid.num_subcarriers))
    metrics = compute_trial_metrics(rates, sc_counts, grid.num_subcarriers,
                                    grid.bandwidth_hz)
    return TrialResult(spec.name,
                       algorithm.tag,
                       trial_index,
                       sc_counts=sc_counts,
                       metrics=metrics,
                       num_stages=num_stages,
                       num_iterations=num_iterations)


def run_trial(spec: ScenarioSpec,
              trial_index: int,
              algorithm: Optional[str] = None) -> TrialResult:
    """Runs one trial of `algorithm` (the scenario default when None).

    The trial seed is mix_seed(spec.seed, trial_index), so every algorithm
    sees the same players and channel in the same trial. Domain errors are
    recorded in the result instead of being raised.
    """
    parsed = parse_algorithm_tag(algorithm or spec.default_algorithm)
    trial_seed = mix_seed(spec.seed, trial_index)
    try:
        return _run_algorithm(spec, parsed, trial_index, trial_seed)
    except (ValueError, ArithmeticError) as e:
        logger.warning(f"Trial {trial_index} of {parsed.tag} on "
                       f"{spec.name} failed: {e}")
        return TrialResult(spec.name, parsed.tag, trial_index, error=str(e))


class CoopetitionEngine:
    """Runs Monte-Carlo campaigns over scenarios and algorithms.

    NOTE: The config arguments are derived from the `CampaignArgs` class.

    Args:
        parallel_config: Whether trials run in-process or as Ray tasks.
        log_stats: Whether to log campaign statistics periodically.
    """

    def __init__(
        self,
        parallel_config: ParallelConfig,
        log_stats: bool,
    ) -> None:
        logger.info("Initializing a coopetition engine with config: "
                    f"worker_use_ray={parallel_config.worker_use_ray}, "
                    f"num_workers={parallel_config.num_workers}, "
                    f"log_stats={log_stats}")
        self.parallel_config = parallel_config
        self.log_stats = log_stats
        if parallel_config.worker_use_ray:
            initialize_cluster(parallel_config)

        self.last_logging_time = 0.0
        self.num_done = 0
        self.num_failed = 0
        self.se_sum = 0.0
        self.jain_sum = 0.0

    @classmethod
    def from_campaign_args(
            cls, campaign_args: "CampaignArgs") -> "CoopetitionEngine":
        """Creates an engine from the campaign arguments."""
        parallel_config = campaign_args.create_parallel_config()
        return cls(parallel_config,
                   log_stats=not campaign_args.disable_log_stats)

    def _run_trials(self, spec: ScenarioSpec, algorithm: str,
                    trial_indices: Sequence[int]) -> List[TrialResult]:
        if self.parallel_config.worker_use_ray:
            return run_trials_ray(spec, algorithm, trial_indices)
        return [run_trial(spec, index, algorithm) for index in trial_indices]

    def run(
        self,
        specs: Sequence[ScenarioSpec],
        algorithms: Sequence[str],
        use_tqdm: bool = True,
    ) -> List[TrialResult]:
        """Runs every algorithm on every scenario.

        Results are ordered by scenario, then algorithm, then trial index.
        """
        # Parse all tags up front so unsupported ones fail before any work.
        tags = [parse_algorithm_tag(a).tag for a in algorithms]
        if use_tqdm:
            total = sum(spec.trials for spec in specs) * len(tags)
            pbar = tqdm(total=total, desc="Trials")
        results: List[TrialResult] = []
        for spec in specs:
            for tag in tags:
                # One chunk per pass keeps the progress bar moving with Ray.
                chunk = max(1, min(spec.trials, 100))
                for start in range(0, spec.trials, chunk):
                    indices = range(start, min(start + chunk, spec.trials))
                    done = self._run_trials(spec, tag, indices)
                    results.extend(done)
                    self._record(done)
                    if use_tqdm:
                        pbar.update(len(done))
        if use_tqdm:
            pbar.close()
        return results

    def run_campaign(
        self,
        specs: Sequence[ScenarioSpec],
        algorithms: Sequence[str],
        output_dir: str,
        use_tqdm: bool = True,
    ) -> List[SummaryRow]:
        """Runs the campaign and writes trials.csv, summary.csv and one
        tradeoff_<scenario>.csv per scenario into `output_dir`."""
        results = self.run(specs, algorithms, use_tqdm=use_tqdm)
        summary = summarize(results)
        write_campaign(output_dir, results, summary)
        logger.info(f"Wrote {len(results)} trial results for "
                    f"{len(summary)} (scenario, algorithm) pairs to "
                    f"{output_dir}.")
        return summary

    def _record(self, results: Sequence[TrialResult]) -> None:
        for result in results:
            self.num_done += 1
            if result.metrics is None:
                self.num_failed += 1
            else:
                self.se_sum += result.metrics.network_se
                self.jain_sum += result.metrics.jain
        if self.log_stats:
            self._log_campaign_stats()

    def _log_campaign_stats(self) -> None:
        now = time.monotonic()
        if now - self.last_logging_time < _LOGGING_INTERVAL_SEC:
            return
        completed = self.num_done - self.num_failed
        if completed > 0:
            avg_se = self.se_sum / completed
            avg_jain = self.jain_sum / completed
        else:
            avg_se = avg_jain = 0.0
        logger.info(f"Trials done: {self.num_done}, "
                    f"Failed: {self.num_failed}, "
                    f"Avg SE: {avg_se:.4f} bit/s/Hz, "
                    f"Avg Jain: {avg_jain:.4f}")
        self.last_logging_time = now


def run_campaign(
    specs: Sequence[ScenarioSpec],
    algorithms: Sequence[str],
    output_dir: str,
    parallel_config: Optional[ParallelConfig] = None,
    use_tqdm: bool = False,
) -> List[SummaryRow]:
    engine = CoopetitionEngine(parallel_config or ParallelConfig(),
                               log_stats=False)
    return engine.run_campaign(specs, algorithms, output_dir, use_tqdm)
