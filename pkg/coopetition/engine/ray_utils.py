from typing import List, Sequence

from coopetition.config import ParallelConfig
from coopetition.logger import init_logger
from coopetition.outputs import TrialResult
from coopetition.scenarios import ScenarioSpec

logger = init_logger(__name__)

try:
    import ray
except ImportError as e:
    logger.warning(f"Failed to import Ray with {e!r}. "
                   "For parallel trials, please install Ray with "
                   "`pip install ray`.")
    ray = None


def initialize_cluster(parallel_config: ParallelConfig) -> None:
    """Starts (or attaches to) a local Ray runtime for trial workers."""
    if ray is None:
        raise ImportError(
            "Ray is not installed. Please install Ray to run trials in "
            "parallel.")
    ray.init(num_cpus=parallel_config.num_workers,
             ignore_reinit_error=True,
             include_dashboard=False)


def run_trials_ray(
    spec: ScenarioSpec,
    algorithm: str,
    trial_indices: Sequence[int],
) -> List[TrialResult]:
    """Runs the trials as Ray tasks; results come back in trial order."""
    if ray is None:
        raise ImportError("Ray is required for parallel trials.")
    # Imported here so the engine can import this module at load time.
    from coopetition.engine.coopetition_engine import run_trial

    remote_trial = ray.remote(run_trial)
    spec_ref = ray.put(spec)
    futures = [
        remote_trial.remote(spec_ref, index, algorithm)
        for index in trial_indices
    ]
    results = ray.get(futures)
    return sorted(results, key=lambda r: r.trial_index)
