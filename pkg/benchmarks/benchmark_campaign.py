"""Benchmark Monte-Carlo trial throughput."""
import argparse
import time

from coopetition.config import ParallelConfig
from coopetition.engine import CoopetitionEngine, all_algorithm_tags
from coopetition.scenarios import get_builtin_scenario


def main(args: argparse.Namespace):
    print(args)
    spec = get_builtin_scenario(args.scenario)
    spec.trials = args.trials
    algorithms = (all_algorithm_tags()
                  if args.algorithm == "all" else [args.algorithm])
    engine = CoopetitionEngine(ParallelConfig(args.worker_use_ray,
                                              args.num_workers),
                               log_stats=False)

    # Warm up Ray workers and numpy before timing.
    engine.run([spec], algorithms[:1], use_tqdm=False)

    start = time.perf_counter()
    results = engine.run([spec], algorithms, use_tqdm=not args.no_tqdm)
    elapsed_time = time.perf_counter() - start
    failed = sum(1 for r in results if r.failed)
    print(f"Throughput: {len(results) / elapsed_time:.2f} trials/s "
          f"({len(results)} trials, {failed} failed, "
          f"{elapsed_time:.2f} s)")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(
        description="Benchmark the trial throughput.")
    parser.add_argument("--scenario", type=str, default="1")
    parser.add_argument("--algorithm",
                        type=str,
                        default="C1c-coalition",
                        help='algorithm tag, or "all"')
    parser.add_argument("--trials",
                        type=int,
                        default=100,
                        help="Number of trials per algorithm.")
    parser.add_argument("--worker-use-ray", action="store_true")
    parser.add_argument("--num-workers", type=int, default=None)
    parser.add_argument("--no-tqdm", action="store_true")
    args = parser.parse_args()
    main(args)
