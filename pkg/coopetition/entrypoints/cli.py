"""The `coopetition` command line.

    coopetition run --scenario 3 --game c3 --mode adaptive --order coalition
    coopetition scenarios
    coopetition complexity --players 8 --sc 300 --mu 0.5
"""
import argparse
import sys
from typing import List, Optional

from coopetition.config import GameConfig, GameMode, GameType
from coopetition.engine.algorithms import NBS_TAG
from coopetition.engine.arg_utils import CampaignArgs
from coopetition.engine.coopetition_engine import CoopetitionEngine
from coopetition.engine.metrics import (DEFAULT_NEWTON_ITERATIONS,
                                        DEFAULT_OMEGA, complexity_estimate,
                                        expected_coalition_stages)
from coopetition.logger import init_logger, set_log_level
from coopetition.scenarios import builtin_scenarios

logger = init_logger(__name__)


def run(args: argparse.Namespace) -> int:
    campaign_args = CampaignArgs.from_cli_args(args)
    if campaign_args.all_algorithms:
        logger.info(f"The {NBS_TAG} baseline is not provided and is left "
                    "out of --all-algorithms.")
    specs, algorithms, _ = campaign_args.create_campaign_configs()
    engine = CoopetitionEngine.from_campaign_args(campaign_args)
    summary = engine.run_campaign(specs,
                                  algorithms,
                                  campaign_args.out,
                                  use_tqdm=not campaign_args.no_tqdm)
    for row in summary:
        print(f"{row.scenario:<12} {row.algorithm:<16} "
              f"SE={row.se_mean:.4f} bit/s/Hz  Jain={row.jain_mean:.4f}  "
              f"util={row.utilization_mean:.4f}  "
              f"trials={row.count} failed={row.failed}")
    return 0


def scenarios(args: argparse.Namespace) -> int:
    del args
    for spec in builtin_scenarios():
        if spec.player_profiles is not None:
            snr = ", ".join(f"{p.avg_snr_db:g}" for p in spec.player_profiles)
            players = f"avg SNR [{snr}] dB"
        else:
            assert spec.random_snr_db is not None
            low, high = spec.random_snr_db
            players = f"avg SNR uniform in [{low:g}, {high:g}] dB"
        revenue = spec.revenue_params or [1.0] * spec.num_players
        print(f"{spec.name}: I={spec.num_players}, {players}, "
              f"r={revenue}, K={spec.grid.num_subcarriers}, "
              f"df={spec.grid.subcarrier_spacing_hz:g} Hz")
    return 0


def complexity(args: argparse.Namespace) -> int:
    game = GameConfig(args.game, args.mode)
    count = complexity_estimate(args.players,
                                args.sc,
                                args.mu,
                                game,
                                omega=args.omega,
                                newton_iterations=args.newton_iterations)
    stages = expected_coalition_stages(args.players, args.mu)
    print(f"A_tot={count} operations ({game.tag}, I={args.players}, "
          f"K={args.sc}, mu={args.mu}, N={stages})")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coopetition",
        description="Coopetition spectrum sharing simulator.")
    parser.add_argument("--log-level",
                        type=str,
                        default=None,
                        help="console log level, e.g. DEBUG")
    subparsers = parser.add_subparsers(dest="command", required=True)

    run_parser = subparsers.add_parser(
        "run", help="run a Monte-Carlo campaign and write CSV results")
    CampaignArgs.add_cli_args(run_parser)
    run_parser.set_defaults(func=run)

    scenarios_parser = subparsers.add_parser(
        "scenarios", help="list the built-in scenarios")
    scenarios_parser.set_defaults(func=scenarios)

    complexity_parser = subparsers.add_parser(
        "complexity", help="print the worst-case operation count")
    complexity_parser.add_argument("--players", type=int, default=8)
    complexity_parser.add_argument("--sc", type=int, default=300)
    complexity_parser.add_argument("--mu", type=float, default=0.5)
    complexity_parser.add_argument("--game",
                                   type=str,
                                   default="c1",
                                   choices=[g.value for g in GameType])
    complexity_parser.add_argument("--mode",
                                   type=str,
                                   default="classic",
                                   choices=[m.value for m in GameMode])
    complexity_parser.add_argument("--omega",
                                   type=int,
                                   default=DEFAULT_OMEGA,
                                   help="adaptation iterations")
    complexity_parser.add_argument("--newton-iterations",
                                   type=int,
                                   default=DEFAULT_NEWTON_ITERATIONS)
    complexity_parser.set_defaults(func=complexity)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    if args.log_level is not None:
        set_log_level(args.log_level)
    try:
        return args.func(args)
    except (ValueError, NotImplementedError, OSError) as e:
        logger.error(str(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
