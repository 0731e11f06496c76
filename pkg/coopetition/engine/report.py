"""Aggregation of trial results and the CSV result files."""
import csv
import math
import os
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from coopetition.outputs import TrialResult

TRIALS_COLUMNS = ("scenario", "algorithm", "trial", "player", "s_i",
                  "rate_bps", "se", "jain", "utilization", "flags")
SUMMARY_COLUMNS = ("scenario", "algorithm", "count", "failed", "se_mean",
                   "se_stderr", "jain_mean", "jain_stderr",
                   "utilization_mean", "utilization_stderr")
TRADEOFF_COLUMNS = ("algorithm", "se_mean", "jain_mean")


@dataclass
class SummaryRow:
    """Mean and standard error of the metrics of one (scenario, algorithm).

    Failed trials are counted in `failed` and excluded from the statistics.
    """
    scenario: str
    algorithm: str
    count: int
    failed: int
    se_mean: float
    se_stderr: float
    jain_mean: float
    jain_stderr: float
    utilization_mean: float
    utilization_stderr: float


def _mean_stderr(values: Sequence[float]) -> Tuple[float, float]:
    if len(values) == 0:
        return math.nan, math.nan
    if len(values) == 1:
        return float(values[0]), 0.0
    array = np.asarray(values, dtype=np.float64)
    return (float(array.mean()),
            float(array.std(ddof=1) / math.sqrt(len(array))))


def summarize(results: Iterable[TrialResult]) -> List[SummaryRow]:
    """One row per (scenario, algorithm), in first-seen order."""
    groups: Dict[Tuple[str, str], List[TrialResult]] = {}
    for result in results:
        groups.setdefault((result.scenario, result.algorithm),
                          []).append(result)
    rows = []
    for (scenario, algorithm), group in groups.items():
        done = [r.metrics for r in group if r.metrics is not None]
        se = _mean_stderr([m.network_se for m in done])
        jain = _mean_stderr([m.jain for m in done])
        utilization = _mean_stderr([m.sc_utilization for m in done])
        rows.append(
            SummaryRow(scenario, algorithm, len(done),
                       len(group) - len(done), se[0], se[1], jain[0], jain[1],
                       utilization[0], utilization[1]))
    return rows


def format_real(value: float) -> str:
    """17 significant digits; round-trips every double."""
    return format(value, ".17g")


def _trial_rows(result: TrialResult) -> List[List[str]]:
    flags = ";".join(result.flags)
    head = [result.scenario, result.algorithm, str(result.trial_index)]
    if result.metrics is None or result.sc_counts is None:
        return [head + ["", "", "", "", "", "", flags]]
    metrics = result.metrics
    shared = [
        format_real(metrics.network_se),
        format_real(metrics.jain),
        format_real(metrics.sc_utilization), flags
    ]
    return [
        head + [str(player), str(count), format_real(rate)] + shared
        for player, (count, rate) in enumerate(
            zip(result.sc_counts, metrics.per_player_rate))
    ]


def _write_csv(path: str, header: Sequence[str],
               rows: Iterable[Sequence[str]]) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as e:
        raise OSError(f"Failed to write {path}: {e}") from e


def write_trials_csv(path: str, results: Iterable[TrialResult]) -> None:
    rows: List[List[str]] = []
    for result in results:
        rows.extend(_trial_rows(result))
    _write_csv(path, TRIALS_COLUMNS, rows)


def write_summary_csv(path: str, summary: Iterable[SummaryRow]) -> None:
    rows = [[
        row.scenario, row.algorithm,
        str(row.count),
        str(row.failed)
    ] + [
        format_real(v)
        for v in (row.se_mean, row.se_stderr, row.jain_mean, row.jain_stderr,
                  row.utilization_mean, row.utilization_stderr)
    ] for row in summary]
    _write_csv(path, SUMMARY_COLUMNS, rows)


def write_tradeoff_csvs(output_dir: str,
                        summary: Iterable[SummaryRow]) -> List[str]:
    """Writes one fairness-vs-SE file per scenario and returns the paths."""
    by_scenario: Dict[str, List[SummaryRow]] = {}
    for row in summary:
        by_scenario.setdefault(row.scenario, []).append(row)
    paths = []
    for scenario, rows in by_scenario.items():
        path = os.path.join(output_dir, f"tradeoff_{scenario}.csv")
        _write_csv(path, TRADEOFF_COLUMNS,
                   [[row.algorithm,
                     format_real(row.se_mean),
                     format_real(row.jain_mean)] for row in rows])
        paths.append(path)
    return paths


def write_campaign(output_dir: str, results: Sequence[TrialResult],
                   summary: Sequence[SummaryRow]) -> None:
    try:
        os.makedirs(output_dir, exist_ok=True)
    except OSError as e:
        raise OSError(f"Failed to create {output_dir}: {e}") from e
    write_trials_csv(os.path.join(output_dir, "trials.csv"), results)
    write_summary_csv(os.path.join(output_dir, "summary.csv"), summary)
    write_tradeoff_csvs(output_dir, summary)
