"""The competition phase: a Cournot game over bandwidth demands.

Every player pays the unit price c(b) = x + y·(Σ_j b_j)^τ for each bandwidth
unit it demands, so its profit is r_i·η_i·b_i - b_i·c(b). For τ = 1 the best
responses form a linear system whose unique solution is the Nash
equilibrium; the monopoly games drop the coupling through Σ_j b_j.
"""
import math
from typing import Callable, List, Sequence, Tuple

import numpy as np

from coopetition.config import GameConfig, GameMode, GameType, GridConfig
from coopetition.logger import init_logger
from coopetition.outputs import Assignment, DemandVector
from coopetition.player import Triplet, snr_gap
from coopetition.pricing_params import PricingParams

logger = init_logger(__name__)

DemandSolver = Callable[[Sequence[Triplet], PricingParams], DemandVector]


def spectral_efficiency_estimate(triplet: Triplet) -> float:
    """η_i = log2(1 + α_i·γ_eff,i) in bit/s/Hz."""
    alpha = snr_gap(triplet.target_bep)
    return math.log2(1.0 + alpha * triplet.esnr_linear)


def _marginal_revenues(triplets: Sequence[Triplet]) -> np.ndarray:
    return np.array(
        [t.revenue_param * spectral_efficiency_estimate(t) for t in triplets])


def profit(
    demands: DemandVector,
    i: int,
    triplets: Sequence[Triplet],
    pricing: PricingParams,
) -> float:
    """Profit of player i when every player demands `demands`."""
    if not 0 <= i < len(triplets):
        raise IndexError(f"Player index {i} out of range for "
                         f"{len(triplets)} players.")
    b = demands.demands_hz / pricing.bandwidth_unit_hz
    revenue = (triplets[i].revenue_param *
               spectral_efficiency_estimate(triplets[i]) * b[i])
    return float(revenue - b[i] * pricing.cost(b.sum()))


def oligopoly_equilibrium(
    triplets: Sequence[Triplet],
    pricing: PricingParams,
) -> DemandVector:
    """Unconstrained Nash equilibrium b_i* = z_i - Σz / (1 + I), with
    z_i = (r_i·η_i - x) / y.

    The result is not clamped: demands may be negative or exceed B.
    """
    if pricing.exponent != 1:
        raise ValueError("closed form requires τ=1, got "
                         f"τ={pricing.exponent}")
    if len(triplets) == 0:
        raise ValueError("no players")
    z = (_marginal_revenues(triplets) -
         pricing.fixed_cost) / pricing.unit_cost
    b = z - z.sum() / (1 + len(z))
    return DemandVector(b * pricing.bandwidth_unit_hz)


def monopoly_demand(triplet: Triplet, pricing: PricingParams) -> float:
    """Demand in Hz of a player facing the cost function alone."""
    tau = pricing.exponent
    ratio = ((triplet.revenue_param * spectral_efficiency_estimate(triplet) -
              pricing.fixed_cost) / (pricing.unit_cost * (tau + 1)))
    if ratio < 0.0:
        return 0.0
    return ratio**(1.0 / tau) * pricing.bandwidth_unit_hz


def monopoly_demands(
    triplets: Sequence[Triplet],
    pricing: PricingParams,
) -> DemandVector:
    return DemandVector([monopoly_demand(t, pricing) for t in triplets])


def get_demand_solver(game_type: GameType) -> DemandSolver:
    if game_type.is_oligopoly:
        return oligopoly_equilibrium
    return monopoly_demands


def _floor_counts(demands: DemandVector, num_subcarriers: int) -> List[int]:
    if demands.total_hz <= 0.0:
        return [0] * demands.num_players
    counts = np.floor(num_subcarriers * demands.demands_hz /
                      demands.total_hz).astype(np.int64)
    return counts.tolist()


def classic_scaling(
    raw: DemandVector,
    grid: GridConfig,
    pricing: PricingParams,
) -> Assignment:
    """Clamps the demands to [0, B] and rescales them onto K subcarriers."""
    clamped = raw.clamp(grid.bandwidth_hz)
    counts = _floor_counts(clamped, grid.num_subcarriers)
    return Assignment(counts, pricing, demands=clamped, num_iterations=0)


def parameter_adaptation(
    triplets: Sequence[Triplet],
    pricing: PricingParams,
    grid: GridConfig,
    solver: DemandSolver,
) -> Assignment:
    """Raises y, then x, until the clamped demands fit into B, and keeps the
    pricing pair whose total demand comes closer to B.

    `pricing` supplies the initial (x, y) and the steps Δx, Δy.
    """
    bandwidth = grid.bandwidth_hz
    num_iterations = 0

    def solve(x: float, y: float) -> Tuple[DemandVector, float]:
        demands = solver(triplets,
                         pricing.replace(fixed_cost=x,
                                         unit_cost=y)).clamp(bandwidth)
        return demands, demands.total_hz

    def step() -> None:
        nonlocal num_iterations
        num_iterations += 1
        if num_iterations > pricing.max_adapt_iters:
            raise ValueError(
                "adaptation diverged after "
                f"{pricing.max_adapt_iters} iterations ({pricing})")

    x, y = pricing.fixed_cost, pricing.unit_cost
    _, total = solve(x, y)
    while total > bandwidth:
        step()
        y += pricing.delta_y
        _, total = solve(x, y)
    x1, y1, total1 = x, y, total
    logger.debug(f"Adaptation raised y to {y1} (D={total1:.6g} Hz).")

    if y > pricing.unit_cost:
        y -= pricing.delta_y
        _, total = solve(x, y)
    while total > bandwidth:
        step()
        x += pricing.delta_x
        _, total = solve(x, y)
    x2, y2, total2 = x, y, total
    logger.debug(f"Adaptation raised x to {x2} at y={y2} "
                 f"(D={total2:.6g} Hz).")

    if total1 >= total2:
        x, y = x1, y1
    else:
        x, y = x2, y2
    final_pricing = pricing.replace(fixed_cost=x, unit_cost=y)
    demands, _ = solve(x, y)
    counts = _floor_counts(demands, grid.num_subcarriers)
    return Assignment(counts,
                      final_pricing,
                      demands=demands,
                      num_iterations=num_iterations)


def minimum_assignment(num_players: int, num_subcarriers: int,
                       min_fraction: float) -> int:
    """Type-2 floor: the given fraction of the equal share K / I."""
    return math.floor(min_fraction * num_subcarriers / num_players)


def apply_minimum_assignment(
    sc_counts: Sequence[int],
    num_subcarriers: int,
    min_fraction: float,
) -> List[int]:
    """Raises every count below the type-2 floor up to it.

    Players are topped up in index order, one subcarrier at a time. Each
    subcarrier comes from the currently largest holder above the floor (ties
    go to the lower index) or, when nobody holds more than the floor, from
    the unassigned pool.
    """
    counts = [int(s) for s in sc_counts]
    floor = minimum_assignment(len(counts), num_subcarriers, min_fraction)
    if floor * len(counts) > num_subcarriers:
        raise ValueError("infeasible minimum assignment: "
                         f"{len(counts)} x {floor} > {num_subcarriers}")
    for i in range(len(counts)):
        while counts[i] < floor:
            donor = max(
                (j for j in range(len(counts)) if counts[j] > floor),
                key=lambda j: (counts[j], -j),
                default=None,
            )
            if donor is not None:
                counts[donor] -= 1
            elif sum(counts) >= num_subcarriers:
                raise ValueError("infeasible minimum assignment: no "
                                 "subcarrier left to top up player "
                                 f"{i}")
            counts[i] += 1
    return counts


def play_competition(
    triplets: Sequence[Triplet],
    config: GameConfig,
    pricing: PricingParams,
    grid: GridConfig,
) -> Assignment:
    """Runs the configured Cournot game and returns the counts s_i."""
    if pricing.exponent != config.exponent:
        raise ValueError(
            f"Game type {config.game_type.name} is played with "
            f"τ={config.exponent}, got pricing exponent {pricing.exponent}.")
    solver = get_demand_solver(config.game_type)
    if config.mode == GameMode.CLASSIC:
        assignment = classic_scaling(solver(triplets, pricing), grid, pricing)
    else:
        assignment = parameter_adaptation(triplets, pricing, grid, solver)

    if config.game_type == GameType.C2:
        assignment.sc_counts = apply_minimum_assignment(
            assignment.sc_counts, grid.num_subcarriers, config.min_fraction)
    logger.debug(f"{config.tag}: s={assignment.sc_counts} "
                 f"omega={assignment.num_iterations}")
    return assignment
