"""Pricing parameters of the Cournot competition."""
from typing import Optional

_SUPPORTED_EXPONENTS = (1, 2, 3)


class PricingParams:
    """Pricing parameters of the spectrum cost function
    c(b) = x + y·(Σ_j b_j)^τ.

    The parameters are part of the network protocol: every node knows them,
    so every node solves the same game.

    Args:
        fixed_cost: Fixed cost x of spectrum sharing, in monetary units.
            Also the initial x of the parameter adaptation.
        unit_cost: Cost y of one bandwidth unit. Also the initial y of the
            parameter adaptation.
        exponent: Cost exponent τ. One of 1, 2 or 3.
        delta_x: Step Δx by which the adaptation raises x.
        delta_y: Step Δy by which the adaptation raises y.
        max_adapt_iters: Upper bound on the total number of adaptation loop
            iterations. Exceeding it is reported as divergence.
        bandwidth_unit_hz: Bandwidth unit the demands b_i and the cost
            function are expressed in. Demands are converted to Hz with this
            factor before they are compared with the available bandwidth.
    """

    def __init__(
        self,
        fixed_cost: float = 0.0,
        unit_cost: float = 1.0,
        exponent: int = 1,
        delta_x: float = 0.5,
        delta_y: float = 0.5,
        max_adapt_iters: int = 64,
        bandwidth_unit_hz: float = 1e6,
    ) -> None:
        self.fixed_cost = fixed_cost
        self.unit_cost = unit_cost
        self.exponent = exponent
        self.delta_x = delta_x
        self.delta_y = delta_y
        self.max_adapt_iters = max_adapt_iters
        self.bandwidth_unit_hz = bandwidth_unit_hz
        self._verify_args()

    def _verify_args(self) -> None:
        if self.fixed_cost < 0.0:
            raise ValueError("fixed_cost must be non-negative, got "
                             f"{self.fixed_cost}.")
        if not self.unit_cost > 0.0:
            raise ValueError(
                f"unit_cost must be positive, got {self.unit_cost}.")
        if self.exponent not in _SUPPORTED_EXPONENTS:
            raise ValueError(f"exponent must be one of "
                             f"{_SUPPORTED_EXPONENTS}, got {self.exponent}.")
        if not self.delta_x > 0.0:
            raise ValueError(
                f"delta_x must be positive, got {self.delta_x}.")
        if not self.delta_y > 0.0:
            raise ValueError(
                f"delta_y must be positive, got {self.delta_y}.")
        if self.max_adapt_iters < 1:
            raise ValueError("max_adapt_iters must be at least 1, got "
                             f"{self.max_adapt_iters}.")
        if not self.bandwidth_unit_hz > 0.0:
            raise ValueError("bandwidth_unit_hz must be positive, got "
                             f"{self.bandwidth_unit_hz}.")

    def replace(
        self,
        fixed_cost: Optional[float] = None,
        unit_cost: Optional[float] = None,
        exponent: Optional[int] = None,
    ) -> "PricingParams":
        """Returns a copy with the given fields overridden."""
        return PricingParams(
            fixed_cost=self.fixed_cost
            if fixed_cost is None else fixed_cost,
            unit_cost=self.unit_cost if unit_cost is None else unit_cost,
            exponent=self.exponent if exponent is None else exponent,
            delta_x=self.delta_x,
            delta_y=self.delta_y,
            max_adapt_iters=self.max_adapt_iters,
            bandwidth_unit_hz=self.bandwidth_unit_hz,
        )

    def cost(self, total_demand: float) -> float:
        """Evaluates c(b) for the given Σ_j b_j."""
        return self.fixed_cost + self.unit_cost * total_demand**self.exponent

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PricingParams):
            return NotImplemented
        return repr(self) == repr(other)

    def __repr__(self) -> str:
        return (f"PricingParams(fixed_cost={self.fixed_cost}, "
                f"unit_cost={self.unit_cost}, "
                f"exponent={self.exponent}, "
                f"delta_x={self.delta_x}, "
                f"delta_y={self.delta_y}, "
                f"max_adapt_iters={self.max_adapt_iters}, "
                f"bandwidth_unit_hz={self.bandwidth_unit_hz})")
