from typing import Iterable, Sequence, Union

import numpy as np

# splitmix64 constants. They are part of the reproducibility contract: any
# implementation using the same chain derives the same per-trial seeds.
_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX_MUL_1 = 0xBF58476D1CE4E5B9
_MIX_MUL_2 = 0x94D049BB133111EB

# Owner marker for subcarriers nobody holds.
UNASSIGNED = -1

ArrayLike = Union[Sequence[float], np.ndarray]


def db_to_linear(
        value_db: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    return 10.0**(value_db / 10.0)


def linear_to_db(
        value: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    return 10.0 * np.log10(value)


def splitmix64(state: int) -> int:
    """One splitmix64 step: advance `state` by the golden gamma and return
    the finalised 64-bit output."""
    z = (state + _GOLDEN_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX_MUL_1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX_MUL_2) & _MASK64
    return z ^ (z >> 31)


def mix_seed(seed: int, index: int) -> int:
    """Derives a child seed: splitmix64(splitmix64(seed) XOR index).

    Both arguments are reduced modulo 2**64 first, so negative seeds are
    accepted.
    """
    return splitmix64(splitmix64(seed & _MASK64) ^ (index & _MASK64))


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed & _MASK64))


def stable_argsort_desc(values: ArrayLike) -> np.ndarray:
    """Indices sorting `values` in descending order, ties by lower index."""
    return np.argsort(-np.asarray(values, dtype=np.float64), kind="stable")


def check_distinct(indices: Iterable[int]) -> None:
    seen = set()
    for i in indices:
        if i in seen:
            raise ValueError(f"Duplicate player index {i}.")
        seen.add(i)
