"""Seeded random sample selection and the partial synthesis matrix.

Acquisition keeps m of the n samples of a signal. Which m is decided by a
deterministic seeded partial Fisher-Yates shuffle, so every experiment is
reproducible from (n, m, seed) alone. The selection operator is a
row-selected identity; composing it with a synthesis matrix gives the
m x n system matrix relating measurements to transform coefficients.
"""

from dataclasses import dataclass

import numpy as np

from .bases import BasisPair
from .signals import Signal


@dataclass(frozen=True)
class MeasurementSet:
    """Available samples of a length-n signal.

    indices are strictly increasing positions in [0, n); values holds the
    signal at those positions; seed is the generator seed that produced the
    selection (kept for provenance).
    """

    n: int
    indices: np.ndarray
    values: np.ndarray
    seed: int

    def __post_init__(self):
        indices = np.asarray(self.indices, dtype=np.int64)
        values = np.asarray(self.values, dtype=complex)
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "values", values)
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if indices.ndim != 1 or indices.size == 0:
            raise ValueError("indices must be a non-empty 1-d vector")
        if indices.size != values.size:
            raise ValueError(
                f"indices ({indices.size}) and values ({values.size}) differ in length"
            )
        if indices[0] < 0 or indices[-1] >= self.n or np.any(np.diff(indices) <= 0):
            raise ValueError("indices must be strictly increasing and within [0, n)")

    @property
    def m(self) -> int:
        return self.indices.size


def select_indices(n: int, m: int, seed: int) -> np.ndarray:
    """Draw m distinct indices uniformly from [0, n), sorted ascending.

    Deterministic in (n, m, seed): a partial Fisher-Yates shuffle driven by
    a PCG64 generator seeded with `seed`.
    """
    if not 1 <= m <= n:
        raise ValueError(f"m must satisfy 1 <= m <= n, got m={m}, n={n}")
    rng = np.random.default_rng(seed)
    pool = np.arange(n)
    for i in range(m):
        j = int(rng.integers(i, n))
        pool[i], pool[j] = pool[j], pool[i]
    chosen = pool[:m]
    chosen.sort()
    return chosen


def measure(signal: Signal, indices: np.ndarray, seed: int = 0) -> MeasurementSet:
    """Keep the samples at `indices`; equivalent to applying the
    row-selection measurement matrix."""
    indices = np.asarray(indices, dtype=np.int64)
    if indices.size and (indices.min() < 0 or indices.max() >= signal.n):
        raise ValueError(
            f"indices out of range for signal of length {signal.n}"
        )
    return MeasurementSet(signal.n, indices, signal.samples[indices], seed)


def partial_matrix(basis: BasisPair, indices: np.ndarray) -> np.ndarray:
    """Rows of the synthesis matrix at the available indices.

    The returned m x n matrix A satisfies measurements = A @ coefficients.
    """
    indices = np.asarray(indices, dtype=np.int64)
    if indices.size and (indices.min() < 0 or indices.max() >= basis.n):
        raise ValueError(f"indices out of range for basis n={basis.n}")
    return basis.inverse[indices, :]
