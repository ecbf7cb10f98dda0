"""Reconstruction quality and domain-sparsity metrics, plus the
MSE-versus-measurement-count sweep."""

from dataclasses import dataclass

import numpy as np

from .bases import BasisPair, analyze
from .recon import ReconConfig, reconstruct
from .sensing import measure, select_indices
from .signals import Signal


@dataclass(frozen=True)
class SparsityReport:
    """How concentrated a coefficient vector is.

    significant_count is the number of coefficients whose magnitude exceeds
    threshold_rel times the maximum magnitude; l1_over_l2 ranges from 1
    (single spike) to sqrt(n) (flat magnitudes).
    """

    significant_count: int
    threshold_rel: float
    l1_over_l2: float


@dataclass(frozen=True)
class SweepRow:
    """One cell of the measurement sweep."""

    basis: str
    fraction: float
    m: int
    trial: int
    seed: int
    mse: float
    mse_normalized: float
    converged: bool
    iterations: int


def mse(a: Signal, b: Signal) -> float:
    """Mean squared magnitude of the sample-wise difference."""
    if a.n != b.n:
        raise ValueError(f"signal lengths differ: {a.n} vs {b.n}")
    return float(np.mean(np.abs(a.samples - b.samples) ** 2))


def sparsity_report(coefficients: np.ndarray, threshold_rel: float = 0.1) -> SparsityReport:
    """Count coefficients above threshold_rel of the peak magnitude and
    compute the l1/l2 concentration score (1 for an all-zero vector)."""
    coefficients = np.asarray(coefficients)
    if coefficients.size == 0:
        raise ValueError("coefficient vector must be non-empty")
    if not 0.0 < threshold_rel < 1.0:
        raise ValueError(f"threshold_rel must lie in (0, 1), got {threshold_rel}")
    mags = np.abs(coefficients)
    peak = float(mags.max())
    if peak == 0.0:
        return SparsityReport(0, threshold_rel, 1.0)
    count = int(np.sum(mags > threshold_rel * peak))
    l2 = float(np.sqrt(np.sum(mags**2)))
    return SparsityReport(count, threshold_rel, float(mags.sum()) / l2)


def mse_sweep(
    signal: Signal,
    bases: list[BasisPair],
    fractions: list[float],
    trials: int,
    base_seed: int,
    config: ReconConfig = ReconConfig(),
) -> list[SweepRow]:
    """Reconstruct from m = round(fraction*n) random samples for every
    (basis, fraction, trial) cell and record the MSE against `signal`.

    Trial t uses seed base_seed + t, so the same index sets are drawn for
    every basis and the table is deterministic in its arguments.
    Non-converged runs are recorded like any other.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    for fraction in fractions:
        if not 0.0 < fraction <= 1.0:
            raise ValueError(f"fractions must lie in (0, 1], got {fraction}")
    power = signal.power()
    rows = []
    for basis in bases:
        if basis.n != signal.n:
            raise ValueError(
                f"basis n={basis.n} does not match signal length {signal.n}"
            )
        for fraction in fractions:
            m = round(fraction * signal.n)
            for trial in range(trials):
                seed = base_seed + trial
                indices = select_indices(signal.n, m, seed)
                meas = measure(signal, indices, seed)
                result = reconstruct(meas, basis, config, dt=signal.dt)
                err = mse(signal, result.recovered)
                rows.append(
                    SweepRow(
                        basis=basis.kind.value,
                        fraction=fraction,
                        m=m,
                        trial=trial,
                        seed=seed,
                        mse=err,
                        mse_normalized=err / power,
                        converged=result.converged,
                        iterations=result.iterations,
                    )
                )
    return rows


def signal_sparsity(signal: Signal, basis: BasisPair, threshold_rel: float = 0.1) -> SparsityReport:
    """Sparsity report of a signal in the given domain."""
    return sparsity_report(analyze(basis, signal), threshold_rel)
