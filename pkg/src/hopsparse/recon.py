"""Missing-sample recovery by adaptive variable-step gradient descent.

The objective is the l1 norm of the transform coefficients, a convex
surrogate for sparsity. Available samples are clamped to their measured
values; the missing ones start at zero and move against a finite-difference
estimate of the objective gradient. The finite-difference perturbation and
the update both use the current step, which starts near the signal
amplitude and shrinks geometrically whenever progress stalls or successive
gradients point in nearly opposite directions (the iterate is straddling
the minimum). Iteration stops once the step has shrunk by a configured
number of decimal digits.
"""

from dataclasses import dataclass, field

import numpy as np

from .bases import BasisPair
from .sensing import MeasurementSet
from .signals import Signal

# A relative l1 decrease below this counts as a stalled iteration and
# triggers a step reduction.
STALL_RELATIVE_DECREASE = 1e-6


@dataclass(frozen=True)
class ReconConfig:
    """Tuning knobs for the gradient reconstruction.

    initial_step of None means auto: the largest available-sample magnitude,
    a natural bound on how far any missing value can lie from zero.
    """

    initial_step: float | None = None
    step_divisor: float = 3.0
    update_scale: float = 1.0
    target_digits: int = 6
    max_iters: int = 10_000
    oscillation_angle_deg: float = 170.0

    def __post_init__(self):
        if self.initial_step is not None and not self.initial_step > 0:
            raise ValueError("initial_step must be positive (or None for auto)")
        if not self.step_divisor > 1:
            raise ValueError(f"step_divisor must be > 1, got {self.step_divisor}")
        if not self.update_scale > 0:
            raise ValueError(f"update_scale must be positive, got {self.update_scale}")
        if self.target_digits < 1:
            raise ValueError(f"target_digits must be >= 1, got {self.target_digits}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if not 90.0 < self.oscillation_angle_deg <= 180.0:
            raise ValueError(
                f"oscillation_angle_deg must lie in (90, 180], "
                f"got {self.oscillation_angle_deg}"
            )


@dataclass(frozen=True)
class ReconResult:
    """Outcome of one reconstruction run.

    step_history holds (iteration, step) pairs: the step value in effect
    from that iteration onward, starting with (0, initial_step); a new pair
    is appended at every reduction. measure_history starts with the l1
    measure of the zero-filled initialization and records one value per
    iteration after its update.
    """

    recovered: Signal
    iterations: int
    step_history: list[tuple[int, float]] = field(repr=False)
    measure_history: list[float] = field(repr=False)
    converged: bool


def sparsity_measure(coefficients: np.ndarray) -> float:
    """l1 norm of the coefficient magnitudes."""
    coefficients = np.asarray(coefficients)
    if coefficients.size == 0:
        raise ValueError("coefficient vector must be non-empty")
    return float(np.sum(np.abs(coefficients)))


def gradient(
    current: np.ndarray,
    missing: np.ndarray,
    basis: BasisPair,
    step: float,
) -> np.ndarray:
    """Central-difference gradient of the coefficient l1 norm at the
    missing sample positions.

    Component i is
        [J(x + step*e_i) - J(x - step*e_i)] / (2*step)
      + j*[J(x + j*step*e_i) - J(x - j*step*e_i)] / (2*step)
    with J the l1 measure of the analysis coefficients. Perturbing sample i
    shifts the coefficients by step * forward[:, i], so all missing
    positions are evaluated in one vectorized pass.
    """
    current = np.asarray(current, dtype=complex)
    missing = np.asarray(missing, dtype=np.int64)
    if current.shape != (basis.n,):
        raise ValueError(
            f"current length {current.shape} does not match basis n={basis.n}"
        )
    if missing.size and (missing.min() < 0 or missing.max() >= basis.n):
        raise ValueError(f"missing indices out of range for n={basis.n}")
    if not step > 0:
        raise ValueError(f"step must be positive, got {step}")
    if missing.size == 0:
        return np.zeros(0, dtype=complex)

    coeffs = (basis.forward @ current)[:, None]
    delta = step * basis.forward[:, missing]
    g_re = np.abs(coeffs + delta).sum(axis=0) - np.abs(coeffs - delta).sum(axis=0)
    g_im = np.abs(coeffs + 1j * delta).sum(axis=0) - np.abs(coeffs - 1j * delta).sum(axis=0)
    return (g_re + 1j * g_im) / (2.0 * step)


def _oscillating(g_prev: np.ndarray, g_new: np.ndarray, cos_threshold: float) -> bool:
    """True when the angle between the stacked real gradients exceeds the
    oscillation threshold (cosine below cos_threshold)."""
    u = np.concatenate([g_prev.real, g_prev.imag])
    v = np.concatenate([g_new.real, g_new.imag])
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        return False
    return float(u @ v) / (nu * nv) < cos_threshold


def reconstruct(
    meas: MeasurementSet,
    basis: BasisPair,
    config: ReconConfig = ReconConfig(),
    dt: float = 1.0,
) -> ReconResult:
    """Recover a full-length signal from a measurement set.

    Available samples are held exactly at their measured values throughout.
    Non-convergence within max_iters is reported via converged=False, not
    raised. `dt` is attached to the recovered Signal (measurement sets do
    not carry a time step).
    """
    if meas.n != basis.n:
        raise ValueError(
            f"measurement length n={meas.n} does not match basis n={basis.n}"
        )
    z = np.zeros(meas.n, dtype=complex)
    z[meas.indices] = meas.values
    missing = np.setdiff1d(np.arange(meas.n), meas.indices)

    step = config.initial_step
    if step is None:
        step = float(np.max(np.abs(meas.values)))
        if step == 0.0:
            step = 1.0  # all-zero measurements carry no amplitude scale
    step_floor = step * 10.0 ** (-config.target_digits)
    step_history = [(0, step)]
    measure_history = [sparsity_measure(basis.forward @ z)]

    if missing.size == 0:
        return ReconResult(Signal(z, dt), 0, step_history, measure_history, True)

    cos_threshold = np.cos(np.deg2rad(config.oscillation_angle_deg))
    g_prev: np.ndarray | None = None
    j_prev = measure_history[0]
    iteration = 0
    converged = False

    while iteration < config.max_iters:
        iteration += 1
        g = gradient(z, missing, basis, step)
        z[missing] -= config.update_scale * step * g
        j_new = sparsity_measure(basis.forward @ z)
        measure_history.append(j_new)

        stalled = j_prev <= 0.0 or (j_prev - j_new) / j_prev < STALL_RELATIVE_DECREASE
        oscillating = g_prev is not None and _oscillating(g_prev, g, cos_threshold)
        if stalled or oscillating:
            step /= config.step_divisor
            step_history.append((iteration + 1, step))
            if step < step_floor:
                converged = True
                break
        j_prev, g_prev = j_new, g

    return ReconResult(Signal(z, dt), iteration, step_history, measure_history, converged)
