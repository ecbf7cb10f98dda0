"""Discrete Hermite and Fourier transform pairs.

Both domains are exposed as a pair of dense N x N matrices: `forward` maps
a sample vector to coefficients, `inverse` maps coefficients back. The
Hermite pair is built from Gauss-Hermite quadrature at the roots of the
order-N Hermite polynomial; the Fourier pair is the classical DFT with the
1/N factor on the synthesis side.

Hermite function values are computed with the normalized three-term
recurrence, which stays inside double-precision range even at the extreme
quadrature nodes where the naive polynomial-times-Gaussian form under- or
overflows.
"""

import enum
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .signals import Signal

# Above this forward.inverse identity deviation the basis is considered
# ill-conditioned and a warning is issued.
CONDITIONING_TOLERANCE = 1e-6


class BasisKind(enum.Enum):
    HERMITE = "hermite"
    FOURIER = "fourier"


class BasisConditioningWarning(UserWarning):
    """Raised as a warning when forward.inverse deviates badly from identity."""


@dataclass(frozen=True)
class BasisPair:
    """Analysis/synthesis matrix pair for one transform domain.

    `identity_error` is max |forward @ inverse - I|, measured at build time.
    """

    kind: BasisKind
    n: int
    forward: np.ndarray
    inverse: np.ndarray
    identity_error: float


def hermite_function_table(orders: int, x: np.ndarray) -> np.ndarray:
    """Values of the Hermite functions 0..orders-1 at points x.

    Returns an (orders, len(x)) array with row p holding psi_p(x). Uses the
    normalized recurrence
        psi_p(x) = x*sqrt(2/p)*psi_{p-1}(x) - sqrt((p-1)/p)*psi_{p-2}(x)
    seeded with psi_0 = pi^(-1/4)*exp(-x^2/2) and psi_1 = sqrt(2)*x*psi_0.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    table = np.empty((orders, x.size))
    table[0] = np.pi ** -0.25 * np.exp(-x * x / 2.0)
    if orders > 1:
        table[1] = np.sqrt(2.0) * x * table[0]
    for p in range(2, orders):
        table[p] = x * np.sqrt(2.0 / p) * table[p - 1] \
            - np.sqrt((p - 1) / p) * table[p - 2]
    return table


def hermite_function(p: int, x: float) -> float:
    """psi_p(x), the order-p Gaussian-weighted normalized Hermite function."""
    if p < 0:
        raise ValueError(f"order must be >= 0, got {p}")
    if not np.isfinite(x):
        raise ValueError(f"x must be finite, got {x}")
    return float(hermite_function_table(p + 1, np.array([x]))[p, 0])


def hermite_roots(order: int) -> np.ndarray:
    """The `order` real zeros of the physicists' Hermite polynomial, ascending.

    Eigenvalues of the symmetric tridiagonal Jacobi matrix (zero diagonal,
    off-diagonal sqrt(k/2)), polished by two Newton steps on the normalized
    Hermite function and symmetrized about the origin.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if order == 1:
        return np.zeros(1)
    offdiag = np.sqrt(np.arange(1, order) / 2.0)
    roots = eigh_tridiagonal(np.zeros(order), offdiag, eigvals_only=True)
    roots.sort()
    for _ in range(2):
        table = hermite_function_table(order + 1, roots)
        psi_n = table[order]
        # psi_n'(x) = sqrt(2n)*psi_{n-1}(x) - x*psi_n(x)
        dpsi = np.sqrt(2.0 * order) * table[order - 1] - roots * psi_n
        roots = roots - psi_n / dpsi
    return 0.5 * (roots - roots[::-1])


def _build_hermite(n: int) -> tuple[np.ndarray, np.ndarray]:
    nodes = hermite_roots(n)
    table = hermite_function_table(n, nodes)  # table[p, m] = psi_p(node_m)
    inverse = np.ascontiguousarray(table.T)   # synthesis: row m = node m
    # quadrature analysis: forward[p, m] = psi_p(node_m) / (n * psi_{n-1}(node_m)^2)
    forward = table / (n * table[n - 1] ** 2)[None, :]
    return forward.astype(complex), inverse.astype(complex)


def _build_fourier(n: int) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(n)
    # reducing k*m mod n keeps the phase argument in [0, 2*pi)
    phase = 2.0 * np.pi * (np.outer(k, k) % n) / n
    forward = np.exp(-1j * phase)
    inverse = np.exp(1j * phase) / n
    return forward, inverse


def build_basis(kind: BasisKind, n: int) -> BasisPair:
    """Construct the analysis/synthesis pair for one domain.

    Computes max |forward @ inverse - I| as a conditioning metric; a
    deviation above CONDITIONING_TOLERANCE produces a
    BasisConditioningWarning rather than an error.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if kind is BasisKind.HERMITE:
        forward, inverse = _build_hermite(n)
    elif kind is BasisKind.FOURIER:
        forward, inverse = _build_fourier(n)
    else:
        raise ValueError(f"unknown basis kind: {kind!r}")
    identity_error = float(np.max(np.abs(forward @ inverse - np.eye(n))))
    if identity_error > CONDITIONING_TOLERANCE:
        warnings.warn(
            f"{kind.value} basis at n={n} is ill-conditioned: "
            f"max |forward.inverse - I| = {identity_error:.3e}",
            BasisConditioningWarning,
            stacklevel=2,
        )
    return BasisPair(kind, n, forward, inverse, identity_error)


def analyze(basis: BasisPair, signal: Signal | np.ndarray) -> np.ndarray:
    """Transform coefficients of a signal: forward @ samples."""
    samples = signal.samples if isinstance(signal, Signal) else np.asarray(signal)
    if samples.shape != (basis.n,):
        raise ValueError(
            f"signal length {samples.shape} does not match basis n={basis.n}"
        )
    return basis.forward @ samples


def synthesize(basis: BasisPair, coefficients: np.ndarray, dt: float = 1.0) -> Signal:
    """Signal reconstructed from coefficients: inverse @ coefficients."""
    coefficients = np.asarray(coefficients)
    if coefficients.shape != (basis.n,):
        raise ValueError(
            f"coefficient length {coefficients.shape} does not match basis n={basis.n}"
        )
    return Signal(basis.inverse @ coefficients, dt)
