"""Multi-hop complex sinusoid generation on a uniform time grid.

A frequency-hopping signal is a sequence of constant-frequency complex
exponentials. Each hop owns a half-open slice of the sample index range,
delimited by exact fractions of the total length so that boundaries like
N/3 land on whole samples without floating-point drift.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

FractionLike = Fraction | int | float | str


def as_fraction(value: FractionLike) -> Fraction:
    """Coerce to an exact Fraction.

    Floats go through their decimal string form, so 0.1 means 1/10 rather
    than the nearest binary double. Strings accept both "1/3" and "0.25".
    """
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


@dataclass(frozen=True)
class Hop:
    """One constant-frequency segment.

    omega is the angular frequency in radians per time-unit; the segment
    covers sample indices [floor(start*n), floor(end*n)).
    """

    omega: float
    start: Fraction
    end: Fraction

    def __post_init__(self):
        object.__setattr__(self, "start", as_fraction(self.start))
        object.__setattr__(self, "end", as_fraction(self.end))
        if not np.isfinite(self.omega):
            raise ValueError(f"hop omega must be finite, got {self.omega}")
        if not (0 <= self.start < self.end <= 1):
            raise ValueError(
                f"hop fractions must satisfy 0 <= start < end <= 1, "
                f"got [{self.start}, {self.end})"
            )

    def index_range(self, n: int) -> tuple[int, int]:
        """Half-open sample index range [lo, hi) of this hop in a length-n signal."""
        return int(self.start * n), int(self.end * n)


@dataclass(frozen=True)
class FhssConfig:
    """Hop plan for a signal of n samples spaced dt time-units apart."""

    n: int
    dt: float
    hops: tuple[Hop, ...]

    def __post_init__(self):
        object.__setattr__(self, "hops", tuple(self.hops))
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not (self.dt > 0 and np.isfinite(self.dt)):
            raise ValueError(f"dt must be a positive finite real, got {self.dt}")
        if not self.hops:
            raise ValueError("hops must be non-empty")
        cursor = 0
        for hop in self.hops:
            lo, hi = hop.index_range(self.n)
            if lo != cursor:
                raise ValueError(
                    f"hops must partition the index range: expected next hop to "
                    f"start at sample {cursor}, got {lo}"
                )
            cursor = hi
        if cursor != self.n:
            raise ValueError(
                f"hops must cover all {self.n} samples, last hop ends at {cursor}"
            )


@dataclass(frozen=True)
class Signal:
    """Complex sample vector with its sampling interval."""

    samples: np.ndarray
    dt: float

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=complex)
        object.__setattr__(self, "samples", samples)
        if samples.ndim != 1 or samples.size == 0:
            raise ValueError("samples must be a non-empty 1-d vector")
        if not np.all(np.isfinite(samples)):
            raise ValueError("samples must be finite")
        if not (self.dt > 0 and np.isfinite(self.dt)):
            raise ValueError(f"dt must be a positive finite real, got {self.dt}")

    @property
    def n(self) -> int:
        return self.samples.size

    def power(self) -> float:
        """Mean squared magnitude."""
        return float(np.mean(np.abs(self.samples) ** 2))


def paper_fhss_config() -> FhssConfig:
    """Three-hop test signal: 600 samples at dt=1/100 with angular
    frequencies -20*pi, +14*pi, -4*pi over equal thirds of the duration."""
    return FhssConfig(
        n=600,
        dt=0.01,
        hops=(
            Hop(-20 * np.pi, Fraction(0), Fraction(1, 3)),
            Hop(14 * np.pi, Fraction(1, 3), Fraction(2, 3)),
            Hop(-4 * np.pi, Fraction(2, 3), Fraction(1)),
        ),
    )


def generate_fhss(config: FhssConfig) -> Signal:
    """Generate samples[k] = exp(j * omega_h * k * dt) with omega_h the
    frequency of the hop owning index k. Every sample has unit modulus."""
    t = np.arange(config.n) * config.dt
    samples = np.empty(config.n, dtype=complex)
    for hop in config.hops:
        lo, hi = hop.index_range(config.n)
        samples[lo:hi] = np.exp(1j * hop.omega * t[lo:hi])
    return Signal(samples, config.dt)


def generate_sinusoid(omega: float, n: int, dt: float) -> Signal:
    """Single complex exponential: samples[k] = exp(j * omega * k * dt)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not np.isfinite(omega):
        raise ValueError(f"omega must be finite, got {omega}")
    if not (dt > 0 and np.isfinite(dt)):
        raise ValueError(f"dt must be a positive finite real, got {dt}")
    t = np.arange(n) * dt
    return Signal(np.exp(1j * omega * t), dt)
