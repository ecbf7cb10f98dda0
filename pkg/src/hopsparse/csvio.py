"""CSV readers and writers for the shared file formats.

All formats are plain comma-separated text with '.' as the decimal
separator. Computed floating-point values are written with 17 significant
digits (lossless for doubles); exact configuration echoes such as dt and
sweep fractions use the shortest round-tripping form.

Formats:
  signal        ``# dt=<dt> n=<n>`` then ``index,re,im``, one row per sample
  coefficients  ``# basis=<kind> n=<n>`` then ``index,re,im``
  measurements  ``# n=<n> m=<m> seed=<seed>`` then ``index,re,im``,
                rows only for available samples
  run log       ``iteration,step,l1_measure``
  sweep         ``basis,fraction,m,trial,seed,mse,mse_normalized,converged,iterations``
"""

from pathlib import Path

import numpy as np

from .bases import BasisKind
from .metrics import SweepRow
from .recon import ReconResult
from .sensing import MeasurementSet
from .signals import Signal

SIGNAL_HEADER = "index,re,im"
SWEEP_HEADER = "basis,fraction,m,trial,seed,mse,mse_normalized,converged,iterations"
RUNLOG_HEADER = "iteration,step,l1_measure"


def _fmt(x: float) -> str:
    """17 significant digits: enough to reproduce the double exactly."""
    return format(float(x), ".16e")


def _parse_metadata(line: str, path: Path) -> dict[str, str]:
    if not line.startswith("#"):
        raise ValueError(f"{path}: expected '# key=value ...' metadata line")
    fields = {}
    for token in line[1:].split():
        key, sep, value = token.partition("=")
        if not sep:
            raise ValueError(f"{path}: malformed metadata token {token!r}")
        fields[key] = value
    return fields


def _read_complex_rows(
    lines: list[str], n_expected: int, path: Path
) -> tuple[np.ndarray, np.ndarray]:
    if not lines or lines[0].strip() != SIGNAL_HEADER:
        raise ValueError(f"{path}: expected header {SIGNAL_HEADER!r}")
    indices = np.empty(len(lines) - 1, dtype=np.int64)
    values = np.empty(len(lines) - 1, dtype=complex)
    for row, line in enumerate(lines[1:]):
        idx, re, im = line.strip().split(",")
        indices[row] = int(idx)
        values[row] = complex(float(re), float(im))
    if n_expected is not None and len(values) != n_expected:
        raise ValueError(
            f"{path}: metadata says {n_expected} rows, found {len(values)}"
        )
    return indices, values


def write_signal(path: str | Path, signal: Signal) -> None:
    path = Path(path)
    lines = [f"# dt={signal.dt!r} n={signal.n}", SIGNAL_HEADER]
    for k, v in enumerate(signal.samples):
        lines.append(f"{k},{_fmt(v.real)},{_fmt(v.imag)}")
    path.write_text("\n".join(lines) + "\n")


def read_signal(path: str | Path) -> Signal:
    path = Path(path)
    lines = path.read_text().splitlines()
    meta = _parse_metadata(lines[0], path)
    n = int(meta["n"])
    indices, values = _read_complex_rows(lines[1:], n, path)
    if not np.array_equal(indices, np.arange(n)):
        raise ValueError(f"{path}: signal rows must cover indices 0..{n - 1} in order")
    return Signal(values, float(meta["dt"]))


def write_coefficients(path: str | Path, kind: BasisKind, coefficients: np.ndarray) -> None:
    path = Path(path)
    coefficients = np.asarray(coefficients, dtype=complex)
    lines = [f"# basis={kind.value} n={coefficients.size}", SIGNAL_HEADER]
    for k, v in enumerate(coefficients):
        lines.append(f"{k},{_fmt(v.real)},{_fmt(v.imag)}")
    path.write_text("\n".join(lines) + "\n")


def read_coefficients(path: str | Path) -> tuple[BasisKind, np.ndarray]:
    path = Path(path)
    lines = path.read_text().splitlines()
    meta = _parse_metadata(lines[0], path)
    kind = BasisKind(meta["basis"])
    n = int(meta["n"])
    indices, values = _read_complex_rows(lines[1:], n, path)
    if not np.array_equal(indices, np.arange(n)):
        raise ValueError(f"{path}: coefficient rows must cover indices 0..{n - 1}")
    return kind, values


def write_measurements(path: str | Path, meas: MeasurementSet) -> None:
    path = Path(path)
    lines = [f"# n={meas.n} m={meas.m} seed={meas.seed}", SIGNAL_HEADER]
    for idx, v in zip(meas.indices, meas.values):
        lines.append(f"{idx},{_fmt(v.real)},{_fmt(v.imag)}")
    path.write_text("\n".join(lines) + "\n")


def read_measurements(path: str | Path) -> MeasurementSet:
    path = Path(path)
    lines = path.read_text().splitlines()
    meta = _parse_metadata(lines[0], path)
    indices, values = _read_complex_rows(lines[1:], int(meta["m"]), path)
    return MeasurementSet(int(meta["n"]), indices, values, int(meta["seed"]))


def write_runlog(path: str | Path, result: ReconResult) -> None:
    """Per-iteration convergence log: the step in effect and the l1 measure
    after each iteration's update (iteration 0 is the initialization)."""
    path = Path(path)
    steps = _expand_steps(result.step_history, result.iterations)
    lines = [RUNLOG_HEADER]
    for it, (step, l1) in enumerate(zip(steps, result.measure_history)):
        lines.append(f"{it},{_fmt(step)},{_fmt(l1)}")
    path.write_text("\n".join(lines) + "\n")


def read_runlog(path: str | Path) -> list[tuple[int, float, float]]:
    path = Path(path)
    lines = path.read_text().splitlines()
    if not lines or lines[0].strip() != RUNLOG_HEADER:
        raise ValueError(f"{path}: expected header {RUNLOG_HEADER!r}")
    rows = []
    for line in lines[1:]:
        it, step, l1 = line.strip().split(",")
        rows.append((int(it), float(step), float(l1)))
    return rows


def _expand_steps(step_history: list[tuple[int, float]], iterations: int) -> list[float]:
    steps = []
    cursor = 0
    current = step_history[0][1]
    for it in range(iterations + 1):
        while cursor + 1 < len(step_history) and step_history[cursor + 1][0] <= it:
            cursor += 1
            current = step_history[cursor][1]
        steps.append(current)
    return steps


def write_sweep(path: str | Path, rows: list[SweepRow]) -> None:
    path = Path(path)
    lines = [SWEEP_HEADER]
    for r in rows:
        lines.append(
            f"{r.basis},{r.fraction!r},{r.m},{r.trial},{r.seed},"
            f"{_fmt(r.mse)},{_fmt(r.mse_normalized)},"
            f"{'true' if r.converged else 'false'},{r.iterations}"
        )
    path.write_text("\n".join(lines) + "\n")


def read_sweep(path: str | Path) -> list[SweepRow]:
    path = Path(path)
    lines = path.read_text().splitlines()
    if not lines or lines[0].strip() != SWEEP_HEADER:
        raise ValueError(f"{path}: expected header {SWEEP_HEADER!r}")
    rows = []
    for line in lines[1:]:
        basis, fraction, m, trial, seed, err, err_norm, conv, iters = line.strip().split(",")
        rows.append(
            SweepRow(
                basis=basis,
                fraction=float(fraction),
                m=int(m),
                trial=int(trial),
                seed=int(seed),
                mse=float(err),
                mse_normalized=float(err_norm),
                converged=conv == "true",
                iterations=int(iters),
            )
        )
    return rows
