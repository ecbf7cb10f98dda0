"""Full experiment driver: sweep, headline reconstructions, and figures.

One run produces, under an output directory:
  sweep.csv                     every (basis, fraction, trial) cell
  recovered_<basis>_<pct>.csv   headline 30% and 80% reconstructions
  recovered_<basis>_<pct>.runlog.csv
  mse_vs_fraction.svg           one polyline per basis (DFT red, HT blue)
  fig1_time.svg / fig1_fourier.svg / fig1_hermite.svg
                                the signal and its two coefficient spectra

Cells run sequentially and rows accumulate in (basis, fraction, trial)
order; if any cell raises, the rows collected so far are flushed to
sweep.csv before the error propagates.
"""

from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from . import csvio
from .bases import BasisKind, BasisPair, analyze, build_basis
from .metrics import SweepRow, mse_sweep
from .recon import ReconConfig, reconstruct
from .sensing import measure, select_indices
from .signals import FhssConfig, Signal, generate_fhss, paper_fhss_config
from .svgplot import DFT_COLOR, HERMITE_COLOR, Series, render_line_chart, render_stem_chart, render_waveform

HEADLINE_FRACTIONS = (0.3, 0.8)
DEFAULT_FRACTIONS = tuple(round(0.1 * k, 1) for k in range(1, 10))

_COLORS = {BasisKind.FOURIER: DFT_COLOR, BasisKind.HERMITE: HERMITE_COLOR}


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything one `run` invocation needs."""

    signal: FhssConfig = field(default_factory=paper_fhss_config)
    bases: tuple[BasisKind, ...] = (BasisKind.FOURIER, BasisKind.HERMITE)
    fractions: tuple[float, ...] = DEFAULT_FRACTIONS
    trials: int = 5
    base_seed: int = 1
    recon: ReconConfig = field(default_factory=ReconConfig)
    out_dir: Path = Path("results")
    timestamp: bool = True


@dataclass(frozen=True)
class ExperimentResult:
    rows: list[SweepRow]
    artifacts: list[Path]


def _pct(fraction: float) -> str:
    return f"{round(fraction * 100):d}pct"


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    signal = generate_fhss(config.signal)
    pairs = {kind: build_basis(kind, signal.n) for kind in config.bases}
    artifacts: list[Path] = []

    _write_fig1(out, signal, pairs, config.timestamp, artifacts)

    rows: list[SweepRow] = []
    sweep_path = out / "sweep.csv"
    try:
        for kind, basis in pairs.items():
            for fraction in config.fractions:
                rows.extend(
                    mse_sweep(signal, [basis], [fraction], config.trials,
                              config.base_seed, config.recon)
                )
        for kind, basis in pairs.items():
            for fraction in HEADLINE_FRACTIONS:
                _headline_case(out, signal, basis, fraction, config, artifacts)
    except Exception:
        csvio.write_sweep(sweep_path, rows)  # keep whatever completed
        raise
    csvio.write_sweep(sweep_path, rows)
    artifacts.append(sweep_path)

    mse_path = out / "mse_vs_fraction.svg"
    mse_path.write_text(render_mse_chart(rows, timestamp=config.timestamp))
    artifacts.append(mse_path)
    return ExperimentResult(rows, artifacts)


def _headline_case(
    out: Path,
    signal: Signal,
    basis: BasisPair,
    fraction: float,
    config: ExperimentConfig,
    artifacts: list[Path],
) -> None:
    m = round(fraction * signal.n)
    indices = select_indices(signal.n, m, config.base_seed)
    meas = measure(signal, indices, config.base_seed)
    result = reconstruct(meas, basis, config.recon, dt=signal.dt)
    stem = f"recovered_{basis.kind.value}_{_pct(fraction)}"
    signal_path = out / f"{stem}.csv"
    runlog_path = out / f"{stem}.runlog.csv"
    csvio.write_signal(signal_path, result.recovered)
    csvio.write_runlog(runlog_path, result)
    artifacts.extend([signal_path, runlog_path])


def _write_fig1(
    out: Path,
    signal: Signal,
    pairs: dict[BasisKind, BasisPair],
    timestamp: bool,
    artifacts: list[Path],
) -> None:
    time_path = out / "fig1_time.svg"
    time_path.write_text(
        render_waveform(
            list(signal.samples.real),
            "Signal, time domain (real part)",
            "sample index", "value", timestamp=timestamp,
        )
    )
    artifacts.append(time_path)
    for kind, basis in pairs.items():
        mags = np.abs(analyze(basis, signal))
        path = out / f"fig1_{kind.value}.svg"
        path.write_text(
            render_stem_chart(
                list(mags),
                f"Coefficient magnitudes, {kind.value} domain",
                "coefficient index", "magnitude",
                color=_COLORS[kind], timestamp=timestamp,
            )
        )
        artifacts.append(path)


def render_mse_chart(rows: list[SweepRow], timestamp: bool = True) -> str:
    """Mean MSE per fraction, one polyline per basis."""
    series = []
    for kind in (BasisKind.FOURIER, BasisKind.HERMITE):
        cells: dict[float, list[float]] = {}
        for row in rows:
            if row.basis == kind.value:
                cells.setdefault(row.fraction, []).append(row.mse)
        if not cells:
            continue
        fractions = sorted(cells)
        means = [float(np.mean(cells[f])) for f in fractions]
        series.append(Series(kind.value, fractions, means, _COLORS[kind]))
    if not series:
        raise ValueError("sweep table holds no rows to plot")
    positive = all(y > 0 for s in series for y in s.y)
    return render_line_chart(
        series,
        "Reconstruction MSE vs measurement fraction",
        "fraction of samples available",
        "mean MSE",
        log_y=positive,
        timestamp=timestamp,
    )
