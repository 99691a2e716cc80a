"""Report artifacts for fits: delimited tables and rendered figures.

Every fit or demo run can emit a per-step convergence table, an
error-on-grid table over the sample points, and two PNG figures (the
convergence history and a pole/zero portrait). The CSV tables carry 17
significant digits so they round-trip doubles; the figures are rendered
with the Agg backend so report generation works headless.
"""

from __future__ import annotations

import csv

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .barycentric import BarycentricRational, PoleInfo, evaluate_many
from .core import FitTrace, SampleSet


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def write_trace_csv(path, trace: FitTrace) -> None:
    """Per-step convergence table: step, index, max_error, sigma_min, cond."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        out = csv.writer(fh)
        out.writerow(["step", "index", "max_error", "sigma_min", "cond_cauchy"])
        for s in trace:
            cond = "" if s.cond_cauchy is None else _fmt(s.cond_cauchy)
            out.writerow([s.step, s.index, _fmt(s.max_error), _fmt(s.sigma_min), cond])


def write_error_grid_csv(path, samples: SampleSet, approximant: BarycentricRational) -> None:
    """Samples, approximant values, and absolute errors, one row per point."""
    Z = samples.points
    F = samples.values
    R = evaluate_many(approximant, Z)
    with np.errstate(invalid="ignore"):
        err = np.abs(F - R)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        out = csv.writer(fh)
        out.writerow(["re_z", "im_z", "re_f", "im_f", "re_r", "im_r", "abs_error"])
        for z, f, r, e in zip(Z, F, R, err):
            z, f, r = complex(z), complex(f), complex(r)
            out.writerow(
                [
                    _fmt(z.real),
                    _fmt(z.imag),
                    _fmt(f.real),
                    _fmt(f.imag),
                    _fmt(r.real),
                    _fmt(r.imag),
                    _fmt(float(e)),
                ]
            )


def render_convergence_figure(path, trace: FitTrace, title: str) -> None:
    """Semilog plot of the per-step max error and sigma_min."""
    steps = np.array([s.step for s in trace])
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    # keep the log axis happy when a series hits exactly zero
    plotted = False
    for series, style, label in (
        (np.asarray(trace.max_errors()), "o-", "max error"),
        (np.asarray(trace.sigma_mins()), "s--", "sigma_min"),
    ):
        keep = series > 0.0
        if np.any(keep):
            ax.semilogy(steps[keep], series[keep], style, label=label)
            plotted = True
    ax.set_xlabel("step")
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    if plotted:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_portrait_figure(
    path,
    samples: SampleSet,
    poles: tuple[PoleInfo, ...],
    zeros: np.ndarray,
    title: str,
) -> None:
    """Scatter of sample points with pole and zero markers."""
    Z = np.asarray(samples.points, dtype=complex)
    fig, ax = plt.subplots(figsize=(6.0, 5.0))
    ax.plot(Z.real, Z.imag, ".", color="0.75", markersize=2, label="samples")
    if len(zeros):
        zs = np.asarray(zeros, dtype=complex)
        ax.plot(zs.real, zs.imag, "o", mfc="none", color="tab:blue", markersize=5, label="zeros")
    genuine = np.array([p.location for p in poles if not p.spurious], dtype=complex)
    flagged = np.array([p.location for p in poles if p.spurious], dtype=complex)
    if len(genuine):
        ax.plot(genuine.real, genuine.imag, "x", color="tab:red", markersize=6, label="poles")
    if len(flagged):
        ax.plot(
            flagged.real,
            flagged.imag,
            "x",
            color="tab:orange",
            markersize=6,
            label="poles (spurious)",
        )
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(title)
    ax.set_aspect("equal", adjustable="datalim")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
