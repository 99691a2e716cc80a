"""Greedy rational fitting on arbitrary point sets.

The fit grows a barycentric approximant one support point at a time. Each
step promotes the worst-approximated sample to a support point, solves a
linearized least-squares problem for the barycentric weights (smallest right
singular vector of a Loewner matrix over the remaining samples), and stops
once the maximum residual drops below a tolerance relative to max|F|.

A symmetric mode treats values and their reciprocals even-handedly, so that
fitting f and 1/f give reciprocal approximants: rows belonging to samples
with |F_i| above a threshold are divided by F_i, and the error metric at
those samples compares 1/F_i with 1/R_i. Samples with infinite values are
allowed in this mode (their scaled rows are pure Cauchy rows) but are never
promoted to support points.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .barycentric import (
    BarycentricRational,
    PoleInfo,
    evaluate_many,
    poles as bary_poles,
    residues as bary_residues,
    zeros as bary_zeros,
)
from .kernels import min_right_singular_vector


class SampleError(ValueError):
    """Raised for invalid sample sets (duplicates, size, non-finite data)."""


class DivisionDegeneracyError(ValueError):
    """Raised when a requested matrix would divide by zero (coincident points)."""


@dataclass(frozen=True)
class SampleSet:
    """Sample points Z and values F = f(Z).

    Points must be pairwise distinct and finite, with M >= 2. NaN values are
    rejected outright; infinite values are tolerated here and vetted by
    fit(), which only accepts them in symmetric mode.
    """

    points: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        pts = np.atleast_1d(np.asarray(self.points))
        vals = np.atleast_1d(np.asarray(self.values))
        if np.issubdtype(pts.dtype, np.integer):
            pts = pts.astype(float)
        if np.issubdtype(vals.dtype, np.integer):
            vals = vals.astype(float)
        if pts.ndim != 1 or vals.ndim != 1 or len(pts) != len(vals):
            raise SampleError("points and values must be equal-length vectors")
        if len(pts) < 2:
            raise SampleError("need at least 2 samples")
        if not np.all(np.isfinite(pts)):
            raise SampleError("sample points must be finite")
        if len(np.unique(pts)) != len(pts):
            raise SampleError("sample points must be pairwise distinct")
        if np.any(np.isnan(vals)) or np.any(np.isnan(vals.imag if np.iscomplexobj(vals) else vals)):
            raise SampleError("sample values must not be NaN")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class FitConfig:
    """Fit controls.

    tol is relative to max|F| (absolute in symmetric mode); cleanup_tol is
    the spurious-pole residue threshold, also relative to max|F|.
    symmetric_scale selects the |F| level above which rows are scaled:
    "unit" uses 1, "median" uses the median of the finite |F|.
    """

    tol: float = 1e-13
    mmax: int = 100
    cleanup_enabled: bool = True
    cleanup_tol: float = 1e-13
    symmetric: bool = False
    symmetric_scale: str = "unit"

    def __post_init__(self) -> None:
        if self.tol < 0:
            raise ValueError("tol must be >= 0")
        if self.mmax < 1:
            raise ValueError("mmax must be >= 1")
        if self.cleanup_tol < 0:
            raise ValueError("cleanup_tol must be >= 0")
        if self.symmetric_scale not in ("unit", "median"):
            raise ValueError("symmetric_scale must be 'unit' or 'median'")


@dataclass(frozen=True)
class TraceStep:
    """One greedy step: chosen sample, residual, and solver diagnostics."""

    step: int
    index: int
    max_error: float
    sigma_min: float
    cond_cauchy: float | None = None


@dataclass(frozen=True)
class FitTrace:
    """Per-step convergence record of a fit."""

    steps: tuple[TraceStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    def max_errors(self) -> np.ndarray:
        return np.array([s.max_error for s in self.steps])

    def sigma_mins(self) -> np.ndarray:
        return np.array([s.sigma_min for s in self.steps])

    def is_sigma_monotone(self, rel_slack: float = 1e-12) -> bool:
        """Check the nonincreasing sigma_min property.

        Exact arithmetic guarantees sigma_min never increases (the next
        Loewner matrix is the previous one minus a row plus a column). The
        computed values carry absolute noise of order eps*||A||, so the
        check allows rel_slack both multiplicatively and as a floor
        relative to the largest sigma in the trace.
        """
        sig = self.sigma_mins()
        if len(sig) < 2:
            return True
        floor = rel_slack * float(np.max(sig))
        return bool(np.all(sig[1:] <= sig[:-1] * (1.0 + rel_slack) + floor))


@dataclass(frozen=True)
class FitResult:
    """Everything a fit produces.

    max_error is the final achieved maximum error metric on the returned
    approximant (recomputed after cleanup when cleanup ran); scale is
    max|F| over the finite sample values.
    """

    approximant: BarycentricRational
    trace: FitTrace
    poles: tuple[PoleInfo, ...]
    zeros: np.ndarray
    converged: bool
    scale: float
    max_error: float
    cleanup: "CleanupReport | None" = None

    def pole_locations(self) -> np.ndarray:
        return np.array([p.location for p in self.poles], dtype=complex)

    def pole_residues(self) -> np.ndarray:
        return np.array([p.residue for p in self.poles], dtype=complex)


def cauchy_matrix(remaining_points, support) -> np.ndarray:
    """Cauchy matrix with entries 1/(Z_i - z_j)."""
    Z = np.atleast_1d(np.asarray(remaining_points))
    zs = np.atleast_1d(np.asarray(support))
    diff = Z[:, None] - zs[None, :]
    if np.any(diff == 0):
        raise DivisionDegeneracyError("a remaining point coincides with a support point")
    return 1.0 / diff


def loewner_matrix(remaining_points, remaining_values, support, support_values) -> np.ndarray:
    """Loewner matrix of difference quotients (F_i - f_j)/(Z_i - z_j)."""
    Z = np.atleast_1d(np.asarray(remaining_points))
    F = np.atleast_1d(np.asarray(remaining_values))
    zs = np.atleast_1d(np.asarray(support))
    fs = np.atleast_1d(np.asarray(support_values))
    if len(Z) != len(F) or len(zs) != len(fs):
        raise ValueError("point/value lengths mismatch")
    diff = Z[:, None] - zs[None, :]
    if np.any(diff == 0):
        raise DivisionDegeneracyError("a remaining point coincides with a support point")
    return (F[:, None] - fs[None, :]) / diff


def solve_weights(A: np.ndarray) -> tuple[np.ndarray, float]:
    """Barycentric weights: unit vector minimizing ||A w||, with sigma_min."""
    sigma, w = min_right_singular_vector(A)
    return w, sigma


def _mixed_metric(F, R, scaled, invF):
    """Error metric per sample: plain |F-R|, or |1/F - 1/R| on scaled rows."""
    with np.errstate(invalid="ignore"):
        err = np.abs(F - R)
    if scaled is not None and np.any(scaled):
        with np.errstate(divide="ignore", invalid="ignore"):
            invR = np.where(R == 0, np.inf, 1.0 / np.where(R == 0, 1.0, R))
        # 1/R -> 0 where R overflowed to infinity (the metric stays finite
        # there: the approximant having a pole matches a huge sample well).
        invR = np.where(np.isfinite(R), invR, 0.0)
        err = np.where(scaled, np.abs(invF - invR), err)
    return err


def fit(samples: SampleSet, config: FitConfig | None = None) -> FitResult:
    """Fit a barycentric rational approximant to the samples.

    Runs the greedy iteration until the maximum error metric falls to
    tol*max|F| (absolute tol in symmetric mode), or mmax steps, or the
    remaining-sample pool can no longer outnumber the support set. When
    cleanup is enabled, spurious poles (residue below cleanup_tol*max|F|)
    trigger one support-removal and re-solve pass at the end.

    Set track_cond via fit_with_options to record per-step Cauchy condition
    numbers.
    """
    return fit_with_options(samples, config)


def fit_with_options(
    samples: SampleSet,
    config: FitConfig | None = None,
    *,
    track_cond: bool = False,
) -> FitResult:
    from .cleanup import CleanupReport, detect_spurious, cleanup_refit

    cfg = config if config is not None else FitConfig()
    Z = samples.points
    F = samples.values
    M = len(Z)

    finite = np.isfinite(F)
    if not cfg.symmetric and not np.all(finite):
        raise SampleError("infinite sample values require symmetric mode")
    if M < 2:
        raise SampleError("need at least 2 samples")
    if not np.any(finite):
        raise SampleError("all sample values are infinite")

    # Real data stays in float64 end to end; poles of real fits then come out
    # exactly real or in exact conjugate pairs.
    if np.isrealobj(Z) and np.isrealobj(F):
        Z = Z.astype(float, copy=False)
        F = F.astype(float, copy=False)

    scale = float(np.max(np.abs(F[finite])))
    tol_abs = cfg.tol if cfg.symmetric else cfg.tol * scale

    scaled = None
    invF = None
    if cfg.symmetric:
        level = 1.0 if cfg.symmetric_scale == "unit" else float(np.median(np.abs(F[finite])))
        scaled = np.abs(F) > level
        # Scaled rows have |F| > level >= 0, so F != 0 there; infinite F gets
        # an exact reciprocal of 0.
        with np.errstate(divide="ignore", invalid="ignore"):
            invF = np.where(finite, 1.0 / np.where(F != 0, F, 1.0), 0.0)

    remaining = np.ones(M, dtype=bool)
    support_idx: list[int] = []
    baseline = np.mean(F[finite])
    R = np.full(M, baseline)

    steps: list[TraceStep] = []
    w = np.ones(1)
    converged = False

    for m in range(1, cfg.mmax + 1):
        metric = _mixed_metric(F, R, scaled, invF)
        metric = np.where(np.isnan(metric), np.inf, metric)
        candidates = remaining & finite
        if not np.any(candidates):
            break
        sel = np.where(candidates, metric, -1.0)
        j = int(np.argmax(sel))
        support_idx.append(j)
        remaining[j] = False

        zs = Z[support_idx]
        fs = F[support_idx]
        Zr = Z[remaining]
        Fr = F[remaining]
        C = cauchy_matrix(Zr, zs)
        A = (Fr[:, None] - fs[None, :]) * C
        if cfg.symmetric:
            rows = scaled[remaining]
            if np.any(rows):
                # Row scaling by 1/F_i: (F_i - f_j)/F_i = 1 - f_j/F_i; for
                # F_i = inf the scaled row is exactly the Cauchy row.
                iv = invF[remaining][rows]
                A[rows] = (1.0 - fs[None, :] * iv[:, None]) * C[rows]
        w, sigma = solve_weights(A)

        N = C @ (w * fs)
        D = C @ w
        with np.errstate(divide="ignore", invalid="ignore"):
            Rr = N / D
        R = np.array(F, copy=True)
        if np.iscomplexobj(Rr) and not np.iscomplexobj(R):
            R = R.astype(complex)
        R[remaining] = Rr

        err_vec = _mixed_metric(Fr, Rr, scaled[remaining] if cfg.symmetric else None,
                                invF[remaining] if cfg.symmetric else None)
        err_vec = np.where(np.isnan(err_vec), np.inf, err_vec)
        err = float(np.max(err_vec)) if len(err_vec) else 0.0

        cond = float(np.linalg.cond(C)) if track_cond else None
        steps.append(TraceStep(m, j, err, sigma, cond))

        if err <= tol_abs:
            converged = True
            break
        if 2 * (m + 1) > M:
            break

    approx = BarycentricRational(Z[support_idx], F[support_idx], w)
    trace = FitTrace(tuple(steps))
    final_err = steps[-1].max_error if steps else 0.0

    flagged = detect_spurious(approx, scale, cfg.cleanup_tol)
    report: CleanupReport | None = None
    if cfg.cleanup_enabled and flagged:
        approx, report = cleanup_refit(
            approx,
            samples,
            flagged,
            scale=scale,
            cleanup_tol=cfg.cleanup_tol,
            symmetric_scaled=scaled,
            inv_values=invF,
        )
        final_err = _max_error_of(approx, Z, F, scaled, invF)
        spurious_now = {complex(p.location) for p in detect_spurious(approx, scale, cfg.cleanup_tol)}
    else:
        spurious_now = {complex(p.location) for p in flagged}

    locs = bary_poles(approx)
    res = bary_residues(approx, locs)
    infos = tuple(
        PoleInfo(complex(t), complex(rh), complex(t) in spurious_now)
        for t, rh in zip(locs, res)
    )
    zs_out = bary_zeros(approx)

    return FitResult(
        approximant=approx,
        trace=trace,
        poles=infos,
        zeros=zs_out,
        converged=converged,
        scale=scale,
        max_error=final_err,
        cleanup=report,
    )


def _max_error_of(approx: BarycentricRational, Z, F, scaled, invF) -> float:
    """Max error metric of an approximant over the samples off its support."""
    on_support = np.isin(Z, approx.support)
    mask = ~on_support
    if not np.any(mask):
        return 0.0
    R = evaluate_many(approx, Z[mask])
    err = _mixed_metric(F[mask], R, scaled[mask] if scaled is not None else None,
                        invF[mask] if invF is not None else None)
    err = np.where(np.isnan(err), np.inf, err)
    return float(np.max(err))
