"""Detection and removal of spurious pole-zero pairs (Froissart doublets).

Rounding errors can make the greedy fit place pole-zero pairs with tiny
residues near the sample set; they contribute nothing to the approximation
but pollute the pole list. Such poles are detected by a residue threshold
relative to the data scale. Removal deletes the support point nearest to
each flagged pole and re-solves the least-squares problem once over the
surviving support set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .barycentric import (
    BarycentricRational,
    PoleInfo,
    poles as bary_poles,
    residues as bary_residues,
)
from .core import SampleSet, cauchy_matrix, solve_weights


@dataclass(frozen=True)
class CleanupReport:
    """Outcome of one doublet-removal pass.

    removed_support_indices index into the support array of the approximant
    the pass started from. doublets_after recounts flagged poles on the
    refit approximant. warning is set when removal would have emptied the
    support set, in which case nothing was removed.
    """

    flagged_poles: list[PoleInfo] = field(default_factory=list)
    removed_support_indices: list[int] = field(default_factory=list)
    doublets_before: int = 0
    doublets_after: int = 0
    warning: bool = False


def detect_spurious(r: BarycentricRational, scale: float, cleanup_tol: float) -> list[PoleInfo]:
    """Poles of r whose residue magnitude falls below cleanup_tol*scale.

    scale should be max|F| over the sample values of the owning fit, so the
    threshold tracks the size of the data rather than an absolute cutoff.
    """
    locs = bary_poles(r)
    if len(locs) == 0:
        return []
    res = bary_residues(r, locs)
    return [
        PoleInfo(complex(t), complex(rh), spurious=True)
        for t, rh in zip(locs, res)
        if abs(rh) < cleanup_tol * scale
    ]


def cleanup_refit(
    r: BarycentricRational,
    samples: SampleSet,
    flagged: list[PoleInfo],
    *,
    scale: float | None = None,
    cleanup_tol: float = 1e-13,
    symmetric_scaled: np.ndarray | None = None,
    inv_values: np.ndarray | None = None,
) -> tuple[BarycentricRational, CleanupReport]:
    """Remove the support points nearest to flagged poles and re-solve once.

    Each flagged pole marks its nearest support point (ties resolved to the
    lowest index; a support point is marked at most once). Marked points are
    deleted, the linearized least-squares problem is rebuilt over the sample
    points outside the surviving support, and a single weight solve produces
    the refit approximant. No iteration: poles still flagged afterwards are
    reported in doublets_after and left alone.

    symmetric_scaled/inv_values replay the row scaling of a symmetric-mode
    fit (rows with large |F| divided by F) so the rebuilt problem matches
    the one the fit solved. If removal would empty the support set the
    input is returned unchanged with report.warning set.
    """
    if not flagged:
        return r, CleanupReport()

    if scale is None:
        finite = np.isfinite(samples.values)
        scale = float(np.max(np.abs(samples.values[finite])))

    support = r.support
    marked: list[int] = []
    for p in flagged:
        k = int(np.argmin(np.abs(support - p.location)))
        if k not in marked:
            marked.append(k)

    if len(marked) >= len(support):
        return r, CleanupReport(
            flagged_poles=list(flagged),
            doublets_before=len(flagged),
            doublets_after=len(flagged),
            warning=True,
        )

    removed = sorted(marked)
    keep = np.setdiff1d(np.arange(len(support)), removed)
    zs = support[keep]
    fs = r.values[keep]

    Z = samples.points
    F = samples.values
    rows = ~np.isin(Z, zs)
    C = cauchy_matrix(Z[rows], zs)
    with np.errstate(invalid="ignore"):
        A = (F[rows][:, None] - fs[None, :]) * C
    if symmetric_scaled is not None and np.any(symmetric_scaled):
        srows = symmetric_scaled[rows]
        if np.any(srows):
            iv = inv_values[rows][srows]
            A[srows] = (1.0 - fs[None, :] * iv[:, None]) * C[srows]
    w, _ = solve_weights(A)

    refit = BarycentricRational(zs, fs, w)
    after = len(detect_spurious(refit, scale, cleanup_tol))
    return refit, CleanupReport(
        flagged_poles=list(flagged),
        removed_support_indices=removed,
        doublets_before=len(flagged),
        doublets_after=after,
    )
