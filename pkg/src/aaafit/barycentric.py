"""Barycentric rational functions: evaluation, poles, zeros, residues.

A rational function is stored as the quotient of two partial fractions that
share support points z_j:

    r(z) = n(z)/d(z),
    n(z) = sum_j w_j f_j / (z - z_j),   d(z) = sum_j w_j / (z - z_j).

Wherever w_j != 0 the apparent singularity at z_j is removable and
r(z_j) = f_j, so r interpolates the stored values there.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .kernels import arrowhead_finite_eigenvalues


class DegeneratePoleError(ArithmeticError):
    """Raised when a residue is requested at a pole where d'(t) vanishes."""


def _as_vector(x, name: str) -> np.ndarray:
    a = np.atleast_1d(np.asarray(x))
    if a.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    if np.issubdtype(a.dtype, np.integer) or a.dtype == np.dtype(bool):
        a = a.astype(float)
    elif not (np.issubdtype(a.dtype, np.floating) or np.issubdtype(a.dtype, np.complexfloating)):
        a = a.astype(complex)
    return a


@dataclass(frozen=True)
class PoleInfo:
    """A pole of the approximant with its residue and spurious-pole flag."""

    location: complex
    residue: complex
    spurious: bool = False


@dataclass(frozen=True, eq=False)
class BarycentricRational:
    """Immutable barycentric rational with support points, values, weights.

    All three arrays have the same length m >= 1; support points are pairwise
    distinct, entries are finite, and at least one weight is nonzero. Arrays
    stay real when constructed from real data, which keeps downstream pole
    computations exactly real for real problems.
    """

    support: np.ndarray
    values: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        zs = _as_vector(self.support, "support")
        fs = _as_vector(self.values, "values")
        ws = _as_vector(self.weights, "weights")
        if not (len(zs) == len(fs) == len(ws)):
            raise ValueError("support, values, weights must have equal length")
        if len(zs) < 1:
            raise ValueError("need at least one support point")
        if len(np.unique(zs)) != len(zs):
            raise ValueError("support points must be pairwise distinct")
        for name, a in (("support", zs), ("values", fs), ("weights", ws)):
            if not np.all(np.isfinite(a)):
                raise ValueError(f"{name} contains non-finite entries")
        if not np.any(ws != 0):
            raise ValueError("all weights are zero")
        object.__setattr__(self, "support", zs)
        object.__setattr__(self, "values", fs)
        object.__setattr__(self, "weights", ws)

    def __len__(self) -> int:
        return len(self.support)

    def _active(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Support/values/weights with zero-weight terms pruned.

        A zero weight deletes its term from both partial fractions, so the
        pruned triple defines the same function.
        """
        live = self.weights != 0
        return self.support[live], self.values[live], self.weights[live]

    def __call__(self, z):
        """Evaluate at a scalar point or elementwise on an array."""
        if np.isscalar(z) or np.ndim(z) == 0:
            return evaluate(self, z)
        return evaluate_many(self, z)

    def type_of(self) -> tuple[int, int]:
        return type_of(self)


def evaluate(r: BarycentricRational, z: complex):
    """Evaluate r at a single point.

    At a support point with nonzero weight (exact floating equality) the
    stored value is returned; the formula's 0/0 there is removable.
    Elsewhere both partial fractions are summed directly. May return
    non-finite values if z lands on a pole.
    """
    zs, fs, ws = r._active()
    hit = np.nonzero(zs == z)[0]
    if hit.size:
        return fs[hit[0]]
    diff = z - zs
    with np.errstate(divide="ignore", invalid="ignore"):
        c = ws / diff
        return np.sum(c * fs) / np.sum(c)


def evaluate_many(r: BarycentricRational, zs) -> np.ndarray:
    """Evaluate r at each point of a sequence; order preserved."""
    pts = np.atleast_1d(np.asarray(zs))
    if pts.size == 0:
        return np.empty(0, dtype=r.values.dtype)
    sup, fs, ws = r._active()
    diff = pts[:, None] - sup[None, :]
    exact = diff == 0
    with np.errstate(divide="ignore", invalid="ignore"):
        C = ws[None, :] / diff
        out = (C @ fs) / np.sum(C, axis=1)
    hit_rows, hit_cols = np.nonzero(exact)
    out[hit_rows] = fs[hit_cols]
    return out


def poles(r: BarycentricRational) -> np.ndarray:
    """Poles of r: finite eigenvalues of the arrowhead pencil on the weights."""
    zs, _, ws = r._active()
    if len(zs) == 1:
        return np.empty(0, dtype=complex)
    return arrowhead_finite_eigenvalues(zs, ws)


def zeros(r: BarycentricRational) -> np.ndarray:
    """Zeros of r.

    Two sources: finite eigenvalues of the pencil with coefficients w_j f_j
    (zeros of the numerator away from the support), and support points that
    interpolate an exact zero value (there d blows up while n stays finite,
    so r vanishes even though n does not).
    """
    zs, fs, ws = r._active()
    interp_zeros = zs[fs == 0]
    coeffs = ws * fs
    if len(zs) == 1 or not np.any(coeffs != 0):
        pencil = np.empty(0, dtype=complex)
    else:
        pencil = arrowhead_finite_eigenvalues(zs, coeffs)
    if interp_zeros.size:
        return np.concatenate([pencil, interp_zeros.astype(complex)])
    return pencil


def residues(r: BarycentricRational, pole_locations) -> np.ndarray:
    """Residue of r at each (simple) pole t, as n(t)/d'(t).

    d'(t) = -sum_j w_j/(t - z_j)^2. Raises DegeneratePoleError when d'
    vanishes at a requested pole, which signals a multiple pole.
    """
    zs, fs, ws = r._active()
    ts = np.atleast_1d(np.asarray(pole_locations))
    if ts.size == 0:
        return np.empty(0, dtype=complex)
    diff = ts[:, None] - zs[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        n = (ws * fs / diff).sum(axis=1)
        dprime = -(ws / (diff * diff)).sum(axis=1)
    bad = dprime == 0
    if np.any(bad):
        t = ts[np.nonzero(bad)[0][0]]
        raise DegeneratePoleError(f"d'({t}) = 0: pole is not simple")
    return np.asarray(n / dprime, dtype=complex)


def type_of(r: BarycentricRational) -> tuple[int, int]:
    """Rational type (m-1, m-1), with m counting nonzero-weight support points."""
    m = int(np.count_nonzero(r.weights))
    return (m - 1, m - 1)
