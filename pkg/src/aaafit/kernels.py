"""Dense linear-algebra kernels: minimal singular vectors and arrowhead pencils.

Two operations back everything else in the package: extracting the smallest
right singular vector of a (tall) matrix, and computing the finite eigenvalues
of the arrowhead generalized eigenproblem that encodes the zeros of a partial
fraction sum. Both delegate the factorization itself to LAPACK (via numpy and
scipy) and add the validation, filtering, and refinement this package needs.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg


class InvalidInputError(ValueError):
    """Raised when a kernel receives non-finite or degenerate input."""


class ShapeError(ValueError):
    """Raised when a matrix has fewer rows than columns."""


def min_right_singular_vector(A: np.ndarray) -> tuple[float, np.ndarray]:
    """Return (sigma_min, w) where w minimizes ||A w|| over unit vectors.

    Parameters
    ----------
    A : ndarray, shape (rows, cols), rows >= cols
        Real or complex matrix with finite entries.

    Returns
    -------
    sigma_min : float
        ||A w||_2 for the returned w.
    w : ndarray, shape (cols,)
        Unit 2-norm right singular vector for the smallest singular value.
        When the minimal singular value is (nearly) non-unique, any
        minimizer may be returned.
    """
    A = np.asarray(A)
    if A.ndim != 2:
        raise ShapeError(f"expected a matrix, got ndim={A.ndim}")
    if not np.all(np.isfinite(A)):
        raise InvalidInputError("matrix has non-finite entries")
    rows, cols = A.shape
    if rows < cols:
        raise ShapeError(f"need rows >= cols, got {rows}x{cols}")
    _, _, vh = np.linalg.svd(A, full_matrices=False)
    w = vh[-1].conj()
    # Recompute sigma from w so that sigma_min == ||A w|| holds exactly.
    sigma = float(np.linalg.norm(A @ w))
    return sigma, w


def _newton_refine(lam: np.ndarray, nodes: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    """Polish roots of g(z) = sum_j coeffs_j/(z - nodes_j) by Newton steps.

    At most 5 steps per root, stopping at 1e-15 relative movement. Keeps the
    iterate with the smallest |g|; a step that lands on a node or produces a
    non-finite value is discarded.
    """
    out = lam.copy()
    for i, t in enumerate(lam):
        best = t
        dmin = np.min(np.abs(t - nodes))
        if dmin == 0.0:
            continue
        best_res = abs(np.sum(coeffs / (t - nodes)))
        for _ in range(5):
            diff = t - nodes
            if np.min(np.abs(diff)) == 0.0:
                break
            g = np.sum(coeffs / diff)
            gp = -np.sum(coeffs / (diff * diff))
            if gp == 0.0 or not np.isfinite(gp):
                break
            step = g / gp
            t = t - step
            if not np.isfinite(t):
                break
            diff = t - nodes
            if np.min(np.abs(diff)) == 0.0:
                break
            res = abs(np.sum(coeffs / diff))
            if res < best_res:
                best, best_res = t, res
            if abs(step) <= 1e-15 * abs(t):
                break
        out[i] = best
    return out


# An eigenvalue pair (alpha, beta) is infinite when beta vanishes; in floats
# we discard beta below this fraction of |alpha|.
_BETA_FILTER = 1e-13
# Acceptance bound on |sum c/(lam-z)| relative to sum |c/(lam-z)|.
_RESIDUAL_BOUND = 1e-10


def arrowhead_finite_eigenvalues(nodes: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    """Finite eigenvalues of the arrowhead pencil for sum_j coeffs_j/(z-nodes_j).

    The (m+1) x (m+1) pencil has first row (0, coeffs), first column
    (0, 1, ..., 1), the nodes on the remaining diagonal, against
    diag(0, 1, ..., 1). Its finite eigenvalues are the zeros of the partial
    fraction sum; at least two eigenvalues are infinite and are discarded.
    Generically m-1 values are returned; fewer when sum(coeffs) = 0 or in
    other degenerate cases.

    Terms with a coefficient of exactly zero contribute nothing to the sum
    and are pruned first; leaving them in would plant a spurious eigenvalue
    at the orphaned node.

    Returns a complex array. For real input the underlying real QZ leaves
    real eigenvalues with imaginary part exactly zero.
    """
    nodes = np.atleast_1d(np.asarray(nodes))
    coeffs = np.atleast_1d(np.asarray(coeffs))
    if nodes.shape != coeffs.shape or nodes.ndim != 1 or len(nodes) < 1:
        raise InvalidInputError("nodes and coeffs must be equal-length vectors")
    if not (np.all(np.isfinite(nodes)) and np.all(np.isfinite(coeffs))):
        raise InvalidInputError("non-finite nodes or coeffs")
    if len(np.unique(nodes)) != len(nodes):
        raise InvalidInputError("nodes must be pairwise distinct")
    if not np.any(coeffs != 0):
        raise InvalidInputError("coeffs must not all be zero")

    live = coeffs != 0
    nodes = nodes[live]
    coeffs = coeffs[live]
    m = len(nodes)
    if m == 1:
        return np.empty(0, dtype=complex)

    dtype = float if (np.isrealobj(nodes) and np.isrealobj(coeffs)) else complex
    E = np.zeros((m + 1, m + 1), dtype=dtype)
    E[0, 1:] = coeffs
    E[1:, 0] = 1.0
    E[np.arange(1, m + 1), np.arange(1, m + 1)] = nodes
    B = np.eye(m + 1, dtype=dtype)
    B[0, 0] = 0.0

    alpha, beta = scipy.linalg.eig(E, B, right=False, homogeneous_eigvals=True)
    keep = np.abs(beta) >= _BETA_FILTER * np.abs(alpha)
    with np.errstate(divide="ignore", invalid="ignore"):
        lam = alpha[keep] / beta[keep]
    lam = lam[np.isfinite(lam)]
    lam = _newton_refine(lam, nodes, coeffs)

    ok = np.zeros(len(lam), dtype=bool)
    for i, t in enumerate(lam):
        diff = t - nodes
        if np.min(np.abs(diff)) == 0.0:
            continue
        terms = coeffs / diff
        denom = np.sum(np.abs(terms))
        ok[i] = denom > 0 and abs(np.sum(terms)) <= _RESIDUAL_BOUND * denom
    return np.asarray(lam[ok], dtype=complex)
