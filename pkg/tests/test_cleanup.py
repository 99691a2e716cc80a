"""Detection and removal of spurious pole-zero pairs."""

import numpy as np
import pytest

from aaafit import (
    BarycentricRational,
    FitConfig,
    PoleInfo,
    SampleSet,
    cleanup_refit,
    detect_spurious,
    evaluate,
    fit,
)
from oracles import nearest_support_marks


def constant_with_cancelling_poles() -> BarycentricRational:
    # r is identically 1; both pencil poles carry residues at rounding level
    return BarycentricRational(
        np.array([0.0, 1.0, 2.0]), np.ones(3), np.ones(3)
    )


def stagnation_problem() -> SampleSet:
    Z = np.exp(2j * np.pi * np.arange(1000) / 1000)
    F = np.log(2.0 + Z**4) / (1.0 - 16.0 * Z**4)
    return SampleSet(Z, F)


@pytest.fixture(scope="module")
def stagnated():
    """Fit run far past convergence so spurious poles accumulate."""
    samples = stagnation_problem()
    cfg = FitConfig(tol=0.0, mmax=100, cleanup_enabled=False)
    result = fit(samples, cfg)
    return samples, result


class TestDetectSpurious:
    def test_tiny_residues_flagged(self):
        flagged = detect_spurious(constant_with_cancelling_poles(), 1.0, 1e-13)
        assert len(flagged) == 2
        assert all(p.spurious for p in flagged)
        assert all(abs(p.residue) < 1e-13 for p in flagged)

    def test_genuine_pole_not_flagged(self):
        r = BarycentricRational(
            np.array([1.0, -1.0]), np.array([1.0, -1.0]), np.array([1.0, 1.0])
        )  # r(z) = 1/z, residue 1 at the origin
        assert detect_spurious(r, 1.0, 1e-13) == []

    def test_threshold_is_relative(self):
        r = BarycentricRational(
            np.array([1.0, -1.0]), np.array([1.0, -1.0]), np.array([1.0, 1.0])
        )
        assert len(detect_spurious(r, 1.0, 2.0)) == 1
        assert len(detect_spurious(r, 1.0, 0.5)) == 0


class TestCleanupRefit:
    def test_no_flagged_passthrough(self):
        r = constant_with_cancelling_poles()
        samples = SampleSet(np.linspace(0, 2, 9), np.ones(9))
        refit, report = cleanup_refit(r, samples, [])
        assert refit is r
        assert report.flagged_poles == []
        assert report.removed_support_indices == []
        assert report.doublets_before == 0
        assert not report.warning

    def test_emptying_support_returns_unchanged(self):
        r = BarycentricRational(
            np.array([0.0, 1.0]), np.array([0.0, 1.0]), np.array([1.0, -1.0])
        )
        samples = SampleSet(np.linspace(0, 1, 6), np.linspace(0, 1, 6))
        flagged = [
            PoleInfo(0.01 + 0j, 1e-16 + 0j, spurious=True),
            PoleInfo(0.99 + 0j, 1e-16 + 0j, spurious=True),
        ]
        refit, report = cleanup_refit(r, samples, flagged)
        assert refit is r
        assert report.warning
        assert report.doublets_after == report.doublets_before == 2

    def test_stagnation_flag_count(self, stagnated):
        samples, result = stagnated
        flagged = detect_spurious(result.approximant, result.scale, 1e-13)
        assert len(flagged) >= 30

    def test_removed_match_nearest_neighbor_oracle(self, stagnated):
        samples, result = stagnated
        r = result.approximant
        flagged = detect_spurious(r, result.scale, 1e-13)
        refit, report = cleanup_refit(
            r, samples, flagged, scale=result.scale, cleanup_tol=1e-13
        )
        expected = nearest_support_marks(r.support, [p.location for p in flagged])
        assert report.removed_support_indices == expected
        assert len(refit.support) == len(r.support) - len(expected)
        assert report.doublets_before == len(flagged)
        assert report.doublets_after <= 3

    def test_refit_preserves_interpolation(self, stagnated):
        samples, result = stagnated
        r = result.approximant
        flagged = detect_spurious(r, result.scale, 1e-13)
        refit, _ = cleanup_refit(
            r, samples, flagged, scale=result.scale, cleanup_tol=1e-13
        )
        for zj, fj, wj in zip(refit.support, refit.values, refit.weights):
            if wj != 0:
                assert evaluate(refit, zj) == fj

    def test_integrated_fit_path(self):
        samples = stagnation_problem()
        cfg = FitConfig(tol=0.0, mmax=100)
        result = fit(samples, cfg)
        report = result.cleanup
        assert report is not None
        assert report.doublets_before >= 30
        assert report.doublets_after <= 3
        assert report.doublets_after <= report.doublets_before
        assert len(result.approximant.support) == 100 - len(report.removed_support_indices)
        spurious_left = [p for p in result.poles if p.spurious]
        assert len(spurious_left) == report.doublets_after

    def test_default_tolerance_produces_no_doublets(self):
        result = fit(stagnation_problem())
        assert result.converged
        assert all(not p.spurious for p in result.poles)
