"""Contracts of the barycentric rational data type."""

import numpy as np
import pytest

from aaafit import (
    BarycentricRational,
    DegeneratePoleError,
    FitConfig,
    SampleSet,
    evaluate,
    evaluate_many,
    fit,
    poles,
    residues,
    type_of,
    zeros,
)


def identity_rational() -> BarycentricRational:
    # hand algebra: support [0,1], values [0,1], weights [1,-1] gives r(z) = z
    return BarycentricRational(
        np.array([0.0, 1.0]), np.array([0.0, 1.0]), np.array([1.0, -1.0])
    )


def inverse_rational() -> BarycentricRational:
    # hand algebra: r(z) = 1/z
    return BarycentricRational(
        np.array([1.0, -1.0]), np.array([1.0, -1.0]), np.array([1.0, 1.0])
    )


def random_rational(m: int, seed: int) -> BarycentricRational:
    rng = np.random.default_rng(seed)
    zs = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    fs = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    ws = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    return BarycentricRational(zs, fs, ws)


class TestValidation:
    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            BarycentricRational(np.array([0.0, 1.0]), np.array([1.0]), np.array([1.0]))

    def test_empty(self):
        with pytest.raises(ValueError):
            BarycentricRational(np.array([]), np.array([]), np.array([]))

    def test_duplicate_support(self):
        with pytest.raises(ValueError):
            BarycentricRational(
                np.array([1.0, 1.0]), np.array([0.0, 1.0]), np.array([1.0, 1.0])
            )

    def test_all_zero_weights(self):
        with pytest.raises(ValueError):
            BarycentricRational(
                np.array([0.0, 1.0]), np.array([0.0, 1.0]), np.array([0.0, 0.0])
            )

    def test_nonfinite_entries(self):
        with pytest.raises(ValueError):
            BarycentricRational(
                np.array([0.0, np.inf]), np.array([0.0, 1.0]), np.array([1.0, 1.0])
            )
        with pytest.raises(ValueError):
            BarycentricRational(
                np.array([0.0, 1.0]), np.array([np.nan, 1.0]), np.array([1.0, 1.0])
            )


class TestEvaluate:
    def test_identity_at_two(self):
        assert evaluate(identity_rational(), 2.0) == pytest.approx(2.0, abs=1e-15)

    def test_support_points_exact(self):
        r = random_rational(5, 0)
        for zj, fj, wj in zip(r.support, r.values, r.weights):
            if wj != 0:
                assert evaluate(r, zj) == fj

    def test_constant(self):
        r = BarycentricRational(np.array([3.0]), np.array([7.0]), np.array([1.0]))
        assert evaluate(r, -12.5 + 4j) == pytest.approx(7.0, rel=1e-14)

    def test_call_scalar_and_array(self):
        r = identity_rational()
        assert r(2.0) == pytest.approx(2.0, abs=1e-15)
        out = r(np.array([0.5, 2.0, -3.0j]))
        assert np.allclose(out, [0.5, 2.0, -3.0j], atol=1e-15)

    def test_evaluate_many_empty(self):
        assert len(evaluate_many(identity_rational(), np.array([]))) == 0

    def test_evaluate_many_support_point(self):
        r = random_rational(4, 1)
        out = evaluate_many(r, np.array([r.support[0]]))
        assert out[0] == r.values[0]

    def test_evaluate_many_matches_evaluate(self):
        r = random_rational(6, 2)
        zs = np.linspace(-2, 2, 17) + 0.3j
        many = evaluate_many(r, zs)
        each = np.array([evaluate(r, z) for z in zs])
        assert np.allclose(many, each, rtol=1e-14, atol=0)

    def test_near_support_limit(self):
        # smooth fit: r(z_j + eps) must approach f_j
        Z = np.exp(2j * np.pi * np.arange(64) / 64)
        samples = SampleSet(Z, np.exp(Z))
        r = fit(samples).approximant
        eps = 1e-7
        for zj, fj in zip(r.support, r.values):
            assert abs(evaluate(r, zj + eps) - fj) <= 1e-5 * abs(fj)


class TestPolesZeros:
    def test_symmetric_pair_pole(self):
        r = BarycentricRational(
            np.array([1.0, -1.0]), np.array([0.3, 0.9]), np.array([1.0, 1.0])
        )
        ts = poles(r)
        assert len(ts) == 1
        assert abs(ts[0]) <= 1e-14

    def test_single_support_no_poles(self):
        r = BarycentricRational(np.array([2.0]), np.array([5.0]), np.array([1.0]))
        assert len(poles(r)) == 0

    def test_identity_zero_from_support_value(self):
        # f_1 = 0 at a support point: a zero of r even though n has none there
        zs = zeros(identity_rational())
        assert len(zs) == 1
        assert abs(zs[0]) <= 1e-14

    def test_inverse_has_no_finite_zeros(self):
        assert len(zeros(inverse_rational())) == 0

    def test_generic_pole_count(self):
        for seed in range(3):
            r = random_rational(6, seed)
            assert len(poles(r)) == 6 - 1

    def test_pole_residual_bound(self):
        r = random_rational(7, 5)
        for t in poles(r):
            terms = r.weights / (t - r.support)
            assert abs(np.sum(terms)) <= 1e-10 * np.sum(np.abs(terms))

    def test_zero_residual_bound(self):
        r = random_rational(7, 6)
        coeffs = r.weights * r.values
        for t in zeros(r):
            terms = coeffs / (t - r.support)
            assert abs(np.sum(terms)) <= 1e-10 * np.sum(np.abs(terms))

    def test_zero_weight_support_pruned(self):
        # the zero-weight term must not contribute a pole between 0 and 2
        r = BarycentricRational(
            np.array([0.0, 1.0, 2.0]),
            np.array([1.0, 5.0, 2.0]),
            np.array([1.0, 0.0, 1.0]),
        )
        ts = poles(r)
        assert len(ts) == 1
        assert abs(ts[0] - 1.0) <= 1e-13  # d(z) = 1/z + 1/(z-2) vanishes at 1


class TestResidues:
    def test_inverse_residue_at_origin(self):
        rho = residues(inverse_rational(), [0.0])
        assert rho[0] == pytest.approx(1.0, rel=1e-14)

    def test_value_scaling_linearity(self):
        r = random_rational(5, 8)
        a = 2.0 - 1.5j
        scaled = BarycentricRational(r.support, a * r.values, r.weights)
        ts = poles(r)
        base = residues(r, ts)
        assert np.allclose(residues(scaled, ts), a * np.asarray(base), rtol=1e-12)

    def test_four_direction_consistency(self):
        r = random_rational(6, 9)
        ts = poles(r)
        rhos = residues(r, ts)
        for t, rho in zip(ts, rhos):
            eta = 1e-7 * (1.0 + abs(t))
            est = np.mean(
                [d * evaluate(r, t + d) for d in (eta, -eta, 1j * eta, -1j * eta)]
            )
            assert abs(est - rho) <= 1e-4 * abs(rho)

    def test_degenerate_pole_rejected(self):
        r = BarycentricRational(
            np.array([1.0, -1.0]), np.array([0.5, 2.0]), np.array([1.0, 1.0])
        )
        # d'(i) = -(1/(i-1)^2 + 1/(i+1)^2) = 0 exactly
        with pytest.raises(DegeneratePoleError):
            residues(r, [1j])


class TestTypeOf:
    def test_single_support(self):
        r = BarycentricRational(np.array([0.0]), np.array([1.0]), np.array([1.0]))
        assert type_of(r) == (0, 0)

    def test_zero_weight_reduces_type(self):
        r = BarycentricRational(
            np.array([0.0, 1.0, 2.0]),
            np.array([1.0, 5.0, 2.0]),
            np.array([1.0, 0.0, 1.0]),
        )
        assert type_of(r) == (1, 1)
        assert r.type_of() == (1, 1)

    def test_generic(self):
        assert random_rational(8, 3).type_of() == (7, 7)
