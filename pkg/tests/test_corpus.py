"""Special functions, point-set generators, and the demo registry."""

import mpmath as mp
import numpy as np
import pytest
from scipy.integrate import quad

from aaafit import (
    DomainError,
    UnknownNameError,
    bessel_j0,
    gamma_fn,
    zeta_partial,
)
from aaafit.corpus import (
    demo_names,
    get_demo,
    point_set_names,
    point_sets,
    run_demo,
    target_function,
    target_names,
)

mp.mp.dps = 20


class TestBesselJ0:
    def test_at_zero(self):
        assert bessel_j0(0.0) == 1.0

    def test_first_zero(self):
        assert abs(bessel_j0(2.404825557695780)) <= 1e-12

    def test_against_long_series_oracle(self):
        # 50 terms of the defining series at high precision
        want = complex(mp.nsum(lambda k: (-1) ** k * mp.mpf(0.25) ** k / mp.factorial(k) ** 2,
                               [0, 50]))
        assert abs(bessel_j0(1.0) - want) <= 1e-13 * abs(want)

    def test_outside_validated_domain(self):
        with pytest.raises(DomainError):
            bessel_j0(12.5)
        with pytest.raises(DomainError):
            bessel_j0(9.0 + 9.0j)

    def test_random_rectangle_against_mpmath(self):
        rng = np.random.default_rng(0)
        zs = rng.uniform(0, 10, 100) + 1j * rng.uniform(-1, 1, 100)
        got = bessel_j0(zs)
        for z, g in zip(zs, got):
            want = complex(mp.besselj(0, complex(z)))
            assert abs(g - want) <= 1e-11 * abs(want)

    def test_scalar_and_array_agree(self):
        zs = np.array([0.5, 1.0 + 0.3j, -2.0])
        arr = bessel_j0(zs)
        assert np.allclose(arr, [bessel_j0(z) for z in zs], rtol=1e-15)


class TestZetaPartial:
    def test_at_four(self):
        want = np.pi**4 / 90.0
        assert abs(zeta_partial(4.0) - want) <= 4e-16 * want

    def test_at_two(self):
        # truncation tail of the 1e5-term sum is about 1/N
        want = np.pi**2 / 6.0
        assert abs(zeta_partial(2.0) - want) <= 1.1e-5 * want

    def test_conjugate_symmetry(self):
        assert zeta_partial(complex(4.0, -0.0)) == np.conj(zeta_partial(complex(4.0, 0.0)))
        assert zeta_partial(3.0 - 2.0j) == pytest.approx(
            np.conj(zeta_partial(3.0 + 2.0j)), rel=1e-15
        )

    def test_random_points_against_hurwitz_oracle(self):
        # the finite sum equals zeta(z) minus its Hurwitz tail from 1e5+1
        rng = np.random.default_rng(1)
        zs = rng.uniform(1.5, 5.0, 100) + 1j * rng.uniform(-40, 40, 100)
        for z in zs:
            want = complex(mp.zeta(complex(z)) - mp.zeta(complex(z), 100001))
            assert abs(zeta_partial(z) - want) <= 1e-12 * abs(want)


class TestGammaFn:
    def test_factorial_points(self):
        assert abs(gamma_fn(1.0) - 1.0) <= 1e-14
        assert abs(gamma_fn(4.0) - 6.0) <= 1e-13 * 6.0

    def test_half(self):
        assert abs(gamma_fn(0.5) - np.sqrt(np.pi)) <= 1e-13 * np.sqrt(np.pi)

    def test_against_quadrature_oracle(self):
        want, err = quad(lambda t: t**0.5 * np.exp(-t), 0.0, np.inf,
                         epsabs=1e-13, epsrel=1e-13)
        assert err < 1e-13
        assert abs(gamma_fn(1.5) - want) <= 1e-12 * abs(want)

    def test_poles_nonfinite(self):
        for x in (0.0, -1.0, -2.0, -3.0):
            assert not np.isfinite(gamma_fn(x))

    def test_random_interval_against_mpmath(self):
        rng = np.random.default_rng(2)
        xs = rng.uniform(-3.5, 4.5, 200)
        xs = xs[np.abs(xs - np.round(xs)) > 0.05][:100]
        assert len(xs) == 100
        for x in xs:
            want = complex(mp.gamma(float(x)))
            assert abs(gamma_fn(float(x)) - want) <= 1e-12 * abs(want)


class TestPointSets:
    def test_registry_names(self):
        assert set(point_set_names()) == {
            "equispaced-interval", "logspace-negative", "rectangle-random",
            "roots-of-unity", "spiral-1000", "square-plus-circle",
            "unit-circle", "zeta-segment",
        }

    def test_unknown_name(self):
        with pytest.raises(UnknownNameError):
            point_sets("no-such-set")

    def test_spiral(self):
        Z = point_sets("spiral-1000")
        assert len(Z) == 1000
        assert Z[0] == pytest.approx(np.exp(-0.5), rel=1e-15)
        # winds 7.5 times: endpoint angle pi on the last sheet
        assert Z[-1] == pytest.approx(np.exp(0.5 + 15j * np.pi), rel=1e-12)

    def test_roots_of_unity(self):
        Z = point_sets("roots-of-unity", M=4)
        expected = np.array([1.0, 1j, -1.0, -1j])
        assert len(Z) == 4
        assert all(np.min(np.abs(Z - e)) <= 1e-15 for e in expected)

    def test_unit_circle_equispaced(self):
        Z = point_sets("unit-circle", M=8)
        assert np.allclose(np.abs(Z), 1.0, atol=1e-15)
        angles = np.sort(np.angle(Z))
        assert np.allclose(np.diff(angles), np.pi / 4, atol=1e-12)

    def test_rectangle_random(self):
        Z = point_sets("rectangle-random", seed=5)
        assert len(Z) == 2000
        assert np.all((Z.real >= 0) & (Z.real <= 10))
        assert np.all(np.abs(Z.imag) <= 1)
        assert np.array_equal(Z, point_sets("rectangle-random", seed=5))
        assert not np.array_equal(Z, point_sets("rectangle-random", seed=6))

    def test_square_plus_circle(self):
        Z = point_sets("square-plus-circle")
        assert len(Z) == 2000
        assert len(np.unique(Z)) == 2000
        sq, circle = Z[:1000], Z[1000:]
        on_vertical = (np.abs(sq.real + 2.5) <= 1e-12) | (np.abs(sq.real + 0.5) <= 1e-12)
        on_horizontal = (np.abs(sq.imag - 1.0) <= 1e-12) | (np.abs(sq.imag + 1.0) <= 1e-12)
        assert np.all(on_vertical | on_horizontal)
        assert np.all((sq.real >= -2.5 - 1e-12) & (sq.real <= -0.5 + 1e-12))
        assert np.all(np.abs(sq.imag) <= 1.0 + 1e-12)
        assert np.allclose(np.abs(circle - 1.5), 1.0, atol=1e-12)

    def test_equispaced_interval(self):
        Z = point_sets("equispaced-interval", M=101, a=-1.5, b=1.5)
        assert len(Z) == 101
        assert Z[0] == -1.5 and Z[-1] == 1.5
        assert np.allclose(np.diff(Z), 3.0 / 100, atol=1e-15)

    def test_logspace_negative(self):
        Z = point_sets("logspace-negative")
        assert len(Z) == 4000
        assert np.isclose(Z[0], -1e4, rtol=1e-15)
        assert np.isclose(Z[-1], -1e-3, rtol=1e-15)
        assert np.all(Z < 0)
        assert np.all(np.diff(Z) > 0)

    def test_zeta_segment(self):
        Z = point_sets("zeta-segment")
        assert len(Z) == 100
        assert Z[0] == 4.0 - 40.0j
        assert Z[-1] == 4.0 + 40.0j
        assert np.allclose(Z.real, 4.0, atol=0)


class TestTargets:
    def test_registry_names(self):
        assert set(target_names()) == {
            "abs", "exp", "gamma", "inv-bessel-j0", "log-branch",
            "log-quartic-ratio", "sign-re", "sqrt", "tan", "tan-pi-half",
            "tan4", "tan16", "tan64", "tan256", "zeta-partial",
        }

    def test_unknown_name(self):
        with pytest.raises(UnknownNameError):
            target_function("no-such-target")

    def test_values(self):
        z = np.array([0.3 + 0.1j])
        assert target_function("tan")(z)[0] == np.tan(z[0])
        assert target_function("tan-pi-half")(z)[0] == np.tan(0.5 * np.pi * z[0])
        assert target_function("tan64")(z)[0] == np.tan(64.0 * z[0])
        assert target_function("exp")(z)[0] == np.exp(z[0])
        assert target_function("log-branch")(z)[0] == np.log(1.1 - z[0])
        got = target_function("log-quartic-ratio")(np.array([0.0 + 0j]))[0]
        assert got == pytest.approx(np.log(2.0), rel=1e-15)
        assert target_function("sign-re")(np.array([-2.0 + 5j]))[0] == -1.0
        assert target_function("abs")(np.array([-0.3]))[0] == 0.3
        assert target_function("sqrt")(np.array([0.25]))[0] == 0.5
        got = target_function("inv-bessel-j0")(np.array([1.0 + 0j]))[0]
        assert got == pytest.approx(1.0 / bessel_j0(1.0), rel=1e-14)
        got = target_function("gamma")(np.array([1.5]))[0]
        assert got == pytest.approx(gamma_fn(1.5).real, rel=1e-14)
        got = target_function("zeta-partial")(np.array([4.0 + 0j]))[0]
        assert got == zeta_partial(4.0 + 0j)


class TestDemoRegistry:
    def test_twelve_unique_names(self):
        names = demo_names()
        assert len(names) == 12
        assert len(set(names)) == 12

    def test_unknown_demo(self):
        with pytest.raises(UnknownNameError):
            get_demo("no-such-demo")
        with pytest.raises(UnknownNameError):
            run_demo("no-such-demo")

    def test_specs_well_formed(self):
        for name in demo_names():
            spec = get_demo(name)
            assert spec.name == name
            assert spec.description

    def test_cheap_demo_end_to_end(self):
        run = run_demo("tan-disk")
        assert run.canonical
        checks = run.checks if hasattr(run, "checks") else None
        # every canonical bound holds and at least one check ran
        from aaafit.corpus import demo_checks
        results = demo_checks(run)
        assert results and all(c.passed for c in results)

    def test_override_marks_non_canonical(self):
        from aaafit import FitConfig
        run = run_demo("tan-disk", config=FitConfig(mmax=5))
        assert not run.canonical
