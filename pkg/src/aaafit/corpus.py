"""Demo corpus: special functions, point-set generators, and target functions.

Everything needed to run the showcase fits as self-contained demos: a small
set of special-function evaluators (Bessel J0, a truncated zeta sum, the
gamma function), deterministic point-set generators, a registry of target
functions, and a registry of demo specifications with their expected bounds.

The special functions are deliberately self-contained rather than delegated
to scipy: each demo documents exactly what was sampled, and the evaluators
are validated against independent oracles in the test suite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .core import FitConfig, FitResult, SampleSet, fit_with_options


class UnknownNameError(ValueError):
    """Raised for a name not present in a corpus registry."""


class DomainError(ValueError):
    """Raised when an evaluator is called outside its validated domain."""


# ---------------------------------------------------------------------------
# Special functions


def bessel_j0(z):
    """Bessel function J0 by its power series, for |z| <= 12.

    Accepts a scalar or an array (elementwise). Terms are accumulated in
    extended precision and the sum ends once the last term falls below
    1e-18 of the partial sum, so the float64 result is fully converged.
    The 12-radius cap keeps the alternating series short enough that no
    precision is lost to cancellation.
    """
    scalar = np.isscalar(z) or np.ndim(z) == 0
    zarr = np.atleast_1d(np.asarray(z, dtype=complex))
    if np.any(np.abs(zarr) > 12.0):
        raise DomainError("bessel_j0 is validated for |z| <= 12 only")
    q = -(zarr.astype(np.clongdouble) ** 2) / 4.0
    term = np.ones_like(q)
    total = term.copy()
    for k in range(1, 120):
        term = term * q / np.clongdouble(k * k)
        total = total + term
        if np.max(np.abs(term)) < np.longdouble(1e-21) * np.max(np.abs(total)):
            break
    out = total.astype(complex)
    return complex(out[0]) if scalar else out


_ZETA_TERMS = 10**5


def zeta_partial(z) -> complex:
    """Partial zeta sum over k = 1..1e5, accumulated smallest terms first.

    For Re(z) > 1 this approximates zeta(z) with truncation error of order
    N^(1-Re z)/(Re z - 1); useful meromorphic structure (the pole at 1, the
    first nontrivial zeros) survives the truncation well enough to be
    recovered by a rational fit of samples along a vertical segment.
    """
    z = complex(z)
    k = np.arange(_ZETA_TERMS, 0, -1, dtype=float)
    return complex(np.sum(k ** (-z)))


# Lanczos g=7, 9-term coefficient set (Godfrey); relative error well under
# 1e-13 over the strip treated here.
_LANCZOS_G = 7.0
_LANCZOS_C = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_fn(x) -> complex:
    """Gamma function via a 9-term Lanczos sum, reflected for Re(x) < 0.5.

    At the poles (nonpositive integers) the result is non-finite rather
    than an exception, so vectorized sampling near poles stays simple.
    """
    x = complex(x)
    if x.imag == 0.0 and x.real <= 0.0 and x.real == round(x.real):
        return complex(float("nan"), 0.0)
    if x.real < 0.5:
        return np.pi / (np.sin(np.pi * x) * gamma_fn(1.0 - x))
    x = x - 1.0
    a = _LANCZOS_C[0]
    for i in range(1, len(_LANCZOS_C)):
        a = a + _LANCZOS_C[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    return complex(np.sqrt(2.0 * np.pi) * t ** (x + 0.5) * np.exp(-t) * a)


# ---------------------------------------------------------------------------
# Point sets


def _spiral_1000(seed=None) -> np.ndarray:
    # Logarithmic spiral winding 7.5 times around the origin.
    return np.exp(np.linspace(-0.5, 0.5 + 15j * np.pi, 1000))


def _unit_circle(seed=None, *, M) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(M) / M)


def _rectangle_random(seed=None, *, M=2000) -> np.ndarray:
    # Uniform over the rectangle with corners -i, i, 10-i, 10+i.
    rng = np.random.default_rng(0 if seed is None else seed)
    return rng.uniform(0.0, 10.0, M) + 1j * rng.uniform(-1.0, 1.0, M)


def _square_plus_circle(seed=None) -> np.ndarray:
    # 1000 points on the square with center -1.5 and side 2, plus 1000 on
    # the circle with center 1.5 and radius 1: two disjoint boundaries.
    t = np.arange(1000) / 1000.0 * 8.0
    s = t % 2.0
    side = (t // 2.0).astype(int)
    sq = np.empty(1000, dtype=complex)
    sq[side == 0] = (-2.5 + s[side == 0]) - 1j
    sq[side == 1] = -0.5 + 1j * (-1.0 + s[side == 1])
    sq[side == 2] = (-0.5 - s[side == 2]) + 1j
    sq[side == 3] = -2.5 + 1j * (1.0 - s[side == 3])
    circle = 1.5 + np.exp(2j * np.pi * np.arange(1000) / 1000)
    return np.concatenate([sq, circle])


def _equispaced_interval(seed=None, *, M, a, b) -> np.ndarray:
    return np.linspace(float(a), float(b), M)


def _logspace_negative(seed=None, *, M=4000) -> np.ndarray:
    # Logarithmically spaced from -1e4 to -1e-3.
    return -np.logspace(4.0, -3.0, M)


def _zeta_segment(seed=None) -> np.ndarray:
    return 4.0 + 1j * np.linspace(-40.0, 40.0, 100)


_POINT_SETS: dict[str, Callable[..., np.ndarray]] = {
    "spiral-1000": _spiral_1000,
    "unit-circle": _unit_circle,
    "roots-of-unity": _unit_circle,
    "rectangle-random": _rectangle_random,
    "square-plus-circle": _square_plus_circle,
    "equispaced-interval": _equispaced_interval,
    "logspace-negative": _logspace_negative,
    "zeta-segment": _zeta_segment,
}


def point_set_names() -> list[str]:
    return sorted(_POINT_SETS)


def point_sets(name: str, seed: int | None = None, **params) -> np.ndarray:
    """Generate the named point set; deterministic for a fixed seed."""
    try:
        gen = _POINT_SETS[name]
    except KeyError:
        raise UnknownNameError(f"unknown point set {name!r}") from None
    return gen(seed=seed, **params)


# ---------------------------------------------------------------------------
# Target functions


def _real_if_real_input(Z, vals):
    return vals.real if np.isrealobj(Z) else vals


def _target_gamma(Z):
    vals = np.array([gamma_fn(z) for z in np.atleast_1d(Z)])
    return _real_if_real_input(Z, vals)


def _target_zeta(Z):
    return np.array([zeta_partial(z) for z in np.atleast_1d(Z)])


_TARGETS: dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "tan": np.tan,
    "tan-pi-half": lambda Z: np.tan(0.5 * np.pi * Z),
    "tan4": lambda Z: np.tan(4.0 * Z),
    "tan16": lambda Z: np.tan(16.0 * Z),
    "tan64": lambda Z: np.tan(64.0 * Z),
    "tan256": lambda Z: np.tan(256.0 * Z),
    "exp": np.exp,
    "log-branch": lambda Z: np.log(1.1 - Z),
    "log-quartic-ratio": lambda Z: np.log(2.0 + Z**4) / (1.0 - 16.0 * Z**4),
    "sign-re": lambda Z: np.sign(np.asarray(Z).real),
    "abs": np.abs,
    "sqrt": np.sqrt,
    "gamma": _target_gamma,
    "inv-bessel-j0": lambda Z: 1.0 / bessel_j0(Z),
    "zeta-partial": _target_zeta,
}


def target_names() -> list[str]:
    return sorted(_TARGETS)


def target_function(name: str) -> Callable[[np.ndarray], np.ndarray]:
    try:
        return _TARGETS[name]
    except KeyError:
        raise UnknownNameError(f"unknown target function {name!r}") from None


# ---------------------------------------------------------------------------
# Demo registry


@dataclass(frozen=True)
class DemoCase:
    """One fit performed by a demo (most demos run exactly one)."""

    label: str
    samples: SampleSet
    config: FitConfig


@dataclass(frozen=True)
class DemoCheck:
    """One expected-bound verdict from a demo run."""

    description: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class DemoSpec:
    """A registered demo: point recipe, target, canonical config, bounds."""

    name: str
    description: str
    generator: str
    generator_params: dict
    target: str
    config: FitConfig
    checks: Callable[["DemoRun"], list[DemoCheck]]
    cases_builder: Callable[[int | None, FitConfig], tuple[DemoCase, ...]] | None = None


@dataclass(frozen=True)
class DemoRun:
    """Results of running a demo's cases, with timing and canonicality."""

    spec: DemoSpec
    cases: tuple[DemoCase, ...]
    results: tuple[FitResult, ...]
    elapsed: float
    canonical: bool


def build_cases(spec: DemoSpec, seed: int | None, config: FitConfig) -> tuple[DemoCase, ...]:
    if spec.cases_builder is not None:
        return spec.cases_builder(seed, config)
    Z = point_sets(spec.generator, seed, **spec.generator_params)
    F = target_function(spec.target)(Z)
    return (DemoCase("fit", SampleSet(Z, F), config),)


def run_demo(
    name: str,
    seed: int | None = None,
    config: FitConfig | None = None,
    track_cond: bool = False,
) -> DemoRun:
    """Run the named demo and return its cases, results, and timing.

    canonical is True when the effective config and seed are the
    registered ones; expected-bound checks only apply then (the bounds
    were calibrated for the canonical setup).
    """
    spec = get_demo(name)
    cfg = spec.config if config is None else config
    cases = build_cases(spec, seed, cfg)
    t0 = time.perf_counter()
    results = tuple(
        fit_with_options(c.samples, c.config, track_cond=track_cond) for c in cases
    )
    elapsed = time.perf_counter() - t0
    canonical = cfg == spec.config and (seed is None or seed == 0)
    return DemoRun(spec, cases, results, elapsed, canonical)


def demo_checks(run: DemoRun) -> list[DemoCheck]:
    """Expected-bound checks for a demo run.

    Canonical runs get the registered bounds. Overridden runs are not held
    to bounds calibrated for another config, with one documented exception:
    the froissart demo at tol=0, mmax=100 is the spurious-pole stress
    variant, and its flagged-pole counts are checked.
    """
    if run.canonical:
        return run.spec.checks(run)
    return _variant_checks(run)


def _variant_checks(run: DemoRun) -> list[DemoCheck]:
    cfg = run.cases[0].config if run.cases else None
    if run.spec.name == "froissart" and cfg is not None and cfg.tol == 0.0 and cfg.mmax == 100:
        r = run.results[0]
        if not cfg.cleanup_enabled:
            n = sum(p.spurious for p in r.poles)
            return [_check("stagnation run flags >= 30 spurious poles", n >= 30, f"flagged={n}")]
        after = r.cleanup.doublets_after if r.cleanup is not None else 0
        return [_check("cleanup leaves <= 3 flagged poles", after <= 3, f"remaining={after}")]
    return []


def _check(description: str, passed: bool, detail: str) -> DemoCheck:
    return DemoCheck(description, bool(passed), detail)


def _pole_distance(result: FitResult, target: complex) -> float:
    locs = result.pole_locations()
    if len(locs) == 0:
        return float("inf")
    return float(np.min(np.abs(locs - target)))


def _nearest_pole_residue(result: FitResult, target: complex) -> tuple[float, complex]:
    locs = result.pole_locations()
    i = int(np.argmin(np.abs(locs - target)))
    return float(abs(locs[i] - target)), complex(result.pole_residues()[i])


def _real_poles_in(result: FitResult, a: float, b: float) -> int:
    # Real data runs keep real poles exactly real, so a tiny imaginary
    # tolerance suffices to classify.
    locs = result.pole_locations()
    if len(locs) == 0:
        return 0
    on_axis = np.abs(locs.imag) <= 1e-9
    return int(np.sum(on_axis & (locs.real >= a) & (locs.real <= b)))


def _flagged_count(result: FitResult) -> int:
    if result.cleanup is not None:
        return result.cleanup.doublets_before
    return sum(p.spurious for p in result.poles)


def _checks_tan_spiral(run: DemoRun) -> list[DemoCheck]:
    r = run.results[0]
    steps = len(r.trace)
    out = [
        _check("converges in 12 +/- 1 steps", 11 <= steps <= 13, f"steps={steps}"),
        _check(
            "final max error <= 1e-12 * scale",
            r.max_error <= 1e-12 * r.scale,
            f"error={r.max_error:.3e}, bound={1e-12 * r.scale:.3e}",
        ),
    ]
    for t, tol in [(1.0, 1e-13), (-1.0, 1e-13), (3.0, 1e-6), (-3.0, 1e-6), (5.0, 5e-3), (-5.0, 5e-3)]:
        d = _pole_distance(r, t)
        out.append(_check(f"pole near {t:+g} within {tol:g}", d <= tol, f"distance={d:.3e}"))
    return out


def _checks_gamma(run: DemoRun) -> list[DemoCheck]:
    r = run.results[0]
    mu, nu = r.approximant.type_of()
    out = [_check("type (9,9) +/- 1", 8 <= mu <= 10 and 8 <= nu <= 10, f"type=({mu},{nu})")]
    for t, rho, tol in [(0.0, 1.0, 1e-13), (-1.0, -1.0, 1e-13), (-2.0, 0.5, 1e-6), (-3.0, -1.0 / 6.0, 1e-2)]:
        d, res = _nearest_pole_residue(r, t)
        out.append(_check(f"pole near {t:g} within {tol:g}", d <= tol, f"distance={d:.3e}"))
        out.append(
            _check(
                f"residue at {t:g} within {tol:g} of {rho:g}",
                abs(res - rho) <= tol,
                f"deviation={abs(res - rho):.3e}",
            )
        )
    return out


def _checks_froissart(run: DemoRun) -> list[DemoCheck]:
    r = run.results[0]
    n = _flagged_count(r)
    locs = r.pole_locations()
    inside = locs[np.abs(locs) < 1.0]
    out = [
        _check("no spurious poles at default tolerance", n == 0, f"flagged={n}"),
        _check("exactly 4 poles inside the unit disk", len(inside) == 4, f"count={len(inside)}"),
    ]
    for t in (0.5, -0.5, 0.5j, -0.5j):
        d = _pole_distance(r, t)
        out.append(_check(f"pole near {t} within 1e-10", d <= 1e-10, f"distance={d:.3e}"))
    return out


def _checks_bessel(run: DemoRun) -> list[DemoCheck]:
    r = run.results[0]
    steps = len(r.trace)
    out = [_check("terminates by m <= 15", steps <= 15 and r.converged, f"steps={steps}")]
    for t in (2.404825557695780, 5.520078110286327, 8.653727912911013):
        d = _pole_distance(r, t)
        out.append(_check(f"pole near {t:.6f} within 1e-11", d <= 1e-11, f"distance={d:.3e}"))
    return out


def _checks_zeta(run: DemoRun) -> list[DemoCheck]:
    r = run.results[0]
    d, res = _nearest_pole_residue(r, 1.0)
    zt = 0.5 + 14.134725141718j
    zd = float(np.min(np.abs(r.zeros - zt))) if len(r.zeros) else float("inf")
    return [
        _check("pole within 1e-9 of 1", d <= 1e-9, f"distance={d:.3e}"),
        _check("its residue within 1e-7 of 1", abs(res - 1.0) <= 1e-7, f"deviation={abs(res - 1.0):.3e}"),
        _check(f"zero within 1e-9 of {zt}", zd <= 1e-9, f"distance={zd:.3e}"),
        _check("runtime under 5 s", run.elapsed < 5.0, f"elapsed={run.elapsed:.2f}s"),
    ]


def _checks_tan_disk(run: DemoRun) -> list[DemoCheck]:
    r = run.results[0]
    steps = len(r.trace)
    err8 = r.trace[7].max_error if steps >= 8 else float("inf")
    return [
        _check("reaches tolerance by m <= 12", r.converged and steps <= 12, f"steps={steps}"),
        _check("type-(7,7) step error <= 1e-9", err8 <= 1e-9, f"error={err8:.3e}"),
    ]


def _checks_log_branch(run: DemoRun) -> list[DemoCheck]:
    r = run.results[0]
    errs = r.trace.max_errors()
    if len(errs) < 15:
        return [_check("trace reaches step 15", False, f"steps={len(errs)}")]
    steps = np.arange(6, 16, dtype=float)
    y = np.log(errs[5:15])
    A = np.vstack([steps, np.ones_like(steps)]).T
    slope = np.linalg.lstsq(A, y, rcond=None)[0][0]
    rho = float(np.exp(-slope))
    return [
        _check(
            "geometric error decay rate in [5, 15] over steps 6..15",
            5.0 <= rho <= 15.0,
            f"rate={rho:.2f}",
        )
    ]


def _checks_tan256(run: DemoRun) -> list[DemoCheck]:
    r = run.results[0]
    mu, nu = r.approximant.type_of()
    return [
        _check(
            "reaches 1e-13 * scale",
            r.converged and r.max_error <= 1e-13 * r.scale,
            f"error={r.max_error:.3e}, bound={1e-13 * r.scale:.3e}",
        ),
        _check("type at most (70,70)", mu <= 70 and nu <= 70, f"type=({mu},{nu})"),
    ]


def _checks_sign(run: DemoRun) -> list[DemoCheck]:
    r = run.results[0]
    steps = len(r.trace)
    n = _flagged_count(r)
    return [
        _check("converges with m <= 60", r.converged and steps <= 60, f"steps={steps}"),
        _check("at most 8 flagged doublets", n <= 8, f"flagged={n}"),
    ]


def _checks_absx(run: DemoRun) -> list[DemoCheck]:
    out = []
    for case, r in zip(run.cases, run.results):
        n = int(case.label[1:])
        count = _real_poles_in(r, -1.0, 1.0)
        if n % 2 == 0:
            out.append(_check(f"n={n}: no pole in [-1,1]", count == 0, f"real poles={count}"))
        else:
            out.append(_check(f"n={n}: at least one real pole in [-1,1]", count >= 1, f"real poles={count}"))
    return out


def _checks_sqrtx(run: DemoRun) -> list[DemoCheck]:
    r = run.results[0]
    steps = len(r.trace)
    count = _real_poles_in(r, 0.0, 1.0)
    return [
        _check("max error <= 1e-8", r.max_error <= 1e-8, f"error={r.max_error:.3e}"),
        _check("no poles in [0,1]", count == 0, f"poles in interval={count}"),
        _check("terminates by m <= 50", r.converged and steps <= 50, f"steps={steps}"),
    ]


# Best type-(n,n) rational error for exp on the negative half line decays
# like 2*H^(-n-1/2) with Halphen's constant H ~= 9.28903; the demo bound
# allows a factor-50 slack for the discrete grid.
_HALPHEN = 9.28903


def _checks_exp(run: DemoRun) -> list[DemoCheck]:
    r = run.results[0]
    errs = r.trace.max_errors()
    out = []
    for n in range(4, 13):
        bound = 50.0 * 2.0 * _HALPHEN ** -(n + 0.5)
        err = errs[n] if len(errs) > n else float("inf")
        out.append(
            _check(
                f"type-({n},{n}) step error within 50x of the ideal rate",
                err <= bound,
                f"error={err:.3e}, bound={bound:.3e}",
            )
        )
    return out


def _absx_cases(seed: int | None, config: FitConfig) -> tuple[DemoCase, ...]:
    Z = point_sets("equispaced-interval", seed, M=20000, a=-1.0, b=1.0)
    F = target_function("abs")(Z)
    samples = SampleSet(Z, F)
    # mmax = n+1 support points force a type-(n,n) approximant; tol=0 makes
    # the greedy loop use all of them.
    return tuple(
        DemoCase(f"n{n}", samples, replace(config, mmax=n + 1)) for n in range(2, 8)
    )


_DEMOS: dict[str, DemoSpec] = {}


def _register(spec: DemoSpec) -> None:
    if spec.name in _DEMOS:
        raise ValueError(f"duplicate demo name {spec.name!r}")
    _DEMOS[spec.name] = spec


_register(
    DemoSpec(
        name="tan-spiral",
        description="tan(pi z/2) on a 1000-point logarithmic spiral winding 7.5 times",
        generator="spiral-1000",
        generator_params={},
        target="tan-pi-half",
        config=FitConfig(),
        checks=_checks_tan_spiral,
    )
)
_register(
    DemoSpec(
        name="gamma",
        description="the gamma function on 100 equispaced points of [-1.5, 1.5]",
        generator="equispaced-interval",
        generator_params={"M": 100, "a": -1.5, "b": 1.5},
        target="gamma",
        config=FitConfig(),
        checks=_checks_gamma,
    )
)
_register(
    DemoSpec(
        name="froissart",
        description="log(2+z^4)/(1-16 z^4) on 1000 roots of unity (spurious-pole showcase)",
        generator="roots-of-unity",
        generator_params={"M": 1000},
        target="log-quartic-ratio",
        config=FitConfig(),
        checks=_checks_froissart,
    )
)
_register(
    DemoSpec(
        name="bessel",
        description="1/J0(z) on 2000 seeded random points of the rectangle [0,10] x [-i,i]",
        generator="rectangle-random",
        generator_params={"M": 2000},
        target="inv-bessel-j0",
        config=FitConfig(),
        checks=_checks_bessel,
    )
)
_register(
    DemoSpec(
        name="zeta",
        description="a 1e5-term zeta partial sum on 100 points of [4-40i, 4+40i]",
        generator="zeta-segment",
        generator_params={},
        target="zeta-partial",
        config=FitConfig(),
        checks=_checks_zeta,
    )
)
_register(
    DemoSpec(
        name="tan-disk",
        description="tan(z) on 128 equispaced unit-circle points",
        generator="unit-circle",
        generator_params={"M": 128},
        target="tan",
        config=FitConfig(),
        checks=_checks_tan_disk,
    )
)
_register(
    DemoSpec(
        name="log-branch",
        description="log(1.1 - z) on 256 roots of unity (branch point just outside)",
        generator="roots-of-unity",
        generator_params={"M": 256},
        target="log-branch",
        config=FitConfig(mmax=16),
        checks=_checks_log_branch,
    )
)
_register(
    DemoSpec(
        name="tan256-circle",
        description="tan(256 z) on 1000 unit-circle points (many poles near the boundary)",
        generator="unit-circle",
        generator_params={"M": 1000},
        target="tan256",
        config=FitConfig(),
        checks=_checks_tan256,
    )
)
_register(
    DemoSpec(
        name="sign-disconnected",
        description="sign(Re z) on a square and a circle boundary (2000 points)",
        generator="square-plus-circle",
        generator_params={},
        target="sign-re",
        config=FitConfig(),
        checks=_checks_sign,
    )
)
_register(
    DemoSpec(
        name="absx-parity",
        description="|x| on 20000 equispaced points, forced types (n,n) for n = 2..7",
        generator="equispaced-interval",
        generator_params={"M": 20000, "a": -1.0, "b": 1.0},
        target="abs",
        config=FitConfig(tol=0.0, mmax=8, cleanup_enabled=False),
        checks=_checks_absx,
        cases_builder=_absx_cases,
    )
)
_register(
    DemoSpec(
        name="sqrtx",
        description="sqrt(x) on 20000 equispaced points of [0, 1]",
        generator="equispaced-interval",
        generator_params={"M": 20000, "a": 0.0, "b": 1.0},
        target="sqrt",
        config=FitConfig(tol=1e-11),
        checks=_checks_sqrtx,
    )
)
_register(
    DemoSpec(
        name="exp-neg-axis",
        description="exp(x) on 4000 log-spaced points of [-1e4, -1e-3]",
        generator="logspace-negative",
        generator_params={"M": 4000},
        target="exp",
        config=FitConfig(tol=1e-12),
        checks=_checks_exp,
    )
)


def demo_names() -> list[str]:
    """Registered demo names in registry order."""
    return list(_DEMOS)


def get_demo(name: str) -> DemoSpec:
    try:
        return _DEMOS[name]
    except KeyError:
        raise UnknownNameError(f"unknown demo {name!r}") from None
