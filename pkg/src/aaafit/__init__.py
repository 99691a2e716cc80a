"""Barycentric rational approximation of sampled functions.

Fit a rational function r(z) = n(z)/d(z) in barycentric form to samples
F = f(Z) on an arbitrary point set, by greedy support-point selection and
least-squares weight solves. Extract poles, zeros and residues; flag and
remove spurious pole-zero pairs; save and reload fitted models; and run a
corpus of demos on classic approximation targets.

Typical use:

    import numpy as np
    import aaafit

    Z = np.exp(2j * np.pi * np.arange(128) / 128)
    samples = aaafit.SampleSet(Z, np.tan(Z))
    result = aaafit.fit(samples)
    result.approximant(0.3 + 0.1j)
    result.pole_locations()
"""

from .barycentric import (
    BarycentricRational,
    DegeneratePoleError,
    PoleInfo,
    evaluate,
    evaluate_many,
    poles,
    residues,
    type_of,
    zeros,
)
from .cleanup import CleanupReport, cleanup_refit, detect_spurious
from .core import (
    DivisionDegeneracyError,
    FitConfig,
    FitResult,
    FitTrace,
    SampleError,
    SampleSet,
    TraceStep,
    cauchy_matrix,
    fit,
    fit_with_options,
    loewner_matrix,
    solve_weights,
)
from .corpus import (
    DemoCase,
    DemoCheck,
    DemoRun,
    DemoSpec,
    DomainError,
    UnknownNameError,
    bessel_j0,
    demo_checks,
    demo_names,
    gamma_fn,
    get_demo,
    point_set_names,
    point_sets,
    run_demo,
    target_function,
    target_names,
    zeta_partial,
)
from .kernels import (
    InvalidInputError,
    ShapeError,
    arrowhead_finite_eigenvalues,
    min_right_singular_vector,
)
from .modelfile import (
    ModelFile,
    ModelFileError,
    UnknownVersionError,
    read_model,
    write_model,
)

__version__ = "0.1.0"

__all__ = [
    "BarycentricRational",
    "CleanupReport",
    "DegeneratePoleError",
    "DemoCase",
    "DemoCheck",
    "DemoRun",
    "DemoSpec",
    "DivisionDegeneracyError",
    "DomainError",
    "FitConfig",
    "FitResult",
    "FitTrace",
    "InvalidInputError",
    "ModelFile",
    "ModelFileError",
    "PoleInfo",
    "SampleError",
    "SampleSet",
    "ShapeError",
    "TraceStep",
    "UnknownNameError",
    "UnknownVersionError",
    "arrowhead_finite_eigenvalues",
    "bessel_j0",
    "cauchy_matrix",
    "cleanup_refit",
    "demo_checks",
    "demo_names",
    "detect_spurious",
    "evaluate",
    "evaluate_many",
    "fit",
    "fit_with_options",
    "gamma_fn",
    "get_demo",
    "loewner_matrix",
    "min_right_singular_vector",
    "point_set_names",
    "point_sets",
    "poles",
    "read_model",
    "residues",
    "run_demo",
    "solve_weights",
    "target_function",
    "target_names",
    "type_of",
    "write_model",
    "zeros",
    "zeta_partial",
]
