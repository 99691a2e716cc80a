"""Reading and writing fitted models as human-readable text.

Format, version 1. The first line is `aaafit-model 1`. After it come
`key value` lines in fixed order (tol, mmax, cleanup_enabled, cleanup_tol,
symmetric, symmetric_scale, converged, scale, max_error), then arrays. An
array starts with a header `name count` (support, values and weights add a
`real` or `complex` dtype tag) followed by exactly `count` rows:

    support/values/weights  re im
    poles                   re im re_residue im_residue spurious(0|1)
    zeros                   re im
    trace                   step index max_error sigma_min cond (- if absent)

A final `cleanup 0|1` line says whether a cleanup block follows (warning,
doublets_before, doublets_after, then flagged and removed arrays). Floats
are written with 17 significant digits, so reading a written file
reproduces every double bit for bit. Booleans are 0/1. Blank lines are
allowed anywhere and ignored.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .barycentric import BarycentricRational, PoleInfo
from .cleanup import CleanupReport
from .core import FitConfig, FitResult, FitTrace, TraceStep

FORMAT_NAME = "aaafit-model"
FORMAT_VERSION = 1


class ModelFileError(ValueError):
    """Raised for malformed model files; the message cites a line number."""


class UnknownVersionError(ModelFileError):
    """Raised when the file declares a version this reader does not know."""


@dataclass(frozen=True)
class ModelFile:
    """A fitted model plus the config and diagnostics that produced it."""

    approximant: BarycentricRational
    config: FitConfig
    converged: bool
    scale: float
    max_error: float
    poles: tuple[PoleInfo, ...]
    zeros: np.ndarray
    trace: FitTrace
    cleanup: CleanupReport | None = None
    version: int = FORMAT_VERSION

    @classmethod
    def from_result(cls, result: FitResult, config: FitConfig) -> "ModelFile":
        return cls(
            approximant=result.approximant,
            config=config,
            converged=result.converged,
            scale=result.scale,
            max_error=result.max_error,
            poles=result.poles,
            zeros=result.zeros,
            trace=result.trace,
            cleanup=result.cleanup,
        )


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _pair(z) -> str:
    z = complex(z)
    return f"{_fmt(z.real)} {_fmt(z.imag)}"


def _dtype_tag(arr: np.ndarray) -> str:
    return "complex" if np.iscomplexobj(arr) else "real"


def write_model(path, model: ModelFile) -> None:
    """Write the model to path in the version-1 text format."""
    cfg = model.config
    r = model.approximant
    lines = [
        f"{FORMAT_NAME} {FORMAT_VERSION}",
        f"tol {_fmt(cfg.tol)}",
        f"mmax {cfg.mmax}",
        f"cleanup_enabled {int(cfg.cleanup_enabled)}",
        f"cleanup_tol {_fmt(cfg.cleanup_tol)}",
        f"symmetric {int(cfg.symmetric)}",
        f"symmetric_scale {cfg.symmetric_scale}",
        f"converged {int(model.converged)}",
        f"scale {_fmt(model.scale)}",
        f"max_error {_fmt(model.max_error)}",
    ]
    for name, arr in (("support", r.support), ("values", r.values), ("weights", r.weights)):
        lines.append(f"{name} {len(arr)} {_dtype_tag(arr)}")
        lines.extend(_pair(v) for v in arr)
    lines.append(f"poles {len(model.poles)}")
    lines.extend(
        f"{_pair(p.location)} {_pair(p.residue)} {int(p.spurious)}" for p in model.poles
    )
    lines.append(f"zeros {len(model.zeros)}")
    lines.extend(_pair(z) for z in model.zeros)
    lines.append(f"trace {len(model.trace)}")
    for s in model.trace:
        cond = "-" if s.cond_cauchy is None else _fmt(s.cond_cauchy)
        lines.append(f"{s.step} {s.index} {_fmt(s.max_error)} {_fmt(s.sigma_min)} {cond}")
    rep = model.cleanup
    lines.append(f"cleanup {int(rep is not None)}")
    if rep is not None:
        lines.append(f"warning {int(rep.warning)}")
        lines.append(f"doublets_before {rep.doublets_before}")
        lines.append(f"doublets_after {rep.doublets_after}")
        lines.append(f"flagged {len(rep.flagged_poles)}")
        lines.extend(f"{_pair(p.location)} {_pair(p.residue)}" for p in rep.flagged_poles)
        lines.append(f"removed {len(rep.removed_support_indices)}")
        lines.extend(str(i) for i in rep.removed_support_indices)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


class _Reader:
    """Cursor over the nonblank lines of a model file."""

    def __init__(self, text: str):
        self.rows = [
            (n, line.split())
            for n, line in enumerate(text.splitlines(), start=1)
            if line.strip()
        ]
        self.pos = 0

    def next(self) -> tuple[int, list[str]]:
        if self.pos >= len(self.rows):
            last = self.rows[-1][0] if self.rows else 0
            raise ModelFileError(f"line {last + 1}: unexpected end of file")
        row = self.rows[self.pos]
        self.pos += 1
        return row

    def at_end(self) -> bool:
        return self.pos >= len(self.rows)

    def keyed(self, key: str, want: int) -> tuple[int, list[str]]:
        n, tokens = self.next()
        if tokens[0] != key:
            raise ModelFileError(f"line {n}: expected '{key}', found '{tokens[0]}'")
        if len(tokens) != want + 1:
            raise ModelFileError(f"line {n}: '{key}' needs {want} field(s)")
        return n, tokens[1:]

    def key_float(self, key: str) -> float:
        n, vals = self.keyed(key, 1)
        return _parse_float(n, vals[0])

    def key_int(self, key: str) -> int:
        n, vals = self.keyed(key, 1)
        return _parse_int(n, vals[0])

    def key_bool(self, key: str) -> bool:
        n, vals = self.keyed(key, 1)
        if vals[0] not in ("0", "1"):
            raise ModelFileError(f"line {n}: '{key}' must be 0 or 1")
        return vals[0] == "1"


def _parse_float(lineno: int, token: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise ModelFileError(f"line {lineno}: not a number: '{token}'") from None


def _parse_int(lineno: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ModelFileError(f"line {lineno}: not an integer: '{token}'") from None


def _read_pairs(rd: _Reader, count: int, fields: int) -> list[tuple[int, list[float]]]:
    rows = []
    for _ in range(count):
        n, tokens = rd.next()
        if len(tokens) != fields:
            raise ModelFileError(f"line {n}: expected {fields} fields, found {len(tokens)}")
        rows.append((n, [_parse_float(n, t) for t in tokens]))
    return rows


def _read_tagged_array(rd: _Reader, key: str) -> np.ndarray:
    n, vals = rd.keyed(key, 2)
    count = _parse_int(n, vals[0])
    tag = vals[1]
    if tag not in ("real", "complex"):
        raise ModelFileError(f"line {n}: dtype tag must be 'real' or 'complex'")
    rows = _read_pairs(rd, count, 2)
    arr = np.array([complex(re, im) for _, (re, im) in rows], dtype=complex)
    if tag == "real":
        return arr.real.copy()
    return arr


def read_model(path) -> ModelFile:
    """Read a model file, raising ModelFileError with line numbers."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    rd = _Reader(text)

    n, tokens = rd.next()
    if tokens[0] != FORMAT_NAME or len(tokens) != 2:
        raise ModelFileError(f"line {n}: not a {FORMAT_NAME} file")
    version = _parse_int(n, tokens[1])
    if version != FORMAT_VERSION:
        raise UnknownVersionError(
            f"line {n}: unknown model format version {version} (this reader knows {FORMAT_VERSION})"
        )

    tol = rd.key_float("tol")
    mmax = rd.key_int("mmax")
    cleanup_enabled = rd.key_bool("cleanup_enabled")
    cleanup_tol = rd.key_float("cleanup_tol")
    symmetric = rd.key_bool("symmetric")
    n, vals = rd.keyed("symmetric_scale", 1)
    symmetric_scale = vals[0]
    converged = rd.key_bool("converged")
    scale = rd.key_float("scale")
    max_error = rd.key_float("max_error")
    try:
        config = FitConfig(
            tol=tol,
            mmax=mmax,
            cleanup_enabled=cleanup_enabled,
            cleanup_tol=cleanup_tol,
            symmetric=symmetric,
            symmetric_scale=symmetric_scale,
        )
    except ValueError as exc:
        raise ModelFileError(f"invalid fit configuration: {exc}") from None

    support = _read_tagged_array(rd, "support")
    values = _read_tagged_array(rd, "values")
    weights = _read_tagged_array(rd, "weights")
    if not (len(support) == len(values) == len(weights)):
        raise ModelFileError("support, values and weights must have equal lengths")

    n, vals = rd.keyed("poles", 1)
    pole_rows = _read_pairs(rd, _parse_int(n, vals[0]), 5)
    poles = []
    for lineno, row in pole_rows:
        if row[4] not in (0.0, 1.0):
            raise ModelFileError(f"line {lineno}: spurious flag must be 0 or 1")
        poles.append(PoleInfo(complex(row[0], row[1]), complex(row[2], row[3]), row[4] == 1.0))

    n, vals = rd.keyed("zeros", 1)
    zero_rows = _read_pairs(rd, _parse_int(n, vals[0]), 2)
    zeros = np.array([complex(re, im) for _, (re, im) in zero_rows], dtype=complex)

    n, vals = rd.keyed("trace", 1)
    steps = []
    for _ in range(_parse_int(n, vals[0])):
        lineno, tokens = rd.next()
        if len(tokens) != 5:
            raise ModelFileError(f"line {lineno}: trace rows need 5 fields")
        cond = None if tokens[4] == "-" else _parse_float(lineno, tokens[4])
        steps.append(
            TraceStep(
                step=_parse_int(lineno, tokens[0]),
                index=_parse_int(lineno, tokens[1]),
                max_error=_parse_float(lineno, tokens[2]),
                sigma_min=_parse_float(lineno, tokens[3]),
                cond_cauchy=cond,
            )
        )

    cleanup = None
    if rd.key_bool("cleanup"):
        warning = rd.key_bool("warning")
        before = rd.key_int("doublets_before")
        after = rd.key_int("doublets_after")
        n, vals = rd.keyed("flagged", 1)
        flagged_rows = _read_pairs(rd, _parse_int(n, vals[0]), 4)
        flagged = [
            PoleInfo(complex(r[0], r[1]), complex(r[2], r[3]), spurious=True)
            for _, r in flagged_rows
        ]
        n, vals = rd.keyed("removed", 1)
        removed = []
        for _ in range(_parse_int(n, vals[0])):
            lineno, tokens = rd.next()
            if len(tokens) != 1:
                raise ModelFileError(f"line {lineno}: removed rows hold one index")
            removed.append(_parse_int(lineno, tokens[0]))
        cleanup = CleanupReport(
            flagged_poles=flagged,
            removed_support_indices=removed,
            doublets_before=before,
            doublets_after=after,
            warning=warning,
        )

    if not rd.at_end():
        lineno, _ = rd.next()
        raise ModelFileError(f"line {lineno}: trailing content after model")

    try:
        approximant = BarycentricRational(support, values, weights)
    except ValueError as exc:
        raise ModelFileError(f"invalid approximant data: {exc}") from None

    return ModelFile(
        approximant=approximant,
        config=config,
        converged=converged,
        scale=scale,
        max_error=max_error,
        poles=tuple(poles),
        zeros=zeros,
        trace=FitTrace(tuple(steps)),
        cleanup=cleanup,
        version=version,
    )
