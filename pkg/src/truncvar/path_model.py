"""Sampled step paths and the elementary functionals defined on them.

A path is a finite list of (time, value) samples read as a right-continuous
step function: the value at ``times[i]`` is held on ``[times[i], times[i+1])``
and the last value is held up to the domain end ``times[-1]``. Everything in
this package is exact finite arithmetic on these samples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


class PathError(ValueError):
    """Invalid input to a path operation; ``code`` names the precondition.

    Codes used across the package: ``empty-path``, ``length-mismatch``,
    ``non-finite``, ``times-not-increasing``, ``outside-domain``,
    ``domain-mismatch``, ``bad-level``, ``bad-level-grid``,
    ``stale-decomposition``, ``unknown-generator``, ``bad-generator-spec``.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class SampledPath:
    """Right-continuous step function sampled at strictly increasing times.

    Instances are immutable: both arrays are float64 and marked read-only.
    Construct through :func:`make_path`, which validates the invariants.
    """

    times: np.ndarray
    values: np.ndarray

    @property
    def n(self) -> int:
        return int(self.times.shape[0])

    @property
    def domain(self) -> tuple[float, float]:
        return float(self.times[0]), float(self.times[-1])


@dataclass(frozen=True)
class Level:
    """Strictly positive, finite threshold in the same units as path values."""

    c: float

    def __post_init__(self):
        c = self.c
        if isinstance(c, bool) or not isinstance(c, (int, float, np.floating, np.integer)):
            raise PathError("bad-level", f"level must be a real number, got {c!r}")
        if not np.isfinite(c) or c <= 0:
            raise PathError("bad-level", f"level must be finite and > 0, got {c!r}")


def level_value(c) -> float:
    """Validate a level given as a :class:`Level` or a bare number."""
    if isinstance(c, Level):
        return float(c.c)
    try:
        cf = float(c)
    except (TypeError, ValueError):
        raise PathError("bad-level", f"level must be a real number, got {c!r}") from None
    Level(cf)
    return cf


def make_path(times: Sequence[float], values: Sequence[float]) -> SampledPath:
    """Validate raw samples and build a :class:`SampledPath`.

    Raises :class:`PathError` with code ``empty-path`` (no samples),
    ``length-mismatch``, ``non-finite``, or ``times-not-increasing``.
    """
    t = np.array(times, dtype=np.float64)
    v = np.array(values, dtype=np.float64)
    if t.ndim != 1 or v.ndim != 1:
        raise PathError("length-mismatch", "times and values must be one-dimensional")
    if t.size == 0 and v.size == 0:
        raise PathError("empty-path", "need at least one sample")
    if t.size != v.size:
        raise PathError(
            "length-mismatch", f"times has {t.size} entries, values has {v.size}"
        )
    if t.size == 0:
        raise PathError("empty-path", "need at least one sample")
    if not (np.isfinite(t).all() and np.isfinite(v).all()):
        raise PathError("non-finite", "times and values must all be finite")
    if t.size > 1 and not np.all(t[1:] > t[:-1]):
        raise PathError("times-not-increasing", "times must be strictly increasing")
    return SampledPath(_frozen(t), _frozen(v))


def evaluate(path: SampledPath, t: float) -> float:
    """Value of the step function at time ``t`` (right-continuous semantics)."""
    lo, hi = path.domain
    if not (lo <= t <= hi):
        raise PathError("outside-domain", f"t={t!r} outside domain [{lo}, {hi}]")
    i = int(np.searchsorted(path.times, t, side="right")) - 1
    return float(path.values[i])


def total_variation(path: SampledPath) -> float:
    """Sum of absolute increments over the samples."""
    return float(np.sum(np.abs(np.diff(path.values))))


def osc_norm(path: SampledPath) -> float:
    """Largest difference between any two values: max - min."""
    return float(np.max(path.values) - np.min(path.values))


def _require_same_domain(f: SampledPath, g: SampledPath) -> None:
    if f.domain != g.domain:
        raise PathError(
            "domain-mismatch", f"domains differ: {f.domain} vs {g.domain}"
        )


def _on_union_grid(f: SampledPath, g: SampledPath):
    t = np.union1d(f.times, g.times)
    fv = f.values[np.searchsorted(f.times, t, side="right") - 1]
    gv = g.values[np.searchsorted(g.times, t, side="right") - 1]
    return t, fv, gv


def sup_distance(f: SampledPath, g: SampledPath) -> float:
    """Uniform distance between two paths sharing a domain.

    For step functions the supremum over the continuum is attained on the
    union of the two breakpoint sets, so that is all that gets evaluated.
    """
    _require_same_domain(f, g)
    _, fv, gv = _on_union_grid(f, g)
    return float(np.max(np.abs(fv - gv)))


def negate(path: SampledPath) -> SampledPath:
    """Pointwise negation; shares the time grid."""
    return SampledPath(path.times, _frozen(-path.values))


def add_constant(path: SampledPath, alpha: float) -> SampledPath:
    """Shift all values by ``alpha``; shares the time grid."""
    a = float(alpha)
    if not np.isfinite(a):
        raise PathError("non-finite", f"shift must be finite, got {alpha!r}")
    return SampledPath(path.times, _frozen(path.values + a))


def combine(
    f: SampledPath, g: SampledPath, weights: tuple[float, float] = (1.0, 1.0)
) -> SampledPath:
    """Weighted pointwise sum ``weights[0]*f + weights[1]*g`` on the union grid.

    Both operands are resampled on the union of their breakpoints first, so
    the result is exact under step semantics. Requires identical domains.
    """
    _require_same_domain(f, g)
    wf, wg = float(weights[0]), float(weights[1])
    t, fv, gv = _on_union_grid(f, g)
    return make_path(t, wf * fv + wg * gv)
