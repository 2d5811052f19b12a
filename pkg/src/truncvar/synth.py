"""Deterministic path generators for tests and benchmarks.

All randomness comes from SplitMix64 driven in counter mode, a fixed,
published algorithm: output i is obtained by mixing ``seed + (i+1)*GAMMA``
with the standard two xor-multiply rounds. Identical specs therefore
reproduce byte-identical paths on any platform, and any language with
64-bit integers can replay the streams.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .path_model import PathError, SampledPath, make_path

KINDS = ("random-walk", "jump-mixture", "ramp", "near-threshold-oscillator")

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def splitmix64(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Outputs ``start .. start+count-1`` of the SplitMix64 stream for ``seed``."""
    if count < 0 or start < 0:
        raise PathError("bad-generator-spec", "count and start must be >= 0")
    counters = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed % (1 << 64)) + counters * _GAMMA
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def uniform_stream(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Deterministic uniforms in [0, 1) from the top 53 bits of the stream."""
    bits = splitmix64(seed, count, start) >> np.uint64(11)
    return bits.astype(np.float64) * (2.0 ** -53)


@dataclass(frozen=True)
class GeneratorSpec:
    """Full description of one synthetic path; equal specs give equal paths.

    ``extra`` carries kind-specific knobs:
      jump-mixture: ``jump_prob`` (default 0.05), ``jump_scale`` (default 10.0)
      near-threshold-oscillator: ``target_level`` (default 1.0),
        ``amplitude_ratio`` (default 0.999); the square wave swings by
        ``amplitude_ratio * target_level``, so ratios below 1 stay invisible
        at the target level and ratios above 1 are seen at every swing.
        ``scale`` is ignored for this kind.
    """

    kind: str
    length: int
    seed: int = 0
    scale: float = 1.0
    extra: Mapping[str, float] = field(default_factory=dict)


_EXTRA_KEYS = {
    "random-walk": frozenset(),
    "ramp": frozenset(),
    "jump-mixture": frozenset({"jump_prob", "jump_scale"}),
    "near-threshold-oscillator": frozenset({"target_level", "amplitude_ratio"}),
}


def _check_spec(spec: GeneratorSpec) -> None:
    if spec.kind not in KINDS:
        raise PathError("unknown-generator", f"unknown generator kind {spec.kind!r}")
    if int(spec.length) < 1:
        raise PathError("bad-generator-spec", "length must be >= 1")
    if not np.isfinite(spec.scale) or spec.scale <= 0:
        raise PathError("bad-generator-spec", "scale must be finite and > 0")
    if int(spec.seed) < 0:
        raise PathError("bad-generator-spec", "seed must be a nonnegative integer")
    unknown = set(spec.extra) - _EXTRA_KEYS[spec.kind]
    if unknown:
        raise PathError(
            "bad-generator-spec",
            f"unknown parameters for {spec.kind}: {sorted(unknown)}",
        )


def generate(spec: GeneratorSpec) -> SampledPath:
    """Build the path described by ``spec``; times are 0 .. length-1."""
    _check_spec(spec)
    n = int(spec.length)
    seed = int(spec.seed)
    scale = float(spec.scale)
    times = np.arange(n, dtype=np.float64)

    if spec.kind == "ramp":
        values = scale * times
    elif spec.kind == "random-walk":
        steps = scale * (2.0 * uniform_stream(seed, n - 1) - 1.0)
        values = np.concatenate([[0.0], np.cumsum(steps)])
    elif spec.kind == "jump-mixture":
        p = float(spec.extra.get("jump_prob", 0.05))
        jump_scale = float(spec.extra.get("jump_scale", 10.0))
        if not (0.0 < p <= 1.0):
            raise PathError("bad-generator-spec", "jump_prob must be in (0, 1]")
        if not np.isfinite(jump_scale) or jump_scale <= 0:
            raise PathError("bad-generator-spec", "jump_scale must be > 0")
        u_step = uniform_stream(seed, n - 1, start=0)
        u_jump = uniform_stream(seed, n - 1, start=n)
        u_mag = uniform_stream(seed, n - 1, start=2 * n)
        steps = 0.1 * scale * (2.0 * u_step - 1.0)
        steps = steps + np.where(
            u_jump < p, jump_scale * scale * (2.0 * u_mag - 1.0), 0.0
        )
        values = np.concatenate([[0.0], np.cumsum(steps)])
    else:  # near-threshold-oscillator
        target = float(spec.extra.get("target_level", 1.0))
        ratio = float(spec.extra.get("amplitude_ratio", 0.999))
        if not np.isfinite(target) or target <= 0:
            raise PathError("bad-generator-spec", "target_level must be > 0")
        if not np.isfinite(ratio) or ratio <= 0:
            raise PathError("bad-generator-spec", "amplitude_ratio must be > 0")
        amp = ratio * target
        values = np.where(np.arange(n) % 2 == 1, amp, 0.0)

    return make_path(times, values)
