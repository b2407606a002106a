"""Standard and domain-informed linear interpolation in 1D."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .domain import DomainField
from .errors import OutOfExtent, ShapeMismatch
from .similarity import KernelConfig, cell_of, flat_zero_at, pair_at

METHODS = ("sli", "dili")


def hat(x):
    """Linear B-spline ``max(1 - |x|, 0)``."""
    v = np.maximum(1.0 - np.abs(np.asarray(x, dtype=float)), 0.0)
    return float(v) if v.ndim == 0 else v


@dataclass(frozen=True)
class SampleSeries:
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        if v.ndim != 1 or v.size < 2:
            raise ShapeMismatch(f"need a 1D sequence of at least 2 samples, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("samples must be finite")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return self.values.size


@dataclass(frozen=True)
class InterpolationResult:
    positions: np.ndarray
    values: np.ndarray
    method: str
    # (N, len(positions)) kernel of each sample at each position
    traces: np.ndarray | None = None


def refined_positions(num_samples: int, factor: int) -> np.ndarray:
    """Uniform grid with ``factor`` steps per sample spacing, integers included."""
    if factor < 1:
        raise ValueError("factor must be >= 1")
    return np.arange((num_samples - 1) * factor + 1) / factor


def cell_kernels(field: DomainField, pos, cfg: KernelConfig, method: str = "dili"):
    """Kernels of the two samples bounding each position.

    Returns ``(a, left, right)``: ``left`` is the kernel of sample ``a`` at
    offset ``pos - a`` and ``right`` that of sample ``a + 1``.  The
    domain-informed kernel falls back to the hat wherever the discriminant
    is flat zero or the pair normalization is degenerate.
    """
    pos = field.check_extent(pos)
    a = cell_of(field, pos)
    hl = hat(pos - a)
    hr = hat(pos - (a + 1))
    if method == "sli":
        return a, np.asarray(hl), np.asarray(hr)
    if method != "dili":
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    _, rl, rr, degenerate = pair_at(field, pos, cfg)
    use_hat = degenerate | flat_zero_at(field, pos, cfg)
    left = np.where(use_hat, hl, rl)
    right = np.where(use_hat, hr, rr)
    return a, left, right


def kernel(field: DomainField, k, x, cfg: KernelConfig = KernelConfig()):
    """Domain-informed kernel of sample ``k`` at offset ``x``."""
    k = np.asarray(k)
    x = np.asarray(x, dtype=float)
    if np.any((k < 0) | (k > field.num_samples - 1)):
        raise OutOfExtent(f"sample index outside [0, {field.num_samples - 1}]")
    inside = np.abs(x) < 1.0
    pos = np.where(inside, k + x, k.astype(float))
    a, left, right = cell_kernels(field, pos, cfg)
    v = np.where(x == 0, 1.0, np.where(k == a, left, right))
    v = np.where(inside, v, 0.0)
    return v.item() if v.ndim == 0 else v


def kernel_trace(field: DomainField, k: int, positions, cfg: KernelConfig = KernelConfig(),
                 method: str = "dili") -> np.ndarray:
    """Kernel of sample ``k`` at every position (zero outside ``(k-1, k+1)``)."""
    pos = field.check_extent(np.atleast_1d(positions))
    a, left, right = cell_kernels(field, pos, cfg, method)
    return np.where(a == k, left, 0.0) + np.where(a + 1 == k, right, 0.0)


def interpolate(samples, field: DomainField, positions=None, cfg: KernelConfig = KernelConfig(),
                method: str = "dili", traces: bool = False) -> InterpolationResult:
    """Evaluate ``sum_k s[k] phi_k(x - k)`` at the given positions.

    Only the two kernels straddling each position are nonzero.  With
    ``method="sli"`` the kernels are plain hats.  ``positions`` defaults to
    the domain grid of ``field``.
    """
    if not isinstance(samples, SampleSeries):
        samples = SampleSeries(samples)
    n = len(samples)
    if field.num_samples != n:
        raise ShapeMismatch(
            f"domain field covers {field.num_samples} samples, got {n}"
        )
    pos = field.nodes if positions is None else np.atleast_1d(np.asarray(positions, dtype=float))
    a, left, right = cell_kernels(field, pos, cfg, method)
    s = samples.values
    values = s[a] * left + s[a + 1] * right
    tr = None
    if traces:
        tr = np.zeros((n, pos.size))
        cols = np.arange(pos.size)
        tr[a, cols] += left
        tr[a + 1, cols] += right
    return InterpolationResult(pos, values, method.upper(), tr)
