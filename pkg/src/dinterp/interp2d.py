"""Separable bilinear interpolation with 2D domain maps.

The 2D interpolant is built from two passes of the 1D engine.  With
``pass_order="x_then_y"`` every sample row is first interpolated along x
using the high-resolution domain row through it; every output column is then
interpolated along y using the high-resolution domain column at that x.
"""

from __future__ import annotations

import numpy as np

from .core import interpolate, refined_positions
from .domain import SUM_TOL, DomainField
from .errors import FactorIncompatible, OutOfExtent, ShapeMismatch, ZeroCoverage
from .similarity import KernelConfig

PASS_ORDERS = ("x_then_y", "y_then_x")


class DomainField2D:
    """Normalized channels of shape ``(J, (Nr - 1) * R + 1, (Nc - 1) * R + 1)``."""

    def __init__(self, channels, refinement: int = 1):
        c = np.array(channels, dtype=float)
        if c.ndim == 2:
            c = c[None]
        if c.ndim != 3:
            raise ShapeMismatch(f"channels must be a (J, H, W) array, got shape {c.shape}")
        refinement = int(refinement)
        if refinement < 1:
            raise ShapeMismatch("refinement must be >= 1")
        for size in c.shape[1:]:
            if size < 2 or (size - 1) % refinement:
                raise ShapeMismatch(
                    f"map size {c.shape[1:]} is not ((N - 1) * {refinement} + 1) per axis"
                )
        if not np.all(np.isfinite(c)) or c.min() < 0.0 or c.max() > 1.0:
            raise ValueError("normalized channel values must lie in [0, 1]")
        dev = np.abs(c.sum(axis=0) - 1.0).max()
        if dev > SUM_TOL:
            raise ValueError(f"channels do not sum to 1 at every node (max deviation {dev:.3g})")
        c.setflags(write=False)
        self.channels = c
        self.refinement = refinement

    @property
    def num_subdomains(self) -> int:
        return self.channels.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        """Sample grid shape ``(Nr, Nc)`` covered by the maps."""
        r = self.refinement
        return (self.channels.shape[1] - 1) // r + 1, (self.channels.shape[2] - 1) // r + 1

    def __repr__(self):
        return f"DomainField2D(J={self.num_subdomains}, shape={self.shape}, R={self.refinement})"


def normalize2d(raw_channels, refinement: int = 1) -> DomainField2D:
    raw = np.asarray(raw_channels, dtype=float)
    if raw.ndim == 2:
        raw = raw[None]
    if raw.ndim != 3:
        raise ShapeMismatch(f"expected J maps of equal shape, got array of shape {raw.shape}")
    if not np.all(np.isfinite(raw)) or raw.min() < 0.0:
        raise ValueError("raw channel values must be finite and non-negative")
    total = raw.sum(axis=0)
    empty = np.argwhere(total <= 0.0)
    if empty.size:
        raise ZeroCoverage(f"{len(empty)} node(s) belong to no subdomain, first at {tuple(empty[0])}")
    return DomainField2D(np.clip(raw / total, 0.0, 1.0), refinement)


def line_field(field2d: DomainField2D, axis: str, index: int) -> DomainField:
    """1D field along one high-resolution row or column of the maps."""
    c = field2d.channels
    if axis == "row":
        size = c.shape[1]
    elif axis == "column":
        size = c.shape[2]
    else:
        raise ValueError(f"axis must be 'row' or 'column', got {axis!r}")
    if not 0 <= index < size:
        raise OutOfExtent(f"{axis} index {index} outside [0, {size - 1}]")
    line = c[:, index, :] if axis == "row" else c[:, :, index]
    return DomainField(line, field2d.refinement)


def _check(samples, field2d, factor):
    s = np.asarray(samples, dtype=float)
    if s.ndim != 2 or min(s.shape) < 2:
        raise ShapeMismatch(f"samples must be a matrix with at least 2 rows and columns, got {s.shape}")
    if not np.all(np.isfinite(s)):
        raise ValueError("samples must be finite")
    if field2d.shape != s.shape:
        raise ShapeMismatch(f"domain maps cover a {field2d.shape} grid, samples are {s.shape}")
    if factor < 1 or field2d.refinement % factor:
        raise FactorIncompatible(
            f"output factor {factor} does not divide domain refinement {field2d.refinement}"
        )
    return s


def dibli(samples, field2d: DomainField2D, factor: int, cfg: KernelConfig = KernelConfig(),
          method: str = "dibli", pass_order: str = "x_then_y") -> np.ndarray:
    """Upsample a sample grid by ``factor`` per axis.

    ``method="sbli"`` gives standard bilinear interpolation.  The output has
    shape ``((Nr - 1) * factor + 1, (Nc - 1) * factor + 1)`` and reproduces
    the samples at every ``factor``-th pixel.
    """
    s = _check(samples, field2d, int(factor))
    if method not in ("sbli", "dibli"):
        raise ValueError(f"method must be 'sbli' or 'dibli', got {method!r}")
    if pass_order not in PASS_ORDERS:
        raise ValueError(f"pass_order must be one of {PASS_ORDERS}, got {pass_order!r}")
    one_d = "sli" if method == "sbli" else "dili"
    if pass_order == "y_then_x":
        # transpose and reuse the x-first path
        flipped = DomainField2D(np.swapaxes(field2d.channels, 1, 2), field2d.refinement)
        return dibli(s.T, flipped, factor, cfg, method, "x_then_y").T
    r = field2d.refinement
    n_rows, n_cols = s.shape
    xs = refined_positions(n_cols, factor)
    ys = refined_positions(n_rows, factor)
    step = r // factor

    inter = np.empty((n_rows, xs.size))
    for i in range(n_rows):
        f = line_field(field2d, "row", i * r)
        inter[i] = interpolate(s[i], f, xs, cfg, one_d).values

    out = np.empty((ys.size, xs.size))
    for j in range(xs.size):
        f = line_field(field2d, "column", j * step)
        out[:, j] = interpolate(inter[:, j], f, ys, cfg, one_d).values
    return out
