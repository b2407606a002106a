"""Subdomain probability maps on a refined grid.

A :class:`DomainField` stores ``J`` normalized channels ``d_j`` sampled at
node coordinates ``i / R`` over the sample extent ``[0, N - 1]``.  Between
nodes the channels are evaluated by piecewise-linear interpolation, which
keeps the cross-channel sum equal to one everywhere.

Subdomain indices are zero-based throughout the package.
"""

from __future__ import annotations

import numpy as np

from .errors import OutOfExtent, ShapeMismatch, ZeroCoverage

SUM_TOL = 1e-12
DEFAULT_TIE_TOL = 1e-9


class DomainField:
    """Normalized subdomain channels over ``[0, N - 1]``.

    Parameters
    ----------
    channels : array_like, shape (J, M)
        Normalized channel values at the ``M = (N - 1) * R + 1`` grid nodes.
        Use :func:`normalize` to build a field from raw indicator maps.
    refinement : int
        Number of grid nodes per unit sample spacing (``R``).
    """

    def __init__(self, channels, refinement: int = 1):
        c = np.array(channels, dtype=float, ndmin=2)
        if c.ndim != 2:
            raise ShapeMismatch(f"channels must be a (J, M) array, got shape {c.shape}")
        refinement = int(refinement)
        if refinement < 1:
            raise ShapeMismatch(f"refinement must be >= 1, got {refinement}")
        n_nodes = c.shape[1]
        if n_nodes < 2 or (n_nodes - 1) % refinement:
            raise ShapeMismatch(
                f"channel length {n_nodes} is not (N - 1) * {refinement} + 1 with N >= 2"
            )
        if not np.all(np.isfinite(c)) or c.min() < 0.0 or c.max() > 1.0:
            raise ValueError("normalized channel values must lie in [0, 1]")
        dev = np.abs(c.sum(axis=0) - 1.0).max()
        if dev > SUM_TOL:
            raise ValueError(f"channels do not sum to 1 at every node (max deviation {dev:.3g})")
        c.setflags(write=False)
        self._channels = c
        self._refinement = refinement

    @property
    def channels(self) -> np.ndarray:
        return self._channels

    @property
    def num_subdomains(self) -> int:
        return self._channels.shape[0]

    @property
    def refinement(self) -> int:
        return self._refinement

    @property
    def num_samples(self) -> int:
        return (self._channels.shape[1] - 1) // self._refinement + 1

    @property
    def extent(self) -> tuple[float, float]:
        return 0.0, float(self.num_samples - 1)

    @property
    def nodes(self) -> np.ndarray:
        """Node coordinates ``i / R`` in sample-index units."""
        return np.arange(self._channels.shape[1]) / self._refinement

    def __repr__(self):
        return (
            f"DomainField(J={self.num_subdomains}, N={self.num_samples}, "
            f"R={self.refinement})"
        )

    def check_extent(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        hi = self.num_samples - 1
        bad = ~((x >= 0.0) & (x <= hi))
        if np.any(bad):
            first = x[bad].ravel()[0]
            raise OutOfExtent(f"coordinate {first!r} outside extent [0, {hi}]")
        return x

    def values(self, x) -> np.ndarray:
        """All channels at coordinates ``x``; returns shape ``(J,) + x.shape``."""
        x = self.check_extent(x)
        u = x * self._refinement
        # snap to nodes lost by a few ulps in i/R * R
        r = np.rint(u)
        u = np.where(np.abs(u - r) <= 8 * np.spacing(np.maximum(np.abs(u), 1.0)), r, u)
        i = np.minimum(np.floor(u).astype(np.intp), self._channels.shape[1] - 2)
        t = u - i
        c = self._channels
        return c[:, i] * (1.0 - t) + c[:, i + 1] * t

    def eval(self, j: int, x):
        """Channel ``j`` at coordinate(s) ``x``."""
        if not 0 <= j < self.num_subdomains:
            raise IndexError(f"subdomain index {j} out of range for J={self.num_subdomains}")
        v = self.values(x)[j]
        return float(v) if v.ndim == 0 else v

    def maximal_set(self, x: float, tie_tol: float = DEFAULT_TIE_TOL) -> frozenset[int]:
        """Indices of maximal association at ``x``, within ``tie_tol``."""
        d = self.values(float(x))
        return frozenset(np.flatnonzero(d >= d.max() - tie_tol).tolist())

    def minimal_set(self, x: float, tie_tol: float = DEFAULT_TIE_TOL) -> frozenset[int]:
        """Indices of minimal association at ``x``, within ``tie_tol``."""
        d = self.values(float(x))
        return frozenset(np.flatnonzero(d <= d.min() + tie_tol).tolist())


def normalize(raw_channels, refinement: int = 1) -> DomainField:
    """Divide raw indicator maps by their cross-channel sum at every node."""
    try:
        raw = np.array([np.asarray(ch, dtype=float).ravel() for ch in raw_channels])
    except ValueError as exc:
        raise ShapeMismatch(f"raw channels have differing lengths: {exc}") from None
    if raw.ndim != 2 or raw.shape[0] == 0:
        raise ShapeMismatch("expected at least one channel of equal length")
    if raw.shape[1] < 2:
        raise ShapeMismatch("channels need at least two nodes")
    if not np.all(np.isfinite(raw)) or raw.min() < 0.0:
        raise ValueError("raw channel values must be finite and non-negative")
    total = raw.sum(axis=0)
    empty = np.flatnonzero(total <= 0.0)
    if empty.size:
        raise ZeroCoverage(
            f"{empty.size} node(s) belong to no subdomain, first at node {empty[0]}"
        )
    return DomainField(np.clip(raw / total, 0.0, 1.0), refinement)


def homogeneous(num_samples: int, refinement: int = 1) -> DomainField:
    """Single-subdomain field, ``d_1 = 1`` everywhere."""
    return DomainField(np.ones((1, (num_samples - 1) * refinement + 1)), refinement)
