"""Domain similarity metrics for shift-variant linear kernels.

Every sample ``k`` gets a local metric ``xi_k(x)`` that scores how closely
the domain at ``k + x`` resembles the domain at ``k``.  Normalizing the two
metrics that straddle a point gives the similarity function ``rho``; the
difference of the normalized pair is the discriminant ``D``.

Public functions accept scalars or arrays and follow the offset convention
(``k`` plus an offset ``x``).  The ``*_at`` helpers work on absolute
positions and are what the interpolation code builds on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .domain import DEFAULT_TIE_TOL, DomainField
from .errors import DegenerateNeighborhood

WEIGHT_MODES = ("adaptive", "uniform")


@dataclass(frozen=True)
class KernelConfig:
    """Scalar knobs of the domain-informed kernel.

    ``weight_mode="uniform"`` fixes the weight factor to 1 (minimal
    adaptation).  ``zero_tol``, ``flat_radius`` and ``flat_samples`` control
    the test that decides whether the discriminant vanishes identically
    around a point; ``denom_tol`` guards the pairwise normalization.
    """

    gamma: float = 20.0
    support: float = 1.0
    weight_mode: str = "adaptive"
    tie_tol: float = DEFAULT_TIE_TOL
    zero_tol: float = 1e-9
    flat_radius: float = 0.25
    flat_samples: int = 9
    denom_tol: float = 1e-12

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError(f"gamma must be > 0, got {self.gamma}")
        if self.support != 1.0:
            raise ValueError("only the linear case (support = 1) is implemented")
        if self.weight_mode not in WEIGHT_MODES:
            raise ValueError(f"weight_mode must be one of {WEIGHT_MODES}, got {self.weight_mode!r}")
        if min(self.tie_tol, self.zero_tol) < 0:
            raise ValueError("tolerances must be non-negative")
        if not 0 < self.flat_radius < 1:
            raise ValueError("flat_radius must lie in (0, 1)")
        if self.flat_samples < 3:
            raise ValueError("flat_samples must be >= 3")
        if not self.denom_tol > 0:
            raise ValueError("denom_tol must be > 0")


def logistic(n, gamma: float):
    """``1 / (1 + exp(-gamma * n))``, evaluated without overflow."""
    v = np.exp(-np.logaddexp(0.0, -gamma * np.asarray(n, dtype=float)))
    return float(v) if v.ndim == 0 else v


def _scalar(v):
    v = np.asarray(v)
    return v.item() if v.ndim == 0 else v


# -- position-based helpers ------------------------------------------------

def weight_at(field: DomainField, k, pos, mode: str = "adaptive"):
    k = np.asarray(k, dtype=float)
    pos = np.asarray(pos, dtype=float)
    if mode == "uniform":
        field.check_extent(k)
        field.check_extent(pos)
        return np.ones(np.broadcast(k, pos).shape)
    drift = np.abs(field.values(pos) - field.values(k)).mean(axis=0)
    return np.clip(1.0 - drift, 0.0, 1.0)


def xi_at(field: DomainField, k, pos, cfg: KernelConfig):
    """Metric of sample ``k`` evaluated at absolute position ``pos``."""
    k, pos = np.broadcast_arrays(np.asarray(k), np.asarray(pos, dtype=float))
    kf = k.astype(float)
    d_k = field.values(kf)
    d_p = field.values(pos)
    top = d_k.max(axis=0)
    n_top = (d_k >= top - cfg.tie_tol).sum(axis=0)
    h = np.argmax(d_k, axis=0)
    # tied maximum at k: use the least associated subdomain at k + x,
    # smallest index among the tolerance-band members
    low = d_p.min(axis=0)
    least = np.argmax(d_p <= low + cfg.tie_tol, axis=0)
    chosen = np.where(n_top == 1, h, least)
    d_sel = np.take_along_axis(d_p, chosen[None, ...], axis=0)[0]
    w = weight_at(field, kf, pos, cfg.weight_mode)
    out = w * logistic(d_sel - 0.5, cfg.gamma)
    return np.where(np.abs(pos - kf) < cfg.support, out, 0.0)


def cell_of(field: DomainField, pos) -> np.ndarray:
    """Left sample index of the unit cell containing ``pos``."""
    pos = np.asarray(pos, dtype=float)
    return np.clip(np.floor(pos).astype(np.intp), 0, field.num_samples - 2)


def pair_at(field: DomainField, pos, cfg: KernelConfig):
    """Normalized metrics of the two samples bounding each position's cell.

    Returns ``(a, rho_left, rho_right, degenerate)`` where ``a`` is the left
    sample index.  At an integer position the far sample lies at offset 1
    and contributes nothing, so the coincident neighbor is counted once.
    Degenerate entries carry NaN.
    """
    pos = field.check_extent(pos)
    a = cell_of(field, pos)
    xl = xi_at(field, a, pos, cfg)
    xr = xi_at(field, a + 1, pos, cfg)
    denom = xl + xr
    degenerate = ~(denom > cfg.denom_tol)
    with np.errstate(invalid="ignore", divide="ignore"):
        rl = np.where(degenerate, np.nan, xl / denom)
        rr = np.where(degenerate, np.nan, xr / denom)
    return a, rl, rr, degenerate


def discriminant_at(field: DomainField, pos, cfg: KernelConfig):
    pos = np.asarray(pos, dtype=float)
    _, rl, rr, _ = pair_at(field, pos, cfg)
    return np.where(pos == np.floor(pos), 0.0, rl - rr)


def flat_zero_at(field: DomainField, pos, cfg: KernelConfig):
    """Whether ``D`` vanishes on a window around each position.

    For a non-integer position the window is clipped to its unit cell,
    since the kernel inside a cell only sees that cell's two samples.
    The position itself is always probed.
    """
    pos = field.check_extent(pos)
    hi = field.num_samples - 1
    a = cell_of(field, pos).astype(float)
    lo_w = np.maximum(pos - cfg.flat_radius, 0.0)
    hi_w = np.minimum(pos + cfg.flat_radius, hi)
    interior = pos != np.floor(pos)
    lo_w = np.where(interior, np.maximum(lo_w, a), lo_w)
    hi_w = np.where(interior, np.minimum(hi_w, a + 1.0), hi_w)
    t = np.linspace(0.0, 1.0, cfg.flat_samples)
    probes = lo_w[..., None] + (hi_w - lo_w)[..., None] * t
    probes = np.concatenate([probes, pos[..., None]], axis=-1)
    probes = np.clip(probes, 0.0, hi)
    d = discriminant_at(field, probes, cfg)
    # NaN from a degenerate probe compares False: not flat
    return np.all(np.abs(d) <= cfg.zero_tol, axis=-1)


# -- offset-convention API ------------------------------------------------

def weight(field: DomainField, k, x, mode: str = "adaptive"):
    """Weight factor ``1 - mean_j |d_j(k + x) - d_j(k)|``, or 1 when uniform."""
    k = np.asarray(k)
    return _scalar(weight_at(field, k, k + np.asarray(x, dtype=float), mode))


def xi(field: DomainField, k, x, cfg: KernelConfig = KernelConfig()):
    """Local similarity metric of sample ``k`` at offset ``x``."""
    k = np.asarray(k)
    x = np.asarray(x, dtype=float)
    pos = k + x
    outside = np.abs(x) >= cfg.support
    # zero outside the support, even where k + x leaves the extent
    safe = np.where(outside, k.astype(float), pos)
    return _scalar(np.where(outside, 0.0, xi_at(field, k, safe, cfg)))


def rho(field: DomainField, x, k, cfg: KernelConfig = KernelConfig()):
    """Similarity of position ``x`` to a straddling sample ``k``."""
    x = np.asarray(x, dtype=float)
    k = np.asarray(k)
    if np.any(x == np.floor(x)):
        raise ValueError("rho is defined for non-integer positions only")
    if np.any((k != np.floor(x)) & (k != np.ceil(x))):
        raise ValueError("k must be floor(x) or ceil(x)")
    a, rl, rr, degenerate = pair_at(field, x, cfg)
    if np.any(degenerate):
        raise DegenerateNeighborhood(
            f"both metrics vanish at x={x[degenerate].ravel()[0]!r}"
        )
    return _scalar(np.where(k == a, rl, rr))


def xi_tilde(field: DomainField, k, x, cfg: KernelConfig = KernelConfig()):
    """Metric of sample ``k`` normalized over the pair bounding ``k + x``."""
    k = np.asarray(k)
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) >= 1.0):
        raise ValueError("xi_tilde is defined for |x| < 1")
    pos = k + x
    a, rl, rr, degenerate = pair_at(field, pos, cfg)
    if np.any(degenerate):
        raise DegenerateNeighborhood(
            f"both metrics vanish at x_k={pos[degenerate].ravel()[0]!r}"
        )
    return _scalar(np.where(k == a, rl, rr))


def discriminant(field: DomainField, x, cfg: KernelConfig = KernelConfig()):
    """``D(x)``: difference of the normalized floor and ceil metrics."""
    x = np.asarray(x, dtype=float)
    _, _, _, degenerate = pair_at(field, x, cfg)
    interior = x != np.floor(x)
    if np.any(degenerate & interior):
        raise DegenerateNeighborhood(
            f"both metrics vanish at x={x[degenerate & interior].ravel()[0]!r}"
        )
    return _scalar(discriminant_at(field, x, cfg))


def is_flat_zero(field: DomainField, x, cfg: KernelConfig = KernelConfig()):
    """True where ``|D| <= zero_tol`` across the probe window around ``x``."""
    return _scalar(flat_zero_at(field, x, cfg))
