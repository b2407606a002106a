"""Deterministic synthetic scenes for demos, tests and the CLI.

``fig1`` is a two-subdomain line of 15 samples with three kinds of
transition: a fast one inside the cell ``[2, 3]``, a slow linear ramp from
sample 5 to sample 8, and a transition centred exactly on sample 12.
``fig2_like`` is a small image with three tissue-like channels (a wavy
ribbon between two bulk regions) at three times the sample resolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import io
from .domain import DomainField, normalize
from .errors import IoFailure
from .interp2d import DomainField2D, normalize2d

KINDS = ("fig1", "homogeneous", "fig2_like")

FIG1_PARAMS = {
    "num_samples": 15,
    "refinement": 100,
    "fast_center": 2.5,
    "fast_width": 0.2,
    "slow_center": 6.5,
    "slow_width": 3.0,
    "symmetric_center": 12.0,
    "symmetric_width": 0.8,
    "truth_low": 1.0,
    "truth_high": 3.0,
    "ripple_amplitude": 0.15,
    "ripple_frequency": 0.7,
    "noise_std": 0.02,
}


@dataclass(frozen=True)
class Fixture1D:
    samples: np.ndarray
    field: DomainField
    params: dict

    def truth(self, x):
        """Underlying two-level signal, for plotting only."""
        p = self.params
        d2 = 1.0 - _fig1_profile(np.asarray(x, dtype=float), p)
        ripple = p["ripple_amplitude"] * np.sin(p["ripple_frequency"] * np.asarray(x))
        return p["truth_low"] + (p["truth_high"] - p["truth_low"]) * d2 + ripple


@dataclass(frozen=True)
class Fixture2D:
    samples: np.ndarray
    field: DomainField2D
    params: dict


def _fig1_profile(x, p):
    """Association with subdomain 1 as a piecewise-linear function of x."""
    def ramp(center, width):
        return center - width / 2, center + width / 2

    f0, f1 = ramp(p["fast_center"], p["fast_width"])
    s0, s1 = ramp(p["slow_center"], p["slow_width"])
    c0, c1 = ramp(p["symmetric_center"], p["symmetric_width"])
    xp = [0.0, f0, f1, s0, s1, c0, c1, p["num_samples"] - 1.0]
    fp = [1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0]
    return np.interp(x, xp, fp)


def _fig1_nodes(p):
    # breakpoints on the integer node grid keep the ramps exact
    r = p["refinement"]
    scaled = {k: v * r if k.endswith(("center", "width")) else v for k, v in p.items()}
    scaled["num_samples"] = (p["num_samples"] - 1) * r + 1
    return _fig1_profile(np.arange(scaled["num_samples"], dtype=float), scaled)


def _fig1_samples(p, seed):
    rng = np.random.default_rng(seed)
    k = np.arange(p["num_samples"], dtype=float)
    d2 = 1.0 - _fig1_nodes(p)[:: p["refinement"]]
    truth = (p["truth_low"] + (p["truth_high"] - p["truth_low"]) * d2
             + p["ripple_amplitude"] * np.sin(p["ripple_frequency"] * k))
    return truth + rng.normal(0.0, p["noise_std"], k.size)


def fig1_fixture(seed: int = 0, **overrides) -> Fixture1D:
    """Two-subdomain line scene; keyword overrides replace entries of FIG1_PARAMS."""
    p = {**FIG1_PARAMS, **overrides}
    d1 = _fig1_nodes(p)
    field = normalize([d1, 1.0 - d1], p["refinement"])
    return Fixture1D(_fig1_samples(p, seed), field, {"kind": "fig1", "seed": seed, **p})


def homogeneous_fixture(seed: int = 0) -> Fixture1D:
    """The fig1 samples over a single subdomain."""
    p = dict(FIG1_PARAMS)
    m = (p["num_samples"] - 1) * p["refinement"] + 1
    field = DomainField(np.ones((1, m)), p["refinement"])
    params = {"kind": "homogeneous", "seed": seed, "num_samples": p["num_samples"],
              "refinement": p["refinement"], "noise_std": p["noise_std"]}
    return Fixture1D(_fig1_samples(p, seed), field, params)


def fig2_like_fixture(seed: int = 0, shape=(16, 16), refinement: int = 3) -> Fixture2D:
    """Three-channel ribbon scene with functional-style samples."""
    rng = np.random.default_rng(seed)
    n_rows, n_cols = shape
    r = refinement
    y = np.arange((n_rows - 1) * r + 1) / r
    x = np.arange((n_cols - 1) * r + 1) / r
    yy, xx = np.meshgrid(y, x, indexing="ij")
    phase = float(rng.uniform(0.0, 2.0 * np.pi))
    params = {
        "kind": "fig2_like", "seed": seed, "rows": n_rows, "cols": n_cols,
        "refinement": r, "num_subdomains": 3, "ribbon_center": 0.45 * (n_rows - 1),
        "ribbon_amplitude": 0.15 * (n_rows - 1), "ribbon_period": 0.6 * (n_cols - 1),
        "ribbon_half_width": 1.2, "edge_softness": 0.2, "phase": phase,
        "level_gm": 1.0, "level_wm": 0.4, "level_csf": 0.1, "noise_std": 0.03,
    }
    curve = params["ribbon_center"] + params["ribbon_amplitude"] * np.sin(
        2.0 * np.pi * xx / params["ribbon_period"] + phase)
    t = yy - curve
    hw, tau = params["ribbon_half_width"], params["edge_softness"]

    def sig(z):
        return 1.0 / (1.0 + np.exp(-z))

    csf = sig(-(t + hw) / tau)
    wm = sig((t - hw) / tau)
    gm = sig((t + hw) / tau) * sig(-(t - hw) / tau)
    field = normalize2d([gm, wm, csf], r)
    gm_n, wm_n, csf_n = (c[::r, ::r] for c in field.channels)
    samples = (params["level_gm"] * gm_n + params["level_wm"] * wm_n
               + params["level_csf"] * csf_n
               + rng.normal(0.0, params["noise_std"], gm_n.shape))
    return Fixture2D(samples, field, params)


def make_fixture(kind: str, seed: int = 0):
    if kind == "fig1":
        return fig1_fixture(seed)
    if kind == "homogeneous":
        return homogeneous_fixture(seed)
    if kind == "fig2_like":
        return fig2_like_fixture(seed)
    raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def generate_fixture(kind: str, seed: int = 0, out_dir=".") -> Path:
    """Write a fixture's samples, one map per subdomain and a manifest.

    Returns the manifest path.
    """
    fx = make_fixture(kind, seed)
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoFailure(f"{out}: cannot create fixture directory: {exc}") from None
    manifest = {k: v for k, v in fx.params.items()}
    if isinstance(fx, Fixture1D):
        io.write_samples_csv(out / "samples.csv", fx.samples)
        names = []
        for j, ch in enumerate(fx.field.channels, start=1):
            name = f"domain_{j}.csv"
            io.write_domain_csv(out / name, ch, fx.field.refinement)
            names.append(name)
        manifest.update(samples="samples.csv", num_subdomains=fx.field.num_subdomains)
    else:
        io.write_matrix(out / "samples.txt", fx.samples)
        names = []
        for j, ch in enumerate(fx.field.channels, start=1):
            name = f"domain_{j}.txt"
            io.write_matrix(out / name, ch)
            names.append(name)
        manifest.update(samples="samples.txt")
    manifest["domains"] = ",".join(names)
    if kind == "fig1":
        p = fx.params
        manifest["transition_centers"] = ",".join(
            io.fmt(p[k]) for k in ("fast_center", "slow_center", "symmetric_center"))
        manifest["transition_widths"] = ",".join(
            io.fmt(p[k]) for k in ("fast_width", "slow_width", "symmetric_width"))
    path = out / "manifest.txt"
    io.write_manifest(path, manifest)
    return path
