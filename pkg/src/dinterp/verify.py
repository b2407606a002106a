"""Brute-force property checks for the domain-informed interpolant.

Each check evaluates one identity on a uniform probe grid and returns a
:class:`CheckResult` with the worst residual found.  The optional
``perturb`` argument is a test hook: it receives the computed ``(left,
right, x)`` arrays and returns modified ``(left, right)``, so the checks
themselves can be shown to catch seeded violations.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .core import SampleSeries, cell_kernels
from .domain import DomainField
from .similarity import KernelConfig, pair_at

PARTITION_TOL = 1e-12
IDENTITY_TOL = 1e-12
FIT_TOL = 1e-12


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst_residual: float
    worst_location: float
    probes: int
    tolerance: float
    vacuous: int = 0


@dataclass
class VerificationReport:
    checks: list[CheckResult] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def probe_grid(field: DomainField, probe_count: int) -> np.ndarray:
    """Cell-centred uniform probes over the extent, integers removed."""
    if probe_count < 10:
        raise ValueError("probe_count must be >= 10")
    hi = field.num_samples - 1
    x = (np.arange(probe_count) + 0.5) * (hi / probe_count)
    return x[x != np.floor(x)]


def _worst(residual, x):
    if residual.size == 0:
        return 0.0, float("nan")
    i = int(np.argmax(residual))
    return float(residual[i]), float(x[i])


def _as_samples(samples):
    return samples.values if isinstance(samples, SampleSeries) else SampleSeries(samples).values


def check_rho_partition(field: DomainField, cfg: KernelConfig = KernelConfig(),
                        probe_count: int = 10_000, perturb=None) -> CheckResult:
    """``rho(x, floor x) + rho(x, ceil x) = 1`` at every non-degenerate probe."""
    x = probe_grid(field, probe_count)
    _, rl, rr, degenerate = pair_at(field, x, cfg)
    if perturb is not None:
        rl, rr = perturb(rl, rr, x)
    ok = ~degenerate
    res = np.abs(rl[ok] + rr[ok] - 1.0)
    worst, where = _worst(res, x[ok])
    return CheckResult("rho_partition", worst <= PARTITION_TOL, worst, where, x.size,
                       PARTITION_TOL, int(degenerate.sum()))


def check_kernel_partition(field: DomainField, cfg: KernelConfig = KernelConfig(),
                           probe_count: int = 10_000, perturb=None,
                           method: str = "dili") -> CheckResult:
    """The two straddling kernels sum to one at every probe."""
    x = probe_grid(field, probe_count)
    _, left, right = cell_kernels(field, x, cfg, method)
    if perturb is not None:
        left, right = perturb(left, right, x)
    res = np.abs(left + right - 1.0)
    worst, where = _worst(res, x)
    return CheckResult("kernel_partition", worst <= PARTITION_TOL, worst, where, x.size,
                       PARTITION_TOL)


def check_dicp(samples, field: DomainField, cfg: KernelConfig = KernelConfig(),
               probe_count: int = 1_000, perturb=None, method: str = "dili") -> CheckResult:
    """Perfect fit at integers and nearest-similar-sample ordering between them.

    A non-integer probe counts as vacuous when the two similarity values
    agree within ``tie_tol``, when the straddling samples are equal, or when
    the similarity is undefined.  The residual of an ordering violation is
    how much closer the interpolant sits to the less similar sample.
    """
    s = _as_samples(samples)
    n = field.num_samples
    ks = np.arange(n, dtype=float)
    a, left, right = cell_kernels(field, ks, cfg, method)
    if perturb is not None:
        left, right = perturb(left, right, ks)
    fit = s[a] * left + s[a + 1] * right
    fit_res = np.abs(fit - s)
    worst_fit, fit_at = _worst(fit_res, ks)

    x = probe_grid(field, probe_count)
    a, left, right = cell_kernels(field, x, cfg, method)
    if perturb is not None:
        left, right = perturb(left, right, x)
    s_hat = s[a] * left + s[a + 1] * right
    _, rl, rr, degenerate = pair_at(field, x, cfg)
    sl, sr = s[a], s[a + 1]
    active = ~degenerate & (np.abs(rl - rr) > cfg.tie_tol) & (sl != sr)
    favored_left = rl > rr
    dist_fav = np.where(favored_left, np.abs(s_hat - sl), np.abs(s_hat - sr))
    dist_other = np.where(favored_left, np.abs(s_hat - sr), np.abs(s_hat - sl))
    margin = np.where(active, dist_fav - dist_other, 0.0)
    violated = active & (margin >= 0.0)

    worst_ord, ord_at = _worst(np.where(violated, margin, 0.0), x)
    passed = bool(worst_fit <= FIT_TOL and not violated.any())
    worst, where = (worst_fit, fit_at) if worst_fit >= worst_ord else (worst_ord, ord_at)
    return CheckResult("dicp", passed, worst, where, n + x.size, FIT_TOL,
                       int((~active).sum()))


def check_appendix2_identities(samples, field: DomainField, cfg: KernelConfig = KernelConfig(),
                               probe_count: int = 1_000, perturb=None,
                               method: str = "dili") -> CheckResult:
    """Distance identities behind the ordering argument.

    At each probe ``|s_hat - s_left| = |s_right - s_left| * phi_right`` and
    ``|s_hat - s_right| = |s_right - s_left| * phi_left``; a larger kernel
    must also mean the interpolant is nearer to that sample.
    """
    s = _as_samples(samples)
    x = probe_grid(field, probe_count)
    a, left, right = cell_kernels(field, x, cfg, method)
    if perturb is not None:
        left, right = perturb(left, right, x)
    sl, sr = s[a], s[a + 1]
    s_hat = sl * left + sr * right
    f_left = np.abs(s_hat - sl)
    f_right = np.abs(s_hat - sr)
    gap = np.abs(sr - sl)
    res = np.maximum(np.abs(f_left - gap * right), np.abs(f_right - gap * left))

    ordered = (np.abs(left - right) > cfg.tie_tol) & (sl != sr)
    near = np.where(left > right, f_left, f_right)
    far = np.where(left > right, f_right, f_left)
    bad_order = ordered & (near >= far)
    res = np.where(bad_order, np.maximum(res, near - far), res)
    worst, where = _worst(res, x)
    passed = bool(worst <= IDENTITY_TOL and not bad_order.any())
    return CheckResult("distance_identities", passed, worst, where, x.size,
                       IDENTITY_TOL, int((~ordered).sum()))


def run_all(samples, field: DomainField, cfg: KernelConfig = KernelConfig(),
            partition_probes: int = 10_000, dicp_probes: int = 1_000,
            method: str = "dili") -> VerificationReport:
    return VerificationReport([
        check_rho_partition(field, cfg, partition_probes),
        check_kernel_partition(field, cfg, partition_probes, method=method),
        check_dicp(samples, field, cfg, dicp_probes, method=method),
        check_appendix2_identities(samples, field, cfg, dicp_probes, method=method),
    ])
