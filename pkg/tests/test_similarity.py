import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dinterp import (
    DegenerateNeighborhood,
    DomainField,
    KernelConfig,
    OutOfExtent,
    discriminant,
    homogeneous,
    is_flat_zero,
    logistic,
    rho,
    weight,
    xi,
    xi_tilde,
)
from dinterp.similarity import pair_at

from conftest import fields, random_field
from reference import Reference

UNIFORM = KernelConfig(weight_mode="uniform")


def ref_of(field, cfg=KernelConfig()):
    return Reference(field.channels, field.refinement, gamma=cfg.gamma,
                     weight_mode=cfg.weight_mode, tie_tol=cfg.tie_tol,
                     zero_tol=cfg.zero_tol, flat_radius=cfg.flat_radius,
                     flat_samples=cfg.flat_samples, denom_tol=cfg.denom_tol)


class TestConfig:
    def test_defaults(self):
        cfg = KernelConfig()
        assert cfg.gamma == 20.0 and cfg.weight_mode == "adaptive"
        assert (cfg.zero_tol, cfg.flat_radius, cfg.flat_samples) == (1e-9, 0.25, 9)

    @pytest.mark.parametrize("kw", [
        {"gamma": 0.0}, {"support": 2.0}, {"weight_mode": "max"}, {"tie_tol": -1.0},
        {"flat_radius": 1.0}, {"flat_samples": 2}, {"denom_tol": 0.0},
    ])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            KernelConfig(**kw)


class TestLogistic:
    def test_midpoint(self):
        assert logistic(0.0, 20) == 0.5

    def test_closed_form(self):
        assert logistic(0.5, 20) == pytest.approx(1.0 / (1.0 + math.exp(-10.0)), abs=1e-15)
        assert logistic(0.5, 20) == pytest.approx(0.9999546, abs=1e-7)

    def test_antisymmetry(self):
        assert logistic(-0.5, 20) == pytest.approx(1.0 - logistic(0.5, 20), abs=1e-15)
        assert logistic(-0.5, 20) == pytest.approx(4.54e-5, rel=1e-3)

    def test_no_overflow(self):
        assert logistic(-0.5, 1e5) == 0.0
        assert logistic(0.5, 1e5) == 1.0

    @given(st.floats(-1, 1), st.floats(-1, 1), st.floats(0.1, 200))
    def test_increasing(self, a, b, g):
        if a < b:
            assert logistic(a, g) <= logistic(b, g)


class TestWeight:
    ramp = DomainField([[1.0, 0.8, 0.6, 0.4, 0.2, 0.0], [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]], 5)

    def test_zero_offset(self):
        f = random_field(np.random.default_rng(1), num_samples=4, refinement=3)
        assert weight(f, 2, 0.0) == 1.0

    def test_homogeneous(self):
        assert weight(homogeneous(4, 2), 1, 0.7) == 1.0

    def test_direct_evaluation(self):
        assert weight(self.ramp, 0, 0.4) == pytest.approx(0.6, abs=1e-15)

    def test_uniform_mode(self):
        assert weight(self.ramp, 0, 0.4, "uniform") == 1.0

    def test_out_of_extent(self):
        with pytest.raises(OutOfExtent):
            weight(self.ramp, 0, -0.2)


class TestXi:
    def test_zero_outside_support(self, fig1):
        assert xi(fig1.field, 3, 1.0) == 0.0
        assert xi(fig1.field, 3, -1.0) == 0.0
        assert xi(fig1.field, 0, -1.0) == 0.0

    def test_homogeneous(self):
        assert xi(homogeneous(3, 4), 1, 0.3, KernelConfig(gamma=7)) == logistic(0.5, 7)

    def test_tie_uses_least_associated_subdomain(self):
        f = DomainField([[0.5, 0.9, 0.5], [0.5, 0.1, 0.5]], 2)
        assert f.maximal_set(0.0) == {0, 1}
        assert xi(f, 0, 0.5, UNIFORM) == pytest.approx(logistic(-0.4, 20), rel=1e-12)

    def test_unique_maximum_tracks_that_subdomain(self):
        f = DomainField([[0.8, 0.3, 0.6], [0.2, 0.7, 0.4]], 2)
        assert xi(f, 0, 0.5, UNIFORM) == pytest.approx(logistic(0.3 - 0.5, 20), rel=1e-12)

    def test_out_of_extent(self, fig1):
        with pytest.raises(OutOfExtent):
            xi(fig1.field, 0, -0.5)

    def test_vectorized(self, fig1):
        x = np.array([-0.4, 0.0, 0.3])
        assert xi(fig1.field, 5, x).shape == (3,)


class TestRho:
    def test_homogeneous_midpoint(self):
        f = homogeneous(6, 4)
        assert rho(f, 2.5, 2) == 0.5
        assert rho(f, 2.5, 3) == 0.5

    def test_pair_sums_to_one(self, fig1):
        x = 7.31
        assert rho(fig1.field, x, 7) + rho(fig1.field, x, 8) == pytest.approx(1.0, abs=1e-15)

    def test_fast_transition_favors_subdomain_one_side(self, fig1):
        x = 2.3
        a = xi(fig1.field, 2, x - 2)
        b = xi(fig1.field, 3, x - 3)
        assert a > b
        assert rho(fig1.field, x, 2) > rho(fig1.field, x, 3)

    def test_rejects_integer_and_far_sample(self, fig1):
        with pytest.raises(ValueError):
            rho(fig1.field, 3.0, 3)
        with pytest.raises(ValueError):
            rho(fig1.field, 3.5, 5)

    def test_degenerate(self):
        # both samples sit in subdomain 1, the cell midpoint is pure subdomain 2
        f = DomainField([[1.0, 0.0, 1.0], [0.0, 1.0, 0.0]], 2)
        with pytest.raises(DegenerateNeighborhood):
            rho(f, 0.5, 0)
        assert rho(f, 0.5, 0, UNIFORM) == 0.5


class TestXiTilde:
    def test_at_sample(self, fig1):
        for k in range(15):
            assert xi_tilde(fig1.field, k, 0.0) == 1.0

    def test_homogeneous_midpoint(self):
        assert xi_tilde(homogeneous(4, 2), 1, 0.5) == 0.5

    def test_pair_identity(self, fig1):
        x = np.linspace(0.01, 13.99, 777)
        x = x[x != np.floor(x)]
        fl, ce = np.floor(x).astype(int), np.ceil(x).astype(int)
        s = xi_tilde(fig1.field, fl, x - fl) + xi_tilde(fig1.field, ce, x - ce)
        assert np.abs(s - 1).max() <= 1e-12

    def test_support(self, fig1):
        with pytest.raises(ValueError):
            xi_tilde(fig1.field, 3, 1.0)


class TestDiscriminant:
    def test_homogeneous(self):
        x = np.linspace(0, 5, 101)
        assert np.all(discriminant(homogeneous(6, 3), x) == 0.0)

    def test_integers(self, fig1):
        assert np.all(discriminant(fig1.field, np.arange(15.0)) == 0.0)

    @pytest.mark.parametrize("x, sign", [(2.45, 1), (2.55, -1), (11.7, 1), (12.3, -1)])
    def test_sign_toward_dominant_side(self, fig1, x, sign):
        ref = ref_of(fig1.field)
        expected = ref.D(x)
        d = discriminant(fig1.field, x)
        assert d == pytest.approx(expected, abs=1e-12)
        assert np.sign(d) == sign and abs(d) > 0.1

    def test_degenerate_propagates(self):
        f = DomainField([[1.0, 0.0, 1.0], [0.0, 1.0, 0.0]], 2)
        with pytest.raises(DegenerateNeighborhood):
            discriminant(f, 0.5)


class TestFlatZero:
    def test_homogeneous(self):
        f = homogeneous(6, 10)
        assert np.all(is_flat_zero(f, np.linspace(0, 5, 57)))

    @pytest.mark.parametrize("x", [2.5, 6.5, 12.0])
    def test_transition_centres(self, fig1, x):
        assert is_flat_zero(fig1.field, x) is False

    @pytest.mark.parametrize("x", [0.5, 1.5, 9.5, 10.2, 13.6])
    def test_homogeneous_stretches_of_fixture(self, fig1, x):
        assert is_flat_zero(fig1.field, x) is True

    def test_uniformly_inhomogeneous_stretch(self):
        r = 10
        d1 = np.concatenate([np.ones(2 * r), np.full(3 * r + 1, 0.5), np.zeros(2 * r)])
        f = DomainField([d1, 1 - d1], r)
        assert f.num_samples == 8
        assert is_flat_zero(f, 3.5) is True
        assert discriminant(f, 3.5) == 0.0

    def test_position_always_probed(self, fig1):
        # radius small enough that the window never leaves the transition cell
        cfg = KernelConfig(flat_radius=0.01)
        assert is_flat_zero(fig1.field, 2.45, cfg) is False


@pytest.fixture(params=["adaptive", "uniform"])
def cfg(request):
    return KernelConfig(weight_mode=request.param)


def _probes(n=14, count=10_000):
    x = (np.arange(count) + 0.5) * (n / count)
    return x[x != np.floor(x)]


def test_rho_partition_dense(fig1, cfg):
    x = _probes()
    _, rl, rr, deg = pair_at(fig1.field, x, cfg)
    assert not deg.any()
    assert np.abs(rl + rr - 1).max() <= 1e-12


def test_ranges(fig1, cfg):
    x = _probes(count=2000)
    fl = np.floor(x).astype(int)
    for v in (xi(fig1.field, fl, x - fl, cfg), weight(fig1.field, fl, x - fl, cfg.weight_mode),
              rho(fig1.field, x, fl, cfg), xi_tilde(fig1.field, fl + 1, x - fl - 1, cfg)):
        assert v.min() >= 0.0 and v.max() <= 1.0


def test_ordering_link(fig1, cfg):
    x = _probes(count=3000)
    fl, ce = np.floor(x).astype(int), np.ceil(x).astype(int)
    d = discriminant(fig1.field, x, cfg)
    favored = rho(fig1.field, x, fl, cfg) > rho(fig1.field, x, ce, cfg)
    assert np.array_equal(favored, d > 0)
    a = xi(fig1.field, fl, x - fl, cfg)
    b = xi(fig1.field, ce, x - ce, cfg)
    assert np.array_equal(favored, a > b)


def test_gamma_contrast_monotone(fig1):
    x = 2.3
    f = fig1.field
    # logistic arguments at the two straddling samples
    a = f.eval(0, x) - 0.5
    b = f.eval(1, x) - 0.5
    assert a > 0 > b
    ratios = []
    for g in (1, 5, 20, 100):
        cfg = KernelConfig(gamma=g, weight_mode="uniform")
        r = xi(f, 2, x - 2, cfg) / xi(f, 3, x - 3, cfg)
        assert r == pytest.approx((1 + math.exp(-g * b)) / (1 + math.exp(-g * a)), rel=1e-12)
        ratios.append(r)
    assert all(p < q for p, q in zip(ratios, ratios[1:]))


@settings(max_examples=40, deadline=None)
@given(fields(), st.lists(st.floats(0, 1), min_size=1, max_size=8),
       st.sampled_from(["adaptive", "uniform"]), st.sampled_from([1.0, 20.0, 100.0]))
def test_matches_reference(f, ts, mode, gamma):
    cfg = KernelConfig(gamma=gamma, weight_mode=mode)
    ref = ref_of(f, cfg)
    hi = f.num_samples - 1
    for t in ts:
        x = t * hi
        k = min(int(math.floor(x)), hi - 1)
        for kk in (k, k + 1):
            assert xi(f, kk, x - kk, cfg) == pytest.approx(ref.xi(kk, x - kk), abs=1e-12)
        if x == math.floor(x) or ref.degenerate(x):
            continue
        assert rho(f, x, k, cfg) == pytest.approx(ref.rho(x, k), abs=1e-12)
        assert discriminant(f, x, cfg) == pytest.approx(ref.D(x), abs=1e-12)
        if abs(ref.D(x)) > 1e-6:
            assert is_flat_zero(f, x, cfg) is False
