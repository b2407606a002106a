import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dinterp import DomainField, OutOfExtent, ShapeMismatch, ZeroCoverage, homogeneous, normalize

from conftest import fields, random_field


def test_normalize_symmetric_channels():
    f = normalize([[2, 2], [2, 2]])
    assert np.array_equal(f.channels, [[0.5, 0.5], [0.5, 0.5]])


def test_normalize_single_channel():
    f = normalize([[1, 1]])
    assert np.array_equal(f.channels, [[1.0, 1.0]])


def test_normalize_per_node_division():
    f = normalize([[0.3, 0.9], [0.1, 0.1]])
    np.testing.assert_allclose(f.channels, [[0.75, 0.9], [0.25, 0.1]], rtol=0, atol=1e-15)


def test_normalize_rejects_uncovered_node():
    with pytest.raises(ZeroCoverage, match="node 1"):
        normalize([[1.0, 0.0, 1.0], [0.0, 0.0, 1.0]])


def test_normalize_rejects_ragged_channels():
    with pytest.raises(ShapeMismatch):
        normalize([[1.0, 1.0], [1.0, 1.0, 1.0]])


def test_field_length_must_match_refinement():
    with pytest.raises(ShapeMismatch):
        normalize([[1.0] * 6], refinement=3)


def test_field_rejects_unnormalized_channels():
    with pytest.raises(ValueError):
        DomainField([[0.5, 0.5], [0.4, 0.5]])


def test_geometry():
    f = homogeneous(15, 100)
    assert (f.num_subdomains, f.num_samples, f.refinement) == (1, 15, 100)
    assert f.extent == (0.0, 14.0)
    assert f.channels.shape == (1, 1401)


def test_eval_single_subdomain_is_one():
    f = homogeneous(5, 3)
    assert f.eval(0, 2.345) == 1.0


def test_eval_reproduces_nodes_exactly():
    rng = np.random.default_rng(3)
    f = random_field(rng, num_samples=6, refinement=7, num_subdomains=3)
    i = np.arange(f.channels.shape[1])
    assert np.array_equal(f.values(i / 7), f.channels)


def test_eval_linear_between_nodes():
    f = DomainField([[1.0, 0.0], [0.0, 1.0]])
    assert f.eval(0, 0.25) == 0.75


def test_eval_out_of_extent():
    f = homogeneous(4)
    with pytest.raises(OutOfExtent):
        f.eval(0, 3.0001)
    with pytest.raises(OutOfExtent):
        f.values(-1e-9)


def test_maximal_minimal_strict():
    f = DomainField([[0.9, 0.9], [0.1, 0.1]])
    assert f.maximal_set(0.5) == {0}
    assert f.minimal_set(0.5) == {1}


def test_maximal_minimal_exact_tie():
    f = DomainField([[0.5, 0.5], [0.5, 0.5]])
    assert f.maximal_set(0.0) == {0, 1}
    assert f.minimal_set(0.0) == {0, 1}


def test_maximal_set_tolerance_band():
    tol = 1e-9
    raw = np.array([[0.5, 0.5], [0.5 - tol / 2, 0.5 - tol / 2], [0.0, 0.0]])
    f = normalize(raw)
    assert f.maximal_set(0.3, tol) == {0, 1}
    assert f.minimal_set(0.3, tol) == {2}
    assert f.maximal_set(0.3, 0.0) == {0}


def test_sum_to_one_dense():
    rng = np.random.default_rng(0)
    f = random_field(rng, num_samples=8, refinement=5, num_subdomains=3)
    x = np.linspace(0, 7, 10_001)
    assert np.abs(f.values(x).sum(axis=0) - 1.0).max() <= 1e-12


@settings(max_examples=50, deadline=None)
@given(fields(), st.floats(0, 1), st.floats(1e-6, 0.5))
def test_eval_lipschitz(f, t, h):
    hi = f.num_samples - 1
    x = t * (hi - h)
    L = f.refinement * np.abs(np.diff(f.channels, axis=1)).max()
    diff = np.abs(f.values(x) - f.values(x + h))
    assert np.all(diff <= L * h + 1e-12)


@settings(max_examples=50, deadline=None)
@given(fields(max_subdomains=4), st.floats(0, 1), st.randoms(use_true_random=False))
def test_index_sets_follow_channel_permutation(f, t, rnd):
    x = t * (f.num_samples - 1)
    perm = list(range(f.num_subdomains))
    rnd.shuffle(perm)
    g = DomainField(f.channels[perm], f.refinement)
    # channel perm[i] of f became channel i of g
    back = {p: i for i, p in enumerate(perm)}
    assert g.maximal_set(x) == {back[i] for i in f.maximal_set(x)}
    assert g.minimal_set(x) == {back[i] for i in f.minimal_set(x)}
