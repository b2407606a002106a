import numpy as np
import pytest
from hypothesis import strategies as st

from dinterp import DomainField, normalize
from dinterp.fixtures import fig1_fixture, fig2_like_fixture, homogeneous_fixture


@pytest.fixture(scope="session")
def fig1():
    return fig1_fixture()


@pytest.fixture(scope="session")
def flat1d():
    return homogeneous_fixture()


@pytest.fixture(scope="session")
def fig2():
    return fig2_like_fixture()


def random_field(rng, num_samples=None, refinement=None, num_subdomains=None) -> DomainField:
    """Random normalized field; some nodes get pure single-subdomain membership."""
    n = num_samples or int(rng.integers(2, 9))
    r = refinement or int(rng.integers(1, 6))
    j = num_subdomains or int(rng.integers(1, 4))
    m = (n - 1) * r + 1
    raw = rng.uniform(0.0, 1.0, (j, m))
    pure = rng.random(m) < 0.3
    winner = rng.integers(0, j, m)
    raw[:, pure] = 0.0
    raw[winner[pure], np.flatnonzero(pure)] = 1.0
    return normalize(raw, r)


@st.composite
def fields(draw, max_samples=6, max_refinement=4, max_subdomains=3):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(2, max_samples))
    r = draw(st.integers(1, max_refinement))
    j = draw(st.integers(1, max_subdomains))
    return random_field(np.random.default_rng(seed), n, r, j)
