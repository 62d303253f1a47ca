import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


@st.composite
def rank_matrices(draw, min_n=2, max_n=30, d=2):
    """Rank matrices with permutation columns."""
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    rng = np.random.default_rng(seed)
    return np.column_stack([rng.permutation(n) + 1 for _ in range(d)])


def exchangeable_ranks(n, rng):
    """A rank matrix whose row set is invariant under swapping the coordinates."""
    # an involution: pair up positions and leave an odd one on the diagonal
    a = np.arange(1, n + 1)
    b = a.copy()
    idx = rng.permutation(n)
    for i in range(0, n - 1, 2):
        b[idx[i]], b[idx[i + 1]] = a[idx[i + 1]], a[idx[i]]
    return np.column_stack([a, b])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
