from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from betacop.empirical import (
    BetaKernelTable,
    TiesError,
    beta_kernel,
    compute_ranks,
    deheuvels_empirical_copula,
    diagnostic_grid,
    empirical_beta_copula,
    max_ranks,
    rank_empirical_copula,
    rerank,
)

from conftest import rank_matrices


def binomial_tail(n, r, u):
    return sum(comb(n, s) * u ** s * (1 - u) ** (n - s) for s in range(r, n + 1))


# -- ranks --------------------------------------------------------------------


def test_rank_examples():
    np.testing.assert_array_equal(compute_ranks([[0.1], [0.5], [0.3]]).ravel(), [1, 3, 2])
    np.testing.assert_array_equal(compute_ranks([[1.0], [2.0], [3.0]]).ravel(), [1, 2, 3])
    r = compute_ranks(np.column_stack([[1, 2, 3], [9, 5, 1]]))
    np.testing.assert_array_equal(r, [[1, 3], [2, 2], [3, 1]])


def test_ties_refused():
    with pytest.raises(TiesError):
        compute_ranks([[0.1, 0.2], [0.1, 0.3]])


def test_rerank_and_max_ranks():
    rng = np.random.default_rng(0)
    x = rng.uniform(size=(3, 7, 2))
    rr = rerank(x)
    for b in range(3):
        np.testing.assert_array_equal(rr[b], compute_ranks(x[b]))
    y = np.array([[2, 1], [2, 3], [1, 3], [4, 1]])
    np.testing.assert_array_equal(max_ranks(y, 4), [[3, 2], [3, 4], [1, 4], [4, 2]])


# -- rank-based empirical copula ---------------------------------------------


def test_rank_copula_examples(rng):
    r = np.array([[1, 1], [2, 2]])
    assert rank_empirical_copula(r, [0.5, 0.5]) == 0.5
    rk = np.column_stack([rng.permutation(9) + 1 for _ in range(2)])
    assert rank_empirical_copula(rk, [1.0, 1.0]) == 1.0
    assert rank_empirical_copula(rk, [0.1, 1.0]) == 0.0


# -- Deheuvels empirical copula ----------------------------------------------


def test_deheuvels_examples(rng):
    x = rng.normal(size=(20, 2))
    assert deheuvels_empirical_copula(x, [1.0, 1.0]) == pytest.approx(1.0)
    one = np.array([[0.3, -1.2]])
    assert deheuvels_empirical_copula(one, [1.0, 1.0]) == 1.0
    assert deheuvels_empirical_copula(one, [0.5, 0.5]) == 1.0


@pytest.mark.parametrize("d", [2, 3])
def test_rank_copula_close_to_deheuvels(d):
    rng = np.random.default_rng(d)
    grid = diagnostic_grid(d, 40)
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(2, 40))
        x = rng.normal(size=(n, d))
        gap = np.abs(rank_empirical_copula(compute_ranks(x), grid)
                     - deheuvels_empirical_copula(x, grid)).max()
        worst = max(worst, gap * n / d)
    assert worst <= 1 + 1e-12


def test_deheuvels_equals_rank_copula_at_rank_points():
    rng = np.random.default_rng(5)
    x = rng.normal(size=(20, 2))
    r = compute_ranks(x)
    g = (np.arange(21) / 20)
    pts = np.stack(np.meshgrid(g, g, indexing="ij"), -1).reshape(-1, 2)
    assert np.abs(rank_empirical_copula(r, pts) - deheuvels_empirical_copula(x, pts)).max() <= 2 / 20


# -- beta kernel -------------------------------------------------------------


def test_beta_kernel_examples():
    assert beta_kernel(2, 2, 0.5) == pytest.approx(0.25, abs=1e-15)
    assert beta_kernel(2, 1, 0.5) == pytest.approx(0.75, abs=1e-15)
    assert np.mean(beta_kernel(5, np.arange(1, 6), 0.3)) == pytest.approx(0.3, abs=1e-12)


def test_beta_kernel_range_checked():
    with pytest.raises(ValueError):
        beta_kernel(3, 4, 0.5)
    with pytest.raises(ValueError):
        beta_kernel(3, -1, 0.5)


def test_beta_kernel_matches_binomial_sum():
    u = np.round(np.arange(0, 101) / 100, 2)
    worst = 0.0
    for n in range(1, 61):
        r = np.arange(1, n + 1)[:, None]
        direct = np.array([[binomial_tail(n, int(rr), float(uu)) for uu in u] for rr in r[:, 0]])
        worst = max(worst, np.abs(beta_kernel(n, r, u[None, :]) - direct).max())
    assert worst <= 1e-13


@given(st.integers(2, 80), st.floats(0.001, 0.999))
def test_beta_kernel_decreasing_in_rank(n, u):
    vals = beta_kernel(n, np.arange(1, n + 1), u)
    step = np.diff(vals)
    assert np.all(step <= 0)
    # strict wherever the values are not saturated at 0 or 1 in double precision
    inner = (vals[:-1] < 1 - 1e-12) & (vals[1:] > 1e-290)
    assert np.all(step[inner] < 0)


def test_kernel_table_endpoints():
    tab = BetaKernelTable(7, [0.0, 0.5, 1.0])
    np.testing.assert_array_equal(tab.values[1:, 0], 0.0)
    np.testing.assert_array_equal(tab.values[1:, 2], 1.0)
    np.testing.assert_array_equal(tab.values[0], 1.0)
    assert not tab.values.flags.writeable


# -- empirical beta copula ---------------------------------------------------


def test_beta_copula_examples(rng):
    r = np.array([[1, 1], [2, 2]])
    assert empirical_beta_copula(r, [0.5, 0.5]) == pytest.approx(0.3125, abs=1e-15)
    rk = np.column_stack([rng.permutation(12) + 1 for _ in range(3)])
    v = np.arange(1, 10) / 10
    pts = np.column_stack([v, np.ones(9), np.ones(9)])
    np.testing.assert_allclose(empirical_beta_copula(rk, pts), v, atol=1e-12)
    assert empirical_beta_copula(rk, [1, 1, 1]) == pytest.approx(1.0, abs=1e-15)


@given(rank_matrices(min_n=1, max_n=25))
def test_beta_copula_grounded_and_uniform(r):
    v = np.linspace(0, 1, 11)
    z = np.zeros_like(v)
    o = np.ones_like(v)
    assert np.abs(empirical_beta_copula(r, np.column_stack([v, z]))).max() <= 1e-12
    assert np.abs(empirical_beta_copula(r, np.column_stack([z, v]))).max() <= 1e-12
    assert np.abs(empirical_beta_copula(r, np.column_stack([v, o])) - v).max() <= 1e-12
    assert np.abs(empirical_beta_copula(r, np.column_stack([o, v])) - v).max() <= 1e-12


@given(rank_matrices(min_n=1, max_n=25), st.integers(0, 2 ** 32 - 1))
def test_beta_copula_rectangles_nonnegative(r, seed):
    rng = np.random.default_rng(seed)
    a = rng.uniform(size=(50, 2))
    b = a + rng.uniform(size=(50, 2)) * (1 - a)
    vol = (empirical_beta_copula(r, b) - empirical_beta_copula(r, np.column_stack([a[:, 0], b[:, 1]]))
           - empirical_beta_copula(r, np.column_stack([b[:, 0], a[:, 1]]))
           + empirical_beta_copula(r, a))
    assert vol.min() >= -1e-12


def test_beta_copula_rank_invariance():
    rng = np.random.default_rng(8)
    x = rng.normal(size=(30, 2))
    pts = diagnostic_grid(2, 10)
    a = empirical_beta_copula(compute_ranks(x), pts)
    b = empirical_beta_copula(compute_ranks(np.exp(x)), pts)
    np.testing.assert_array_equal(a, b)


def test_diagnostic_grid_shape():
    g = diagnostic_grid(3, 4)
    assert g.shape == (125, 3)
    assert g.min() == 0 and g.max() == 1
