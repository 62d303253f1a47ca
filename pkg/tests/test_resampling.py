from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import stats

from betacop.empirical import (
    compute_ranks,
    deheuvels_empirical_copula,
    diagnostic_grid,
    empirical_beta_copula,
    rank_empirical_copula,
)
from betacop.inference import process_replicates
from betacop.parametric import CopulaModel, copula_sample
from betacop.rankstats import kendall_tau_hat
from betacop.resampling import (
    MultiplierLaw,
    Replicates,
    Scheme,
    beta_bootstrap_standard,
    beta_copula_sample,
    beta_resample_ranks,
    bootstrap_ranks,
    draw_multipliers,
    estimate_partial_derivative,
    multinomial_weights,
    multiplier_pdm_replicate,
    parametric_bootstrap,
    smoothed_beta_bootstrap,
    straightforward_bootstrap,
    straightforward_bootstrap_copula,
    straightforward_resample,
)

from conftest import exchangeable_ranks, rank_matrices


def clayton_ranks(n, theta, seed):
    rng = np.random.default_rng(seed)
    return compute_ranks(copula_sample(CopulaModel("clayton", theta), n, rng))


# -- weights -----------------------------------------------------------------


def test_multinomial_weights_sum_to_n(rng):
    w = multinomial_weights(37, rng, size=5000)
    assert np.all(w.sum(axis=1) == 37)
    assert np.all(w >= 0)
    assert abs(w.mean() - 1.0) < 0.01


def test_multipliers_two_point(rng):
    xi = draw_multipliers(50, rng, size=200)
    assert set(np.unique(xi)) <= {0.0, 2.0}
    assert np.all(xi.sum(axis=1) > 0)


def test_zero_multiplier_vector_redrawn():
    draws = iter([np.zeros((1, 3)), np.array([[0.0, 2.0, 0.0]])])
    law = MultiplierLaw(draw=lambda rng, shape: next(draws).reshape(shape))
    xi = draw_multipliers(3, np.random.default_rng(0), law=law)
    np.testing.assert_array_equal(xi, [0.0, 2.0, 0.0])


def test_replicates_container():
    rep = Replicates(np.arange(4.0), Scheme.BETA_SMOOTHED)
    assert rep.B == 4 and rep.values.shape == (4, 1)
    with pytest.raises(ValueError):
        Replicates(np.empty((0, 1)), Scheme.BETA_SMOOTHED)


# -- straightforward bootstrap ----------------------------------------------


def test_bootstrap_ranks_examples():
    r = np.array([[1], [2]])
    np.testing.assert_array_equal(bootstrap_ranks(r, [2, 0]).ravel(), [2, 2])
    np.testing.assert_array_equal(bootstrap_ranks(r, [0, 2]).ravel(), [0, 2])


@given(rank_matrices(min_n=1, max_n=30, d=3))
def test_identity_weights_reproduce_ranks(r):
    n = r.shape[0]
    np.testing.assert_array_equal(bootstrap_ranks(r, np.ones(n, int)), r)
    g = diagnostic_grid(3, 5)
    np.testing.assert_allclose(straightforward_bootstrap_copula(r, np.ones(n), g),
                               rank_empirical_copula(r, g), atol=1e-15)


@given(rank_matrices(min_n=1, max_n=30), st.integers(0, 2 ** 32 - 1))
def test_bootstrap_copula_total_mass(r, seed):
    w = multinomial_weights(r.shape[0], np.random.default_rng(seed))
    assert straightforward_bootstrap_copula(r, w, [1.0, 1.0]) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("d", [2, 3])
def test_resample_bound_per_replicate(d):
    # sup |C*_n - tilde C*_n| <= (d / n) max W, for every single resample
    rng = np.random.default_rng(100 + d)
    grid = diagnostic_grid(d, 20)
    for _ in range(60):
        n = int(rng.integers(2, 30))
        r = np.column_stack([rng.permutation(n) + 1 for _ in range(d)])
        w = multinomial_weights(n, rng)
        gap = np.abs(deheuvels_empirical_copula(r, grid, weights=w)
                     - straightforward_bootstrap_copula(r, w, grid)).max()
        assert gap <= d / n * w.max() + 1e-12


def test_straightforward_resample_shapes_and_ties(rng):
    r = clayton_ranks(20, 1.0, 3)
    rs = straightforward_resample(r, 7, rng)
    assert rs.shape == (7, 20, 2)
    assert rs.min() >= 1 and rs.max() == 20
    sym = straightforward_resample(r, 7, rng, symmetrize=True)
    assert sym.shape == (7, 20, 2)
    with pytest.raises(ValueError):
        straightforward_resample(np.ones((4, 3), int), 2, rng, symmetrize=True)


def test_straightforward_bootstrap_replicates(rng):
    r = clayton_ranks(40, 2.0, 4)
    rep = straightforward_bootstrap(r, kendall_tau_hat, 50, rng)
    assert rep.B == 50 and rep.scheme is Scheme.STRAIGHTFORWARD
    assert abs(rep.column().mean() - kendall_tau_hat(r)) < 0.1
    with pytest.raises(ValueError):
        straightforward_bootstrap(r, kendall_tau_hat, 0, rng)


# -- multiplier bootstrap ----------------------------------------------------


@given(rank_matrices(min_n=2, max_n=30))
def test_pdm_zero_at_unit_multipliers(r):
    n = r.shape[0]
    g = diagnostic_grid(2, 6)
    np.testing.assert_allclose(multiplier_pdm_replicate(r, np.ones(n), g), 0.0, atol=1e-12)


@given(rank_matrices(min_n=2, max_n=30), st.integers(0, 2 ** 32 - 1))
def test_pdm_zero_on_boundary(r, seed):
    xi = draw_multipliers(r.shape[0], np.random.default_rng(seed), size=5)
    corners = np.array([[0, 0], [0, 1], [1, 0], [1, 1], [0, 0.4], [0.7, 0]], dtype=float)
    np.testing.assert_allclose(multiplier_pdm_replicate(r, xi, corners), 0.0, atol=1e-12)


def test_pdm_rejects_zero_mean_multipliers():
    with pytest.raises(ValueError):
        multiplier_pdm_replicate(np.array([[1, 1], [2, 2]]), np.zeros(2), [[0.5, 0.5]])


def test_partial_derivative_independence():
    rng = np.random.default_rng(9)
    n = 10_000
    r = np.column_stack([rng.permutation(n) + 1 for _ in range(2)])
    est = estimate_partial_derivative(r, np.array([0.5, 0.5]), 0)
    assert abs(est - 0.5) <= 0.1


def test_partial_derivative_boundary_clipping(rng):
    r = np.column_stack([rng.permutation(50) + 1 for _ in range(2)])
    pts = np.array([[0.0, 0.3], [1.0, 0.6], [0.02, 0.9]])
    for j in (0, 1):
        v = estimate_partial_derivative(r, pts, j)
        assert np.all((v >= 0) & (v <= 1))


def test_partial_derivative_comonotone():
    n = 400
    r = np.column_stack([np.arange(1, n + 1)] * 2)
    assert abs(estimate_partial_derivative(r, np.array([0.5, 0.5]), 0) - 0.5) < 0.05


# -- standard beta bootstrap -------------------------------------------------


def test_beta_standard_example():
    r = np.array([[1, 1], [2, 2]])
    assert beta_bootstrap_standard(r, np.array([2, 0]), [0.5, 0.5]) == pytest.approx(0.0625, abs=1e-15)


@given(rank_matrices(min_n=1, max_n=30))
def test_beta_standard_identity_weights(r):
    g = diagnostic_grid(2, 8)
    np.testing.assert_allclose(beta_bootstrap_standard(r, np.ones(r.shape[0], int), g),
                               empirical_beta_copula(r, g), atol=1e-14)


@given(rank_matrices(min_n=1, max_n=30), st.integers(0, 2 ** 32 - 1))
def test_beta_standard_total_mass(r, seed):
    w = multinomial_weights(r.shape[0], np.random.default_rng(seed))
    assert beta_bootstrap_standard(r, w, [1.0, 1.0]) == pytest.approx(1.0, abs=1e-12)


@given(rank_matrices(min_n=1, max_n=8), st.integers(0, 2 ** 32 - 1),
       st.floats(0.0, 1.0), st.floats(0.0, 1.0))
def test_beta_standard_is_binomial_smoothing_of_rank_bootstrap(r, seed, u1, u2):
    # exhaustive E_S over S_j ~ Bin(n, u_j)
    n = r.shape[0]
    w = multinomial_weights(n, np.random.default_rng(seed))
    s = np.arange(n + 1)
    p1 = np.array([comb(n, k) * u1 ** k * (1 - u1) ** (n - k) for k in s])
    p2 = np.array([comb(n, k) * u2 ** k * (1 - u2) ** (n - k) for k in s])
    pts = np.stack(np.meshgrid(s / n, s / n, indexing="ij"), -1).reshape(-1, 2)
    rank_boot = straightforward_bootstrap_copula(r, w, pts).reshape(n + 1, n + 1)
    expected = p1 @ rank_boot @ p2
    assert beta_bootstrap_standard(r, w, [u1, u2]) == pytest.approx(expected, abs=1e-12)


# -- sampling from the empirical beta copula --------------------------------


def test_beta_sample_single_point_is_uniform():
    rng = np.random.default_rng(1)
    v = beta_copula_sample(np.array([[1, 1]]), 20_000, rng)
    for j in range(2):
        assert stats.kstest(v[:, j], "uniform").statistic < 4 / np.sqrt(20_000)
    assert abs(np.corrcoef(v.T)[0, 1]) < 0.03


def test_beta_sample_uniform_margins():
    rng = np.random.default_rng(2)
    r = clayton_ranks(30, 2.0, 7)
    m = 100_000
    v = beta_copula_sample(r, m, rng)
    assert v.shape == (m, 2)
    for j in range(2):
        assert stats.kstest(v[:, j], "uniform").statistic < 4 / np.sqrt(m)


def test_beta_sample_symmetrized_fixed_point():
    rng = np.random.default_rng(3)
    r = exchangeable_ranks(25, rng)
    a = beta_copula_sample(r, 20_000, rng)
    b = beta_copula_sample(r, 20_000, rng, symmetrize=True)
    # same law: compare a scalar projection with a two-sample test
    p = stats.ks_2samp(a[:, 0] - a[:, 1], b[:, 0] - b[:, 1]).pvalue
    assert p > 0.001


def test_beta_sample_argument_checks(rng):
    with pytest.raises(ValueError):
        beta_copula_sample(np.array([[1, 1]]), 0, rng)
    with pytest.raises(ValueError):
        beta_copula_sample(np.ones((1, 3), int), 5, rng, symmetrize=True)


# -- smoothed beta bootstrap -------------------------------------------------


def test_smoothed_constant_statistic(rng):
    r = clayton_ranks(15, 1.0, 1)
    rep = smoothed_beta_bootstrap(r, lambda x: 3.5, 40, rng)
    np.testing.assert_array_equal(rep.column(), 3.5)


def test_smoothed_comonotone_kendall(rng):
    r = np.column_stack([np.arange(1, 51)] * 2)
    rep = smoothed_beta_bootstrap(r, kendall_tau_hat, 200, rng)
    assert rep.column().mean() > 0.8


def test_smoothed_deterministic():
    r = clayton_ranks(30, 1.0, 2)
    a = smoothed_beta_bootstrap(r, kendall_tau_hat, 77, np.random.default_rng(5), batched=True,
                                chunk=20)
    b = smoothed_beta_bootstrap(r, kendall_tau_hat, 77, np.random.default_rng(5), batched=True,
                                chunk=20)
    np.testing.assert_array_equal(a.values, b.values)
    c = smoothed_beta_bootstrap(r, kendall_tau_hat, 77, np.random.default_rng(5), chunk=20)
    np.testing.assert_array_equal(a.values, c.values)


def test_smoothed_requires_replicates(rng):
    with pytest.raises(ValueError):
        smoothed_beta_bootstrap(np.array([[1, 1]]), kendall_tau_hat, 0, rng)


def test_beta_resample_ranks_are_permutations(rng):
    rs = beta_resample_ranks(clayton_ranks(12, 1.0, 0), 6, rng, symmetrize=True)
    for b in range(6):
        for j in range(2):
            np.testing.assert_array_equal(np.sort(rs[b, :, j]), np.arange(1, 13))


# -- parametric bootstrap ----------------------------------------------------


def test_parametric_bootstrap_clayton():
    rep = parametric_bootstrap("clayton", 2.0, 1000, kendall_tau_hat, 100,
                               np.random.default_rng(11), batched=True)
    assert abs(rep.column().mean() - 0.5) < 0.05
    assert rep.failures == 0


def test_parametric_bootstrap_single_replicate_deterministic():
    a = parametric_bootstrap("frank", 3.0, 50, kendall_tau_hat, 1, np.random.default_rng(4))
    b = parametric_bootstrap("frank", 3.0, 50, kendall_tau_hat, 1, np.random.default_rng(4))
    assert a.B == 1
    np.testing.assert_array_equal(a.values, b.values)


def test_parametric_bootstrap_gumbel_independence():
    rep = parametric_bootstrap("gumbel", 1.0, 200, kendall_tau_hat, 200,
                               np.random.default_rng(12), batched=True)
    assert abs(rep.column().mean()) < 0.02


def test_parametric_bootstrap_counts_failures():
    calls = iter(range(10))

    def flaky(r):
        return np.nan if next(calls) % 3 == 0 else 0.1

    rep = parametric_bootstrap("clayton", 1.0, 20, flaky, 10, np.random.default_rng(0))
    assert rep.failures == 4 and rep.B == 6


# -- asymptotic equivalence diagnostics -------------------------------------


def test_beta_and_rank_bootstrap_processes_merge():
    # mean grid sup-norm between the two processes, shared multinomial weights
    grid = diagnostic_grid(2, 20)
    means = []
    for n in (50, 200, 800):
        rng = np.random.default_rng(n)
        r = clayton_ranks(n, 1.0, n + 1)
        base_beta = empirical_beta_copula(r, grid)
        base_rank = rank_empirical_copula(r, grid)
        gaps = []
        for _ in range(200):
            w = multinomial_weights(n, rng)
            a_beta = np.sqrt(n) * (beta_bootstrap_standard(r, w, grid) - base_beta)
            a_rank = np.sqrt(n) * (straightforward_bootstrap_copula(r, w, grid) - base_rank)
            gaps.append(np.abs(a_beta - a_rank).max())
        means.append(np.mean(gaps))
    assert means[0] > means[1] > means[2]


def test_schemes_agree_on_limit_variance():
    r = clayton_ranks(200, 1.0, 2024)
    pt = np.array([[1 / 3, 1 / 3]])
    var = {}
    for k, scheme in enumerate(("pdm", "beta_std", "beta")):
        reps = process_replicates(r, scheme, pt, 2000, np.random.default_rng(70 + k))
        var[scheme] = reps[:, 0].var(ddof=1)
    assert abs(var["pdm"] / var["beta_std"] - 1) < 0.15
    assert abs(var["pdm"] / var["beta"] - 1) < 0.15


def test_all_schemes_deterministic():
    r = clayton_ranks(40, 1.0, 6)
    pts = diagnostic_grid(2, 4)
    for scheme in ("pdm", "beta_std", "beta"):
        a = process_replicates(r, scheme, pts, 10, np.random.default_rng(1))
        b = process_replicates(r, scheme, pts, 10, np.random.default_rng(1))
        np.testing.assert_array_equal(a, b)
    a = straightforward_resample(r, 5, np.random.default_rng(2))
    b = straightforward_resample(r, 5, np.random.default_rng(2))
    np.testing.assert_array_equal(a, b)
