import numpy as np
import pytest
from hypothesis import given, strategies as st

from betacop.empirical import compute_ranks, rerank
from betacop.inference import (
    COVARIANCE_GRID,
    ConfidenceInterval,
    Method,
    NullScheme,
    Statistic,
    add_one_p_value,
    ci_asymptotic,
    ci_asymptotic_tau,
    ci_bootstrap_percentile,
    ci_parametric,
    covariance_estimate,
    covariance_oracle,
    limit_covariance,
    null_resample,
    symmetry_test,
    symmetry_tests,
)
from betacop.parametric import CopulaModel, copula_sample
from betacop.rankstats import kendall_tau, kendall_tau_hat
from betacop.resampling import Replicates, Scheme, smoothed_beta_bootstrap

from conftest import exchangeable_ranks, rank_matrices


def sample_ranks(family, theta, n, seed):
    return compute_ranks(copula_sample(CopulaModel(family, theta), n, np.random.default_rng(seed)))


# -- confidence intervals ----------------------------------------------------


def test_interval_container():
    ci = ConfidenceInterval(0.1, 0.4, 0.95, Method.BETA)
    assert ci.length == pytest.approx(0.3)
    assert ci.contains(0.2) and not ci.contains(0.5)
    with pytest.raises(ValueError):
        ConfidenceInterval(0.5, 0.4, 0.95, Method.BETA)
    with pytest.raises(ValueError):
        ConfidenceInterval(0.1, 0.4, 1.0, Method.BETA)


def test_percentile_type7_example():
    ci = ci_bootstrap_percentile(np.arange(1, 101), level=0.9)
    assert ci.lower == pytest.approx(5.95) and ci.upper == pytest.approx(95.05)


def test_percentile_degenerate_and_basic():
    ci = ci_bootstrap_percentile(np.full(50, 0.3))
    assert ci.lower == ci.upper == 0.3
    basic = ci_bootstrap_percentile(np.arange(1, 101), point_estimate=50.0, level=0.9, kind="basic")
    assert basic.lower == pytest.approx(100 - 95.05) and basic.upper == pytest.approx(100 - 5.95)
    with pytest.raises(ValueError):
        ci_bootstrap_percentile(np.arange(100), kind="bca")


def test_percentile_needs_twenty_replicates():
    with pytest.raises(ValueError):
        ci_bootstrap_percentile(np.arange(19.0))
    with pytest.raises(ValueError):
        ci_bootstrap_percentile(np.r_[np.arange(19.0), np.nan, np.nan])


@given(st.lists(st.floats(-5, 5), min_size=20, max_size=200), st.floats(0.5, 0.99))
def test_percentile_contains_median(vals, level):
    vals = np.array(vals)
    ci = ci_bootstrap_percentile(vals, level=level)
    assert ci.contains(float(np.median(vals)))


@given(rank_matrices(min_n=3, max_n=40), st.floats(0.5, 0.99))
def test_asymptotic_contains_estimate(r, level):
    ci = ci_asymptotic_tau(r, level)
    assert ci.contains(kendall_tau(r).tau_hat)
    assert ci.method is Method.ASYMP


def test_asymptotic_tau_formula():
    r = sample_ranks("clayton", 2.0, 50, 3)
    res = kendall_tau(r)
    ci = ci_asymptotic_tau(r)
    assert ci.lower == pytest.approx(res.tau_hat - 1.959963984540054 * res.sigma_hat, abs=1e-12)
    assert ci.length > 0 and not ci.flagged
    with pytest.raises(ValueError):
        ci_asymptotic_tau(np.array([[1, 1], [2, 2]]))


def test_asymptotic_comonotone_is_degenerate():
    same = np.column_stack([np.arange(1, 21)] * 2)
    ci = ci_asymptotic_tau(same)
    # every C_i equals n - 1, so the estimated variance vanishes
    assert ci.lower == ci.upper == 1.0
    assert ci.flagged


def test_generic_asymptotic_interval():
    ci = ci_asymptotic(1.0, 4.0, 100, 0.95)
    assert ci.length == pytest.approx(2 * 1.959963984540054 * 0.2)
    assert ci_asymptotic(1.0, 0.0, 100).flagged


def test_beta_interval_from_replicates(rng):
    r = sample_ranks("clayton", 2.0, 100, 8)
    reps = smoothed_beta_bootstrap(r, kendall_tau_hat, 300, rng, batched=True)
    ci = ci_bootstrap_percentile(reps, float(kendall_tau_hat(r)), method=Method.BETA)
    assert ci.method is Method.BETA and 0.1 < ci.length < 0.35


def test_parametric_interval(rng):
    r = sample_ranks("clayton", 1.0, 100, 9)
    ci = ci_parametric("clayton", r, 100, rng)
    assert ci.method is Method.PARAM and ci.lower < ci.upper
    assert 0.3 < ci.length < 2.5


def test_parametric_single_replicate_flagged(rng):
    ci = ci_parametric("frank", sample_ranks("frank", 4.0, 60, 1), 1, rng)
    assert ci.flagged and ci.lower == ci.upper


# -- symmetry tests ----------------------------------------------------------


def test_add_one_p_value():
    assert add_one_p_value(10.0, np.arange(10)) == pytest.approx(1 / 11)
    assert add_one_p_value(5.0, np.arange(10)) == pytest.approx(6 / 11)
    assert add_one_p_value(-1.0, np.arange(10)) == 1.0
    assert add_one_p_value(0.0, np.zeros(9)) == 1.0


@given(st.floats(0, 1), st.lists(st.floats(0, 1), min_size=1, max_size=100))
def test_p_value_lower_bound(t, reps):
    p = add_one_p_value(t, reps)
    assert 1 / (len(reps) + 1) <= p <= 1


def test_zero_statistic_gives_large_p(rng):
    r = exchangeable_ranks(30, rng)
    for scheme in NullScheme:
        res = symmetry_test(r, "Sn", scheme, 99, rng)
        assert res.statistic == 0.0 and res.p_value >= 0.5
        assert not res.rejects(0.05)


def test_symmetry_tests_share_resamples_and_enums(rng):
    r = sample_ranks("clayton", 2.0, 40, 10)
    out = symmetry_tests(r, ["Sn", "Rn", "SnBeta", "RnBeta"], "BetaSym", 50, rng)
    assert set(out) == set(Statistic)
    for res in out.values():
        assert res.B == 50 and res.scheme is NullScheme.BETA_SYM
        assert 1 / 51 <= res.p_value <= 1
    with pytest.raises(ValueError):
        symmetry_tests(r, ["Sn"], "BetaSym", 0, rng)


def test_symmetry_tests_deterministic():
    r = sample_ranks("gauss", 0.5, 50, 2)
    a = symmetry_tests(r, ["Sn", "RnBeta"], "BootSym", 40, np.random.default_rng(3))
    b = symmetry_tests(r, ["Sn", "RnBeta"], "BootSym", 40, np.random.default_rng(3))
    assert a == b


def test_null_resamples_are_exchangeable_in_law(rng):
    # the pooled resampled rows are swap-symmetric up to Monte Carlo error
    r = sample_ranks("clayton", 3.0, 30, 4)
    for scheme in NullScheme:
        rs = null_resample(r, scheme, 400, rng).reshape(-1, 2)
        frac = np.mean(rs[:, 0] > rs[:, 1])
        frac_rev = np.mean(rs[:, 1] > rs[:, 0])
        assert abs(frac - frac_rev) < 0.02


def test_size_under_exact_null():
    # data from a symmetric copula, BetaSym resampling: level is kept
    n, M, B = 200, 1000, 100
    rng = np.random.default_rng(777)
    x = copula_sample(CopulaModel("gauss", 0.5), (M, n), rng)
    data = rerank(x)
    rejections = np.zeros(2)
    for m in range(M):
        out = symmetry_tests(data[m], ["Sn", "Rn"], "BetaSym", B, rng)
        rejections += [out[Statistic.SN].rejects(0.05), out[Statistic.RN].rejects(0.05)]
    assert np.all(rejections / M <= 0.07)


# -- covariance of the limiting process -------------------------------------


def test_covariance_at_corner_vanishes(rng):
    r = sample_ranks("clayton", 1.0, 50, 5)
    for scheme in ("pdm", "beta_std", "beta"):
        est = covariance_estimate(r, scheme, [[1.0, 1.0]], 100, rng)
        assert est.cov.shape == (1, 1)
        assert abs(est.cov[0, 0]) <= 1e-20


@pytest.mark.parametrize("scheme", ["pdm", "beta_std", "beta"])
def test_covariance_symmetric_nonnegative_diagonal(scheme, rng):
    r = sample_ranks("clayton", 1.0, 60, 6)
    est = covariance_estimate(r, scheme, COVARIANCE_GRID, 200, rng)
    assert est.scheme is Scheme(scheme)
    np.testing.assert_array_equal(est.cov, est.cov.T)
    assert np.all(np.diag(est.cov) >= -1e-10)


def test_covariance_argument_checks(rng):
    r = sample_ranks("clayton", 1.0, 20, 0)
    with pytest.raises(ValueError):
        covariance_estimate(r, "beta_std", COVARIANCE_GRID, 1, rng)
    with pytest.raises(ValueError):
        covariance_estimate(r, "boot", COVARIANCE_GRID, 10, rng)


def test_limit_covariance_independence_by_hand():
    # for C(u,v) = uv at equal points: Var = u v (1-u)(1-v)
    cov = limit_covariance(CopulaModel("independence"), [[0.3, 0.6]])
    assert cov[0, 0] == pytest.approx(0.3 * 0.6 * 0.7 * 0.4, abs=1e-15)


def test_limit_covariance_matches_monte_carlo_oracle():
    model = CopulaModel("clayton", 1.0)
    samples, n = 4000, 1000
    mc = covariance_oracle(model, COVARIANCE_GRID, samples=samples, n=n, seed=5, cache=False)
    exact = limit_covariance(model, COVARIANCE_GRID)
    # standard error of a sample covariance of jointly normal entries
    dg = np.diag(exact)
    se = np.sqrt((np.outer(dg, dg) + exact ** 2) / samples)
    assert np.all(np.abs(mc - exact) <= 5 * se + 2 / np.sqrt(n) * 0.01)


def test_oracle_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv("BETACOP_CACHE_DIR", str(tmp_path))
    model = CopulaModel("frank", 2.0)
    a = covariance_oracle(model, COVARIANCE_GRID, samples=50, n=100, seed=1)
    assert len(list(tmp_path.glob("*.npy"))) == 1
    b = covariance_oracle(model, COVARIANCE_GRID, samples=50, n=100, seed=1)
    np.testing.assert_array_equal(a, b)


def test_replicates_failures_propagate():
    reps = Replicates(np.r_[np.linspace(0, 1, 30)], Scheme.PARAMETRIC, failures=3)
    assert ci_bootstrap_percentile(reps).failures == 3
