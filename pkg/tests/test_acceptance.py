"""Acceptance checks AC1-AC8.

Each check prints one ``ACk PASS`` or ``ACk FAIL`` line with its measured
values, then asserts. Monte Carlo checks use the default configuration seed.
"""

import subprocess
import sys
import time
from math import comb
from pathlib import Path

import numpy as np
import pytest

from betacop.empirical import (
    beta_kernel,
    deheuvels_empirical_copula,
    diagnostic_grid,
    empirical_beta_copula,
    rank_empirical_copula,
)
from betacop.experiments import ExperimentConfig, run_experiment
from betacop.published import published
from betacop.rankstats import (
    IntegralTables,
    beta_copula_spearman_rho,
    spearman_rho,
    symmetry_stat_Rn_beta,
    symmetry_stat_Sn_beta,
)
from betacop.resampling import (
    beta_copula_sample,
    multinomial_weights,
    straightforward_bootstrap_copula,
)

TESTS = Path(__file__).resolve().parent


@pytest.fixture
def verdict(capsys):
    def report(tag, ok, detail, started):
        with capsys.disabled():
            print(f"\n{tag} {'PASS' if ok else 'FAIL'} ({time.time() - started:.0f}s): {detail}")
        assert ok, detail
    return report


def random_ranks(rng, n, d=2):
    return np.column_stack([rng.permutation(n) + 1 for _ in range(d)])


def test_ac1_exact_identities(verdict):
    t0 = time.time()
    rng = np.random.default_rng(2024)
    rho_err = 0.0
    for _ in range(200):
        n = int(rng.integers(5, 61))
        r = random_ranks(rng, n)
        rho_err = max(rho_err, abs(beta_copula_spearman_rho(r) - (n - 1) / (n + 1) * spearman_rho(r)))
    excess = -np.inf
    for d in (2, 3):
        grid = diagnostic_grid(d, 40)
        for _ in range(100):
            n = int(rng.integers(2, 50))
            r = random_ranks(rng, n, d)
            gap = np.abs(rank_empirical_copula(r, grid) - deheuvels_empirical_copula(r, grid)).max()
            excess = max(excess, gap - d / n)
    resample_excess = -np.inf
    for d in (2, 3):
        grid = diagnostic_grid(d, 20)
        for _ in range(100):
            n = int(rng.integers(2, 40))
            r = random_ranks(rng, n, d)
            w = multinomial_weights(n, rng)
            gap = np.abs(deheuvels_empirical_copula(r, grid, weights=w)
                         - straightforward_bootstrap_copula(r, w, grid)).max()
            resample_excess = max(resample_excess, gap - d / n * w.max())
    ok = rho_err <= 1e-12 and excess <= 1e-12 and resample_excess <= 1e-12
    verdict("AC1", ok, f"rho identity max err {rho_err:.2e}; rank-copula bound slack "
            f"{excess:.3g}; resample bound slack {resample_excess:.3g}", t0)


def test_ac2_oracle_equivalence(verdict):
    t0 = time.time()
    rng = np.random.default_rng(77)
    x, w = np.polynomial.legendre.leggauss(128)
    x, w = (x + 1) / 2, w / 2
    pts = np.stack(np.meshgrid(x, x, indexing="ij"), -1).reshape(-1, 2)
    ww = np.outer(w, w).ravel()
    rn_err = 0.0
    for n in range(2, 7):
        for _ in range(3):
            r = random_ranks(rng, n)
            diff = empirical_beta_copula(r, pts) - empirical_beta_copula(r, pts[:, ::-1])
            rn_err = max(rn_err, abs(symmetry_stat_Rn_beta(r) - (diff ** 2 * ww).sum()))

    r = np.array([[1, 2], [2, 4], [3, 1], [4, 3]])
    m = 1_000_000
    vals = []
    for _ in range(10):
        v = beta_copula_sample(r, m // 10, rng)
        vals.append((empirical_beta_copula(r, v) - empirical_beta_copula(r, v[:, ::-1])) ** 2)
    vals = np.concatenate(vals)
    sn_z = abs(symmetry_stat_Sn_beta(r) - vals.mean()) / (vals.std(ddof=1) / np.sqrt(m))

    sweep = 0.0
    for n in (1, 2, 5, 10, 30, 60):
        a, b = IntegralTables(n), IntegralTables(n, extra_nodes=8)
        sweep = max(sweep, np.abs(a.B - b.B).max(), np.abs(a.C - b.C).max())

    kern = 0.0
    for n in (1, 3, 10, 25, 60):
        u = rng.random(20)
        for k in range(n + 1):
            exact = np.array([sum(comb(n, j) * ui ** j * (1 - ui) ** (n - j)
                                  for j in range(k, n + 1)) for ui in u])
            kern = max(kern, np.abs(beta_kernel(n, k, u) - exact).max())
    ok = rn_err <= 1e-10 and sn_z <= 3 and sweep <= 1e-13 and kern <= 1e-13
    verdict("AC2", ok, f"Rn-beta vs quadrature {rn_err:.2e}; Sn-beta vs MC {sn_z:.2f} sd; "
            f"table node sweep {sweep:.2e}; kernel vs binomial sum {kern:.2e}", t0)


def test_ac3_kendall_beta_intervals(verdict):
    t0 = time.time()
    lines, ok = [], True
    for tau in (0.0, 0.5):
        # tau = 0 is the independence member of the Clayton family
        model = dict(family="independence") if tau == 0 else dict(family="clayton", tau=tau)
        cfg = ExperimentConfig(experiment="KendallCI", n_values=[40, 100], M=500, B=500,
                               schemes=["beta"], **model)
        rep = run_experiment(cfg, progress=False)
        for n in (40, 100):
            cov = rep.lookup("beta", n, "coverage").value
            length = rep.lookup("beta", n, "length").value
            ref_c = published(2, "clayton", tau, "beta", n, "coverage")
            ref_l = published(2, "clayton", tau, "beta", n, "length")
            good = abs(cov - ref_c) <= 0.03 and abs(length - ref_l) <= 0.01
            ok &= good
            lines.append(f"tau={tau} n={n} cov {cov:.3f}/{ref_c} len {length:.3f}/{ref_l}"
                         + ("" if good else " *"))
    verdict("AC3", ok, "; ".join(lines), t0)


def test_ac4_parametric_intervals(verdict):
    t0 = time.time()
    cfg = ExperimentConfig(experiment="ParamCI", family="clayton", theta=1.0, n_values=[100],
                           M=300, B=300, schemes=["beta", "param"])
    rep = run_experiment(cfg, progress=False)
    beta_len = rep.lookup("beta", 100, "length").value
    param_cov = rep.lookup("param", 100, "coverage").value
    gauss = ExperimentConfig(experiment="ParamCI", family="gauss", theta=1 / np.sqrt(2),
                             n_values=[100], M=300, B=300, schemes=["asymp"])
    asymp_cov = run_experiment(gauss, progress=False).lookup("asymp", 100, "coverage").value
    ok = abs(beta_len - 0.935) <= 0.07 and abs(param_cov - 0.948) <= 0.04 and asymp_cov < 0.945
    verdict("AC4", ok, f"Clayton beta length {beta_len:.3f} (0.935 +- 0.07); param coverage "
            f"{param_cov:.3f} (0.948 +- 0.04); Gauss asymp coverage {asymp_cov:.3f} (< 0.945)", t0)


def test_ac5_symmetry_size(verdict):
    t0 = time.time()
    cfg = ExperimentConfig(experiment="SymmetrySize", family="clayton", tau=0.25, n_values=[100],
                           M=500, B=250, schemes=["BetaSym", "BootSym"], statistics=["Sn"])
    rep = run_experiment(cfg, progress=False)
    beta = rep.lookup("BetaSym", 100, "rejection_Sn").value
    boot = rep.lookup("BootSym", 100, "rejection_Sn").value
    ok = abs(beta - 0.039) <= 0.02 and boot <= 0.03
    verdict("AC5", ok, f"BetaSym size {beta:.3f} (0.039 +- 0.02); BootSym size {boot:.3f} (<= 0.03)", t0)


def test_ac6_symmetry_power(verdict):
    t0 = time.time()
    cfg = ExperimentConfig(experiment="SymmetryPower", family="gauss", tau=0.75, delta=0.5,
                           n_values=[100], M=300, B=250, schemes=["BetaSym"], statistics=["RnBeta"])
    power = run_experiment(cfg, progress=False).lookup("BetaSym", 100, "rejection_RnBeta").value
    ok = abs(power - 0.923) <= 0.06 and power >= 0.914 - 0.06
    verdict("AC6", ok, f"BetaSym power for Rn-beta {power:.3f} (0.923 +- 0.06, >= 0.854)", t0)


def test_ac7_covariance_mse(verdict):
    t0 = time.time()
    cfg = ExperimentConfig(experiment="Covariance", family="clayton", theta=1.0, n_values=[100],
                           M=1000, B=1000, schemes=["beta_std"], truth="oracle")
    rep = run_experiment(cfg, progress=False)
    mse = rep.lookup("beta_std", 100, "mse_x1e4[1/3;2/3|2/3;1/3]").value
    ok = 0.1294 / 2 <= mse <= 0.1294 * 2
    verdict("AC7", ok, f"beta_std MSE x1e4 at (1/3,2/3),(2/3,1/3): {mse:.4f} (0.1294, factor 2)", t0)


def test_ac8_property_suite_standalone(verdict):
    t0 = time.time()
    files = sorted(str(p) for p in TESTS.glob("test_*.py") if p.name != Path(__file__).name)
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", *files],
                          cwd=TESTS.parent, capture_output=True, text=True)
    summary = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-300:]
    failed = [ln.split(" - ")[0] for ln in proc.stdout.splitlines() if ln.startswith("FAILED")]
    verdict("AC8", proc.returncode == 0, summary + (f"; failing: {', '.join(failed)}" if failed else ""), t0)
