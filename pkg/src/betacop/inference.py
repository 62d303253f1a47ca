"""Confidence intervals, symmetry tests and covariance estimation."""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy import stats

from .empirical import BetaKernelTable, empirical_beta_copula
from .parametric import CopulaModel, Family, _partial_u, copula_cdf, copula_sample
from .rankstats import (
    EstimationError,
    IntegralTables,
    SYMMETRY_STATISTICS,
    integral_tables,
    kendall_tau,
    pseudo_likelihood_estimate,
    pseudo_likelihood_theta,
)
from .resampling import (
    TWO_POINT,
    MultiplierLaw,
    Replicates,
    Scheme,
    beta_bootstrap_standard,
    beta_resample_ranks,
    draw_multipliers,
    multinomial_weights,
    multiplier_pdm_replicate,
    parametric_bootstrap,
    straightforward_resample,
)

MIN_PERCENTILE_REPLICATES = 20


class Method(str, enum.Enum):
    ASYMP = "asymp"
    BOOT = "boot"
    BETA = "beta"
    PARAM = "param"


@dataclass
class ConfidenceInterval:
    lower: float
    upper: float
    level: float
    method: Method
    covered: bool | None = None
    flagged: bool = False
    failures: int = 0

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")
        if not 0 < self.level < 1:
            raise ValueError("level must lie in (0, 1)")

    @property
    def length(self) -> float:
        return self.upper - self.lower

    def contains(self, value: float) -> bool:
        return bool(self.lower <= value <= self.upper)


def _z(level):
    return stats.norm.ppf(0.5 + level / 2)


def ci_asymptotic_tau(ranks, level: float = 0.95) -> ConfidenceInterval:
    """Normal-approximation interval for Kendall's tau; zero width is flagged."""
    r = np.asarray(ranks)
    if r.shape[0] < 3:
        raise ValueError("asymptotic interval needs n >= 3")
    res = kendall_tau(r)
    half = _z(level) * res.sigma_hat
    return ConfidenceInterval(res.tau_hat - half, res.tau_hat + half, level, Method.ASYMP,
                              flagged=res.sigma_hat <= 0)


def ci_asymptotic(estimate: float, variance: float, n: int, level: float = 0.95) -> ConfidenceInterval:
    """``estimate +- z sqrt(variance / n)`` for an asymptotic variance of sqrt(n)(est - truth)."""
    half = _z(level) * np.sqrt(variance / n)
    return ConfidenceInterval(estimate - half, estimate + half, level, Method.ASYMP,
                              flagged=not variance > 0)


def ci_bootstrap_percentile(replicates, point_estimate: float | None = None, level: float = 0.95,
                            method: Method = Method.BOOT, kind: str = "percentile",
                            column: int = 0) -> ConfidenceInterval:
    """Percentile interval ``[Q(a/2), Q(1 - a/2)]`` with linear (type 7) quantiles.

    ``kind="basic"`` reflects the quantiles about ``point_estimate`` instead.
    """
    vals = replicates.column(column) if isinstance(replicates, Replicates) else np.asarray(replicates, float)
    failures = replicates.failures if isinstance(replicates, Replicates) else 0
    vals = np.asarray(vals, dtype=float).ravel()
    vals = vals[np.isfinite(vals)]
    if vals.size < MIN_PERCENTILE_REPLICATES:
        raise ValueError(f"percentile interval needs >= {MIN_PERCENTILE_REPLICATES} replicates, "
                         f"got {vals.size}")
    a = 1 - level
    lo, hi = np.quantile(vals, [a / 2, 1 - a / 2])
    if kind == "basic":
        if point_estimate is None:
            raise ValueError("basic interval needs the point estimate")
        lo, hi = 2 * point_estimate - hi, 2 * point_estimate - lo
    elif kind != "percentile":
        raise ValueError(f"unknown interval kind {kind!r}")
    return ConfidenceInterval(float(lo), float(hi), level, method, failures=failures)


def ci_parametric(family, ranks, B: int, rng: np.random.Generator,
                  level: float = 0.95) -> ConfidenceInterval:
    """Parametric-bootstrap percentile interval around the pseudo-likelihood estimate.

    Replicates whose estimate fails are skipped and counted. The interval is
    flagged when more than 10% fail, when the data estimate sits at its
    bracket end, or when too few replicates remain (then it is the
    replicate range).
    """
    family = Family.parse(family)
    r = np.asarray(ranks)
    fit = pseudo_likelihood_estimate(r, family)
    theta_hat = float(fit.theta)
    reps = parametric_bootstrap(family, theta_hat, r.shape[0], pseudo_likelihood_theta(family), B,
                                rng, batched=True)
    vals = reps.column(0)
    flagged = bool(fit.at_boundary) or reps.failures > 0.1 * B
    if vals.size < MIN_PERCENTILE_REPLICATES or not np.all(np.isfinite(vals)):
        finite = vals[np.isfinite(vals)]
        lo, hi = (finite.min(), finite.max()) if finite.size else (theta_hat, theta_hat)
        return ConfidenceInterval(float(lo), float(hi), level, Method.PARAM, flagged=True,
                                  failures=reps.failures)
    ci = ci_bootstrap_percentile(reps, theta_hat, level, Method.PARAM)
    ci.flagged = flagged
    return ci


# ----------------------------------------------------------------------------
# Symmetry tests
# ----------------------------------------------------------------------------


class Statistic(str, enum.Enum):
    SN = "Sn"
    RN = "Rn"
    SN_BETA = "SnBeta"
    RN_BETA = "RnBeta"


class NullScheme(str, enum.Enum):
    BETA_SYM = "BetaSym"
    BOOT_SYM = "BootSym"


@dataclass(frozen=True)
class TestResult:
    statistic: float
    p_value: float
    B: int
    scheme: NullScheme

    def rejects(self, alpha: float = 0.05) -> bool:
        return self.p_value <= alpha


def add_one_p_value(observed: float, replicates) -> float:
    reps = np.asarray(replicates, dtype=float)
    return float((1 + np.count_nonzero(reps >= observed)) / (reps.size + 1))


def null_resample(ranks, scheme, B: int, rng: np.random.Generator) -> np.ndarray:
    """B rank matrices drawn under exchangeability, shape (B, n, 2)."""
    scheme = NullScheme(scheme)
    if scheme is NullScheme.BETA_SYM:
        return beta_resample_ranks(ranks, B, rng, symmetrize=True)
    return straightforward_resample(ranks, B, rng, symmetrize=True)


def symmetry_tests(ranks, statistics, scheme, B: int, rng: np.random.Generator,
                   tables: IntegralTables | None = None, chunk: int = 250) -> dict:
    """Several symmetry tests sharing one set of null resamples."""
    if B < 1:
        raise ValueError("B must be >= 1")
    r = np.asarray(ranks)
    statistics = [Statistic(s) for s in statistics]
    tab = tables
    if tab is None and any(s in (Statistic.SN_BETA, Statistic.RN_BETA) for s in statistics):
        tab = integral_tables(r.shape[0])
    observed = {s: float(SYMMETRY_STATISTICS[s.value](r, tab)) for s in statistics}
    reps = {s: [] for s in statistics}
    for start in range(0, B, chunk):
        rb = null_resample(r, scheme, min(chunk, B - start), rng)
        for s in statistics:
            reps[s].append(np.asarray(SYMMETRY_STATISTICS[s.value](rb, tab), dtype=float))
    out = {}
    for s in statistics:
        allreps = np.concatenate(reps[s])
        out[s] = TestResult(observed[s], add_one_p_value(observed[s], allreps), B, NullScheme(scheme))
    return out


def symmetry_test(ranks, statistic, scheme, B: int, rng: np.random.Generator,
                  tables: IntegralTables | None = None) -> TestResult:
    """Bootstrap test of exchangeability with the add-one p-value."""
    return symmetry_tests(ranks, [statistic], scheme, B, rng, tables)[Statistic(statistic)]


# ----------------------------------------------------------------------------
# Covariance of the limiting process
# ----------------------------------------------------------------------------


COVARIANCE_GRID = np.array([[1 / 3, 1 / 3], [1 / 3, 2 / 3], [2 / 3, 1 / 3], [2 / 3, 2 / 3]])


@dataclass
class CovarianceEstimate:
    grid: np.ndarray
    cov: np.ndarray
    scheme: Scheme | None = None

    def __post_init__(self):
        self.cov = 0.5 * (self.cov + self.cov.T)


def beta_copula_batch(rank_stack, u) -> np.ndarray:
    """Empirical beta copulas of a stack of rank matrices at points ``u`` (G, d)."""
    rs = np.asarray(rank_stack)
    n, d = rs.shape[-2:]
    u = np.atleast_2d(np.asarray(u, dtype=float))
    prod = np.ones(rs.shape[:-1] + (u.shape[0],))
    for j in range(d):
        lv, inv = np.unique(u[:, j], return_inverse=True)
        prod = prod * BetaKernelTable(n, lv).values[rs[..., j]][..., inv]
    return prod.mean(axis=-2)


def process_replicates(ranks, scheme, grid, B: int, rng: np.random.Generator,
                       law: MultiplierLaw = TWO_POINT) -> np.ndarray:
    """B replicates of the bootstrapped copula process at ``grid``, shape (B, G)."""
    scheme = Scheme(scheme)
    r = np.asarray(ranks)
    n = r.shape[0]
    grid = np.atleast_2d(np.asarray(grid, dtype=float))
    if scheme is Scheme.MULTIPLIER_PDM:
        return multiplier_pdm_replicate(r, draw_multipliers(n, rng, B, law), grid, law)
    base = empirical_beta_copula(r, grid)
    if scheme is Scheme.BETA_STANDARD:
        w = multinomial_weights(n, rng, B)
        return np.sqrt(n) * (beta_bootstrap_standard(r, w, grid) - base)
    if scheme is Scheme.BETA_SMOOTHED:
        return np.sqrt(n) * (beta_copula_batch(beta_resample_ranks(r, B, rng), grid) - base)
    raise ValueError(f"no process replicates for scheme {scheme.value}")


def covariance_estimate(ranks, scheme, grid, B: int, rng: np.random.Generator) -> CovarianceEstimate:
    """Bootstrap estimate of the covariance of the limiting copula process on ``grid``."""
    if B < 2:
        raise ValueError("covariance needs B >= 2")
    grid = np.atleast_2d(np.asarray(grid, dtype=float))
    if grid.shape[0] < 1:
        raise ValueError("empty grid")
    reps = process_replicates(ranks, scheme, grid, B, rng)
    cov = np.atleast_2d(np.cov(reps, rowvar=False, ddof=1))
    return CovarianceEstimate(grid, cov, Scheme(scheme))


def limit_covariance(model: CopulaModel, grid) -> np.ndarray:
    """Covariance of the limiting copula process for a bivariate exchangeable family.

    The process is ``U(u) - dC/du1 U(u1, 1) - dC/du2 U(1, u2)`` with ``U`` the
    C-pinned Brownian sheet, ``Cov U(u) U(v) = C(u ^ v) - C(u) C(v)``.
    """
    g = np.atleast_2d(np.asarray(grid, dtype=float))
    m = g.shape[0]
    # each point expands into (point, first margin, second margin) with weights
    pts = np.concatenate([g, np.column_stack([g[:, 0], np.ones(m)]),
                          np.column_stack([np.ones(m), g[:, 1]])])
    if model.family is Family.INDEPENDENCE:
        d1, d2 = g[:, 1], g[:, 0]
    else:
        d1 = _partial_u(model.family, model.theta, g[:, 0], g[:, 1])
        d2 = _partial_u(model.family, model.theta, g[:, 1], g[:, 0])
    coef = np.zeros((m, 3 * m))
    idx = np.arange(m)
    coef[idx, idx] = 1.0
    coef[idx, m + idx] = -d1
    coef[idx, 2 * m + idx] = -d2
    c = copula_cdf(model, pts)
    gamma = copula_cdf(model, np.minimum(pts[:, None, :], pts[None, :, :])) - np.outer(c, c)
    return coef @ gamma @ coef.T


def _cache_dir() -> Path:
    env = os.environ.get("BETACOP_CACHE_DIR")
    return Path(env) if env else Path.home() / ".cache" / "betacop"


def covariance_oracle(model: CopulaModel, grid=COVARIANCE_GRID, samples: int = 200_000,
                      n: int = 5000, seed: int = 20240611, chunk: int = 200,
                      cache: bool = True) -> np.ndarray:
    """Monte Carlo covariance of ``sqrt(n)(C_n - C)`` at ``grid`` over many large samples.

    ``C_n`` is the rank-based empirical copula. Results are cached on disk,
    keyed by model, grid, sizes and seed.
    """
    grid = np.atleast_2d(np.asarray(grid, dtype=float))
    key = (f"cov_{model.family.value}_{model.theta:.12g}_{samples}_{n}_{seed}_"
           + "_".join(f"{x:.6f}" for x in grid.ravel()))
    path = _cache_dir() / f"{key}.npy"
    if cache and path.exists():
        return np.load(path)
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, n, samples])))
    k = np.floor(grid * n + 1e-9).astype(int)  # R <= n u  <=>  X <= X_(k)
    levels = [np.unique(k[:, j]) for j in range(2)]
    truth = copula_cdf(model, grid)
    acc = np.zeros((grid.shape[0], grid.shape[0]))
    s1 = np.zeros(grid.shape[0])
    done = 0
    while done < samples:
        b = min(chunk, samples - done)
        x = copula_sample(model, (b, n), rng)
        thresholds = []
        for j in range(2):
            part = np.partition(x[..., j], levels[j] - 1, axis=1)
            thresholds.append({int(l): part[:, l - 1] for l in levels[j]})
        vals = np.empty((b, grid.shape[0]))
        for g_idx, (k1, k2) in enumerate(k):
            inside = (x[..., 0] <= thresholds[0][int(k1)][:, None]) & \
                     (x[..., 1] <= thresholds[1][int(k2)][:, None])
            vals[:, g_idx] = inside.mean(axis=1)
        z = np.sqrt(n) * (vals - truth)
        s1 += z.sum(axis=0)
        acc += z.T @ z
        done += b
    mean = s1 / samples
    cov = (acc - samples * np.outer(mean, mean)) / (samples - 1)
    if cache:
        path.parent.mkdir(parents=True, exist_ok=True)
        np.save(path, cov)
    return cov
