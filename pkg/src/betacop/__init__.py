"""Empirical beta copula, resampling schemes and rank-based inference."""

from .empirical import (
    BetaKernelTable,
    TiesError,
    beta_kernel,
    compute_ranks,
    deheuvels_empirical_copula,
    empirical_beta_copula,
    rank_empirical_copula,
)
from .inference import (
    ConfidenceInterval,
    CovarianceEstimate,
    TestResult,
    ci_asymptotic_tau,
    ci_bootstrap_percentile,
    ci_parametric,
    covariance_estimate,
    symmetry_test,
)
from .parametric import (
    CopulaModel,
    DomainError,
    Family,
    KhoudrajiModel,
    copula_cdf,
    copula_log_density,
    copula_sample,
    copula_score,
    tau_of_theta,
    theta_of_tau,
)
from .rankstats import (
    IntegralTables,
    KendallResult,
    ggr_asymptotic_variance,
    integral_tables,
    kendall_tau,
    pseudo_likelihood_estimate,
    pseudo_observations,
    spearman_rho,
    symmetry_stat_Rn,
    symmetry_stat_Rn_beta,
    symmetry_stat_Sn,
    symmetry_stat_Sn_beta,
)
from .resampling import (
    Replicates,
    Scheme,
    beta_bootstrap_standard,
    beta_copula_sample,
    bootstrap_ranks,
    multiplier_pdm_replicate,
    parametric_bootstrap,
    smoothed_beta_bootstrap,
    straightforward_bootstrap_copula,
)

__version__ = "0.1.0"
