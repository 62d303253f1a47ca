"""Monte Carlo experiment harness.

An :class:`ExperimentConfig` describes one study: a data-generating copula,
a list of sample sizes, the number of Monte Carlo runs ``M``, the number of
bootstrap replications ``B`` and the resampling schemes to compare. Every
scheme is applied to the same simulated sample in each run.

Random streams are Philox generators keyed by ``(seed, n, run, stream)``,
where stream 0 draws the data and stream ``k >= 1`` feeds the k-th scheme.
Results therefore do not depend on the number of worker processes.
"""

from __future__ import annotations

import configparser
import csv
import enum
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from pathlib import Path

import numpy as np

from .empirical import compute_ranks
from .inference import (
    COVARIANCE_GRID,
    ConfidenceInterval,
    Method,
    Statistic,
    ci_asymptotic,
    ci_asymptotic_tau,
    ci_bootstrap_percentile,
    ci_parametric,
    covariance_estimate,
    covariance_oracle,
    limit_covariance,
    symmetry_tests,
)
from .parametric import (
    CopulaModel,
    DomainError,
    Family,
    KhoudrajiModel,
    copula_sample,
    rho_of_theta,
    tau_of_theta,
    theta_of_tau,
)
from .rankstats import (
    EstimationError,
    ggr_asymptotic_variance,
    integral_tables,
    kendall_tau_hat,
    pseudo_likelihood_estimate,
    pseudo_likelihood_theta,
    spearman_rho,
    spearman_rho_ties,
)
from .resampling import beta_resample_ranks, straightforward_resample

CSV_HEADER = ["experiment", "family", "theta", "delta", "scheme", "n", "metric", "value",
              "mc_se", "failures"]


class ConfigError(ValueError):
    """An experiment description is invalid."""


class Experiment(str, enum.Enum):
    COVARIANCE = "Covariance"
    KENDALL_CI = "KendallCI"
    SPEARMAN_CI = "SpearmanCI"
    PARAM_CI = "ParamCI"
    SYMMETRY_SIZE = "SymmetrySize"
    SYMMETRY_POWER = "SymmetryPower"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).replace("_", "").replace("-", "").lower()
        for e in cls:
            if e.value.lower() == key:
                return e
        raise ConfigError(f"unknown experiment {value!r}; choose from {[e.value for e in cls]}")


ALLOWED_SCHEMES = {
    Experiment.COVARIANCE: ("pdm", "beta_std", "beta"),
    Experiment.KENDALL_CI: ("asymp", "boot", "beta"),
    Experiment.SPEARMAN_CI: ("boot", "beta"),
    Experiment.PARAM_CI: ("asymp", "boot", "beta", "param"),
    Experiment.SYMMETRY_SIZE: ("BetaSym", "BootSym"),
    Experiment.SYMMETRY_POWER: ("BetaSym", "BootSym"),
}


@dataclass
class ExperimentConfig:
    experiment: Experiment
    family: str
    theta: float | None = None
    tau: float | None = None
    delta: float | None = None
    n_values: list = field(default_factory=lambda: [100])
    M: int = 1000
    B: int = 1000
    level: float = 0.95
    alpha: float = 0.05
    schemes: list | None = None
    statistics: list = field(default_factory=lambda: ["Sn", "Rn"])
    seed: int = 1
    threads: int = 1
    truth: str = "oracle"
    oracle_samples: int = 200_000
    oracle_n: int = 5000
    name: str = ""

    def __post_init__(self):
        try:
            self.experiment = Experiment.parse(self.experiment)
            fam = Family.parse(self.family)
        except (ValueError, DomainError) as exc:
            raise ConfigError(str(exc)) from exc
        self.family = fam.value
        if self.schemes is None:
            self.schemes = list(ALLOWED_SCHEMES[self.experiment])
        self.n_values = [int(v) for v in self.n_values]
        self.schemes = [str(s) for s in self.schemes]
        self.statistics = [str(s) for s in self.statistics]
        self.validate()

    # -- validation ---------------------------------------------------------

    def validate(self):
        fam = Family(self.family)
        if self.M < 1 or self.B < 1:
            raise ConfigError("runs (M) and boot (B) must be >= 1")
        if not self.n_values or min(self.n_values) < 3:
            raise ConfigError("need at least one sample size, each >= 3")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1")
        if not 0 < self.level < 1 or not 0 < self.alpha < 1:
            raise ConfigError("level and alpha must lie in (0, 1)")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        allowed = ALLOWED_SCHEMES[self.experiment]
        bad = [s for s in self.schemes if s not in allowed]
        if bad or not self.schemes:
            raise ConfigError(f"schemes {bad} not available for {self.experiment.value}; "
                              f"choose from {list(allowed)}")
        if len(set(self.schemes)) != len(self.schemes):
            raise ConfigError("duplicate scheme")
        if self.theta is not None and self.tau is not None:
            raise ConfigError("give theta or tau, not both")
        if fam is Family.INDEPENDENCE:
            if self.experiment is Experiment.PARAM_CI:
                raise ConfigError("independence has no parameter to estimate")
        elif self.theta is None and self.tau is None:
            raise ConfigError("family needs theta or tau")
        try:
            self.model_base()
        except (ValueError, DomainError) as exc:
            raise ConfigError(f"invalid copula parameter: {exc}") from exc
        if self.experiment is Experiment.SYMMETRY_POWER:
            if self.delta is None:
                raise ConfigError("SymmetryPower needs delta")
        elif self.delta is not None and self.experiment is not Experiment.SYMMETRY_SIZE:
            raise ConfigError("delta only applies to symmetry experiments")
        if self.delta is not None and not 0 <= self.delta <= 1:
            raise ConfigError("delta must lie in [0, 1]")
        if self.experiment in (Experiment.SYMMETRY_SIZE, Experiment.SYMMETRY_POWER):
            try:
                [Statistic(s) for s in self.statistics]
            except ValueError as exc:
                raise ConfigError(f"bad statistic: {exc}") from exc
            if not self.statistics:
                raise ConfigError("need at least one statistic")
        # too few replicates for an interval or a covariance is a per-run
        # failure, reported in the failures column, not a config error
        if self.experiment is Experiment.COVARIANCE and self.truth not in ("oracle", "analytic"):
            raise ConfigError("truth must be 'oracle' or 'analytic'")

    # -- models -------------------------------------------------------------

    def theta_value(self) -> float:
        fam = Family(self.family)
        if fam is Family.INDEPENDENCE:
            return 0.0
        if self.theta is not None:
            return float(self.theta)
        return float(theta_of_tau(fam, self.tau))

    def model_base(self) -> CopulaModel:
        fam = Family(self.family)
        if fam is Family.INDEPENDENCE:
            return CopulaModel(fam)
        return CopulaModel(fam, self.theta_value())

    def model(self):
        base = self.model_base()
        if self.delta is not None:
            return KhoudrajiModel(base, self.delta)
        return base

    # -- I/O ----------------------------------------------------------------

    @classmethod
    def from_mapping(cls, values: dict) -> "ExperimentConfig":
        """Build a config from string values, e.g. an INI section."""
        aliases = {"kind": "experiment", "n": "n_values", "runs": "M", "boot": "B",
                   "m": "M", "b": "B"}
        known = {f.name for f in fields(cls)}
        kw = {}
        for key, raw in values.items():
            k = aliases.get(key.strip().lower(), key.strip().lower())
            if k not in known and k not in ("M", "B"):
                raise ConfigError(f"unknown config key {key!r}")
            kw[k] = raw
        try:
            return cls(**{k: _convert(k, v) for k, v in kw.items()})
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc

    @classmethod
    def from_file(cls, path) -> "ExperimentConfig":
        parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
        parser.optionxform = str
        try:
            with open(path) as fh:
                parser.read_file(fh)
        except configparser.Error as exc:
            raise ConfigError(f"{path}: {exc}") from exc
        sections = parser.sections()
        if len(sections) != 1:
            raise ConfigError(f"{path}: expected exactly one [section], found {len(sections)}")
        return cls.from_mapping(dict(parser[sections[0]]))

    def to_ini(self) -> str:
        out = ["[experiment]"]
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None or (f.name == "name" and not v):
                continue
            if isinstance(v, enum.Enum):
                v = v.value
            if isinstance(v, list):
                v = ", ".join(str(x) for x in v)
            out.append(f"{f.name} = {v}")
        return "\n".join(out) + "\n"


def _convert(key, raw):
    if not isinstance(raw, str):
        return raw
    raw = raw.strip()
    try:
        if key in ("n_values",):
            return [int(x) for x in raw.replace(",", " ").split()]
        if key in ("schemes", "statistics"):
            return [x for x in raw.replace(",", " ").split()]
        if key in ("M", "B", "seed", "threads", "oracle_samples", "oracle_n"):
            return int(raw)
        if key in ("theta", "tau", "delta", "level", "alpha"):
            return None if raw.lower() in ("", "none") else _parse_float(raw)
    except ValueError as exc:
        raise ConfigError(f"bad value for {key}: {raw!r}") from exc
    return raw


def _parse_float(raw: str) -> float:
    if "/" in raw:
        num, den = raw.split("/", 1)
        return float(num) / float(den)
    return float(raw)


# ----------------------------------------------------------------------------
# Reports
# ----------------------------------------------------------------------------


@dataclass
class ReportRow:
    experiment: str
    family: str
    theta: float
    delta: float | None
    scheme: str
    n: int
    metric: str
    value: float
    mc_se: float
    failures: int


@dataclass
class ExperimentReport:
    rows: list = field(default_factory=list)
    wall_seconds: float = 0.0

    def extend(self, other: "ExperimentReport"):
        self.rows.extend(other.rows)
        self.wall_seconds += other.wall_seconds

    def lookup(self, scheme: str, n: int, metric: str, theta: float | None = None) -> ReportRow:
        hits = [r for r in self.rows if r.scheme == scheme and r.n == n and r.metric == metric
                and (theta is None or math.isclose(r.theta, theta, rel_tol=1e-9, abs_tol=1e-12))]
        if len(hits) != 1:
            raise KeyError(f"{len(hits)} rows match ({scheme}, {n}, {metric}, {theta})")
        return hits[0]


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if not np.isfinite(x):
        return "nan"
    return f"{float(x):.6g}"


def emit_report(report: ExperimentReport, path) -> Path:
    """Write the report as CSV (header always present, numbers at 6 significant digits)."""
    path = Path(path)
    try:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CSV_HEADER)
            for r in report.rows:
                w.writerow([r.experiment, r.family, _fmt(r.theta), _fmt(r.delta), r.scheme,
                            r.n, r.metric, _fmt(r.value), _fmt(r.mc_se), r.failures])
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc.strerror or exc}") from exc
    return path


def read_report(path) -> list[dict]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


# ----------------------------------------------------------------------------
# Single Monte Carlo run
# ----------------------------------------------------------------------------


def stream(seed: int, n: int, run: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, n, run, index])))


def _covered_length(ci: ConfidenceInterval, truth: float):
    return {"coverage": float(ci.contains(truth)), "length": ci.length}


def _percentile(values, level, method):
    return ci_bootstrap_percentile(np.asarray(values, dtype=float).ravel(), level=level,
                                   method=method)


def _run_ci(cfg: ExperimentConfig, n: int, run: int, ctx: dict):
    fam = Family(cfg.family)
    x = copula_sample(cfg.model(), n, stream(cfg.seed, n, run, 0))
    r = compute_ranks(x)
    out = {}
    kind = cfg.experiment
    fit = None
    if kind is Experiment.PARAM_CI:
        fit = pseudo_likelihood_estimate(r, fam)
    for k, scheme in enumerate(cfg.schemes, start=1):
        rng = stream(cfg.seed, n, run, k)
        try:
            if kind is Experiment.PARAM_CI and bool(fit.at_boundary):
                raise EstimationError("estimate at bracket end")
            if scheme == "asymp":
                if kind is Experiment.KENDALL_CI:
                    ci = ci_asymptotic_tau(r, cfg.level)
                else:
                    th = float(fit.theta)
                    ci = ci_asymptotic(th, ggr_asymptotic_variance(r, fam, th), n, cfg.level)
            elif scheme == "param":
                ci = ci_parametric(fam, r, cfg.B, rng, cfg.level)
                if ci.flagged:
                    raise EstimationError("parametric interval flagged")
            else:
                method = Method.BOOT if scheme == "boot" else Method.BETA
                if scheme == "boot":
                    rb = straightforward_resample(r, cfg.B, rng)
                else:
                    rb = beta_resample_ranks(r, cfg.B, rng)
                if kind is Experiment.KENDALL_CI:
                    vals = kendall_tau_hat(rb)
                elif kind is Experiment.SPEARMAN_CI:
                    vals = spearman_rho_ties(rb) if scheme == "boot" else spearman_rho(rb)
                else:
                    vals = pseudo_likelihood_theta(fam)(rb)
                ci = _percentile(vals, cfg.level, method)
            out[scheme] = _covered_length(ci, ctx["truth"])
        except (EstimationError, ValueError, FloatingPointError):
            out[scheme] = None
    return out


def _run_symmetry(cfg: ExperimentConfig, n: int, run: int, ctx: dict):
    x = copula_sample(cfg.model(), n, stream(cfg.seed, n, run, 0))
    r = compute_ranks(x)
    tab = ctx.get("tables")
    out = {}
    for k, scheme in enumerate(cfg.schemes, start=1):
        res = symmetry_tests(r, cfg.statistics, scheme, cfg.B, stream(cfg.seed, n, run, k), tab)
        out[scheme] = {f"rejection_{s.value}": float(t.rejects(cfg.alpha)) for s, t in res.items()}
    return out


def _frac(x: float) -> str:
    f = Fraction(float(x)).limit_denominator(1000)
    return str(f) if abs(float(f) - x) < 1e-9 else f"{x:.6g}"


def _cell_labels(grid):
    return [f"{_frac(a)};{_frac(b)}" for a, b in grid]


def _run_covariance(cfg: ExperimentConfig, n: int, run: int, ctx: dict):
    x = copula_sample(cfg.model(), n, stream(cfg.seed, n, run, 0))
    r = compute_ranks(x)
    truth = ctx["truth"]
    grid = ctx["grid"]
    labels = _cell_labels(grid)
    iu = np.triu_indices(len(grid))
    out = {}
    for k, scheme in enumerate(cfg.schemes, start=1):
        try:
            est = covariance_estimate(r, scheme, grid, cfg.B, stream(cfg.seed, n, run, k))
        except ValueError:
            out[scheme] = None
            continue
        err = (est.cov - truth)[iu] ** 2 * 1e4
        out[scheme] = {f"mse_x1e4[{labels[i]}|{labels[j]}]": float(e)
                       for i, j, e in zip(*iu, err)}
    return out


_RUNNERS = {
    Experiment.KENDALL_CI: _run_ci,
    Experiment.SPEARMAN_CI: _run_ci,
    Experiment.PARAM_CI: _run_ci,
    Experiment.SYMMETRY_SIZE: _run_symmetry,
    Experiment.SYMMETRY_POWER: _run_symmetry,
    Experiment.COVARIANCE: _run_covariance,
}


def _context(cfg: ExperimentConfig, n: int) -> dict:
    kind = cfg.experiment
    fam = Family(cfg.family)
    theta = cfg.theta_value()
    if kind is Experiment.KENDALL_CI:
        return {"truth": 0.0 if fam is Family.INDEPENDENCE else tau_of_theta(fam, theta)}
    if kind is Experiment.SPEARMAN_CI:
        return {"truth": 0.0 if fam is Family.INDEPENDENCE else rho_of_theta(fam, theta)}
    if kind is Experiment.PARAM_CI:
        return {"truth": theta}
    if kind is Experiment.COVARIANCE:
        grid = COVARIANCE_GRID
        model = cfg.model_base()
        if cfg.truth == "analytic":
            truth = limit_covariance(model, grid)
        else:
            truth = covariance_oracle(model, grid, cfg.oracle_samples, cfg.oracle_n)
        return {"truth": truth, "grid": grid}
    stats_needed = {Statistic(s) for s in cfg.statistics}
    if stats_needed & {Statistic.SN_BETA, Statistic.RN_BETA}:
        return {"tables": integral_tables(n)}
    return {}


_WORKER = {}


def _init_worker(cfg, n, ctx):
    _WORKER.update(cfg=cfg, n=n, ctx=ctx)


def _worker_run(run: int):
    cfg, n, ctx = _WORKER["cfg"], _WORKER["n"], _WORKER["ctx"]
    return _RUNNERS[cfg.experiment](cfg, n, run, ctx)


def _aggregate(cfg: ExperimentConfig, n: int, results: list) -> list:
    rows = []
    M = len(results)
    theta = cfg.theta_value()
    for scheme in cfg.schemes:
        per_run = [res[scheme] for res in results]
        ok = [v for v in per_run if v is not None]
        failures = M - len(ok)
        metrics = list(ok[0].keys()) if ok else _expected_metrics(cfg)
        for metric in metrics:
            vals = np.array([v[metric] for v in ok], dtype=float)
            m_ok = vals.size
            if m_ok == 0:
                value, se = float("nan"), float("nan")
            else:
                value = float(vals.mean())
                if metric in ("coverage",) or metric.startswith("rejection"):
                    se = math.sqrt(value * (1 - value) / m_ok)
                else:
                    se = float(vals.std(ddof=1) / math.sqrt(m_ok)) if m_ok > 1 else float("nan")
            rows.append(ReportRow(cfg.experiment.value, cfg.family, theta, cfg.delta, scheme,
                                  n, metric, value, se, failures))
    return rows


def _expected_metrics(cfg):
    if cfg.experiment in (Experiment.SYMMETRY_SIZE, Experiment.SYMMETRY_POWER):
        return [f"rejection_{s}" for s in cfg.statistics]
    if cfg.experiment is Experiment.COVARIANCE:
        labels = _cell_labels(COVARIANCE_GRID)
        return [f"mse_x1e4[{labels[i]}|{labels[j]}]" for i, j in zip(*np.triu_indices(len(labels)))]
    return ["coverage", "length"]


def run_experiment(config: ExperimentConfig, progress=True) -> ExperimentReport:
    """Run every sample size of ``config`` and aggregate one row per (scheme, n, metric)."""
    config.validate()
    t0 = time.perf_counter()
    rows = []
    for n in config.n_values:
        ctx = _context(config, n)
        results = [None] * config.M
        step = max(1, config.M // 100)
        label = f"{config.experiment.value} {config.family} n={n}"

        def tick(done):
            if progress and (done % step == 0 or done == config.M):
                print(f"[{label}] {100 * done // config.M:3d}% ({done}/{config.M})",
                      file=sys.stderr, flush=True)

        if config.threads == 1:
            for m in range(config.M):
                results[m] = _RUNNERS[config.experiment](config, n, m, ctx)
                tick(m + 1)
        else:
            with ProcessPoolExecutor(max_workers=config.threads, initializer=_init_worker,
                                     initargs=(config, n, ctx)) as pool:
                chunk = max(1, config.M // (4 * config.threads))
                for m, res in enumerate(pool.map(_worker_run, range(config.M), chunksize=chunk)):
                    results[m] = res
                    tick(m + 1)
        rows.extend(_aggregate(config, n, results))
    wall = time.perf_counter() - t0
    if progress:
        print(f"[{config.experiment.value}] done in {wall:.1f} s", file=sys.stderr, flush=True)
    return ExperimentReport(rows, wall)


def run_experiments(configs, progress=True) -> ExperimentReport:
    report = ExperimentReport()
    for cfg in configs:
        report.extend(run_experiment(cfg, progress))
    return report


def with_overrides(cfg: ExperimentConfig, **kw) -> ExperimentConfig:
    """Copy of ``cfg`` with the non-None keyword values replaced."""
    changes = {k: v for k, v in kw.items() if v is not None}
    try:
        return replace(cfg, **changes)
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc
