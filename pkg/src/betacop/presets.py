"""Preset experiment configurations reproducing the published simulation tables.

``desk`` presets are reduced versions (fewer runs, replications and sample
sizes) meant to finish in minutes on one machine; ``full`` presets use
``M = B = 1000`` and every sample size and scheme of the original table.
"""

from __future__ import annotations

import math

from .experiments import Experiment, ExperimentConfig, ReportRow
from .parametric import Family, rho_of_theta, tau_of_theta, theta_of_rho
from .published import published

TABLES = (1, 2, 3, 4, 5, 6, 7, 8)
SCALES = ("desk", "full")

_CI_N = [40, 60, 80, 100]
_SYM_N = [50, 100, 200, 400]


def _corr_models(kind):
    """Independence plus the two Clayton models with correlation +-0.5."""
    out = [("independence", None)]
    for target in (0.5, -0.5):
        if kind is Experiment.KENDALL_CI:
            out.append(("clayton", 2 * target / (1 - target)))
        else:
            out.append(("clayton", theta_of_rho(Family.CLAYTON, target)))
    return out


def table_configs(table: int, scale: str = "desk") -> list:
    """The experiment configurations of one table at the given scale."""
    if table not in TABLES:
        raise ValueError(f"no preset for table {table}")
    if scale not in SCALES:
        raise ValueError(f"scale must be one of {SCALES}")
    full = scale == "full"
    seed0 = 1000 * table
    cfgs = []

    def add(**kw):
        kw.setdefault("seed", seed0 + len(cfgs))
        kw.setdefault("name", f"table{table}-{scale}-{len(cfgs)}")
        cfgs.append(ExperimentConfig(**kw))

    if table == 1:
        add(experiment=Experiment.COVARIANCE, family="clayton", theta=1.0,
            n_values=[100, 200] if full else [100], M=1000, B=1000)
    elif table in (2, 3):
        kind = Experiment.KENDALL_CI if table == 2 else Experiment.SPEARMAN_CI
        if full:
            schemes = ["asymp", "boot", "beta"] if table == 2 else ["boot", "beta"]
            n_values, M, B = _CI_N, 1000, 1000
        else:
            schemes = ["asymp", "beta"] if table == 2 else ["boot", "beta"]
            n_values, M, B = (_CI_N if table == 2 else [40, 100]), 500, 500
        for fam, theta in _corr_models(kind):
            add(experiment=kind, family=fam, theta=theta, n_values=n_values, M=M, B=B,
                schemes=schemes)
    elif table in (4, 5):
        models = ([("clayton", 1.0), ("clayton", 2.0)] if table == 4 else
                  [("gauss", 1 / math.sqrt(2)), ("frank", 5.75), ("gumbel", 2.0)])
        for fam, theta in models:
            add(experiment=Experiment.PARAM_CI, family=fam, theta=theta,
                n_values=_CI_N if full else [100], M=1000 if full else 300,
                B=1000 if full else 300, schemes=["asymp", "boot", "beta", "param"])
    elif table in (6, 7):
        fam = "clayton" if table == 6 else "gauss"
        taus = (-0.2, 0.25, 0.5, 0.75) if table == 6 else (-0.5, 0.25, 0.5, 0.75)
        for tau in taus:
            add(experiment=Experiment.SYMMETRY_SIZE, family=fam, tau=tau,
                n_values=_SYM_N if full else [50, 100], M=1000 if full else 500,
                B=1000 if full else 250, schemes=["BetaSym", "BootSym"],
                statistics=["Sn", "Rn", "SnBeta", "RnBeta"])
    else:
        for fam in ("clayton", "gauss"):
            for delta in (0.25, 0.5, 0.75):
                for tau in (0.25, 0.5, 0.75):
                    add(experiment=Experiment.SYMMETRY_POWER, family=fam, tau=tau, delta=delta,
                        n_values=_SYM_N if full else [100], M=1000 if full else 300,
                        B=1000 if full else 250, schemes=["BetaSym", "BootSym"],
                        statistics=["Rn", "RnBeta"])
    return cfgs


_SYM_LABEL = {("BetaSym", "Sn"): ("beta", "Sn"), ("BetaSym", "Rn"): ("beta", "Rn"),
              ("BetaSym", "SnBeta"): ("beta2", "Sn"), ("BetaSym", "RnBeta"): ("beta2", "Rn"),
              ("BootSym", "Sn"): ("boot", "Sn"), ("BootSym", "Rn"): ("boot", "Rn")}


def reference_value(table: int, row: ReportRow) -> float | None:
    """Published counterpart of a report row, or None when the table has none."""
    fam = Family(row.family)
    theta = row.theta
    lookup_family = "clayton" if fam is Family.INDEPENDENCE else row.family
    scheme, metric = row.scheme, row.metric
    if table in (2, 6, 7, 8):
        param = 0.0 if fam is Family.INDEPENDENCE else tau_of_theta(fam, theta)
    elif table == 3:
        param = 0.0 if fam is Family.INDEPENDENCE else rho_of_theta(fam, theta)
    else:
        param = theta
    if table in (6, 7, 8):
        stat = metric.removeprefix("rejection_")
        if (scheme, stat) not in _SYM_LABEL:
            return None
        scheme, stat = _SYM_LABEL[(scheme, stat)]
        metric = f"rejection_{stat}"
        if table == 8:
            param = (param, row.delta)
    try:
        return published(table, lookup_family, param, scheme, row.n, metric)
    except KeyError:
        return None
