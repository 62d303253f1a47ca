"""Bootstrap engines for rank statistics and empirical copula processes.

Four schemes are provided: the straightforward (multinomial) bootstrap, the
partial-derivatives multiplier bootstrap, the standard bootstrap of the
empirical beta copula, and the smoothed beta bootstrap that resamples from
the empirical beta copula itself (optionally symmetrized).

Rank matrices are integer arrays of shape (n, d). Functions that accept
batches take a leading replicate axis, e.g. weights of shape (B, n).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .empirical import BetaKernelTable, max_ranks, rank_empirical_copula, rerank
from .parametric import CopulaModel, copula_sample


class Scheme(str, enum.Enum):
    STRAIGHTFORWARD = "boot"
    MULTIPLIER_PDM = "pdm"
    BETA_STANDARD = "beta_std"
    BETA_SMOOTHED = "beta"
    BETA_SMOOTHED_SYM = "beta_sym"
    PARAMETRIC = "param"


@dataclass
class Replicates:
    values: np.ndarray
    scheme: Scheme
    failures: int = 0

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.ndim == 1:
            self.values = self.values[:, None]
        if self.values.shape[0] < 1:
            raise ValueError("need at least one replicate")

    @property
    def B(self) -> int:
        return self.values.shape[0]

    def column(self, k: int = 0) -> np.ndarray:
        return self.values[:, k]


# ----------------------------------------------------------------------------
# Weights
# ----------------------------------------------------------------------------


def multinomial_weights(n: int, rng: np.random.Generator, size: int | None = None) -> np.ndarray:
    """Multinomial(n; 1/n, ..., 1/n) counts, shape (n,) or (size, n)."""
    p = np.full(n, 1.0 / n)
    if size is None:
        return rng.multinomial(n, p)
    return rng.multinomial(n, p, size=size)


@dataclass(frozen=True)
class MultiplierLaw:
    """Law of the i.i.d. nonnegative multipliers, with its mean and sd."""

    mean: float = 1.0
    sd: float = 1.0
    draw: Callable[[np.random.Generator, tuple], np.ndarray] = field(
        default=lambda rng, shape: 2.0 * rng.integers(0, 2, size=shape)
    )

    def __post_init__(self):
        if self.mean <= 0 or self.sd <= 0:
            raise ValueError("multiplier law needs positive mean and sd")


TWO_POINT = MultiplierLaw()


def draw_multipliers(n: int, rng: np.random.Generator, size: int | None = None,
                     law: MultiplierLaw = TWO_POINT) -> np.ndarray:
    """Draw multiplier vectors, redrawing any vector whose mean is zero."""
    shape = (n,) if size is None else (size, n)
    xi = np.asarray(law.draw(rng, shape), dtype=float)
    if np.any(xi < 0):
        raise ValueError("multipliers must be nonnegative")
    while True:
        bad = xi.sum(axis=-1) == 0
        if not np.any(bad):
            return xi
        if size is None:
            xi = np.asarray(law.draw(rng, shape), dtype=float)
        else:
            xi[bad] = law.draw(rng, (int(bad.sum()), n))


# ----------------------------------------------------------------------------
# Straightforward bootstrap
# ----------------------------------------------------------------------------


def bootstrap_ranks(ranks, w) -> np.ndarray:
    """Weighted ranks ``R*_ij = sum_k W_k 1{R_kj <= R_ij}``.

    ``w`` has shape (n,) or (B, n); the result has shape ``w.shape + (d,)``.
    ``ranks`` must have permutation columns.
    """
    r = np.asarray(ranks)
    w = np.asarray(w)
    n, d = r.shape
    out = np.empty(w.shape + (d,), dtype=np.int64)
    for j in range(d):
        order = np.argsort(r[:, j])
        cw = np.cumsum(w[..., order], axis=-1)
        out[..., j] = cw[..., r[:, j] - 1]
    return out


def straightforward_bootstrap_copula(ranks, w, u) -> np.ndarray:
    """``n^-1 sum_i W_i prod_j 1{R*_ij / n <= u_j}`` at points ``u`` (..., d)."""
    r = np.asarray(ranks)
    n, d = r.shape
    w = np.asarray(w, dtype=float)
    rs = bootstrap_ranks(r, w.astype(np.int64))
    u = np.asarray(u, dtype=float)
    flat = u.reshape(-1, d)
    inside = np.all(rs[..., :, None, :] / n <= flat[None, :, :], axis=-1)
    val = np.einsum("...i,...ig->...g", w, inside) / n
    return val.reshape(w.shape[:-1] + u.shape[:-1])


def straightforward_resample(ranks, B: int, rng: np.random.Generator,
                             symmetrize: bool = False) -> np.ndarray:
    """B resamples of the rows of ``ranks``, re-ranked with max-rank ties.

    With ``symmetrize`` each drawn row has its coordinates swapped with
    probability 1/2 before re-ranking (bivariate only).
    """
    r = np.asarray(ranks)
    n, d = r.shape
    idx = rng.integers(0, n, size=(B, n))
    rows = r[idx]
    if symmetrize:
        if d != 2:
            raise ValueError("symmetrization needs d = 2")
        flip = rng.integers(0, 2, size=(B, n)).astype(bool)
        rows = np.where(flip[..., None], rows[..., ::-1], rows)
    return max_ranks(rows, n)


def straightforward_bootstrap(ranks, stat, B: int, rng: np.random.Generator,
                              batched: bool = False) -> Replicates:
    """Replicates of ``stat`` over multinomial resamples (ties use max ranks)."""
    if B < 1:
        raise ValueError("B must be >= 1")
    rs = straightforward_resample(ranks, B, rng)
    vals = _apply(stat, rs, batched)
    return Replicates(vals, Scheme.STRAIGHTFORWARD)


# ----------------------------------------------------------------------------
# Multiplier bootstrap with estimated partial derivatives
# ----------------------------------------------------------------------------


def estimate_partial_derivative(ranks, u, j: int) -> np.ndarray:
    """Finite-difference estimate of ``dC/du_j`` with spacing ``n^-1/2``.

    Near the boundary the difference is one-sided; values are clamped to
    [0, 1].
    """
    r = np.asarray(ranks)
    n, d = r.shape
    u = np.asarray(u, dtype=float)
    h = n ** -0.5
    up = u.copy()
    lo = u.copy()
    up[..., j] = np.minimum(u[..., j] + h, 1.0)
    lo[..., j] = np.maximum(u[..., j] - h, 0.0)
    diff = rank_empirical_copula(r, up) - rank_empirical_copula(r, lo)
    return np.clip(diff / (up[..., j] - lo[..., j]), 0.0, 1.0)


def multiplier_pdm_replicate(ranks, xi, grid, law: MultiplierLaw = TWO_POINT) -> np.ndarray:
    """Replicates of the partial-derivatives multiplier process at ``grid``.

    ``xi`` has shape (n,) or (B, n); returns shape ``xi.shape[:-1] + (G,)``.
    """
    r = np.asarray(ranks)
    n, d = r.shape
    grid = np.atleast_2d(np.asarray(grid, dtype=float))
    xi = np.asarray(xi, dtype=float)
    xbar = xi.mean(axis=-1, keepdims=True)
    if np.any(xbar == 0):
        raise ValueError("all-zero multiplier vector; redraw")
    pert = xi / xbar - 1.0  # (…, n)
    scale = np.sqrt(n) * law.mean / law.sd / n
    joint = np.all(r[:, None, :] / n <= grid[None, :, :], axis=-1).astype(float)  # (n, G)
    beta = scale * pert @ joint
    out = beta.copy()
    for j in range(d):
        marg = (r[:, j][:, None] / n <= grid[None, :, j]).astype(float)
        deriv = estimate_partial_derivative(r, grid, j)
        out -= deriv * (scale * pert @ marg)
    return out


# ----------------------------------------------------------------------------
# Beta copula bootstraps
# ----------------------------------------------------------------------------


def beta_bootstrap_standard(ranks, w, u) -> np.ndarray:
    """``n^-1 sum_i W_i prod_j F_{n, R*_ij}(u_j)`` at points ``u`` (..., d)."""
    r = np.asarray(ranks)
    n, d = r.shape
    w = np.asarray(w)
    rs = bootstrap_ranks(r, w.astype(np.int64))
    u = np.asarray(u, dtype=float)
    flat = u.reshape(-1, d)
    prod = np.ones(rs.shape[:-1] + (flat.shape[0],))
    for j in range(d):
        lv, inv = np.unique(flat[:, j], return_inverse=True)
        tab = BetaKernelTable(n, lv)
        prod = prod * tab.values[rs[..., j]][..., inv]
    val = np.einsum("...i,...ig->...g", w.astype(float), prod) / n
    return val.reshape(w.shape[:-1] + u.shape[:-1])


def _gamma_ratio_beta(a, b, rng):
    ga = rng.standard_gamma(a)
    gb = rng.standard_gamma(b)
    return ga / (ga + gb)


def beta_copula_sample(ranks, m: int, rng: np.random.Generator, symmetrize: bool = False,
                       size: int | None = None) -> np.ndarray:
    """Draw ``m`` points from the empirical beta copula of ``ranks``.

    Each draw picks a row index uniformly and then independent
    Beta(r, n + 1 - r) coordinates. With ``symmetrize`` the two coordinates
    of every draw are swapped with probability 1/2. ``size`` adds a leading
    batch axis.
    """
    r = np.asarray(ranks)
    n, d = r.shape
    if m < 1:
        raise ValueError("m must be >= 1")
    if symmetrize and d != 2:
        raise ValueError("symmetrization needs d = 2")
    shape = (m,) if size is None else (size, m)
    idx = rng.integers(0, n, size=shape)
    a = r[idx].astype(float)
    v = _gamma_ratio_beta(a, n + 1.0 - a, rng)
    if symmetrize:
        flip = rng.integers(0, 2, size=shape).astype(bool)
        v = np.where(flip[..., None], v[..., ::-1], v)
    return v


def _apply(stat, rank_batch, batched):
    if batched:
        return np.asarray(stat(rank_batch), dtype=float)
    return np.asarray([stat(rb) for rb in rank_batch], dtype=float)


def beta_resample_ranks(ranks, B: int, rng: np.random.Generator, symmetrize: bool = False,
                        m: int | None = None) -> np.ndarray:
    """B re-ranked samples drawn from the (symmetrized) empirical beta copula."""
    n = np.asarray(ranks).shape[0]
    v = beta_copula_sample(ranks, n if m is None else m, rng, symmetrize, size=B)
    return rerank(v)


def smoothed_beta_bootstrap(ranks, stat, B: int, rng: np.random.Generator,
                            symmetrize: bool = False, m: int | None = None,
                            batched: bool = False, chunk: int = 250) -> Replicates:
    """Smoothed beta bootstrap replicates of a rank statistic.

    ``stat`` maps a rank matrix (n, d) to a scalar or vector. With
    ``batched=True`` it instead receives a stack (b, n, d) and must return
    one row per sample. Draws are made in chunks of ``chunk`` replicates.
    """
    if B < 1:
        raise ValueError("B must be >= 1")
    out = []
    for start in range(0, B, chunk):
        b = min(chunk, B - start)
        rb = beta_resample_ranks(ranks, b, rng, symmetrize, m)
        out.append(np.atleast_1d(_apply(stat, rb, batched)).reshape(b, -1))
    scheme = Scheme.BETA_SMOOTHED_SYM if symmetrize else Scheme.BETA_SMOOTHED
    return Replicates(np.concatenate(out, axis=0), scheme)


def parametric_bootstrap(family, theta_hat: float, n: int, estimator, B: int,
                         rng: np.random.Generator, batched: bool = False) -> Replicates:
    """Replicates of ``estimator`` on fresh samples of size ``n`` from the fitted copula.

    ``estimator`` receives rank matrices. Non-finite outputs are failures:
    they are dropped and counted.
    """
    if B < 1:
        raise ValueError("B must be >= 1")
    model = CopulaModel(family, theta_hat)
    x = copula_sample(model, (B, n), rng)
    vals = np.atleast_1d(_apply(estimator, rerank(x), batched)).reshape(B, -1)
    ok = np.all(np.isfinite(vals), axis=1)
    failures = int((~ok).sum())
    if failures == B:
        return Replicates(np.full((1, vals.shape[1]), np.nan), Scheme.PARAMETRIC, failures)
    return Replicates(vals[ok], Scheme.PARAMETRIC, failures)
