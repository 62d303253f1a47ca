"""Ranks, the empirical copula, its rank-based version and the empirical beta copula."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy import special


class TiesError(ValueError):
    """Raised when an observed sample has tied values within a column."""


def compute_ranks(sample) -> np.ndarray:
    """Coordinatewise ranks ``R_ij = #{k : X_kj <= X_ij}`` of a tie-free sample.

    Parameters
    ----------
    sample : array_like, shape (n, d)

    Returns
    -------
    ranks : ndarray of int, shape (n, d)
        Each column is a permutation of ``1..n``.
    """
    x = np.asarray(sample, dtype=float)
    if x.ndim != 2:
        raise ValueError(f"sample must be an n x d matrix, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValueError("sample has non-finite entries")
    order = np.argsort(x, axis=0, kind="stable")
    xs = np.take_along_axis(x, order, axis=0)
    if np.any(np.diff(xs, axis=0) == 0):
        raise TiesError("ties within a column; ranks are only defined for continuous data")
    ranks = np.empty_like(order)
    np.put_along_axis(ranks, order, np.arange(1, x.shape[0] + 1)[:, None], axis=0)
    return ranks


def rerank(values) -> np.ndarray:
    """Ranks along axis -2 of a batch of tie-free samples, shape (..., n, d)."""
    v = np.asarray(values)
    order = np.argsort(v, axis=-2)
    ranks = np.empty(v.shape, dtype=np.int64)
    n = v.shape[-2]
    idx = np.broadcast_to(np.arange(1, n + 1)[:, None], (n, v.shape[-1]))
    np.put_along_axis(ranks, order, np.broadcast_to(idx, v.shape), axis=-2)
    return ranks


def max_ranks(values, n_levels: int | None = None) -> np.ndarray:
    """``#{k : y_kj <= y_ij}`` along axis -2 for integer data with ties.

    ``values`` holds integers in ``1..n_levels`` with shape (..., n, d).
    """
    y = np.asarray(values, dtype=np.int64)
    n = y.shape[-2]
    levels = n if n_levels is None else n_levels
    # move axis -2 last, flatten the rest into independent rows
    moved = np.moveaxis(y, -2, -1)
    rows = moved.reshape(-1, n)
    offset = (np.arange(rows.shape[0]) * (levels + 1))[:, None]
    counts = np.bincount((rows + offset).ravel(), minlength=rows.shape[0] * (levels + 1))
    cum = np.cumsum(counts.reshape(rows.shape[0], levels + 1), axis=1)
    out = np.take_along_axis(cum, rows, axis=1)
    return np.moveaxis(out.reshape(moved.shape), -1, -2)


def _points(u, d):
    u = np.asarray(u, dtype=float)
    if u.shape[-1] != d:
        raise ValueError(f"evaluation points need trailing dimension {d}, got {u.shape}")
    return u


def rank_empirical_copula(ranks, u) -> np.ndarray:
    """``n^-1 sum_i prod_j 1{R_ij / n <= u_j}`` at a point or array of points."""
    r = np.asarray(ranks)
    n, d = r.shape
    u = _points(u, d)
    flat = u.reshape(-1, d)
    inside = np.all(r[None, :, :] / n <= flat[:, None, :], axis=-1)
    return inside.mean(axis=1).reshape(u.shape[:-1])


def _ecdf_inverse(col, w, u):
    """Generalized inverse of the weighted ECDF of ``col`` at levels ``u``."""
    keep = w > 0
    atoms = col[keep]
    wt = w[keep]
    order = np.argsort(atoms, kind="stable")
    atoms = atoms[order]
    cdf = np.cumsum(wt[order]) / wt.sum()
    idx = np.searchsorted(cdf, u, side="left")
    return atoms[np.minimum(idx, len(atoms) - 1)]


def deheuvels_empirical_copula(sample, u, weights=None) -> np.ndarray:
    """Empirical copula ``F_n(F_n1^-(u_1), ..., F_nd^-(u_d))``.

    ``weights`` (nonnegative, e.g. multinomial bootstrap counts) turn every
    ECDF into its weighted version; ties in ``sample`` are allowed.
    """
    x = np.asarray(sample, dtype=float)
    n, d = x.shape
    w = np.ones(n) if weights is None else np.asarray(weights, dtype=float)
    if w.sum() <= 0:
        raise ValueError("weights must have positive total")
    u = _points(u, d)
    flat = u.reshape(-1, d)
    q = np.column_stack([_ecdf_inverse(x[:, j], w, flat[:, j]) for j in range(d)])
    inside = np.all(x[None, :, :] <= q[:, None, :], axis=-1)
    return (inside @ w / w.sum()).reshape(u.shape[:-1])


def beta_kernel(n: int, r, u) -> np.ndarray:
    """Beta(r, n + 1 - r) CDF, i.e. ``P(Bin(n, u) >= r)``.

    ``r = 0`` is accepted and gives 1; it arises for bootstrap ranks of rows
    that were not resampled.
    """
    r = np.asarray(r)
    if np.any((r < 0) | (r > n)):
        raise ValueError(f"rank out of range 0..{n}")
    u = np.asarray(u, dtype=float)
    rr = np.maximum(r, 1)
    out = special.betainc(rr, n + 1 - rr, u)
    return np.where(r == 0, 1.0, out)


class BetaKernelTable:
    """Values ``F_{n,r}(u)`` for ``r = 0..n`` at a fixed set of levels.

    Row ``r`` of :attr:`values` holds ``F_{n,r}`` at :attr:`levels`; row 0 is
    the constant 1.
    """

    def __init__(self, n: int, levels):
        self.n = int(n)
        self.levels = np.asarray(levels, dtype=float)
        r = np.arange(self.n + 1)[:, None]
        self.values = beta_kernel(self.n, r, self.levels[None, :])
        self.values.setflags(write=False)

    def __call__(self, r, level_index):
        return self.values[r, level_index]


@lru_cache(maxsize=64)
def _cached_table(n: int, levels: tuple) -> BetaKernelTable:
    return BetaKernelTable(n, levels)


def _kernel_factors(ranks, n, u):
    """Per-coordinate kernel values, shape (..., n_rows, m_points, d)."""
    d = u.shape[-1]
    cols = []
    for j in range(d):
        lv, inv = np.unique(u[:, j], return_inverse=True)
        tab = _cached_table(n, tuple(lv.tolist()))
        cols.append(tab.values[ranks[..., j]][..., inv])
    return np.stack(cols, axis=-1)


def empirical_beta_copula(ranks, u, weights=None) -> np.ndarray:
    """``n^-1 sum_i w_i prod_j F_{n, R_ij}(u_j)``; ``weights`` default to ones."""
    r = np.asarray(ranks)
    n, d = r.shape
    u = _points(u, d)
    flat = u.reshape(-1, d)
    prod = _kernel_factors(r, n, flat).prod(axis=-1)
    w = np.ones(n) if weights is None else np.asarray(weights, dtype=float)
    return (w @ prod / n).reshape(u.shape[:-1])


def diagnostic_grid(d: int, m: int = 40) -> np.ndarray:
    """The grid ``{0, 1/m, ..., 1}^d`` as an array of shape (m + 1)^d x d."""
    axis = np.arange(m + 1) / m
    mesh = np.meshgrid(*([axis] * d), indexing="ij")
    return np.stack([g.ravel() for g in mesh], axis=-1)
