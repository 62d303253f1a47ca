"""Rank statistics.

Every statistic here takes a rank matrix of shape (n, 2). Most also accept a
stack of rank matrices, shape (B, n, 2), and then return one value per
matrix; this is what the bootstrap loops rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special

from .empirical import beta_kernel
from .parametric import (
    SMALL_THETA,
    CopulaModel,
    DomainError,
    Family,
    _log_density,
    _score,
    tau_of_theta,
)


class EstimationError(RuntimeError):
    """A numerical estimator could not produce a usable value."""


def _bivariate(ranks):
    r = np.asarray(ranks)
    if r.shape[-1] != 2 or r.ndim < 2:
        raise ValueError(f"expected rank matrices of shape (..., n, 2), got {r.shape}")
    return r


# ----------------------------------------------------------------------------
# Kendall's tau and Spearman's rho
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class KendallResult:
    tau_hat: float
    sigma_hat: float
    K: int


def _concordance(r):
    a = np.sign(r[..., :, None, 0] - r[..., None, :, 0]).astype(np.int8)
    b = np.sign(r[..., :, None, 1] - r[..., None, :, 1]).astype(np.int8)
    return a * b  # Q[k, i]


def kendall_tau_batch(ranks):
    """Kendall's tau-hat and its estimated standard deviation for a stack.

    Returns ``(tau_hat, sigma_hat, K)``, each with the batch shape.
    """
    r = _bivariate(ranks)
    n = r.shape[-2]
    if n < 2:
        raise ValueError("Kendall's tau needs n >= 2")
    if r.ndim == 2:
        c = _concordance(r).sum(axis=-2, dtype=np.int64)  # C_i = sum_{k != i} Q_{k,i}
    else:
        flat = r.reshape((-1, n, 2))
        step = max(1, 4_000_000 // (n * n))  # bound the n x n temporaries
        c = np.concatenate([_concordance(flat[i:i + step]).sum(axis=-2, dtype=np.int64)
                            for i in range(0, flat.shape[0], step)]).reshape(r.shape[:-1])
    k = c.sum(axis=-1) // 2
    tau = 2.0 * k / (n * (n - 1))
    if n < 3:
        return tau, np.zeros_like(tau), k
    cbar = 2.0 * k / n
    ss = ((c - cbar[..., None]) ** 2).sum(axis=-1)
    var = 2.0 / (n * (n - 1)) * (2.0 * (n - 2) / (n * (n - 1) ** 2) * ss + 1 - tau ** 2)
    return tau, np.sqrt(np.maximum(var, 0.0)), k


def kendall_tau(ranks) -> KendallResult:
    tau, sigma, k = kendall_tau_batch(np.asarray(ranks))
    return KendallResult(float(tau), float(sigma), int(k))


def kendall_tau_hat(ranks):
    """Only the point estimate; convenient as a bootstrap statistic."""
    return kendall_tau_batch(ranks)[0]


def spearman_rho(ranks):
    """``12 / (n (n^2 - 1)) sum_i (R_i1 - (n+1)/2)(R_i2 - (n+1)/2)``."""
    r = _bivariate(ranks).astype(float)
    n = r.shape[-2]
    if n < 2:
        raise ValueError("Spearman's rho needs n >= 2")
    c = (n + 1) / 2
    return 12.0 / (n * (n * n - 1)) * ((r[..., 0] - c) * (r[..., 1] - c)).sum(axis=-1)


def spearman_rho_ties(ranks):
    """Pearson correlation of mid-ranks; equals :func:`spearman_rho` without ties."""
    r = _bivariate(ranks)
    n = r.shape[-2]
    if n < 2:
        raise ValueError("Spearman's rho needs n >= 2")
    mids = []
    for j in range(2):
        col = r[..., j]
        le = (col[..., None, :] <= col[..., :, None]).sum(axis=-1)
        lt = (col[..., None, :] < col[..., :, None]).sum(axis=-1)
        mids.append((le + lt + 1) / 2.0)
    x, y = mids
    x = x - x.mean(axis=-1, keepdims=True)
    y = y - y.mean(axis=-1, keepdims=True)
    den = np.sqrt((x * x).sum(axis=-1) * (y * y).sum(axis=-1))
    with np.errstate(invalid="ignore", divide="ignore"):
        return (x * y).sum(axis=-1) / den


def beta_copula_spearman_rho(ranks):
    """Spearman's rho of the empirical beta copula, in closed form."""
    r = _bivariate(ranks).astype(float)
    n = r.shape[-2]
    return 12.0 / n * ((1 - r[..., 0] / (n + 1)) * (1 - r[..., 1] / (n + 1))).sum(axis=-1) - 3


# ----------------------------------------------------------------------------
# Pseudo-likelihood
# ----------------------------------------------------------------------------


def pseudo_observations(ranks) -> np.ndarray:
    r = np.asarray(ranks)
    return r / (r.shape[-2] + 1.0)


@dataclass
class PLEResult:
    theta: np.ndarray
    at_boundary: np.ndarray

    @property
    def ok(self) -> np.ndarray:
        return ~self.at_boundary & np.isfinite(self.theta)


# admissible Kendall's tau range used for brackets
_TAU_LIMITS = {
    Family.CLAYTON: (-0.9, 0.95),
    Family.GUMBEL: (0.0, 0.95),
    Family.FRANK: (-0.9, 0.9),
    Family.GAUSS: (-0.98, 0.98),
}


@lru_cache(maxsize=1)
def _frank_tau_grid():
    th = np.concatenate([-np.geomspace(80, 1e-3, 200), np.geomspace(1e-3, 80, 200)])
    tau = np.array([tau_of_theta(Family.FRANK, t) for t in th])
    return tau, th


def theta_of_tau_array(family: Family, tau) -> np.ndarray:
    """Vectorized tau -> theta; Frank uses monotone interpolation (brackets only)."""
    tau = np.asarray(tau, dtype=float)
    if family is Family.CLAYTON:
        th = 2 * tau / (1 - tau)
        return np.where(np.abs(th) < 1e-6, np.copysign(1e-6, th + 0.0), th)
    if family is Family.GUMBEL:
        return 1 / (1 - tau)
    if family is Family.GAUSS:
        return np.sin(np.pi * tau / 2)
    if family is Family.FRANK:
        tg, thg = _frank_tau_grid()
        return np.interp(tau, tg, thg)
    raise DomainError(f"no parameter for {family}")


def pseudo_likelihood_bracket(family, tau_hat, margin: float = 0.35):
    """Search interval in theta from a Kendall's tau estimate plus/minus a margin."""
    family = Family.parse(family)
    lo_lim, hi_lim = _TAU_LIMITS[family]
    tau_hat = np.asarray(tau_hat, dtype=float)
    lo = np.clip(tau_hat - margin, lo_lim, hi_lim - 0.05)
    hi = np.clip(tau_hat + margin, lo_lim + 0.05, hi_lim)
    return theta_of_tau_array(family, lo), theta_of_tau_array(family, hi)


_GOLD = (math.sqrt(5) - 1) / 2


def golden_section_max(f, lo, hi, tol: float = 1e-8, max_iter: int = 200):
    """Vectorized golden-section maximization of ``f`` over ``[lo, hi]``.

    ``f`` maps an array of abscissae (shape of ``lo``) to objective values.
    Returns the maximizer and a flag marking results at a bracket end.
    """
    a = np.array(lo, dtype=float, copy=True)
    b = np.array(hi, dtype=float, copy=True)
    a0, b0 = a.copy(), b.copy()
    c = b - _GOLD * (b - a)
    d = a + _GOLD * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if np.all(b - a <= tol):
            break
        left = fc >= fd  # maximum lies in [a, d]
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        new_c = b - _GOLD * (b - a)
        new_d = a + _GOLD * (b - a)
        x_new = np.where(left, new_c, new_d)
        f_new = f(x_new)
        d_next = np.where(left, c, new_d)
        fd_next = np.where(left, fc, f_new)
        c_next = np.where(left, new_c, d)
        fc_next = np.where(left, f_new, fd)
        c, d, fc, fd = c_next, d_next, fc_next, fd_next
    x = 0.5 * (a + b)
    edge = (a <= a0 + tol) | (b >= b0 - tol)
    return x, edge


def pseudo_log_likelihood(family, theta, ranks):
    family = Family.parse(family)
    u = pseudo_observations(_bivariate(ranks))
    theta = np.asarray(theta, dtype=float)
    return _log_density(family, theta[..., None], u[..., 0], u[..., 1]).sum(axis=-1)


def pseudo_likelihood_estimate(ranks, family, bracket=None, tol: float = 1e-8) -> PLEResult:
    """Maximum pseudo-likelihood estimate of the copula parameter.

    ``ranks`` is (n, 2) or (B, n, 2). ``bracket`` is a pair of arrays (or
    scalars) bounding the search; by default it comes from each sample's
    Kendall's tau. Maximizers at a bracket end are flagged, not raised.
    """
    family = Family.parse(family)
    if family is Family.INDEPENDENCE:
        raise DomainError("independence copula has no parameter")
    r = _bivariate(ranks)
    u = pseudo_observations(r)
    u1, u2 = u[..., 0], u[..., 1]
    batch = r.shape[:-2]
    if bracket is None:
        lo, hi = pseudo_likelihood_bracket(family, kendall_tau_hat(r))
    else:
        lo, hi = bracket
    lo = np.broadcast_to(np.asarray(lo, dtype=float), batch).copy()
    hi = np.broadcast_to(np.asarray(hi, dtype=float), batch).copy()

    def objective(theta):
        val = _log_density(family, theta[..., None], u1, u2).sum(axis=-1)
        return np.where(np.isnan(val), -np.inf, val)

    theta, edge = golden_section_max(objective, lo, hi, tol=tol)
    if family is Family.GUMBEL:
        theta = np.maximum(theta, 1.0)
    return PLEResult(theta if batch else np.float64(theta),
                     edge if batch else np.bool_(edge))


def pseudo_likelihood_theta(family):
    """Batched estimator returning theta-hat, NaN where flagged at a bracket end."""
    def estimator(ranks):
        res = pseudo_likelihood_estimate(ranks, family)
        return np.where(res.at_boundary, np.nan, res.theta)
    return estimator


def ggr_asymptotic_variance(ranks, family, theta_hat: float, h: float = 1e-4) -> float:
    """Sandwich estimate of the asymptotic variance of ``sqrt(n) (theta_hat - theta)``.

    Derivatives of the score in ``u`` and ``theta`` are central differences
    with step ``h`` (scaled by ``max(1, |theta|)`` in theta).
    """
    family = Family.parse(family)
    r = _bivariate(ranks)
    n = r.shape[0]
    u = pseudo_observations(r)
    u1, u2 = u[:, 0], u[:, 1]
    th = float(theta_hat)
    score = _score(family, th, u1, u2)
    ht = h * max(1.0, abs(th))
    lo_th = th - ht
    if family is Family.GUMBEL and lo_th < 1.0:
        lo_th = 1.0
    dtheta = (_score(family, th + ht, u1, u2) - _score(family, lo_th, u1, u2)) / (th + ht - lo_th)
    beta_hat = -dtheta.mean()
    if not np.isfinite(beta_hat) or beta_hat <= 0:
        raise EstimationError(f"non-positive information estimate {beta_hat}")
    hu1 = np.minimum(h, np.minimum(u1, 1 - u1) / 2)
    hu2 = np.minimum(h, np.minimum(u2, 1 - u2) / 2)
    d1 = (_score(family, th, u1 + hu1, u2) - _score(family, th, u1 - hu1, u2)) / (2 * hu1)
    d2 = (_score(family, th, u1, u2 + hu2) - _score(family, th, u1, u2 - hu2)) / (2 * hu2)
    correction = np.zeros(n)
    for col, deriv in ((u1, d1), (u2, d2)):
        order = np.argsort(col, kind="stable")
        sorted_col = col[order]
        tail = np.concatenate([np.cumsum(deriv[order][::-1])[::-1], [0.0]])
        pos = np.searchsorted(sorted_col, col, side="left")
        correction += tail[pos] / n
    nu2 = np.var(score + correction, ddof=1)
    if not np.isfinite(nu2):
        raise EstimationError("non-finite score variance")
    return float(nu2 / beta_hat ** 2)


# ----------------------------------------------------------------------------
# Integral tables and symmetry statistics
# ----------------------------------------------------------------------------


def _beta_density(n, t, x, xc=None):
    """Beta(t, n + 1 - t) density; ``xc`` is ``1 - x`` when known more accurately."""
    t = np.asarray(t, dtype=float)
    log1m = np.log1p(-x) if xc is None else np.log(xc)
    logf = (t - 1) * np.log(x) + (n - t) * log1m - special.betaln(t, n + 1 - t)
    return np.exp(logf)


def _legendre(m, x):
    """``P_m(x)`` and ``(1 - x^2) P_m'(x)`` by the three-term recurrence."""
    if m == 0:
        return np.ones_like(x), np.zeros_like(x)
    p0, p1 = np.ones_like(x), x
    for k in range(2, m + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    return p1, m * (p0 - x * p1)


@lru_cache(maxsize=64)
def _gl_nodes(m):
    """Gauss-Legendre rule on [0, 1]: nodes ``u``, complements ``1 - u`` and weights.

    Newton iteration on the recurrence; the weights are markedly more
    accurate than ``numpy.polynomial.legendre.leggauss`` for m near 100,
    which matters for the exactness of the C table.
    """
    k = np.arange(1, m // 2 + 1)
    x = np.cos(np.pi * (k - 0.25) / (m + 0.5))  # positive roots, descending
    for _ in range(100):
        p, q = _legendre(m, x)
        dx = p * (1 - x * x) / q
        x = x - dx
        if np.abs(dx).max(initial=0.0) < 1e-16:
            break
    p, q = _legendre(m, x)
    w = 2 * (1 - x * x) / q ** 2
    lo = 0.5 * (1 - x)  # the small nodes, no cancellation
    if m % 2:
        p0, _ = _legendre(m - 1, np.zeros(1))
        mid_w = 2 / (m * p0) ** 2
        u = np.concatenate([lo, [0.5], (1 - lo)[::-1]])
        uc = np.concatenate([1 - lo, [0.5], lo[::-1]])
        ww = np.concatenate([w, mid_w, w[::-1]])
    else:
        u = np.concatenate([lo, (1 - lo)[::-1]])
        uc = np.concatenate([1 - lo, lo[::-1]])
        ww = np.concatenate([w, w[::-1]])
    for a in (u, uc, ww):
        a.setflags(write=False)
    return u, uc, 0.5 * ww


class IntegralTables:
    """``B(r, s) = int F_r F_s du`` and ``C(r, s, t) = int F_r F_s dF_t`` for fixed n.

    Both integrands are polynomials, so Gauss-Legendre quadrature with
    ``n + 1`` and ``ceil(3n / 2) + 1`` nodes is exact. ``extra_nodes`` adds
    nodes to both rules. The full ``C`` tensor is materialized only for
    ``n <= full_limit``; otherwise use :meth:`C_slice`.
    Indices are ranks, ``1..n``: ``B[r - 1, s - 1]``.
    """

    def __init__(self, n: int, extra_nodes: int = 0, full_limit: int = 200):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        r = np.arange(1, n + 1)[:, None]
        xb, _, wb = _gl_nodes(n + 1 + extra_nodes)
        fb = beta_kernel(n, r, xb[None, :])
        self.B = (fb * wb) @ fb.T
        self.B.setflags(write=False)
        xc, xcc, wc = _gl_nodes(math.ceil(3 * n / 2) + 1 + extra_nodes)
        self.nodes, self.weights = xc, wc
        self.F = beta_kernel(n, r, xc[None, :])       # (n, Q)
        self.f = _beta_density(n, r, xc[None, :], xcc[None, :])  # (n, Q)
        self._C = None
        if n <= full_limit:
            self._C = np.einsum("rq,sq,tq,q->rst", self.F, self.F, self.f, self.weights)
            self._C.setflags(write=False)

    @property
    def C(self) -> np.ndarray:
        if self._C is None:
            raise MemoryError(f"full C tensor not stored for n = {self.n}; use C_slice")
        return self._C

    def C_slice(self, t: int) -> np.ndarray:
        """``C(., ., t)`` as an n x n matrix."""
        if self._C is not None:
            return self._C[:, :, t - 1]
        return (self.F * (self.weights * self.f[t - 1])) @ self.F.T


@lru_cache(maxsize=16)
def integral_tables(n: int) -> IntegralTables:
    return IntegralTables(n)


def _chunked(fn, r, chunk=None):
    """Apply a stack function in slices that keep n x n temporaries near 4e6 entries."""
    if r.ndim == 2:
        return fn(r[None])[0]
    if chunk is None:
        chunk = max(1, 4_000_000 // r.shape[-2] ** 2)
    flat = r.reshape((-1,) + r.shape[-2:])
    out = np.concatenate([fn(flat[i:i + chunk]) for i in range(0, flat.shape[0], chunk)])
    return out.reshape(r.shape[:-2])


def _sym_quadratic(k11, k22, k12, k21, n):
    return 2.0 / n ** 2 * (k11 * k22 - k12 * k21).sum(axis=(-2, -1))


def symmetry_stat_Rn_beta(ranks, tables: IntegralTables | None = None):
    """Integrated squared asymmetry of the empirical beta copula, via the B table."""
    r = _bivariate(ranks)
    n = r.shape[-2]
    tab = integral_tables(n) if tables is None else tables
    bm = tab.B

    def fn(rb):
        a = rb[..., 0] - 1
        b = rb[..., 1] - 1
        return _sym_quadratic(bm[a[:, :, None], a[:, None, :]], bm[b[:, :, None], b[:, None, :]],
                              bm[a[:, :, None], b[:, None, :]], bm[b[:, :, None], a[:, None, :]], n)

    return np.maximum(_chunked(fn, r), 0.0) if r.ndim > 2 else max(float(fn(r[None])[0]), 0.0)


def symmetry_stat_Sn_beta(ranks, tables: IntegralTables | None = None):
    """``int [Cb(u1, u2) - Cb(u2, u1)]^2 dCb`` for the empirical beta copula Cb.

    The triple sum over the C table factorizes over the quadrature nodes
    that define it, which is how it is evaluated.
    """
    r = _bivariate(ranks)
    n = r.shape[-2]
    tab = integral_tables(n) if tables is None else tables
    w = tab.weights
    ww = w[:, None] * w[None, :]

    def fn(rb):
        f1 = tab.F[rb[..., 0] - 1]  # (b, n, Q)
        f2 = tab.F[rb[..., 1] - 1]
        m = np.swapaxes(f1, -1, -2) @ f2 / n
        dd = m - np.swapaxes(m, -1, -2)
        g = np.swapaxes(tab.f[rb[..., 0] - 1], -1, -2) @ tab.f[rb[..., 1] - 1] / n
        return (dd * dd * g * ww).sum(axis=(-2, -1))

    out = _chunked(fn, r, chunk=max(1, 2_000_000 // (tab.weights.size ** 2)))
    return np.maximum(out, 0.0) if r.ndim > 2 else max(float(out), 0.0)


def symmetry_stat_Sn_beta_triple_sum(ranks, tables: IntegralTables) -> float:
    """Literal four-term triple sum over the C table (O(n^3); for checking)."""
    r = _bivariate(ranks)
    n = r.shape[0]
    c = tables.C
    a = r[:, 0] - 1
    b = r[:, 1] - 1
    i, j, k = np.ix_(range(n), range(n), range(n))
    total = (c[a[i], a[j], a[k]] * c[b[i], b[j], b[k]]
             - c[a[i], b[j], a[k]] * c[b[i], a[j], b[k]]
             - c[b[i], a[j], a[k]] * c[a[i], b[j], b[k]]
             + c[b[i], b[j], a[k]] * c[a[i], a[j], b[k]])
    return float(total.sum() / n ** 3)


def symmetry_stat_Rn(ranks):
    """Integrated squared asymmetry of the rank-based empirical copula (closed form)."""
    r = _bivariate(ranks).astype(float)
    n = r.shape[-2]

    def amat(x, y):
        return 1.0 - np.maximum(x[..., :, None], y[..., None, :]) / n

    def fn(rb):
        x, y = rb[..., 0], rb[..., 1]
        return _sym_quadratic(amat(x, x), amat(y, y), amat(x, y), amat(y, x), n)

    return np.maximum(_chunked(fn, r), 0.0)


def symmetry_stat_Sn(ranks):
    """``n^-1 sum_k [C(R_k1/n, R_k2/n) - C(R_k2/n, R_k1/n)]^2`` with the rank copula C."""
    r = _bivariate(ranks)
    n = r.shape[-2]

    def fn(rb):
        a, b = rb[..., 0], rb[..., 1]
        # rows i (last axis) counted at atoms k
        c_ab = ((a[..., None, :] <= a[..., :, None]) & (b[..., None, :] <= b[..., :, None])).sum(-1)
        c_ba = ((a[..., None, :] <= b[..., :, None]) & (b[..., None, :] <= a[..., :, None])).sum(-1)
        diff = (c_ab - c_ba) / n
        return (diff * diff).mean(axis=-1)

    return _chunked(fn, r)


SYMMETRY_STATISTICS = {
    "Sn": lambda r, tab: symmetry_stat_Sn(r),
    "Rn": lambda r, tab: symmetry_stat_Rn(r),
    "SnBeta": lambda r, tab: symmetry_stat_Sn_beta(r, tab),
    "RnBeta": lambda r, tab: symmetry_stat_Rn_beta(r, tab),
}


def model_for(family, theta) -> CopulaModel:
    family = Family.parse(family)
    if family in (Family.CLAYTON, Family.FRANK) and abs(theta) < SMALL_THETA:
        return CopulaModel(Family.INDEPENDENCE)
    return CopulaModel(family, theta)
