"""Parametric bivariate copula families.

Clayton, Gumbel-Hougaard, Frank, Gauss and independence, plus the Khoudraji
asymmetrization ``K(u1, u2) = u1**delta * C(u1**(1 - delta), u2)``.

The vectorized kernels (``_cdf``, ``_log_density``, ``_score``) broadcast a
parameter array against point arrays; they are what the estimators call in
their inner loops. The public functions wrap them with validation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize, special

# |theta| below this is treated as independence for Clayton and Frank.
SMALL_THETA = 1e-8


class DomainError(ValueError):
    """Raised when a parameter or evaluation point is outside its domain."""


class Family(str, enum.Enum):
    CLAYTON = "clayton"
    GUMBEL = "gumbel"
    FRANK = "frank"
    GAUSS = "gauss"
    INDEPENDENCE = "independence"

    @classmethod
    def parse(cls, name: "str | Family") -> "Family":
        if isinstance(name, Family):
            return name
        key = name.strip().lower().replace("-", "").replace("_", "")
        aliases = {
            "gumbelhougaard": "gumbel",
            "gaussian": "gauss",
            "normal": "gauss",
            "indep": "independence",
            "pi": "independence",
        }
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise DomainError(f"unknown copula family {name!r}") from None


def _check_theta(family: Family, theta: float) -> None:
    if not np.isfinite(theta):
        raise DomainError(f"{family.value}: theta must be finite, got {theta}")
    if family is Family.CLAYTON:
        if theta < -1 or theta == 0:
            raise DomainError(f"clayton: theta must lie in [-1, inf) minus {{0}}, got {theta}")
    elif family is Family.GUMBEL:
        if theta < 1:
            raise DomainError(f"gumbel: theta must be >= 1, got {theta}")
    elif family is Family.FRANK:
        if theta == 0:
            raise DomainError("frank: theta must be nonzero")
    elif family is Family.GAUSS:
        if not -1 < theta < 1:
            raise DomainError(f"gauss: theta must lie in (-1, 1), got {theta}")


@dataclass(frozen=True)
class CopulaModel:
    family: Family
    theta: float = 0.0
    dim: int = 2

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family))
        object.__setattr__(self, "theta", float(self.theta))
        if self.dim < 2:
            raise DomainError(f"dim must be >= 2, got {self.dim}")
        if self.family is not Family.INDEPENDENCE:
            if self.dim != 2:
                raise DomainError("parametric families are bivariate only")
            _check_theta(self.family, self.theta)

    @classmethod
    def from_tau(cls, family: "str | Family", tau: float) -> "CopulaModel":
        family = Family.parse(family)
        if family is Family.INDEPENDENCE or tau == 0:
            return cls(Family.INDEPENDENCE)
        return cls(family, theta_of_tau(family, tau))

    @property
    def tau(self) -> float:
        return tau_of_theta(self.family, self.theta)


@dataclass(frozen=True)
class KhoudrajiModel:
    base: CopulaModel
    delta: float

    def __post_init__(self):
        if self.base.dim != 2:
            raise DomainError("Khoudraji device needs a bivariate base copula")
        if not 0.0 <= self.delta <= 1.0:
            raise DomainError(f"delta must lie in [0, 1], got {self.delta}")


# ----------------------------------------------------------------------------
# Vectorized kernels. ``theta`` broadcasts against ``u`` and ``v``.
# ----------------------------------------------------------------------------


def _bvn_cdf(h, k, rho):
    """Standard bivariate normal CDF via Owen's T function."""
    h, k, rho = np.broadcast_arrays(
        np.asarray(h, float), np.asarray(k, float), np.asarray(rho, float)
    )
    s = np.sqrt((1 - rho) * (1 + rho))
    with np.errstate(divide="ignore", invalid="ignore"):
        a_h = (k - rho * h) / (h * s)
        a_k = (h - rho * k) / (k * s)
    # h == 0 (or k == 0): T(0, +-inf) = +-1/4, sign taken from the numerator
    a_h = np.where(h == 0, np.copysign(np.inf, k - rho * h), a_h)
    a_k = np.where(k == 0, np.copysign(np.inf, h - rho * k), a_k)
    beta = np.where((h * k < 0) | ((h * k == 0) & (h + k < 0)), 0.5, 0.0)
    out = 0.5 * (special.ndtr(h) + special.ndtr(k)) - special.owens_t(h, a_h) \
        - special.owens_t(k, a_k) - beta
    both_zero = (h == 0) & (k == 0)
    out = np.where(both_zero, 0.25 + np.arcsin(rho) / (2 * np.pi), out)
    # infinite arguments
    out = np.where(np.isneginf(h) | np.isneginf(k), 0.0, out)
    out = np.where(np.isposinf(h), special.ndtr(k), out)
    out = np.where(np.isposinf(k), special.ndtr(h), out)
    out = np.where(np.isposinf(h) & np.isposinf(k), 1.0, out)
    return np.clip(out, 0.0, 1.0)


def _cdf(family: Family, theta, u, v):
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    theta = np.asarray(theta, float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if family is Family.INDEPENDENCE:
            out = u * v
        elif family is Family.CLAYTON:
            small = np.abs(theta) < SMALL_THETA
            t = np.where(small, 1.0, theta)
            s = u ** (-t) + v ** (-t) - 1.0
            out = np.where(s > 0, np.maximum(s, 0.0) ** (-1.0 / t), 0.0)
            out = np.where((u == 0) | (v == 0), 0.0, out)
            out = np.where(small, u * v, out)
        elif family is Family.GUMBEL:
            x = -np.log(u)
            y = -np.log(v)
            out = np.exp(-((x ** theta + y ** theta) ** (1.0 / theta)))
        elif family is Family.FRANK:
            small = np.abs(theta) < SMALL_THETA
            t = np.where(small, 1.0, theta)
            num = np.expm1(-t * u) * np.expm1(-t * v)
            out = -np.log1p(num / np.expm1(-t)) / t
            out = np.where(small, u * v, out)
        elif family is Family.GAUSS:
            out = _bvn_cdf(special.ndtri(u), special.ndtri(v), theta)
        else:  # pragma: no cover
            raise DomainError(family)
    # exact margins and groundedness
    out = np.where(u >= 1, v, out)
    out = np.where(v >= 1, u, out)
    out = np.where((u <= 0) | (v <= 0), 0.0, out)
    return np.clip(out, 0.0, 1.0)


def _log_density(family: Family, theta, u, v):
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    theta = np.asarray(theta, float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if family is Family.INDEPENDENCE:
            return np.zeros(np.broadcast_shapes(u.shape, v.shape, theta.shape))
        if family is Family.CLAYTON:
            small = np.abs(theta) < SMALL_THETA
            t = np.where(small, 1.0, theta)
            lu, lv = np.log(u), np.log(v)
            s = np.exp(-t * lu) + np.exp(-t * lv) - 1.0
            out = np.log1p(t) - (1 + t) * (lu + lv) - (2 + 1 / t) * np.log(s)
            out = np.where(s > 0, out, -np.inf)
            return np.where(small, 0.0, out)
        if family is Family.GUMBEL:
            x, y = -np.log(u), -np.log(v)
            a = x ** theta + y ** theta
            w = a ** (1.0 / theta)
            return (-w + (theta - 1) * (np.log(x) + np.log(y)) + x + y
                    + (2.0 / theta - 2.0) * np.log(a) + np.log1p((theta - 1) / w))
        if family is Family.FRANK:
            small = np.abs(theta) < SMALL_THETA
            t = np.where(small, 1.0, theta)
            e1 = -np.expm1(-t)
            d = e1 - (-np.expm1(-t * u)) * (-np.expm1(-t * v))
            out = np.log(t * e1) - t * (u + v) - 2 * np.log(np.abs(d))
            return np.where(small, 0.0, out)
        if family is Family.GAUSS:
            x, y = special.ndtri(u), special.ndtri(v)
            r2 = 1 - theta ** 2
            return -0.5 * np.log(r2) - (theta ** 2 * (x * x + y * y) - 2 * theta * x * y) / (2 * r2)
    raise DomainError(family)  # pragma: no cover


def _score(family: Family, theta, u, v):
    """d/dtheta of the log-density, closed form per family."""
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    theta = np.asarray(theta, float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if family is Family.INDEPENDENCE:
            return np.zeros(np.broadcast_shapes(u.shape, v.shape, theta.shape))
        if family is Family.CLAYTON:
            t = np.where(np.abs(theta) < SMALL_THETA, SMALL_THETA, theta)
            lu, lv = np.log(u), np.log(v)
            pu, pv = np.exp(-t * lu), np.exp(-t * lv)
            s = pu + pv - 1.0
            ds = -(pu * lu + pv * lv)
            return 1 / (1 + t) - (lu + lv) + np.log(s) / t ** 2 - (2 + 1 / t) * ds / s
        if family is Family.GUMBEL:
            x, y = -np.log(u), -np.log(v)
            lx, ly = np.log(x), np.log(y)
            xt, yt = x ** theta, y ** theta
            a = xt + yt
            la = np.log(a)
            da = xt * lx + yt * ly
            w = a ** (1.0 / theta)
            dlogw = da / (theta * a) - la / theta ** 2
            inv_w = 1.0 / w
            g = 1 + (theta - 1) * inv_w
            dg = inv_w - (theta - 1) * inv_w * dlogw
            return (-w * dlogw + lx + ly - 2 * la / theta ** 2
                    + (2 / theta - 2) * da / a + dg / g)
        if family is Family.FRANK:
            t = np.where(np.abs(theta) < SMALL_THETA, SMALL_THETA, theta)
            e = np.exp(-t)
            eu, ev = np.exp(-t * u), np.exp(-t * v)
            d = (1 - e) - (1 - eu) * (1 - ev)
            dd = e - (u * eu * (1 - ev) + v * ev * (1 - eu))
            return 1 / t + e / (-np.expm1(-t)) - (u + v) - 2 * dd / d
        if family is Family.GAUSS:
            x, y = special.ndtri(u), special.ndtri(v)
            r2 = 1 - theta ** 2
            return theta / r2 - (theta * (x * x + y * y) - x * y * (1 + theta ** 2)) / r2 ** 2
    raise DomainError(family)  # pragma: no cover


def _partial_u(family: Family, theta, u, v):
    """dC/du, i.e. the conditional CDF of V given U = u."""
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if family is Family.INDEPENDENCE or (family in (Family.CLAYTON, Family.FRANK)
                                             and abs(theta) < SMALL_THETA):
            return np.broadcast_to(v, np.broadcast_shapes(u.shape, v.shape)).copy()
        if family is Family.CLAYTON:
            s = u ** (-theta) + v ** (-theta) - 1.0
            out = u ** (-theta - 1) * np.where(s > 0, s, np.inf) ** (-1 / theta - 1)
            return np.where(s > 0, out, 0.0)
        if family is Family.GUMBEL:
            x, y = -np.log(u), -np.log(v)
            a = x ** theta + y ** theta
            c = np.exp(-(a ** (1 / theta)))
            return c * a ** (1 / theta - 1) * x ** (theta - 1) / u
        if family is Family.FRANK:
            eu, ev = np.expm1(-theta * u), np.expm1(-theta * v)
            return (eu + 1) * ev / (np.expm1(-theta) + eu * ev)
        if family is Family.GAUSS:
            x, y = special.ndtri(u), special.ndtri(v)
            return special.ndtr((y - theta * x) / np.sqrt(1 - theta ** 2))
    raise DomainError(family)  # pragma: no cover


# ----------------------------------------------------------------------------
# Public operations
# ----------------------------------------------------------------------------


def _as_points(u, d=2):
    u = np.asarray(u, float)
    if u.shape[-1] != d:
        raise DomainError(f"points must have trailing dimension {d}, got shape {u.shape}")
    return u


def copula_cdf(model: "CopulaModel | KhoudrajiModel", u) -> np.ndarray:
    """Evaluate the copula CDF at one point or an array of points (..., d)."""
    if isinstance(model, KhoudrajiModel):
        u = _as_points(u)
        if np.any((u < 0) | (u > 1)):
            raise DomainError("points must lie in [0, 1]^2")
        u1, u2 = u[..., 0], u[..., 1]
        dlt = model.delta
        with np.errstate(divide="ignore", invalid="ignore"):
            out = u1 ** dlt * _cdf(model.base.family, model.base.theta, u1 ** (1 - dlt), u2)
        return np.clip(out, 0.0, 1.0)
    u = _as_points(u, model.dim)
    if np.any((u < 0) | (u > 1)):
        raise DomainError("points must lie in the unit cube")
    if model.family is Family.INDEPENDENCE:
        return np.prod(u, axis=-1)
    return _cdf(model.family, model.theta, u[..., 0], u[..., 1])


def _check_interior(u):
    if np.any((u <= 0) | (u >= 1)):
        raise DomainError("density and score need points strictly inside (0, 1)^2")


def copula_log_density(model: CopulaModel, u) -> np.ndarray:
    u = _as_points(u)
    _check_interior(u)
    return _log_density(model.family, model.theta, u[..., 0], u[..., 1])


def copula_score(model: CopulaModel, u) -> np.ndarray:
    """Derivative of the log-density with respect to theta."""
    u = _as_points(u)
    _check_interior(u)
    return _score(model.family, model.theta, u[..., 0], u[..., 1])


def _positive_stable(alpha, size, rng):
    """Positive stable variates with Laplace transform exp(-t**alpha) (Kanter)."""
    un = rng.uniform(0.0, np.pi, size)
    e = rng.standard_exponential(size)
    zolotarev = (np.sin(alpha * un) ** alpha * np.sin((1 - alpha) * un) ** (1 - alpha)
                 / np.sin(un)) ** (1 / (1 - alpha))
    return (zolotarev / e) ** ((1 - alpha) / alpha)


def _sample_base(family: Family, theta: float, size, rng) -> np.ndarray:
    """Draw ``size`` pairs; ``size`` may be an int or a shape tuple."""
    shape = (size,) if np.isscalar(size) else tuple(size)
    if family is Family.INDEPENDENCE or (family in (Family.CLAYTON, Family.FRANK)
                                         and abs(theta) < SMALL_THETA) \
            or (family is Family.GUMBEL and theta == 1.0) \
            or (family is Family.GAUSS and theta == 0.0):
        return rng.uniform(size=shape + (2,))
    if family is Family.GAUSS:
        z = rng.standard_normal(shape + (2,))
        x1 = z[..., 0]
        x2 = theta * x1 + math.sqrt(1 - theta ** 2) * z[..., 1]
        return special.ndtr(np.stack([x1, x2], axis=-1))
    if family is Family.GUMBEL:
        s = _positive_stable(1.0 / theta, shape, rng)
        e = rng.standard_exponential(shape + (2,))
        return np.exp(-((e / s[..., None]) ** (1.0 / theta)))
    # conditional inversion
    u = rng.uniform(size=shape)
    w = rng.uniform(size=shape)
    if family is Family.CLAYTON:
        v = (1 + u ** (-theta) * (w ** (-theta / (1 + theta)) - 1)) ** (-1 / theta)
    elif family is Family.FRANK:
        ratio = w * np.expm1(-theta) / (w + (1 - w) * np.exp(-theta * u))
        v = -np.log1p(ratio) / theta
    else:  # pragma: no cover
        raise DomainError(family)
    return np.stack([u, np.clip(v, 0.0, 1.0)], axis=-1)


def copula_sample(model: "CopulaModel | KhoudrajiModel", n, rng: np.random.Generator) -> np.ndarray:
    """Draw ``n`` i.i.d. points; ``n`` may also be a shape such as ``(B, n)``."""
    shape = (int(n),) if np.isscalar(n) else tuple(n)
    if any(s < 1 for s in shape):
        raise DomainError("sample size must be >= 1")
    if isinstance(model, KhoudrajiModel):
        dlt = model.delta
        a = rng.uniform(size=shape)
        b = _sample_base(model.base.family, model.base.theta, shape, rng)
        if dlt == 0.0:
            return b
        if dlt == 1.0:
            return np.stack([a, b[..., 1]], axis=-1)
        first = np.maximum(a ** (1 / dlt), b[..., 0] ** (1 / (1 - dlt)))
        return np.stack([first, b[..., 1]], axis=-1)
    if model.family is Family.INDEPENDENCE:
        return rng.uniform(size=shape + (model.dim,))
    return _sample_base(model.family, model.theta, shape, rng)


# ----------------------------------------------------------------------------
# Kendall's tau <-> theta
# ----------------------------------------------------------------------------


def _debye1(x: float) -> float:
    if x == 0:
        return 1.0
    val, _ = integrate.quad(lambda t: t / math.expm1(t) if t != 0 else 1.0, 0.0, x,
                            epsabs=1e-13, epsrel=1e-12, limit=200)
    return val / x


def tau_of_theta(family: "str | Family", theta: float) -> float:
    family = Family.parse(family)
    if family is Family.INDEPENDENCE:
        return 0.0
    _check_theta(family, theta)
    if family is Family.CLAYTON:
        return theta / (theta + 2)
    if family is Family.GUMBEL:
        return 1 - 1 / theta
    if family is Family.GAUSS:
        return 2 / math.pi * math.asin(theta)
    if abs(theta) < SMALL_THETA:
        return 0.0
    return 1 + 4 * (_debye1(theta) - 1) / theta


def theta_of_tau(family: "str | Family", tau: float) -> float:
    family = Family.parse(family)
    if family is Family.INDEPENDENCE:
        if tau != 0:
            raise DomainError("independence copula has tau = 0 only")
        return 0.0
    if not -1 < tau < 1:
        raise DomainError(f"tau must lie in (-1, 1), got {tau}")
    if family is Family.CLAYTON:
        if tau == 0:
            raise DomainError("clayton: tau = 0 is the independence limit")
        return 2 * tau / (1 - tau)
    if family is Family.GUMBEL:
        if tau < 0:
            raise DomainError("gumbel: negative tau is unattainable")
        return 1 / (1 - tau)
    if family is Family.GAUSS:
        return math.sin(math.pi * tau / 2)
    if tau == 0:
        raise DomainError("frank: tau = 0 is the independence limit")
    # Frank tau is odd in theta and increasing; bisect on |theta|
    target = abs(tau)
    hi = 1.0
    while tau_of_theta(family, hi) < target:
        hi *= 2
        if hi > 1e6:
            raise DomainError(f"frank: tau {tau} too close to 1")
    root = optimize.bisect(lambda t: tau_of_theta(family, t) - target, SMALL_THETA, hi,
                           xtol=1e-12, rtol=1e-15, maxiter=500)
    return math.copysign(root, tau)


def _spearman_integral(family: Family, theta: float, nodes: int = 200) -> float:
    x, w = np.polynomial.legendre.leggauss(nodes)
    x = 0.5 * (x + 1)
    w = 0.5 * w
    c = _cdf(family, theta, x[:, None], x[None, :])
    return 12 * float(w @ c @ w) - 3


def rho_of_theta(family: "str | Family", theta: float) -> float:
    """Population Spearman's rho, 12 * integral of C minus 3."""
    family = Family.parse(family)
    if family is Family.INDEPENDENCE:
        return 0.0
    _check_theta(family, theta)
    if family is Family.GAUSS:
        return 6 / math.pi * math.asin(theta / 2)
    if family is Family.CLAYTON and theta < 0:
        # kink along the zero set; adaptive quadrature
        f = lambda v, u: float(_cdf(family, theta, u, v))
        lower = lambda u: (1 - u ** (-theta)) ** (-1 / theta) if u < 1 else 0.0
        val, _ = integrate.dblquad(f, 0, 1, lower, 1, epsabs=1e-11, epsrel=1e-11)
        return 12 * val - 3
    return _spearman_integral(family, theta)


def theta_of_rho(family: "str | Family", rho: float) -> float:
    family = Family.parse(family)
    if family is Family.GAUSS:
        return 2 * math.sin(math.pi * rho / 6)
    # Kendall's tau gives a close starting bracket
    if family is Family.CLAYTON:
        lo, hi = (-0.999, -1e-6) if rho < 0 else (1e-6, 50.0)
    elif family is Family.GUMBEL:
        lo, hi = 1.0, 50.0
    elif family is Family.FRANK:
        lo, hi = (-80.0, -1e-6) if rho < 0 else (1e-6, 80.0)
    else:
        raise DomainError(family)
    return optimize.brentq(lambda t: rho_of_theta(family, t) - rho, lo, hi, xtol=1e-12)
