"""Mittag-Leffler family of laws: ML(a), ML(a,theta), ML(a,theta|b,g), the
positive Linnik law, and the Thorin density.

Conventions.  M ~ ML(alpha) is the law of S**(-alpha) for S standard
one-sided stable, with density

    p_a(t) = f_a(t**(-1/a) | 1) * t**(-1/a-1) / a ,

finite and positive at t = 0+.  The two-parameter family tilts it:

    p_{a,th}(t) = (Gamma(1+th)/Gamma(1+th/a)) * t**(th/a) * p_a(t),

th > -a.  The four-parameter family ML(a,th|b,g) with -th < a*g <= b has

    p_{a,th}(t|b,g) = (Gamma(b+th)/Gamma(g+th/a)) * t**(g+th/a-1)
                      * (rho_{b-a*g} * f_a(.|t))(1),

where the convolution factor is evaluated through `convolve` with scale
z = t; b = a*g collapses the kernel to a delta and the factor to f_a(1|t).
Moments of both families are plain gamma ratios, evaluated in log space.

The positive Linnik law is the gamma scale mixture
l_a(x|g,lam,z) = int f_a(x|z*u) dG(u|g,lam) with Laplace transform
(lam/(lam + z*s**a))**g; the mixture integral is windowed for shape >= 1
and substituted (w = u**shape) for shape < 1 where the gamma weight is
singular at the origin.  The Thorin density

    tau_a(t|g) = g*a*(sin(pi a)/pi) * t**(a-1)
                 / (1 + 2 t**a cos(pi a) + t**(2a))

is closed-form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConstraintError, DomainError
from .quadrature import quad_adaptive
from .special import PrabhakarParams, SeriesConfig, log_gamma, prabhakar_ml
from .stable import DEFAULT_CONFIG, NumericConfig, StableParams, stable_density

__all__ = [
    "MLParams",
    "GMLParams",
    "LinnikParams",
    "ml_density",
    "ml2_density",
    "ml2_moment",
    "ml2_laplace",
    "gml_density",
    "gml_moment",
    "linnik_density",
    "thorin_density",
]


@dataclass(frozen=True)
class MLParams:
    alpha: float
    theta: float = 0.0

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha < 1.0):
            raise ConstraintError(f"alpha must lie in (0,1), got {self.alpha!r}")
        if not (self.theta > -self.alpha):
            raise ConstraintError(
                f"theta must exceed -alpha = {-self.alpha!r}, got {self.theta!r}"
            )


@dataclass(frozen=True)
class GMLParams:
    alpha: float
    theta: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha < 1.0):
            raise ConstraintError(f"alpha must lie in (0,1), got {self.alpha!r}")
        if not (self.gamma > 0.0):
            raise ConstraintError(f"gamma must be positive, got {self.gamma!r}")
        ag = self.alpha * self.gamma
        if not (-self.theta < ag <= self.beta):
            raise ConstraintError(
                f"need -theta < alpha*gamma <= beta, got theta={self.theta!r}, "
                f"alpha*gamma={ag!r}, beta={self.beta!r}"
            )


@dataclass(frozen=True)
class LinnikParams:
    alpha: float
    shape: float
    rate: float
    z: float = 1.0

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha < 1.0):
            raise ConstraintError(f"alpha must lie in (0,1), got {self.alpha!r}")
        if self.shape <= 0.0 or self.rate <= 0.0 or self.z <= 0.0:
            raise ConstraintError("shape, rate and z must all be positive")


def ml_density(alpha: float, t: float, cfg: NumericConfig | None = None) -> float:
    """Density of S**(-alpha); finite and positive as t -> 0+."""
    if not (0.0 < alpha < 1.0):
        raise ConstraintError(f"alpha must lie in (0,1), got {alpha!r}")
    if not (t > 0.0):
        raise DomainError(f"density requires t > 0, got {t!r}")
    if cfg is None:
        cfg = DEFAULT_CONFIG
    s = t ** (-1.0 / alpha)
    return stable_density(StableParams(alpha, 1.0), s, cfg) * s / (t * alpha)


def ml2_density(p: MLParams, t: float, cfg: NumericConfig | None = None) -> float:
    """Polynomially tilted density t**(theta/alpha) * p_alpha(t), renormalized."""
    if not (t > 0.0):
        raise DomainError(f"density requires t > 0, got {t!r}")
    if p.theta == 0.0:
        return ml_density(p.alpha, t, cfg)
    r = p.theta / p.alpha
    coef = math.exp(log_gamma(1.0 + p.theta) - log_gamma(1.0 + r) + r * math.log(t))
    return coef * ml_density(p.alpha, t, cfg)


def ml2_moment(p: MLParams, k: int) -> float:
    if k < 0 or k != int(k):
        raise ConstraintError(f"moment order must be a nonnegative integer, got {k!r}")
    if k == 0:
        return 1.0
    r = p.theta / p.alpha
    return math.exp(
        log_gamma(1.0 + p.theta)
        + log_gamma(1.0 + k + r)
        - log_gamma(1.0 + r)
        - log_gamma(1.0 + k * p.alpha + p.theta)
    )


def ml2_laplace(p: MLParams, x: float, cfg: NumericConfig | None = None) -> float:
    """E[exp(-x M)] = Gamma(1+theta) E^{1+theta/a}_{a,1+theta}(-x)."""
    if x < 0.0:
        raise DomainError(f"transform argument must be >= 0, got {x!r}")
    if x == 0.0:
        return 1.0
    tol = 1e-12 if cfg is None else min(1e-12, cfg.abs_tol)
    pp = PrabhakarParams(p.alpha, 1.0 + p.theta, 1.0 + p.theta / p.alpha)
    return math.exp(log_gamma(1.0 + p.theta)) * prabhakar_ml(
        pp, x, SeriesConfig(tail_tol=tol)
    )


def gml_density(p: GMLParams, t: float, cfg: NumericConfig | None = None) -> float:
    if not (t > 0.0):
        raise DomainError(f"density requires t > 0, got {t!r}")
    if cfg is None:
        cfg = DEFAULT_CONFIG
    r = p.gamma + p.theta / p.alpha
    nu = p.beta - p.alpha * p.gamma
    if nu == 0.0:
        conv = stable_density(StableParams(p.alpha, t), 1.0, cfg)
    else:
        from .convolve import PowerKernel, gamma_stable_conv_direct

        conv = gamma_stable_conv_direct(
            PowerKernel(nu), StableParams(p.alpha, t), 1.0, cfg
        )
    coef = math.exp(
        log_gamma(p.beta + p.theta) - log_gamma(r) + (r - 1.0) * math.log(t)
    )
    return coef * conv


def gml_moment(p: GMLParams, k: int) -> float:
    if k < 0 or k != int(k):
        raise ConstraintError(f"moment order must be a nonnegative integer, got {k!r}")
    if k == 0:
        return 1.0
    if p.beta == p.alpha * p.gamma:
        # boundary case: the law coincides with ML(alpha, beta + theta)
        return ml2_moment(MLParams(p.alpha, p.beta + p.theta), k)
    r = p.gamma + p.theta / p.alpha
    return math.exp(
        log_gamma(p.beta + p.theta)
        + log_gamma(r + k)
        - log_gamma(r)
        - log_gamma(p.beta + p.theta + k * p.alpha)
    )


def _gamma_tail_cut(shape: float, rate: float, ln_target: float) -> float:
    # smallest u with rate*u - (shape-1)*ln u >= ln_target, by fixed point
    u = ln_target / rate
    for _ in range(100):
        u_new = (ln_target + (shape - 1.0) * math.log(max(u, 1.0))) / rate
        if abs(u_new - u) <= 1e-9 * max(u_new, 1.0):
            return max(u_new, 1.0 / rate)
        u = u_new
    return max(u, 1.0 / rate)


def linnik_density(p: LinnikParams, x: float, cfg: NumericConfig | None = None) -> float:
    """Gamma scale mixture int f_a(x | z*u) dG(u | shape, rate)."""
    if not (x > 0.0):
        raise DomainError(f"density requires x > 0, got {x!r}")
    if cfg is None:
        cfg = DEFAULT_CONFIG
    a, g, lam, z = p.alpha, p.shape, p.rate, p.z
    ln_target = math.log(10.0 / cfg.abs_tol) + 5.0
    u_max = _gamma_tail_cut(g, lam, ln_target)
    ln_norm = g * math.log(lam) - log_gamma(g)
    # outer target floored above the inner density noise
    outer_tol = max(10.0 * cfg.abs_tol, 1e-9)
    # For small x the stable factor is a narrow spike near u* = x**a / z
    # (where the rescaled argument is order one); hint the quadrature or it
    # can step straight over the spike and silently report ~0.
    u_star = min(x**a / z, 0.5 * u_max)

    if g >= 1.0:
        def integrand(u: float) -> float:
            if u <= 0.0:
                return 0.0
            f = stable_density(StableParams(a, z * u), x, cfg)
            if f == 0.0:
                return 0.0
            return f * math.exp(ln_norm + (g - 1.0) * math.log(u) - lam * u)

        pts = [q * u_star for q in (0.2, 1.0, 5.0) if q * u_star < u_max]
        return quad_adaptive(
            integrand,
            0.0,
            u_max,
            abs_tol=outer_tol,
            rel_tol=cfg.rel_tol,
            limit=cfg.max_subdivisions,
            points=pts or None,
        )

    # shape < 1: w = u**shape removes the u**(shape-1) origin singularity
    def integrand_sub(w: float) -> float:
        if w <= 0.0:
            return 0.0
        u = w ** (1.0 / g)
        f = stable_density(StableParams(a, z * u), x, cfg)
        if f == 0.0:
            return 0.0
        return f * math.exp(ln_norm - lam * u) / g

    pts = [(q * u_star) ** g for q in (0.2, 1.0, 5.0) if q * u_star < u_max]
    return quad_adaptive(
        integrand_sub,
        0.0,
        u_max**g,
        abs_tol=outer_tol,
        rel_tol=cfg.rel_tol,
        limit=cfg.max_subdivisions,
        points=pts or None,
    )


def thorin_density(alpha: float, gamma_shape: float, t: float) -> float:
    """Closed-form Thorin measure density of the Linnik law."""
    if not (0.0 < alpha < 1.0):
        raise ConstraintError(f"alpha must lie in (0,1), got {alpha!r}")
    if gamma_shape <= 0.0:
        raise ConstraintError(f"shape must be positive, got {gamma_shape!r}")
    if not (t > 0.0):
        raise DomainError(f"density requires t > 0, got {t!r}")
    ta = t**alpha
    den = 1.0 + 2.0 * ta * math.cos(math.pi * alpha) + ta * ta
    return gamma_shape * alpha * math.sin(math.pi * alpha) / math.pi * t ** (alpha - 1.0) / den
