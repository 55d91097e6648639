"""Power-kernel convolutions of the one-sided stable density.

With rho_nu(t) = t**(nu-1) / Gamma(nu) for nu > 0 and rho_0 = delta, the
convolution (rho_nu * f_alpha(.|z))(t) is computed two independent ways:

* ``gamma_stable_conv_direct``: the Laplace convolution
  int_0^t rho_nu(t-v) f_alpha(v|z) dv, with the (t-v)**(nu-1) endpoint
  handled by the substitution w = (t-v)**nu, which maps the kernel to a
  constant weight:

      (1/Gamma(nu+1)) int_0^{t**nu} f_alpha(t - w**(1/nu) | z) dw.

* ``gamma_stable_conv_beta``: the scale-mixture form

      (z**(nu/a)/Gamma(nu/a)) int_0^1 f_alpha(t | z/u)
                                      u**(-nu/a-1) (1-u)**(nu/a-1) du,

  whose (1-u)**(nu/a-1) endpoint is likewise removed by w = (1-u)**(nu/a)
  on the upper half of the interval.  The u -> 0 endpoint needs no help:
  f_alpha(t | z/u) vanishes faster than any power of u.

Both share the Laplace transform x**(-nu) exp(-z x**alpha), which the test
suite checks by quadrature.  ``gamma_linnik_conv_check`` returns both sides
of the identity

    (rho_{beta-alpha*gamma} * l_alpha(.|gamma,lambda))(x)
        = lambda**gamma x**(beta-1) E^gamma_{alpha,beta}(-lambda x**alpha)

for the tests; the left side integrates the gamma-mixture (Linnik) density,
the right side goes through the three-parameter Mittag-Leffler routine.

Accuracy is quadrature-limited; the steep u**(-nu/a-1) factor in the beta
form restricts advertised accuracy to nu/alpha <= 10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConstraintError, DomainError
from .quadrature import quad_adaptive
from .special import PrabhakarParams, SeriesConfig, log_gamma, prabhakar_ml
from .stable import DEFAULT_CONFIG, NumericConfig, StableParams, stable_density

__all__ = [
    "PowerKernel",
    "gamma_stable_conv_direct",
    "gamma_stable_conv_beta",
    "gamma_linnik_conv_check",
]


@dataclass(frozen=True)
class PowerKernel:
    """Exponent of the power kernel rho_nu; nu = 0 is the delta kernel."""

    nu: float

    def __post_init__(self) -> None:
        if not (self.nu >= 0.0) or not math.isfinite(self.nu):
            raise ConstraintError(f"nu must be >= 0, got {self.nu!r}")


def gamma_stable_conv_direct(
    k: PowerKernel, p: StableParams, t: float, cfg: NumericConfig | None = None
) -> float:
    """(rho_nu * f_alpha(.|z))(t) by the Laplace-convolution integral."""
    if cfg is None:
        cfg = DEFAULT_CONFIG
    if not (t > 0.0):
        raise DomainError(f"convolution point must be positive, got {t!r}")
    nu = k.nu
    if nu == 0.0:
        return stable_density(p, t, cfg)
    inv_nu = 1.0 / nu

    def integrand(w: float) -> float:
        v = t - w**inv_nu
        if v <= 0.0:
            return 0.0
        return stable_density(p, v, cfg)

    # the inner density carries ~abs_tol noise, so the outer target must
    # sit above it or the outer rule cannot converge
    val = quad_adaptive(
        integrand,
        0.0,
        t**nu,
        abs_tol=max(10.0 * cfg.abs_tol, 1e-9),
        rel_tol=cfg.rel_tol,
        limit=cfg.max_subdivisions,
    )
    return val / math.exp(log_gamma(nu + 1.0))


def gamma_stable_conv_beta(
    k: PowerKernel, p: StableParams, t: float, cfg: NumericConfig | None = None
) -> float:
    """Same convolution via the beta-weighted scale mixture over z/u."""
    if cfg is None:
        cfg = DEFAULT_CONFIG
    if not (t > 0.0):
        raise DomainError(f"convolution point must be positive, got {t!r}")
    nu = k.nu
    if nu == 0.0:
        return stable_density(p, t, cfg)
    q = nu / p.alpha

    def density_at(u: float) -> float:
        # f first: it underflows to 0 long before u**(-q-1) overflows
        f = stable_density(StableParams(p.alpha, p.z / u), t, cfg)
        if f == 0.0:
            return 0.0
        return f

    def lower(u: float) -> float:
        f = density_at(u)
        if f == 0.0:
            return 0.0
        return f * u ** (-q - 1.0) * (1.0 - u) ** (q - 1.0)

    def upper(w: float) -> float:
        # w = (1-u)**q flattens the (1-u)**(q-1) endpoint weight
        u = 1.0 - w ** (1.0 / q)
        if u <= 0.0:
            return 0.0
        f = density_at(u)
        if f == 0.0:
            return 0.0
        return f * u ** (-q - 1.0)

    # Below u_layer the inner density is cut off superexponentially, like
    # exp(-K u**(-1/(1-a))); the integrand climbs through a boundary layer
    # around the u where that exponent passes ~32, so hand the quadrature
    # that point explicitly.
    a = p.alpha
    K = (1.0 - a) * a ** (a / (1.0 - a)) * (p.z / t**a) ** (1.0 / (1.0 - a))
    u_layer = (K / 32.0) ** (1.0 - a)
    pts = sorted(u for u in (u_layer, 3.0 * u_layer) if 0.0 < u < 0.5)
    outer_tol = max(10.0 * cfg.abs_tol, 1e-9)
    val_lo = quad_adaptive(
        lower,
        0.0,
        0.5,
        abs_tol=outer_tol,
        rel_tol=cfg.rel_tol,
        limit=cfg.max_subdivisions,
        points=pts or None,
    )
    val_hi = quad_adaptive(
        upper,
        0.0,
        0.5**q,
        abs_tol=outer_tol,
        rel_tol=cfg.rel_tol,
        limit=cfg.max_subdivisions,
    ) / q
    return (val_lo + val_hi) * math.exp(q * math.log(p.z) - log_gamma(q))


def gamma_linnik_conv_check(
    alpha: float,
    gamma_shape: float,
    lam: float,
    beta: float,
    x: float,
    cfg: NumericConfig | None = None,
) -> tuple[float, float]:
    """Both sides of the gamma-Linnik convolution identity at z = 1.

    lhs integrates rho_{beta-alpha*gamma} against the Linnik density by
    quadrature (the delta kernel shortcut applies when beta = alpha*gamma);
    rhs is lambda**gamma x**(beta-1) E^gamma_{alpha,beta}(-lambda x**alpha).
    """
    if cfg is None:
        cfg = DEFAULT_CONFIG
    if not (0.0 < alpha < 1.0):
        raise ConstraintError(f"alpha must lie in (0,1), got {alpha!r}")
    if gamma_shape <= 0.0 or lam <= 0.0:
        raise ConstraintError("gamma_shape and lambda must be positive")
    nu = beta - alpha * gamma_shape
    if nu < 0.0:
        raise ConstraintError(
            f"need beta - alpha*gamma >= 0, got {nu!r}"
        )
    if not (x > 0.0):
        raise DomainError(f"evaluation point must be positive, got {x!r}")

    from .mlfam import LinnikParams, linnik_density

    lp = LinnikParams(alpha, gamma_shape, lam, 1.0)
    if nu == 0.0:
        lhs = linnik_density(lp, x, cfg)
    else:
        inv_nu = 1.0 / nu

        def integrand(w: float) -> float:
            v = x - w**inv_nu
            if v <= 0.0:
                return 0.0
            return linnik_density(lp, v, cfg)

        lhs = quad_adaptive(
            integrand,
            0.0,
            x**nu,
            abs_tol=max(10.0 * cfg.abs_tol, 1e-8),
            rel_tol=cfg.rel_tol,
            limit=cfg.max_subdivisions,
        ) / math.exp(log_gamma(nu + 1.0))

    scfg = SeriesConfig(tail_tol=min(1e-12, cfg.abs_tol))
    ml = prabhakar_ml(
        PrabhakarParams(alpha, beta, gamma_shape), lam * x**alpha, scfg
    )
    rhs = math.exp(gamma_shape * math.log(lam) + (beta - 1.0) * math.log(x)) * ml
    return lhs, rhs
