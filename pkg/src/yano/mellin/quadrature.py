"""Adaptive Gauss-Kronrod quadrature with algebraic endpoint regularisation.

Thin layer over QUADPACK (``scipy.integrate.quad``) that turns convergence
failures into :class:`AccuracyError` and removes ``t^(sigma-1)`` endpoint
singularities by the substitution ``t = u^m``.
"""

import math
import warnings
from dataclasses import dataclass

from scipy import integrate

from ..errors import AccuracyError

__all__ = ["QuadConfig", "DEFAULT_CONFIG", "integrate_interval", "integrate_power", "beta"]


@dataclass(frozen=True)
class QuadConfig:
    atol: float = 1e-12
    rtol: float = 1e-10
    limit: int = 400
    # accepted slack between QUADPACK's own error estimate and the requested tolerance
    slack: float = 100.0

    def target(self, value):
        return max(self.atol, self.rtol * abs(value))


DEFAULT_CONFIG = QuadConfig()


def integrate_interval(func, a, b, config=None):
    """``(value, abserr)`` of ``int_a^b func``."""
    cfg = config or DEFAULT_CONFIG
    if a == b:
        return 0.0, 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        res = integrate.quad(
            func, a, b, epsabs=cfg.atol, epsrel=cfg.rtol, limit=cfg.limit, full_output=1
        )
    value, err = res[0], res[1]
    if not math.isfinite(value) or not math.isfinite(err):
        raise AccuracyError(f"quadrature on [{a}, {b}] produced a non-finite value")
    if len(res) > 3 and err > cfg.slack * cfg.target(value):
        raise AccuracyError(f"quadrature on [{a}, {b}] did not converge: {res[3].splitlines()[0]}")
    return value, err


def integrate_power(g, sigma, b=1.0, config=None):
    """``int_0^b g(t) t^(sigma-1) dt`` for ``sigma > 0`` and ``g`` smooth on [0, b].

    With ``t = u^m`` and ``m = ceil(1/sigma)`` the integrand becomes
    ``m g(u^m) u^(m sigma - 1)``, bounded at ``u = 0``.
    """
    sigma = float(sigma)
    if sigma <= 0:
        raise ValueError(f"integrate_power needs sigma > 0, got {sigma}")
    m = max(1, math.ceil(1.0 / sigma))
    p = m * sigma - 1.0
    ub = b ** (1.0 / m)

    def integrand(u):
        return m * g(u**m) * u**p

    return integrate_interval(integrand, 0.0, ub, config)


def beta(a, b):
    """Euler Beta function from log-Gamma, for positive arguments."""
    a, b = float(a), float(b)
    if a <= 0 or b <= 0:
        raise ValueError("beta needs positive arguments")
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))
