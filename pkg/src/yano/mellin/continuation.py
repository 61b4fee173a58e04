"""Meromorphic continuation of ``G_f(s) = int_0^1 f(t) t^s dt/t``.

For an analytic ``f`` with Taylor coefficients ``f_k`` at 0 and any
``K >= ceil(-s)``::

    G_f(s) = int_0^1 (f(t) - sum_{k<=K} f_k t^k) t^(s-1) dt + sum_{k<=K} f_k / (s + k)

The remainder integral is split at a cut ``t_c``: below it the integrand is
replaced by its Taylor tail and integrated termwise, above it QUADPACK
handles the smooth difference.  This avoids the cancellation
``f(t) - p_K(t)`` would suffer near 0 when ``s`` is negative.
"""

import math
from fractions import Fraction

import numpy as np

from ..errors import AccuracyError, PoleLocationError, PositivityError
from .poly import Poly1
from .quadrature import DEFAULT_CONFIG, integrate_interval, integrate_power

__all__ = ["AxisFunction", "power_series", "g_continuation", "direct_mellin", "numeric_taylor"]

_POSITIVITY_CELLS = 2**12


def power_series(p, beta, m):
    """First ``m + 1`` coefficients of ``p(t)^beta`` for a polynomial with ``p(0) == 1``.

    Uses ``n b_n = sum_k ((beta + 1) k - n) p_k b_{n-k}``, exact in Fractions.
    """
    if p[0] != 1:
        raise ValueError("power_series needs a unit constant term")
    beta = Fraction(beta)
    b = [Fraction(1)]
    nz = [(k, c) for k, c in enumerate(p.coeffs) if k >= 1 and c]
    for n in range(1, m + 1):
        acc = Fraction(0)
        for k, pk in nz:
            if k > n:
                break
            bn_k = b[n - k]
            if bn_k:
                acc += ((beta + 1) * k - n) * pk * bn_k
        b.append(acc / n)
    return b


class AxisFunction:
    """``const * A(t)^beta * Q(t)`` with exact polynomial data.

    These are exactly the functions ``t -> d^nu(f^alpha)/dx^nu (0, t) / nu!``
    the residue formulas integrate.  ``A`` must be positive on [0, 1].
    """

    def __init__(self, A, beta, Q=None, const=1):
        self.A = A if isinstance(A, Poly1) else Poly1(A)
        self.beta = Fraction(beta)
        self.Q = Q if Q is None or isinstance(Q, Poly1) else Poly1(Q)
        if self.Q is None:
            self.Q = Poly1([1])
        self.const = Fraction(const)
        self._cache = {}

    def is_zero(self):
        return self.const == 0 or self.Q.is_zero()

    def check_positive(self):
        """Raise :class:`PositivityError` unless ``A > 0`` on [0, 1].

        ``A(0)`` is checked exactly; the interior on a grid of cell size 2^-12.
        Integer powers are exempt.
        """
        if self.beta.denominator == 1 and self.beta >= 0:
            return
        if self.A(Fraction(0)) <= 0:
            raise PositivityError(f"axis polynomial vanishes or is negative at 0: {self.A}")
        grid = np.linspace(0.0, 1.0, _POSITIVITY_CELLS + 1)
        coeffs = [float(c) for c in reversed(self.A.coeffs)]
        vals = np.polyval(coeffs, grid)
        if np.any(vals <= 0):
            t = float(grid[np.argmin(vals)])
            raise PositivityError(f"axis polynomial {self.A} is not positive near t = {t:.6g}")

    def __call__(self, t):
        if self.is_zero():
            return 0.0
        a = self.A(t)
        if self.beta.denominator == 1:
            pw = a ** int(self.beta)
        else:
            pw = a ** float(self.beta)
        return float(self.const) * pw * self.Q(t)

    @property
    def exact_factor(self):
        """``A(0)^beta`` as a Fraction when rational, else as a float."""
        a0 = self.A[0]
        if self.beta.denominator == 1:
            return a0 ** int(self.beta)
        if a0 == 1:
            return Fraction(1)
        return float(a0) ** float(self.beta)

    def taylor_exact(self, m):
        """``(factor, [c_0..c_m])`` with Taylor coefficients ``factor * c_k``."""
        if m in self._cache:
            return self._cache[m]
        if self.is_zero():
            out = (Fraction(0), [Fraction(0)] * (m + 1))
        else:
            a0 = self.A[0]
            if a0 == 0:
                raise PositivityError(f"A(0) = 0 for {self.A}: no Taylor expansion of A^beta")
            unit = Poly1([c / a0 for c in self.A.coeffs])
            series = power_series(unit, self.beta, m)
            coeffs = []
            for n in range(m + 1):
                acc = Fraction(0)
                for k, qk in enumerate(self.Q.coeffs[: n + 1]):
                    if qk:
                        acc += qk * series[n - k]
                coeffs.append(acc * self.const)
            out = (self.exact_factor, coeffs)
        self._cache[m] = out
        return out

    def taylor(self, m):
        factor, coeffs = self.taylor_exact(m)
        f = float(factor)
        return [f * float(c) for c in coeffs]

    def __repr__(self):
        return f"AxisFunction({self.const} * ({self.A})^{self.beta} * {self.Q})"


def numeric_taylor(f, order, h=0.25, refine=True):
    """Taylor coefficients of a black-box ``f`` at 0 from a Chebyshev fit on [0, h].

    Returns ``(coeffs, spread)``; ``spread[k]`` is the change in coefficient k
    when the fit window is halved (a crude error estimate).
    """

    def fit(width):
        deg = order + 8
        nodes = 0.5 * width * (1 - np.cos((2 * np.arange(deg + 1) + 1) * np.pi / (2 * deg + 2)))
        vals = np.array([f(float(t)) for t in nodes])
        cheb = np.polynomial.Chebyshev.fit(nodes, vals, deg, domain=[0.0, width])
        return cheb.convert(kind=np.polynomial.Polynomial, domain=[-1, 1], window=[-1, 1]).coef

    c1 = fit(h)
    c1 = np.pad(c1, (0, max(0, order + 1 - len(c1))))[: order + 1]
    if not refine:
        return list(c1), [0.0] * (order + 1)
    c2 = fit(h / 2)
    c2 = np.pad(c2, (0, max(0, order + 1 - len(c2))))[: order + 1]
    return list(c2), list(np.abs(c2 - c1))


def g_continuation(f, s, K=None, *, config=None, full_output=False, extra_terms=None):
    """Continued value of ``G_f(s)``.

    ``f`` is an :class:`AxisFunction`, a :class:`Poly1`, or any callable on
    [0, 1]; for plain callables the Taylor coefficients are estimated
    numerically.  With ``full_output`` returns ``(value, abserr)``.
    """
    cfg = config or DEFAULT_CONFIG
    s_exact = s if isinstance(s, Fraction) else None
    s_f = float(s)
    kmin = max(0, math.ceil(-s_f))
    if K is None:
        K = kmin
    if K < kmin:
        raise ValueError(f"truncation order K={K} below ceil(-s)={kmin}")

    if isinstance(f, Poly1):
        f = AxisFunction(Poly1([1]), 0, f)

    exact = isinstance(f, AxisFunction)
    err_coeffs = None
    if exact:
        f.check_positive()
        deg = max(f.A.degree, 0) + max(f.Q.degree, 0)
        M = K + max(40, 2 * deg + 8) if extra_terms is None else K + extra_terms
        factor, ex = f.taylor_exact(M)
        coeffs = [float(factor) * float(c) for c in ex]
        zero = [factor == 0 or c == 0 for c in ex]
        tc = _choose_cut(coeffs, M)
    else:
        # few, well-conditioned coefficients and a small cut keep fit noise out
        M = K + 3 if extra_terms is None else K + extra_terms
        coeffs, err_coeffs = numeric_taylor(f, M)
        scale = max(1.0, max(abs(c) for c in coeffs))
        zero = [abs(c) <= 1e-9 * scale for c in coeffs]
        tc = 0.005

    terms = []
    err = 0.0
    for k in range(K + 1):
        if s_exact is not None:
            hits_pole = s_exact + k == 0
        else:
            hits_pole = s_f + k == 0
        if hits_pole:
            if zero[k]:
                continue
            raise PoleLocationError(
                f"G_f has a pole at s = {s}: Taylor coefficient f_{k} = {coeffs[k]:.3g} is nonzero"
            )
        terms.append(coeffs[k] / (s_f + k))
        if err_coeffs is not None:
            err += err_coeffs[k] / abs(s_f + k)

    # int_0^tc of the Taylor tail, termwise
    for k in range(K + 1, M + 1):
        if coeffs[k]:
            terms.append(coeffs[k] * tc ** (s_f + k) / (s_f + k))
            if err_coeffs is not None:
                err += err_coeffs[k] * tc ** (s_f + k) / (s_f + k)

    head = coeffs[: K + 1]

    def remainder(t):
        p = 0.0
        for c in reversed(head):
            p = p * t + c
        return (f(t) - p) * t ** (s_f - 1.0)

    far, far_err = integrate_interval(remainder, tc, 1.0, cfg)
    terms.append(far)
    err += far_err
    value = math.fsum(terms)
    if not math.isfinite(value):
        raise AccuracyError(f"non-finite continuation value at s = {s}")
    if full_output:
        return value, err
    return value


def _choose_cut(coeffs, M, tol=1e-17):
    """Largest cut in (0, 1/2] at which the neglected Taylor terms are negligible."""
    tc = 0.5
    upper = [abs(c) for c in coeffs[M // 2 + 1 :]]
    if not any(upper):
        return tc
    for _ in range(60):
        scale = max(1.0, max(abs(c) * tc**k for k, c in enumerate(coeffs)))
        tail = max(a * tc ** (k + M // 2 + 1) for k, a in enumerate(upper))
        if tail <= tol * scale:
            return tc
        tc *= 0.5
    return tc


def direct_mellin(f, s, config=None, full_output=False):
    """Plain quadrature of ``int_0^1 f(t) t^(s-1) dt`` for ``s > 0``."""
    value, err = integrate_power(f, s, 1.0, config)
    return (value, err) if full_output else value
