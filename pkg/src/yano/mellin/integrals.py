"""Two-variable Mellin-type integrals and their poles.

An :class:`Integrand` stands for::

    scale * int_{[0,1]^2} f(x,y)^s * w(x,y) * x^(a1 s + b1) * y^(a2 s + b2) dx/x dy/y

with ``f > 0`` on the square and ``w`` a polynomial weight (default 1).
Poles lie on the progressions ``-(b1 + nu)/a1`` and ``-(b2 + nu)/a2``.
Residues at simple poles reduce to one-variable continuations of the
axis functions ``[x^nu] (f^alpha w)(x, y)``; at a crossing of the two
progressions the ``(s - alpha)^-2`` coefficient is a Taylor coefficient of
``f^alpha w`` at the origin.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..errors import InvalidArgument, OrientationError, PoleLocationError
from ..fracseries import format_fraction
from .continuation import AxisFunction, g_continuation
from .poly import Poly1, Poly2
from .quadrature import DEFAULT_CONFIG

__all__ = [
    "Integrand",
    "CandidatePole",
    "ResidueTerm",
    "PoleReport",
    "candidate_poles",
    "axis_function",
    "residue_at",
    "monomial_change",
    "certify_positive",
]

ORDER_DROP_TOL = 1e-12


@dataclass(frozen=True)
class Integrand:
    f: Poly2
    a1: int
    b1: int
    a2: int
    b2: int
    scale: Fraction = Fraction(1)
    weight: Poly2 = None

    def __post_init__(self):
        for name in ("a1", "b1", "a2", "b2"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise InvalidArgument(f"{name} must be a nonnegative integer, got {v!r}")
        if self.a1 == 0 and self.b1 == 0 or self.a2 == 0 and self.b2 == 0:
            raise InvalidArgument("integral diverges for every s: need a_i >= 1 or b_i >= 1")
        object.__setattr__(self, "scale", Fraction(self.scale))
        if self.scale <= 0:
            raise InvalidArgument("scale must be positive")
        if self.weight is None:
            object.__setattr__(self, "weight", Poly2.constant(1))
        if self.f.is_zero():
            raise InvalidArgument("f must be nonzero")

    def swapped(self):
        return Integrand(self.f.swap(), self.a2, self.b2, self.a1, self.b1, self.scale,
                         self.weight.swap())

    def describe(self):
        def form(a, b):
            if a == 0:
                return str(b)
            return f"{a}s+{b}" if b else f"{a}s"

        w = "" if self.weight == Poly2.constant(1) else f" * ({self.weight})"
        return (
            f"{format_fraction(self.scale)} * int ({self.f})^s{w}"
            f" x^({form(self.a1, self.b1)}) y^({form(self.a2, self.b2)}) dx/x dy/y"
        )


@dataclass(frozen=True)
class CandidatePole:
    location: Fraction
    tags: tuple  # ((progression, nu), ...) with progression 1 (x) or 2 (y)

    @property
    def is_double(self):
        return len(self.tags) == 2


@dataclass(frozen=True)
class ResidueTerm:
    """``coefficient * G_h(point)`` contributing to a residue."""

    coefficient: Fraction
    h: AxisFunction
    point: Fraction
    value: float
    error: float


@dataclass(frozen=True)
class PoleReport:
    location: Fraction
    order: int
    residue: float = None
    error: float = 0.0
    leading2: object = None
    closed_form: str = None
    tags: tuple = ()
    terms: tuple = ()
    flags: tuple = ()
    positivity_certified: bool = None
    extra: dict = field(default_factory=dict)


def _progression(a, b, lo, hi):
    out = {}
    if a == 0:
        return out
    nu = 0
    while True:
        q = Fraction(-(b + nu), a)
        if q <= lo:
            break
        if q < hi:
            out[q] = nu
        nu += 1
    return out


def candidate_poles(ig, lo=-3, hi=0):
    """Candidate poles in the open window ``(lo, hi)``, sorted descending."""
    lo, hi = Fraction(lo), Fraction(hi)
    p1 = _progression(ig.a1, ig.b1, lo, hi)
    p2 = _progression(ig.a2, ig.b2, lo, hi)
    out = []
    for q in sorted(set(p1) | set(p2), reverse=True):
        tags = []
        if q in p1:
            tags.append((1, p1[q]))
        if q in p2:
            tags.append((2, p2[q]))
        out.append(CandidatePole(q, tuple(tags)))
    return out


def _tags_for(ig, alpha):
    tags = []
    for prog, (a, b) in ((1, (ig.a1, ig.b1)), (2, (ig.a2, ig.b2))):
        if a == 0:
            continue
        nu = -alpha * a - b
        if nu.denominator == 1 and nu >= 0:
            tags.append((prog, int(nu)))
    return tuple(tags)


def axis_function(f, alpha, nu, weight=None):
    """``y -> [x^nu] (f^alpha * weight)(x, y)`` as an :class:`AxisFunction`.

    Equals ``(1/nu!) d^nu (f^alpha w)/dx^nu (0, y)``.  With ``f = sum F_i(y) x^i``
    the coefficients of ``f^alpha`` are ``F_0^(alpha-k) Q_k`` where
    ``k Q_k = sum_j ((alpha+1) j - k) F_j F_0^(j-1) Q_{k-j}``.
    """
    alpha = Fraction(alpha)
    F = f.x_slices(nu)
    W = (weight or Poly2.constant(1)).x_slices(nu)
    F0 = F[0]
    if F0.is_zero():
        return AxisFunction(Poly1([1]), 0, Poly1())
    Q = [Poly1([1])]
    F0pow = [Poly1([1])]
    for j in range(1, nu + 1):
        F0pow.append(F0pow[-1] * F0)
    for k in range(1, nu + 1):
        acc = Poly1()
        for j in range(1, k + 1):
            if F[j].is_zero() or Q[k - j].is_zero():
                continue
            acc = acc + F[j] * F0pow[j - 1] * Q[k - j] * ((alpha + 1) * j - k)
        Q.append(acc * Fraction(1, k))
    total = Poly1()
    for k in range(nu + 1):
        if W[nu - k].is_zero() or Q[k].is_zero():
            continue
        total = total + Q[k] * F0pow[nu - k] * W[nu - k]
    return AxisFunction(F0, alpha - nu, total)


def certify_positive(f, exclude_origin=False, coarse=64, min_cell=2.0**-12):
    """Best-effort check that ``f > 0`` on [0,1]^2 (optionally minus the origin).

    Samples a coarse grid, then repeatedly bisects the cells around the
    smallest sample down to ``min_cell``.
    """
    xs = np.linspace(0.0, 1.0, coarse + 1)
    X, Y = np.meshgrid(xs, xs, indexing="ij")
    V = np.asarray(f.evaluate_float(X, Y), dtype=float) * np.ones_like(X)
    if exclude_origin:
        V[0, 0] = np.inf
    if np.any(V <= 0):
        return False
    order = np.argsort(V, axis=None)[:8]
    h = 1.0 / coarse
    for idx in order:
        i, j = np.unravel_index(idx, V.shape)
        cx, cy = xs[i], xs[j]
        width = h
        while width > min_cell:
            pts = np.linspace(-width, width, 9)
            PX = np.clip(cx + pts[:, None], 0.0, 1.0) * np.ones((1, 9))
            PY = np.clip(cy + pts[None, :], 0.0, 1.0) * np.ones((9, 1))
            vals = np.asarray(f.evaluate_float(PX, PY), dtype=float) * np.ones_like(PX)
            if exclude_origin:
                vals[(PX == 0) & (PY == 0)] = np.inf
            if np.any(vals <= 0):
                return False
            k = np.argmin(vals)
            cx, cy = PX.flat[k], PY.flat[k]
            width /= 4
    return True


def _single(ig, alpha, nu, config):
    """Residue contribution of the x-progression with index ``nu``."""
    c = axis_function(ig.f, alpha, nu, ig.weight)
    point = ig.a2 * alpha + ig.b2
    coef = ig.scale / ig.a1
    if c.is_zero():
        return ResidueTerm(coef, c, point, 0.0, 0.0)
    value, err = g_continuation(c, point, config=config, full_output=True)
    return ResidueTerm(coef, c, point, float(coef) * value, float(coef) * err)


def residue_at(ig, alpha, config=None, *, check_domain=True):
    """Pole report at a candidate ``alpha`` (simple and double cases)."""
    cfg = config or DEFAULT_CONFIG
    alpha = Fraction(alpha)
    tags = _tags_for(ig, alpha)
    if not tags:
        raise PoleLocationError(f"{format_fraction(alpha)} is not a candidate pole of {ig.describe()}")
    certified = certify_positive(ig.f) if check_domain else None
    flags = [] if certified or certified is None else ["positivity-uncertified"]

    if len(tags) == 1:
        prog, nu = tags[0]
        term = _single(ig if prog == 1 else ig.swapped(), alpha, nu, cfg)
        return PoleReport(alpha, 1, term.value, term.error, None, None, tags, (term,),
                          tuple(flags), certified)

    (_, nu1), (_, nu2) = tags
    c = axis_function(ig.f, alpha, nu1, ig.weight)
    c.check_positive()
    factor, coeffs = c.taylor_exact(nu2)
    raw = coeffs[nu2] * (factor if not isinstance(factor, float) else Fraction(1))
    lead = ig.scale / (ig.a1 * ig.a2) * raw
    if isinstance(factor, float):
        lead = float(lead) * factor
    exact_zero = not isinstance(lead, float) and lead == 0
    if not exact_zero and abs(float(lead)) > ORDER_DROP_TOL:
        return PoleReport(alpha, 2, None, 0.0, lead, None, tags, (), tuple(flags), certified)
    flags.append("order-drop")
    if not exact_zero:
        flags.append("borderline")
    t1 = _single(ig, alpha, nu1, cfg)
    t2 = _single(ig.swapped(), alpha, nu2, cfg)
    value = math.fsum([t1.value, t2.value])
    return PoleReport(alpha, 1, value, t1.error + t2.error, lead, None, tags, (t1, t2),
                      tuple(flags), certified)


def monomial_change(ig, matrix):
    """Pull back along ``x -> u^al v^be, y -> u^ga v^de`` (``matrix = [[al, be], [ga, de]]``).

    ``x^A y^B dx/x dy/y`` becomes ``det * u^(al A + ga B) v^(be A + de B) du/u dv/v``;
    the largest monomial dividing the substituted ``f`` (resp. weight) is moved
    into the ``s``-dependent (resp. constant) part of the exponents.
    """
    (al, be), (ga, de) = matrix
    if any(not isinstance(v, int) or v < 0 for v in (al, be, ga, de)):
        raise InvalidArgument("substitution exponents must be nonnegative integers")
    det = al * de - be * ga
    if det <= 0:
        raise OrientationError(f"substitution matrix has determinant {det} <= 0")
    f = ig.f.substitute_monomial(matrix)
    mf = f.min_exponents()
    f = f.divide_monomial(*mf)
    w = ig.weight.substitute_monomial(matrix)
    mw = w.min_exponents()
    w = w.divide_monomial(*mw)
    a1 = al * ig.a1 + ga * ig.a2 + mf[0]
    a2 = be * ig.a1 + de * ig.a2 + mf[1]
    b1 = al * ig.b1 + ga * ig.b2 + mw[0]
    b2 = be * ig.b1 + de * ig.b2 + mw[1]
    return Integrand(f, a1, b1, a2, b2, ig.scale * det, w)
