"""Paired continuations that sum to a Beta value.

For ``s1, s2 > 0`` and ``c > 0``::

    G_{(y^p + c)^a}(p s1) + G_{(1 + c x^p)^a}(p s2) = c^(-s2) / p * B(s1, s2),  a = -(s1 + s2)

Residues assembled from terms ``K (1 + y^p)^a y^k`` often pair up this way,
which is how a closed form is recognised.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidArgument
from ..fracseries import format_fraction
from .quadrature import DEFAULT_CONFIG, beta, integrate_power

__all__ = ["beta_identity_check", "BetaClosedForm", "recognize_beta", "x3y3_x7_y8_residue",
           "x3y3_x7_y8_pipeline", "reproduce_example_43"]


def beta_identity_check(p, c, s1, s2, config=None):
    """``(lhs, rhs)`` of the Beta identity, lhs by quadrature and rhs by log-Gamma."""
    if not isinstance(p, int) or p < 1:
        raise InvalidArgument("p must be a positive integer")
    c = float(c)
    s1, s2 = float(s1), float(s2)
    if c <= 0 or s1 <= 0 or s2 <= 0:
        raise InvalidArgument("c, s1, s2 must be positive")
    a = -(s1 + s2)
    cfg = config or DEFAULT_CONFIG
    left, _ = integrate_power(lambda y: (y**p + c) ** a, p * s1, 1.0, cfg)
    right, _ = integrate_power(lambda x: (1.0 + c * x**p) ** a, p * s2, 1.0, cfg)
    lhs = math.fsum([left, right])
    rhs = c ** (-s2) / p * beta(s1, s2)
    return lhs, rhs


@dataclass(frozen=True)
class BetaClosedForm:
    """``sum coefficient * B(s1, s2)`` over the recognised pairs."""

    parts: tuple  # ((coefficient, s1, s2), ...)

    @property
    def value(self):
        return math.fsum(float(k) * beta(a, b) for k, a, b in self.parts)

    def __str__(self):
        if not self.parts:
            return "0"
        out = []
        for k, a, b in self.parts:
            out.append(f"{format_fraction(k)}*B({format_fraction(a)},{format_fraction(b)})")
        return " + ".join(out).replace("+ -", "- ")


def _normalise(term):
    """``(K, beta, s')`` with ``term = K * int_0^1 (1+u)^beta u^s' du/u``, or None."""
    h = term.h
    if h.is_zero():
        return "zero"
    A, Q = h.A, h.Q
    sup = A.support()
    if len(sup) != 2 or sup[0] != 0 or A[0] != 1 or A[sup[1]] != 1:
        return None
    qs = Q.support()
    if len(qs) != 1:
        return None
    p, k = sup[1], qs[0]
    K = Fraction(term.coefficient) * h.const * Q[k] / p
    return K, h.beta, (k + Fraction(term.point)) / p


def recognize_beta(terms):
    """Closed form for a residue given as a sum of one-variable terms, or None."""
    norm = []
    for t in terms:
        n = _normalise(t)
        if n is None:
            return None
        if n != "zero":
            norm.append(n)
    parts = []
    used = [False] * len(norm)
    for i, (k1, b1, s1) in enumerate(norm):
        if used[i]:
            continue
        for j in range(i + 1, len(norm)):
            k2, b2, s2 = norm[j]
            if not used[j] and k1 == k2 and b1 == b2 and s1 + s2 == -b1 and s1 > 0 and s2 > 0:
                used[i] = used[j] = True
                a, b = sorted((s1, s2), reverse=True)
                parts.append((k1, a, b))
                break
        else:
            return None
    return BetaClosedForm(tuple(parts))


def x3y3_x7_y8_pipeline(t_param):
    """Decomposition of ``int f^s x y dx/x dy/y`` for ``f = x^3y^3 + x^7 + t x^6 y + y^8``."""
    from .pipeline import pipeline_from_dict

    return pipeline_from_dict({
        "params": {"t": str(Fraction(t_param))},
        "integrand": {"f": "x^3*y^3 + x^7 + t*x^6*y + y^8", "a": [0, 0], "b": [1, 1]},
        "steps": [
            {"split": "I2", "from": "root", "region": "y <= x^(4/3)"},
            {"substitute": [[3, 0], [4, 1]]},
            {"split": "I1", "from": "root", "region": "y >= x^(4/3)"},
            {"substitute": [[1, 3], [0, 4]]},
            {"split": "I11", "from": "I1", "region": "y <= x^(3/11)"},
            {"substitute": [[11, 0], [3, 1]]},
            {"split": "I12", "from": "I1", "region": "y >= x^(3/11)"},
            {"substitute": [[1, 11], [0, 3]]},
            {"residue_at": "-8/21"},
        ],
    })


def x3y3_x7_y8_residue(t_param, config=None):
    """``(numeric, closed)`` residue at ``-8/21`` with the second deformation parameter 0."""
    t_param = Fraction(t_param)
    if t_param < 0:
        raise InvalidArgument("t must be nonnegative so that f stays positive off the origin")
    res = x3y3_x7_y8_pipeline(t_param).residue(Fraction(-8, 21), config)
    closed = float(-8 * t_param / 441) * beta(Fraction(5, 7), Fraction(2, 3))
    return res.residue, closed


reproduce_example_43 = x3y3_x7_y8_residue
