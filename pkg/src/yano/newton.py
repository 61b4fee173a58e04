"""Commode Newton polygons and their Bernstein-Sato candidate roots.

A facet is stored as ``(c, d, n)`` for the supporting line ``c*x + d*y = n``
with ``gcd(c, d, n) == 1``.  For a non-degenerate commode germ whose
non-integral spectral numbers are distinct, the generic Bernstein-Sato
roots are ``-(c + d + k)/n`` for ``0 <= k < n`` over all facets, minus the
rationals ``q`` with ``|q| * sigma0`` or ``|q| * tau0`` integral.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidArgument, NotCommodeError, ParseError

__all__ = [
    "NewtonPolygon",
    "polygon_from_support",
    "bf_roots",
    "in_exclusion_set",
    "parse_support",
]


@dataclass(frozen=True)
class NewtonPolygon:
    facets: tuple
    sigma0: int
    tau0: int

    def __post_init__(self):
        facets = tuple(tuple(int(v) for v in f) for f in self.facets)
        object.__setattr__(self, "facets", facets)
        if not facets:
            raise InvalidArgument("a Newton polygon needs at least one facet")
        if self.sigma0 < 1 or self.tau0 < 1:
            raise InvalidArgument("axis intercepts must be positive")
        for c, d, n in facets:
            if min(c, d, n) < 1:
                raise InvalidArgument(f"facet {(c, d, n)} must have positive entries")
            if gcd(gcd(c, d), n) != 1:
                raise InvalidArgument(f"facet {(c, d, n)} is not normalised")
        # slopes -c/d strictly increasing
        for (c1, d1, _), (c2, d2, _) in zip(facets, facets[1:]):
            if not Fraction(-c1, d1) < Fraction(-c2, d2):
                raise InvalidArgument("facets must be ordered by increasing slope")
        c, d, n = facets[0]
        if d * self.tau0 != n:
            raise InvalidArgument("first facet does not pass through (0, tau0)")
        c, d, n = facets[-1]
        if c * self.sigma0 != n:
            raise InvalidArgument("last facet does not pass through (sigma0, 0)")
        for (c1, d1, n1), (c2, d2, n2) in zip(facets, facets[1:]):
            det = c1 * d2 - c2 * d1
            x = Fraction(n1 * d2 - n2 * d1, det)
            y = Fraction(c1 * n2 - c2 * n1, det)
            if x.denominator != 1 or y.denominator != 1 or x < 0 or y < 0:
                raise InvalidArgument("consecutive facets must meet at a lattice vertex")


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def polygon_from_support(points):
    """Compact faces of the Newton polygon of a lattice point set."""
    pts = {(int(x), int(y)) for x, y in points}
    if not pts:
        raise InvalidArgument("empty support")
    if any(x < 0 or y < 0 for x, y in pts):
        raise InvalidArgument("support points must have nonnegative coordinates")
    if (0, 0) in pts:
        raise InvalidArgument("support contains the origin: the germ does not vanish at 0")
    on_y = [y for x, y in pts if x == 0]
    on_x = [x for x, y in pts if y == 0]
    if not on_y or not on_x:
        raise NotCommodeError("support does not meet both coordinate axes")
    tau0, sigma0 = min(on_y), min(on_x)

    # lower-left convex chain from (0, tau0) to (sigma0, 0)
    cand = sorted(
        p for p in pts if (p[0] < sigma0 and p[1] < tau0) or p in ((0, tau0), (sigma0, 0))
    )
    hull = []
    for p in cand:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    facets = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        c, d = y1 - y2, x2 - x1
        g = gcd(c, d)
        c, d = c // g, d // g
        facets.append((c, d, c * x1 + d * y1))
    return NewtonPolygon(tuple(facets), sigma0, tau0)


def in_exclusion_set(q, sigma0, tau0):
    a = abs(Fraction(q))
    return (a * sigma0).denominator == 1 or (a * tau0).denominator == 1


def bf_roots(pg):
    """Candidate roots, duplicates merged, sorted descending (closest to 0 first)."""
    roots = set()
    for c, d, n in pg.facets:
        for k in range(n):
            q = Fraction(-(c + d + k), n)
            if not in_exclusion_set(q, pg.sigma0, pg.tau0):
                roots.add(q)
    return sorted(roots, reverse=True)


def parse_support(text):
    """``"x,y;x,y;..."`` or a JSON list of pairs."""
    s = text.strip()
    try:
        if s.startswith("["):
            pts = [tuple(int(v) for v in p) for p in json.loads(s)]
        else:
            pts = []
            for chunk in s.split(";"):
                if chunk.strip():
                    x, y = chunk.split(",")
                    pts.append((int(x), int(y)))
    except (ValueError, TypeError, json.JSONDecodeError):
        raise ParseError(f"cannot parse support points {text!r}") from None
    if any(len(p) != 2 for p in pts):
        raise ParseError(f"support points must be pairs: {text!r}")
    return pts
