"""Numerical data of embedded resolution graphs.

A graph is a flat list of exceptional vertices ``(N, nu, delta)`` plus the
number of strict-transform arrows.  ``delta`` counts exceptional neighbours
*and* arrows; arrows themselves never enter any sum.  Vertices with
``delta == 2`` contribute nothing to any quantity computed here and may be
left out.
"""

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InconsistentGraphError, InvalidArgument, ParseError
from .fracseries import FracSeries, block

__all__ = [
    "GraphVertex",
    "ResGraph",
    "from_newton_pairs",
    "extended_yano_series",
    "milnor_number",
    "zeta_exponents",
    "eigenvalue_multiplicities",
    "has_multiple_eigenvalue_excluding_one",
    "load_graph",
    "graph_from_dict",
    "graph_to_dict",
]


@dataclass(frozen=True)
class GraphVertex:
    N: int
    nu: int
    delta: int

    def __post_init__(self):
        for name in ("N", "nu", "delta"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidArgument(f"vertex field {name} must be an integer, got {v!r}")
        if self.N < 1 or self.nu < 1 or self.delta < 0:
            raise InvalidArgument(f"vertex {self.as_tuple()} out of range")

    def as_tuple(self):
        return (self.N, self.nu, self.delta)


@dataclass(frozen=True)
class ResGraph:
    vertices: tuple
    branches: int = 1

    def __post_init__(self):
        verts = tuple(
            v if isinstance(v, GraphVertex) else GraphVertex(*v) for v in self.vertices
        )
        object.__setattr__(self, "vertices", verts)
        if not isinstance(self.branches, int) or self.branches < 1:
            raise InvalidArgument(f"branches must be a positive integer, got {self.branches!r}")

    def as_tuples(self):
        return [v.as_tuple() for v in self.vertices]

    def without_valency_two(self):
        return ResGraph(tuple(v for v in self.vertices if v.delta != 2), self.branches)


def from_newton_pairs(np_):
    """Reduced resolution graph (no valency-2 vertices) of an irreducible germ.

    Order of vertices: E_0, then for each k the end vertex E_k followed by the
    rupture vertex of the k-th pair.
    """
    pairs = np_.pairs
    g = len(pairs)
    p = [pk for pk, _ in pairs]
    q = [qk for _, qk in pairs]

    def tail(k):  # p_{k} * ... * p_{g}, 0-based k
        out = 1
        for pk in p[k:]:
            out *= pk
        return out

    verts = [GraphVertex(tail(0), 2, 1)]
    a_prev = None
    nu_rupture_prev = 1
    for k in range(g):
        a = q[k] if k == 0 else q[k] + p[k] * p[k - 1] * a_prev
        nu_end = nu_rupture_prev + -(-q[k] // p[k])
        nu_rupture = p[k] * nu_rupture_prev + q[k]
        verts.append(GraphVertex(a * tail(k + 1), nu_end, 1))
        verts.append(GraphVertex(a * tail(k), nu_rupture, 3))
        a_prev, nu_rupture_prev = a, nu_rupture
    return ResGraph(tuple(verts), 1)


def extended_yano_series(graph):
    """``t + sum_i (delta_i - 2) * block(nu_i, N_i)`` over exceptional vertices."""
    parts = [(FracSeries.monomial(1), 1)]
    parts += [(block(v.nu, v.N), v.delta - 2) for v in graph.vertices if v.delta != 2]
    return FracSeries.linear_combination(parts)


def milnor_number(graph):
    mu = 1 - sum(v.N * (2 - v.delta) for v in graph.vertices)
    if mu <= 0:
        raise InconsistentGraphError(f"graph gives Milnor number {mu} <= 0")
    return mu


def zeta_exponents(graph):
    """``{N: e_N}`` encoding the monodromy zeta function ``prod (1 - t^N)^e_N``."""
    acc = Counter()
    for v in graph.vertices:
        acc[v.N] += 2 - v.delta
    return {N: e for N, e in sorted(acc.items()) if e != 0}


def eigenvalue_multiplicities(graph):
    """Multiplicity of each eigenvalue ``exp(2 pi i q)``, keyed by ``q`` in [0, 1).

    Classes with multiplicity zero are omitted.
    """
    zeta = zeta_exponents(graph)
    orders = set()
    for N in zeta:
        orders.update(d for d in range(1, N + 1) if N % d == 0)
    orders.add(1)
    out = {}
    for d in sorted(orders):
        mult = -sum(e for N, e in zeta.items() if N % d == 0)
        if d == 1:
            mult += 1
        if mult < 0:
            raise InconsistentGraphError(
                f"negative multiplicity {mult} for primitive {d}-th roots of unity"
            )
        if mult == 0:
            continue
        for j in range(d):
            if gcd(j, d) == 1:
                out[Fraction(j, d)] = mult
    return dict(sorted(out.items()))


def has_multiple_eigenvalue_excluding_one(graph):
    return any(m >= 2 for q, m in eigenvalue_multiplicities(graph).items() if q != 0)


def graph_from_dict(data):
    try:
        verts = tuple(
            GraphVertex(int(v["N"]), int(v["nu"]), int(v["delta"])) for v in data["vertices"]
        )
        branches = int(data.get("branches", 1))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph description: {exc}") from None
    return ResGraph(verts, branches)


def graph_to_dict(graph):
    return {
        "vertices": [{"N": v.N, "nu": v.nu, "delta": v.delta} for v in graph.vertices],
        "branches": graph.branches,
    }


def load_graph(path):
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON ({exc})") from None
    if "input" in data and "vertices" not in data:
        data = data["input"]
    return graph_from_dict(data)
