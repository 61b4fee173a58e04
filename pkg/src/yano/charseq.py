"""Topological types of irreducible plane-curve germs.

A germ is described either by its characteristic sequence ``(n; b1, ..., bg)``
(Puiseux exponents over the common denominator ``n``) or by its Newton pairs
``[(p1, q1), ..., (pg, qg)]``.  :func:`yano_data` evaluates Yano's recursions
and :func:`yano_series` the generating series of the conjectural generic
b-exponents.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import CharSeqError, InternalConsistencyError, InvalidArgument, ParseError
from .fracseries import FracSeries, block

__all__ = [
    "CharSeq",
    "NewtonPairs",
    "YanoData",
    "validate",
    "gcd_chain",
    "yano_data",
    "yano_series",
    "newton_pairs_from_charseq",
    "charseq_from_newton_pairs",
    "has_simple_eigenvalues_g2",
    "parse_charseq",
    "parse_newton_pairs",
]


@dataclass(frozen=True)
class CharSeq:
    n: int
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))

    @property
    def g(self):
        return len(self.b)

    def __str__(self):
        return f"{self.n};" + ",".join(str(x) for x in self.b)


@dataclass(frozen=True)
class NewtonPairs:
    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(tuple(p) for p in self.pairs))
        for p, q in self.pairs:
            if not isinstance(p, int) or not isinstance(q, int):
                raise CharSeqError("Newton pairs must be integers", "pair-not-integer")
            if p < 2 or q < 1:
                raise CharSeqError(f"Newton pair ({p},{q}) needs p >= 2 and q >= 1", "pair-range")
            if gcd(p, q) != 1:
                raise CharSeqError(f"Newton pair ({p},{q}) is not coprime", "pair-not-coprime")
        if not self.pairs:
            raise CharSeqError("at least one Newton pair is required", "no-pairs")
        if self.pairs[0][1] <= self.pairs[0][0]:
            raise CharSeqError("first Newton pair must satisfy q1 > p1", "pair-convention")

    @property
    def g(self):
        return len(self.pairs)

    @property
    def multiplicity(self):
        n = 1
        for p, _ in self.pairs:
            n *= p
        return n

    def __str__(self):
        return ",".join(f"{p}:{q}" for p, q in self.pairs)


@dataclass(frozen=True)
class YanoData:
    """Output of Yano's recursions.

    ``R`` holds R_1..R_g, ``r`` holds r_1..r_g; ``Rp``/``rp`` hold the primed
    values starting at index 0 (``Rp[0] == n``, ``rp[0] == 2``).
    """

    e: tuple
    R: tuple
    r: tuple
    Rp: tuple
    rp: tuple


def gcd_chain(n, b):
    e = [n]
    for bk in b:
        e.append(gcd(e[-1], bk))
    return e


def validate(cs):
    n, b = cs.n, cs.b
    if not isinstance(n, int) or any(not isinstance(x, int) for x in b):
        raise CharSeqError("characteristic sequence entries must be integers", "not-integer")
    if n < 2:
        raise CharSeqError(f"n = {n}: smooth or empty germ is not a singularity", "smooth")
    if not b:
        raise CharSeqError("characteristic sequence needs at least one exponent", "no-exponents")
    seq = (n,) + b
    for i in range(len(seq) - 1):
        if seq[i + 1] <= seq[i]:
            raise CharSeqError(
                f"exponents must increase strictly: {seq[i]} >= {seq[i + 1]}", "not-increasing"
            )
    e = gcd_chain(n, b)
    for k in range(1, len(e)):
        if e[k] >= e[k - 1]:
            raise CharSeqError(
                f"gcd chain {tuple(e)} not strictly decreasing at b_{k} = {b[k - 1]}",
                "gcd-not-decreasing",
            )
    if e[-1] != 1:
        raise CharSeqError(f"gcd chain {tuple(e)} does not end at 1", "gcd-not-one")


def _as_integer(value, what):
    if value.denominator != 1:
        raise InternalConsistencyError(f"{what} = {value} is not integral")
    return value.numerator


def yano_data(cs):
    validate(cs)
    n, b = cs.n, cs.b
    g = len(b)
    e = gcd_chain(n, b)
    bb = (n,) + b  # bb[k] = b_k with b_0 = n

    R, r = [], []
    R_prev = Fraction(n)
    for k in range(1, g + 1):
        closed = Fraction(bb[k] * e[k - 1], e[k]) + Fraction(
            sum(bb[j + 1] * (e[j] - e[j + 1]) for j in range(k - 1)), e[k]
        )
        recursive = Fraction(e[k - 1], e[k]) * (R_prev + bb[k] - bb[k - 1])
        if closed != recursive:
            raise InternalConsistencyError(
                f"R_{k}: closed form {closed} disagrees with recursion {recursive}"
            )
        R.append(_as_integer(closed, f"R_{k}"))
        r.append(_as_integer(Fraction(bb[k] + n, e[k]), f"r_{k}"))
        R_prev = closed

    Rp, rp = [n], [2]
    for k in range(1, g + 1):
        Rp.append(_as_integer(Fraction(R[k - 1] * e[k], e[k - 1]), f"R'_{k}"))
        rp.append((r[k - 1] * e[k]) // e[k - 1] + 1)
    return YanoData(tuple(e), tuple(R), tuple(r), tuple(Rp), tuple(rp))


def yano_series(cs):
    """``t + sum_k block(r_k, R_k) - sum_k block(r'_k, R'_k)``."""
    data = yano_data(cs)
    parts = [(FracSeries.monomial(1), 1)]
    parts += [(block(rk, Rk), 1) for Rk, rk in zip(data.R, data.r)]
    parts += [(block(rk, Rk), -1) for Rk, rk in zip(data.Rp, data.rp)]
    total = FracSeries.linear_combination(parts)
    if not total.is_nonnegative():
        raise InternalConsistencyError(f"Yano series {total} has a negative coefficient")
    return total


def newton_pairs_from_charseq(cs):
    validate(cs)
    e = gcd_chain(cs.n, cs.b)
    pairs = []
    for k in range(1, len(e)):
        p = e[k - 1] // e[k]
        step = cs.b[0] if k == 1 else cs.b[k - 1] - cs.b[k - 2]
        pairs.append((p, step // e[k]))
    return NewtonPairs(tuple(pairs))


def charseq_from_newton_pairs(np_):
    g = np_.g
    e = [1] * (g + 1)
    for k in range(g, 0, -1):
        e[k - 1] = np_.pairs[k - 1][0] * e[k]
    b = []
    for k in range(1, g + 1):
        q = np_.pairs[k - 1][1]
        b.append(q * e[k] if k == 1 else b[-1] + q * e[k])
    cs = CharSeq(e[0], tuple(b))
    validate(cs)
    return cs


def has_simple_eigenvalues_g2(np_):
    """Monodromy simplicity test for two Newton pairs ``(n1, m), (n2, q)``."""
    if np_.g != 2:
        raise InvalidArgument(f"expected exactly two Newton pairs, got {np_.g}")
    (n1, m), (_, q) = np_.pairs
    return gcd(q, n1) == 1 or gcd(q, m) == 1


def parse_charseq(text):
    """Parse ``"n;b1,b2,..."``."""
    try:
        head, _, tail = text.partition(";")
        n = int(head.strip())
        b = tuple(int(x) for x in tail.split(",") if x.strip())
    except ValueError:
        raise ParseError(f"cannot parse characteristic sequence {text!r}") from None
    cs = CharSeq(n, b)
    validate(cs)
    return cs


def parse_newton_pairs(text):
    """Parse ``"p1:q1,p2:q2,..."``."""
    pairs = []
    try:
        for chunk in text.split(","):
            if not chunk.strip():
                continue
            p, q = chunk.split(":")
            pairs.append((int(p), int(q)))
    except ValueError:
        raise ParseError(f"cannot parse Newton pairs {text!r}") from None
    return NewtonPairs(tuple(pairs))
