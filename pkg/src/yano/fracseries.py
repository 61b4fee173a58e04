"""Finite formal sums ``sum c_q t^q`` with rational exponents and integer coefficients.

Exponents are :class:`fractions.Fraction` values, never floats.

Text form
---------
A series prints as its terms in ascending exponent order, joined by
``" + "`` or ``" - "``::

    series   := "0" | ["-"] term (sep term)*
    sep      := " + " | " - "
    term     := coeff | [coeff "*"] "t" ["^" exponent]
    coeff    := positive integer             (omitted when 1)
    exponent := integer | "(" ["-"] int ["/" int] ")"

Integer exponents other than 1 print bare (``t^2``), every other exponent
is parenthesised (``t^(5/12)``, ``t^(-3)``).  ``t^0`` prints as the bare
coefficient.  The parser accepts arbitrary whitespace around the
separators and ``t^(4/2)`` style unreduced exponents.
"""

import re
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidArgument, NegativeCoefficientError, ParseError

__all__ = [
    "FracSeries",
    "block",
    "add",
    "scale",
    "total_mass",
    "coefficient_at",
    "is_nonnegative",
    "exponent_multiset",
    "format_fraction",
    "parse_fraction",
]


def format_fraction(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_fraction(text):
    """Parse ``"p/q"`` or ``"p"`` into a Fraction; reject floats and junk."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    m = _FRACTION_RE.match(str(text))
    if m is None:
        raise ParseError(f"not a rational number: {text!r}")
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


class FracSeries:
    """Immutable finite map ``exponent -> nonzero integer coefficient``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        acc = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for q, c in items:
                if not isinstance(c, int) or isinstance(c, bool):
                    if isinstance(c, Fraction) and c.denominator == 1:
                        c = c.numerator
                    else:
                        raise InvalidArgument(f"coefficient must be an integer, got {c!r}")
                if type(q) is not Fraction:
                    q = Fraction(q)
                acc[q] = acc.get(q, 0) + c
        self._terms = tuple(sorted((q, c) for q, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def _from_counts(cls, acc):
        out = cls.__new__(cls)
        out._terms = tuple(sorted((q, c) for q, c in acc.items() if c != 0))
        out._hash = None
        return out

    @classmethod
    def linear_combination(cls, parts):
        """``sum m * s`` over ``(s, m)`` pairs, accumulated in one pass."""
        acc = {}
        get = acc.get
        for series, m in parts:
            for q, c in series._terms:
                acc[q] = get(q, 0) + m * c
        return cls._from_counts(acc)

    @classmethod
    def monomial(cls, q, c=1):
        return cls({Fraction(q): c})

    # mapping-ish access

    def items(self):
        return iter(self._terms)

    def exponents(self):
        return [q for q, _ in self._terms]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, q):
        return self.coefficient_at(q)

    def coefficient_at(self, q):
        q = Fraction(q)
        for e, c in self._terms:
            if e == q:
                return c
        return 0

    def as_dict(self):
        return dict(self._terms)

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, FracSeries):
            return NotImplemented
        return FracSeries.linear_combination(((self, 1), (other, 1)))

    def __neg__(self):
        return FracSeries._from_counts({q: -c for q, c in self._terms})

    def __sub__(self, other):
        if not isinstance(other, FracSeries):
            return NotImplemented
        return FracSeries.linear_combination(((self, 1), (other, -1)))

    def __mul__(self, c):
        if not isinstance(c, int) or isinstance(c, bool):
            return NotImplemented
        return FracSeries._from_counts({q: c * v for q, v in self._terms})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FracSeries):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    # summaries

    def total_mass(self):
        return sum(c for _, c in self._terms)

    def is_nonnegative(self):
        return all(c > 0 for _, c in self._terms)

    def exponent_multiset(self):
        """Exponents with their coefficients as multiplicities, ascending."""
        for q, c in self._terms:
            if c < 0:
                raise NegativeCoefficientError(
                    f"coefficient {c} at t^({format_fraction(q)}) is negative"
                )
        return list(self._terms)

    def exponent_set(self):
        return frozenset(q for q, _ in self._terms)

    # text form

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, (q, c) in enumerate(self._terms):
            sign = "-" if c < 0 else "+"
            body = _format_term(q, abs(c))
            if i == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self):
        return f"FracSeries({str(self)!r})"

    @classmethod
    def parse(cls, text):
        return parse_series(text)


def _format_term(q, c):
    if q == 0:
        return str(c)
    if q == 1:
        power = "t"
    elif q.denominator == 1 and q > 0:
        power = f"t^{q.numerator}"
    else:
        power = f"t^({format_fraction(q)})"
    return power if c == 1 else f"{c}*{power}"


_TERM_RE = re.compile(
    r"""^(?:(?P<coef>\d+)(?:\s*\*\s*(?P<t1>t)(?:\s*\^\s*(?P<e1>\d+|\(\s*-?\d+\s*(?:/\s*\d+\s*)?\)))?)?
         |(?P<t2>t)(?:\s*\^\s*(?P<e2>\d+|\(\s*-?\d+\s*(?:/\s*\d+\s*)?\)))?)$""",
    re.VERBOSE,
)


def parse_series(text):
    """Inverse of ``str(FracSeries)``."""
    s = text.strip()
    if not s:
        raise ParseError("empty series text")
    if s == "0":
        return FracSeries()
    # split on +/- that separate terms (exponents keep their '-' inside parentheses)
    tokens = []
    depth = 0
    start = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        start = 1
    for i in range(start, len(s)):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0:
            tokens.append((sign, s[start:i]))
            sign = -1 if ch == "-" else 1
            start = i + 1
    tokens.append((sign, s[start:]))

    terms = {}
    for sgn, raw in tokens:
        body = raw.strip()
        m = _TERM_RE.match(body)
        if m is None:
            raise ParseError(f"cannot parse term {body!r} in {text!r}")
        if m.group("t2"):
            coef, exp_txt, has_t = 1, m.group("e2"), True
        else:
            coef, exp_txt, has_t = int(m.group("coef")), m.group("e1"), bool(m.group("t1"))
        if coef == 0:
            raise ParseError(f"zero coefficient in term {body!r}")
        if not has_t:
            q = Fraction(0)
        elif exp_txt is None:
            q = Fraction(1)
        else:
            q = parse_fraction(exp_txt.strip("() ").replace(" ", ""))
        terms[q] = terms.get(q, 0) + sgn * coef
    return FracSeries(terms)


def block(nu, N):
    """Expanded ``t^(nu/N) (1 - t) / (1 - t^(1/N))``: N unit terms from nu/N to (nu+N-1)/N."""
    if not isinstance(nu, int) or not isinstance(N, int) or nu <= 0 or N <= 0:
        raise InvalidArgument(f"block needs positive integers, got nu={nu!r}, N={N!r}")
    return _block(nu, N)


@lru_cache(maxsize=4096)
def _block(nu, N):
    # exponents are already increasing, so no sort is needed
    out = FracSeries.__new__(FracSeries)
    out._terms = tuple((Fraction(nu + k, N), 1) for k in range(N))
    out._hash = None
    return out


def add(a, b):
    return a + b


def scale(a, c):
    return a * c


def total_mass(a):
    return a.total_mass()


def coefficient_at(a, q):
    return a.coefficient_at(q)


def is_nonnegative(a):
    return a.is_nonnegative()


def exponent_multiset(a):
    return a.exponent_multiset()

