"""Exact polynomials with Fraction coefficients in one and two variables."""

from fractions import Fraction

from ..errors import ParseError

__all__ = ["Poly1", "Poly2", "parse_poly2"]


def _frac(c):
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly1:
    """Dense univariate polynomial, coefficients from degree 0 upward."""

    __slots__ = ("coeffs", "_fl")

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._fl = None

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly1([self[k] + other[k] for k in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly1([self[k] - other[k] for k in range(n)])

    def __mul__(self, other):
        if not isinstance(other, Poly1):
            return Poly1([c * _frac(other) for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly1()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly1(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly1([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return isinstance(other, Poly1) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, t):
        if isinstance(t, (int, Fraction)):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * t + c
            return acc
        if self._fl is None:
            self._fl = [float(c) for c in reversed(self.coeffs)]
        acc = 0.0
        for c in self._fl:
            acc = acc * t + c
        return acc

    def support(self):
        return [k for k, c in enumerate(self.coeffs) if c]

    def __repr__(self):
        return f"Poly1({[str(c) for c in self.coeffs]})"


class Poly2:
    """Sparse polynomial in x, y: ``{(i, j): coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i},{j})")
            c = _frac(c)
            acc[(i, j)] = acc.get((i, j), Fraction(0)) + c
        self.terms = {k: v for k, v in sorted(acc.items()) if v != 0}

    @classmethod
    def constant(cls, c=1):
        return cls({(0, 0): c})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return Poly2(out)

    def __mul__(self, other):
        if not isinstance(other, Poly2):
            return Poly2({k: v * _frac(other) for k, v in self.terms.items()})
        out = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + a * b
        return Poly2(out)

    def __eq__(self, other):
        return isinstance(other, Poly2) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __call__(self, x, y):
        return sum((c * x**i * y**j for (i, j), c in self.terms.items()), Fraction(0))

    def evaluate_float(self, x, y):
        """Vectorised float evaluation (x, y may be numpy arrays)."""
        total = 0.0
        for (i, j), c in self.terms.items():
            total = total + float(c) * x**i * y**j
        return total

    def swap(self):
        return Poly2({(j, i): c for (i, j), c in self.terms.items()})

    def x_slices(self, upto):
        """Coefficient polynomials in y of x^0 .. x^upto."""
        out = [dict() for _ in range(upto + 1)]
        for (i, j), c in self.terms.items():
            if i <= upto:
                out[i][j] = c
        return [Poly1([s.get(j, 0) for j in range(max(s, default=-1) + 1)]) for s in out]

    def min_exponents(self):
        if not self.terms:
            return (0, 0)
        return (min(i for i, _ in self.terms), min(j for _, j in self.terms))

    def divide_monomial(self, mi, mj):
        return Poly2({(i - mi, j - mj): c for (i, j), c in self.terms.items()})

    def substitute_monomial(self, matrix):
        """Substitute ``x -> u^al v^be, y -> u^ga v^de``."""
        (al, be), (ga, de) = matrix
        return Poly2({(al * i + ga * j, be * i + de * j): c for (i, j), c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.terms.items():
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly2({str(self)!r})"


def parse_poly2(text, params=None):
    """Parse a polynomial expression in x, y; named parameters are substituted
    by the given rational values before expansion."""
    import sympy

    x, y = sympy.symbols("x y")
    params = params or {}
    local = {"x": x, "y": y}
    for name in params:
        local[name] = sympy.Symbol(name)
    try:
        expr = sympy.sympify(str(text).replace("^", "**"), locals=local)
        expr = expr.subs({local[k]: sympy.Rational(str(v)) for k, v in params.items()})
        poly = sympy.Poly(sympy.expand(expr), x, y)
    except (sympy.SympifyError, sympy.PolynomialError, TypeError, SyntaxError) as exc:
        raise ParseError(f"cannot parse polynomial {text!r}: {exc}") from None
    terms = {}
    for (i, j), c in poly.terms():
        if not c.is_Rational:
            raise ParseError(f"coefficient {c} of {text!r} is not rational")
        terms[(int(i), int(j))] = Fraction(int(c.p), int(c.q))
    return Poly2(terms)
