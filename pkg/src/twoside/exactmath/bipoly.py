"""Sparse bivariate polynomials over Q in variables x, y."""

from fractions import Fraction

from .poly import Poly


class BiPoly:
    """Immutable map ``(xdeg, ydeg) -> coeff`` with nonzero coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                c = Fraction(c)
                if c:
                    d[key] = d.get(key, Fraction(0)) + c
        self.terms = {k: d[k] for k in sorted(d) if d[k]}

    @classmethod
    def from_triples(cls, triples):
        return cls({(int(i), int(j)): Fraction(c) for c, i, j in _merge(triples)})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    @property
    def deg_x(self):
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_y(self):
        return max((j for _, j in self.terms), default=-1)

    def __add__(self, other):
        other = _wrap(other)
        d = dict(self.terms)
        for k, c in other.terms.items():
            d[k] = d.get(k, Fraction(0)) + c
        return BiPoly(d)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_wrap(other))

    def __rsub__(self, other):
        return _wrap(other) - self

    def __mul__(self, other):
        other = _wrap(other)
        d = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                d[k] = d.get(k, Fraction(0)) + c1 * c2
        return BiPoly(d)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = BiPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def swap(self):
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def diff(self, var):
        if var == "y":
            return BiPoly({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})
        return BiPoly({(i - 1, j): c * i for (i, j), c in self.terms.items() if i})

    def coeffs_in(self, var):
        """Coefficients in ``var`` (lowest first) as polynomials in the other."""
        deg = self.deg_y if var == "y" else self.deg_x
        rows = [dict() for _ in range(deg + 1)]
        for (i, j), c in self.terms.items():
            if var == "y":
                rows[j][i] = c
            else:
                rows[i][j] = c
        out = []
        for r in rows:
            top = max(r, default=-1)
            out.append(Poly([r.get(k, 0) for k in range(top + 1)]))
        return out

    def as_poly_in(self, var):
        return Poly(self.coeffs_in(var)) if self.terms else Poly()

    @classmethod
    def from_poly_in(cls, p, var):
        d = {}
        for a, coeff in enumerate(p.coeffs):
            for b, c in enumerate(coeff.coeffs):
                if c:
                    d[(b, a) if var == "y" else (a, b)] = c
        return cls(d)

    @classmethod
    def from_univariate(cls, p, var):
        """Embed a univariate polynomial in ``var``."""
        d = {}
        for k, c in enumerate(p.coeffs):
            if c:
                d[(k, 0) if var == "x" else (0, k)] = c
        return cls(d)

    def univariate(self, var):
        """Return the polynomial in ``var`` if the other variable is absent."""
        out = {}
        for (i, j), c in self.terms.items():
            if (var == "x" and j) or (var == "y" and i):
                raise ValueError(f"polynomial involves more than {var}")
            out[i if var == "x" else j] = c
        top = max(out, default=-1)
        return Poly([out.get(k, 0) for k in range(top + 1)])

    def eval_x(self, x0):
        """Specialize ``x := x0``; returns a univariate polynomial in y."""
        return Poly([c(x0) for c in self.coeffs_in("y")])

    def to_triples(self):
        return [[_fmt(c), i, j] for (i, j), c in self.terms.items()]

    def to_str(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0], -kv[0][1])):
            mono = "*".join(
                s for s in (_pow("x", i), _pow("y", j)) if s
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

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"BiPoly({self.to_str()})"


def _pow(v, e):
    if e == 0:
        return ""
    return v if e == 1 else f"{v}^{e}"


def _fmt(c):
    return str(Fraction(c))


def _merge(triples):
    acc = {}
    for c, i, j in triples:
        acc[(i, j)] = acc.get((i, j), Fraction(0)) + Fraction(c)
    return [(c, i, j) for (i, j), c in acc.items()]


def _wrap(o):
    if isinstance(o, BiPoly):
        return o
    return BiPoly.const(o)


def _bareiss_det(m):
    """Fraction-free determinant of a square matrix of ``Poly`` entries."""
    n = len(m)
    if n == 0:
        return Poly((Fraction(1),))
    a = [row[:] for row in m]
    sign = 1
    prev = Poly((Fraction(1),))
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Poly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def sylvester(f, g):
    """Sylvester matrix of two univariate polynomials (any coefficient ring)."""
    m, n = f.degree, g.degree
    size = m + n
    zero = f.coeffs[0] - f.coeffs[0]
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def resultant(F, G, var="y"):
    """Sylvester resultant of ``F`` and ``G`` eliminating ``var``."""
    if not F or not G:
        raise ValueError("resultant of a zero polynomial")
    other = "x" if var == "y" else "y"
    f = F.as_poly_in(var)
    g = G.as_poly_in(var)
    if f.degree == 0 and g.degree == 0:
        return BiPoly.const(1)
    det = _bareiss_det(sylvester(f, g))
    return BiPoly.from_univariate(det, other)


def discriminant_y(F):
    """``resultant(F, dF/dy, y)``; zero iff F has a repeated factor in y."""
    return resultant(F, F.diff("y"), "y")
