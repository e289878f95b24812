"""Dense univariate polynomials over an exact field.

Coefficients are stored lowest degree first.  The same class serves
``Q[t]`` (``Fraction`` coefficients) and ``K[y]`` for ``K = Q(t)``
(``RatFunc`` coefficients); plain ints are promoted to ``Fraction``.
"""

from fractions import Fraction
from typing import NamedTuple


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, cs):
        # caller guarantees no trailing zeros and coerced entries
        p = cls.__new__(cls)
        p.coeffs = cs
        return p

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, c, d):
        c = _coerce(c)
        if not c:
            return cls()
        return cls._raw((c - c,) * d + (c,))

    @classmethod
    def gen(cls, one=Fraction(1)):
        return cls((one - one, one))

    # -- basic shape -------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self._zero()

    def _zero(self):
        if self.coeffs:
            c = self.coeffs[0]
            return c - c
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.coeffs
            return self.coeffs == (other,)
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    # -- ring operations ---------------------------------------------
    def _wrap(self, other):
        if isinstance(other, Poly):
            return other
        return Poly((other,))

    def __add__(self, other):
        other = self._wrap(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            other = _coerce(other)
            if not other:
                return Poly()
            return Poly._raw(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [a[0] - a[0]] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly((self._one(),))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _one(self):
        if self.coeffs:
            c = self.coeffs[-1]
            return c / c
        return Fraction(1)

    def divmod(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lc = other.lc
        if len(rem) <= db:
            return Poly(), self
        quo = [None] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] / lc if rem[k] else rem[k]
            quo[k - db] = c
            if c:
                for j in range(db + 1):
                    rem[k - db + j] = rem[k - db + j] - c * bc[j]
        return Poly(quo), Poly(rem[:db])

    def __floordiv__(self, other):
        return self.divmod(self._wrap(other))[0]

    def __mod__(self, other):
        return self.divmod(self._wrap(other))[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def scale(self, c):
        return self * c

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return Poly._raw(tuple(c / lc for c in self.coeffs))

    def derivative(self):
        return Poly(c * i for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element."""
        if not self.coeffs:
            return self._zero()
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, other):
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def map_coeffs(self, f):
        return Poly(f(c) for c in self.coeffs)

    # -- display -----------------------------------------------------
    def to_str(self, var="t"):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if not c:
                continue
            parts.append(_term(c, d, var))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.to_str('t')})"


def _term(c, d, var):
    mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
    if isinstance(c, Fraction):
        if not mono:
            return str(c)
        if c == 1:
            return mono
        if c == -1:
            return "-" + mono
        return f"{c}*{mono}"
    if mono and c == 1:
        return mono
    if mono and c == -1:
        return "-" + mono
    cs = str(c)
    simple = getattr(c, "is_polynomial", lambda: False)()
    if not mono:
        return cs if simple else f"({cs})"
    if simple and len([a for a in c.num.coeffs if a]) == 1 and "/" not in cs:
        return f"{cs}*{mono}"
    return f"({cs})*{mono}"


def poly_gcd(a, b):
    """Monic gcd; ``gcd(0, 0) == 0``."""
    if not isinstance(a, Poly):
        a = Poly(a)
    if not isinstance(b, Poly):
        b = Poly(b)
    while b:
        a, b = b, a.divmod(b)[1]
        if b:
            b = b.monic()
    return a.monic()


def poly_xgcd(a, b):
    """Return ``(g, s, u)`` with ``s*a + u*b == g`` and ``g`` monic."""
    one = a._one() if a else b._one()
    r0, r1 = a, b
    s0, s1 = Poly((one,)), Poly()
    u0, u1 = Poly(), Poly((one,))
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        u0, u1 = u1, u0 - q * u1
    if not r0:
        return r0, s0, u0
    lc = r0.lc
    return r0.monic(), s0 * (one / lc), u0 * (one / lc)


def poly_lcm(a, b):
    if not a or not b:
        return Poly()
    return (a * b).exact_div(poly_gcd(a, b)).monic()


class SquareFree(NamedTuple):
    lc: object
    factors: list


def yun_squarefree(p):
    """Square-free decomposition ``p = lc * prod(s_i ** m_i)``.

    Factors are monic, square-free and pairwise coprime, sorted by
    multiplicity.
    """
    if not p:
        raise ValueError("square-free decomposition of the zero polynomial")
    lc = p.lc
    f = p.monic()
    if f.degree == 0:
        return SquareFree(lc, [])
    out = []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return SquareFree(lc, out)


def is_square_poly(p):
    """True iff ``p`` is the square of a polynomial over Q."""
    if not p:
        return True
    sf = yun_squarefree(p)
    if any(m % 2 for _, m in sf.factors):
        return False
    return is_square_rational(sf.lc)


def is_square_rational(q):
    q = Fraction(q)
    if q < 0:
        return False
    return _isqrt_exact(q.numerator) is not None and _isqrt_exact(q.denominator) is not None


def _isqrt_exact(n):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


def qpoly(coeffs):
    """Build a polynomial over Q from ints/Fractions/strings, lowest first."""
    return Poly(Fraction(c) for c in coeffs)


T = Poly((Fraction(0), Fraction(1)))
