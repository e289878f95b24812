"""Elements of K = Q(t) in canonical form."""

from fractions import Fraction

from .poly import Poly, poly_gcd, yun_squarefree, is_square_rational


class RatFunc:
    """``num/den`` with ``gcd(num, den) == 1`` and ``den`` monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None):
        if isinstance(num, RatFunc):
            if den is None:
                self.num, self.den, self._hash = num.num, num.den, None
                return
            num, d0 = num.num, num.den
            if isinstance(den, RatFunc):
                num, den = num * den.den, d0 * den.num
            else:
                den = d0 * _as_poly(den)
        num = _as_poly(num)
        den = Poly((Fraction(1),)) if den is None else _as_poly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        self._hash = None
        if not num:
            self.num, self.den = Poly(), Poly((Fraction(1),))
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc
        if lc != 1:
            num = num * (1 / lc)
            den = den.monic()
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num, r.den, r._hash = num, den, None
        return r

    @classmethod
    def from_poly(cls, p):
        return cls._raw(p, Poly((Fraction(1),)))

    @classmethod
    def t(cls):
        return cls.from_poly(Poly((Fraction(0), Fraction(1))))

    # -- predicates --------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def is_polynomial(self):
        return self.den.degree == 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num[0] if self.num else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == other
        if isinstance(other, Poly):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num.coeffs, self.den.coeffs))
        return self._hash

    # -- arithmetic --------------------------------------------------
    def __add__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den.degree == 0:
                return RatFunc._raw(self.num + other.num, self.den)
            return RatFunc(self.num + other.num, self.den)
        if self.den.degree == 0:
            return RatFunc._raw(self.num * other.den + other.num, other.den)
        if other.den.degree == 0:
            return RatFunc._raw(self.num + other.num * self.den, self.den)
        g = poly_gcd(self.den, other.den)
        if g.degree == 0:
            # coprime denominators: result already reduced
            num = self.num * other.den + other.num * self.den
            if not num:
                return RatFunc()
            return RatFunc._raw(num, self.den * other.den)
        d1 = self.den.exact_div(g)
        d2 = other.den.exact_div(g)
        return RatFunc(self.num * d2 + other.num * d1, d1 * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _as_rf(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc()
            return RatFunc._raw(self.num * other, self.den)
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RatFunc()
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFunc._raw(self.num * other.num, self.den)
        # cross-cancel keeps the product reduced
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = self.num, other.den
        if g1.degree > 0:
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        n2, d1 = other.num, self.den
        if g2.degree > 0:
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        num = n1 * n2
        den = d1 * d2
        lc = den.lc
        if lc != 1:
            num = num * (1 / lc)
            den = den.monic()
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(t)")
        lc = self.num.lc
        return RatFunc._raw(self.den * (1 / lc), self.num.monic())

    def __truediv__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _as_rf(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc._raw(self.num ** e, self.den ** e) if e else RatFunc(1)

    def __call__(self, x):
        """Substitute ``t := x`` (``x`` any field element or matrix-free value)."""
        return self.num(x) / self.den(x)

    def subs(self, x):
        """Compose ``self(x)`` for ``x`` a RatFunc."""
        num = _eval_homog(self.num, x)
        den = _eval_homog(self.den, x)
        return num / den

    @property
    def degree(self):
        """``max(deg num, deg den)``; the height of the rational function."""
        return max(self.num.degree, self.den.degree)

    def to_str(self, var="t"):
        if self.den.degree == 0:
            return self.num.to_str(var)
        n = self.num.to_str(var)
        if len([c for c in self.num.coeffs if c]) > 1:
            n = f"({n})"
        d = self.den.to_str(var)
        if len([c for c in self.den.coeffs if c]) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self):
        return self.to_str("t")

    def __repr__(self):
        return f"RatFunc({self.to_str('t')})"


def _eval_homog(p, x):
    acc = RatFunc()
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def _as_poly(p):
    if isinstance(p, Poly):
        return p
    if isinstance(p, (int, Fraction)):
        return Poly((p,))
    raise TypeError(f"cannot interpret {type(p).__name__} as a polynomial")


def _as_rf(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc._raw(Poly((x,)), Poly((Fraction(1),)))
    if isinstance(x, Poly):
        return RatFunc._raw(x, Poly((Fraction(1),)))
    return NotImplemented


def rf(x):
    """Coerce ints, Fractions, polynomials and strings into ``RatFunc``."""
    if isinstance(x, str):
        from .parse import parse_ratfunc

        return parse_ratfunc(x)
    r = _as_rf(x)
    if r is NotImplemented:
        raise TypeError(f"cannot coerce {x!r} into Q(t)")
    return r


ZERO = RatFunc()
ONE = RatFunc(1)


def is_square_in_K(m):
    """Decide whether ``m`` is a square in Q(t).

    ``num*den`` must be a perfect square in Q[t] (every square-free part
    of odd multiplicity constant) with a square rational leading
    coefficient.
    """
    m = rf(m)
    if not m:
        raise ValueError("is_square_in_K: m must be nonzero")
    p = m.num * m.den
    sf = yun_squarefree(p)
    if any(mult % 2 for _, mult in sf.factors):
        return False
    return is_square_rational(sf.lc)


def lueroth_degree(m):
    """``[k(t):k(m)]`` for ``m`` in lowest terms."""
    m = rf(m)
    if m.is_constant():
        raise ValueError("not a generator of a subfield of finite index")
    return m.degree
