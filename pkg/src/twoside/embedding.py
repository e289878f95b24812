"""Embeddings of K = Q(t) given by a bivariate relation F(t, lambda(t)) = 0.

An :class:`Embedding` with ``n = deg_y F`` and ``m = deg_x F`` models a
lambda with ``[K(lambda):K] = n`` and ``[K(lambda):lambda(K)] = m``.
Elements of ``K(lambda)`` are written in the power basis ``1, s, ..., s^(n-1)``
where ``s = lambda(t)`` is a root of ``F(t, y)``.
"""

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property

from .exactmath import BiPoly, Matrix, Poly, RatFunc, discriminant_y, is_square_in_K, lueroth_degree, rf
from .exactmath.factor import is_irreducible_Q, roots_in_K
from .exactmath.poly import poly_gcd, poly_xgcd

__all__ = [
    "EmbeddingError",
    "IrreducibilityTier",
    "Embedding",
    "RelExt",
    "FamilyParams",
    "embedding_new",
    "swap_dual",
    "relext_structure",
    "coord_functions",
    "phi_matrix",
    "family_relation",
    "family_embedding",
    "lueroth_degree",
]


class EmbeddingError(ValueError):
    """Invalid relation or family parameters; ``condition`` names the failure."""

    def __init__(self, condition, detail=""):
        self.condition = condition
        super().__init__(condition + (f": {detail}" if detail else ""))


NOT_OVER_K = "not a relation for an element over K"
ALGEBRAIC = "λ(t) algebraic over k: not an embedding of k(t)"
INSEPARABLE = "inseparable/repeated conjugates"
REDUCIBLE = "F reducible: V(λ) would not be simple"
UNWITNESSED = "irreducibility witness checks failed"


class IrreducibilityTier(str, Enum):
    CERTIFIED = "Certified"
    ASSUMED = "AssumedWithWitnessChecks"


@dataclass(frozen=True)
class Embedding:
    F: BiPoly
    n: int
    m: int
    cert: IrreducibilityTier
    name: str = field(default=None, compare=False)

    def __repr__(self):
        return f"Embedding({self.F}, n={self.n}, m={self.m}, {self.cert.value})"

    @property
    def rank_equal(self):
        return self.n == self.m

    @cached_property
    def relext(self):
        return relext_structure(self)

    @cached_property
    def swapped(self):
        return swap_dual(self)


@dataclass(frozen=True)
class RelExt:
    f: Poly  # monic in y over K
    n: int
    beta: tuple  # beta[i][j][k], 0-based: s^i * s^j = sum_k beta[i][j][k] s^k

    def reduce(self, p):
        """Reduce a polynomial in s (coefficients in K) modulo f."""
        return p.divmod(self.f)[1]

    def coords(self, p):
        r = self.reduce(p)
        return tuple(r[i] if i < len(r) else RatFunc() for i in range(self.n))

    def element(self, coords):
        return Poly(coords)

    def mul(self, a, b):
        """Product of two coordinate vectors in the power basis."""
        return self.coords(Poly(a) * Poly(b))

    def inverse(self, a):
        g, u, _ = poly_xgcd(Poly(a), self.f)
        if g.degree != 0:
            raise ZeroDivisionError("element not invertible modulo f")
        return self.coords(u)

    def trace(self, a):
        """Trace of multiplication by ``a`` over K."""
        acc = RatFunc()
        for i in range(self.n):
            acc = acc + self.mul(a, _unit(self.n, i))[i]
        return acc


def _unit(n, i):
    return tuple(RatFunc(1) if j == i else RatFunc() for j in range(n))


def _content(F, var):
    g = Poly()
    for c in F.coeffs_in(var):
        if c:
            g = poly_gcd(g, c) if g else c.monic()
    return g


def _monic_in_y(F):
    cs = F.coeffs_in("y")
    lead = RatFunc.from_poly(cs[-1])
    return Poly([RatFunc.from_poly(c) / lead for c in cs])


def embedding_new(F, seed=0, name=None):
    """Validate a relation and certify irreducibility at the available tier."""
    if not isinstance(F, BiPoly):
        from .exactmath import parse_bipoly

        F = parse_bipoly(str(F))
    if not F:
        raise EmbeddingError(NOT_OVER_K, "F = 0")
    n, m = F.deg_y, F.deg_x
    if n <= 0:
        raise EmbeddingError(NOT_OVER_K)
    if m <= 0:
        raise EmbeddingError(ALGEBRAIC)
    cy = _content(F, "y")
    if cy.degree > 0:
        raise EmbeddingError(REDUCIBLE, f"factor free of y: {cy.to_str('x')}")
    cx = _content(F, "x")
    if cx.degree > 0:
        raise EmbeddingError(REDUCIBLE, f"factor free of x: {cx.to_str('y')}")
    if not discriminant_y(F):
        raise EmbeddingError(INSEPARABLE)
    f = _monic_in_y(F)
    if n == 1:
        cert = IrreducibilityTier.CERTIFIED
    elif n == 2:
        b, c = f[1], f[0]
        disc = b * b - c * 4
        square = is_square_in_K(disc)
        roots = roots_in_K(f)
        if square != bool(roots):
            raise ArithmeticError("square test and root search disagree")  # pragma: no cover
        if square:
            raise EmbeddingError(REDUCIBLE, f"root {roots[0]} in K")
        cert = IrreducibilityTier.CERTIFIED
    else:
        roots = roots_in_K(f)
        if roots:
            raise EmbeddingError(REDUCIBLE, f"root {roots[0]} in K")
        if not _specialization_witnesses(F, seed):
            raise EmbeddingError(UNWITNESSED)
        cert = IrreducibilityTier.ASSUMED
    return Embedding(F, n, m, cert, name)


def _specialization_witnesses(F, seed, needed=3, budget=60):
    rng = random.Random(seed)
    lead = F.coeffs_in("y")[-1]
    candidates = list(range(-40, 41))
    rng.shuffle(candidates)
    hits = 0
    for x0 in candidates[:budget]:
        if not lead(Fraction(x0)):
            continue
        g = F.eval_x(Fraction(x0))
        if g.degree != F.deg_y or poly_gcd(g, g.derivative()).degree > 0:
            continue
        if is_irreducible_Q(g):
            hits += 1
            if hits >= needed:
                return True
    return False


def swap_dual(e):
    """The dual embedding: exchange the variables of F."""
    return Embedding(e.F.swap(), e.m, e.n, e.cert, _swap_name(e.name))


def _swap_name(name):
    if name is None:
        return None
    return name[:-5] if name.endswith("^swap") else name + "^swap"


def relext_structure(e):
    f = _monic_in_y(e.F)
    n = e.n
    powers = [None] * (2 * n - 1)
    for d in range(2 * n - 1):
        r = Poly.monomial(RatFunc(1), d).divmod(f)[1]
        powers[d] = tuple(r[k] if k < len(r) else RatFunc() for k in range(n))
    beta = tuple(tuple(powers[i + j] for j in range(n)) for i in range(n))
    return RelExt(f, n, beta)


def _lift(p):
    return Poly([RatFunc(c) for c in p.coeffs])


def coord_functions(e, c):
    """Coordinates of ``lambda(c)`` in the power basis of K(lambda)/K."""
    c = rf(c)
    R = e.relext
    num = R.reduce(_lift(c.num))
    if c.den.degree == 0:
        return R.coords(num * (1 / c.den.lc))
    den = R.reduce(_lift(c.den))
    g, u, _ = poly_xgcd(den, R.f)
    if g.degree != 0:
        raise ZeroDivisionError("denominator vanishes at lambda(t)")
    return R.coords(num * u)


def phi_matrix(e):
    """phi(t) with entries ``phi_ij = sum_k beta[j][k][i] * lambda_k(t)``."""
    R = e.relext
    lam = coord_functions(e, RatFunc.t())
    n = e.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = RatFunc()
            for k in range(n):
                b = R.beta[j][k][i]
                if b and lam[k]:
                    acc = acc + b * lam[k]
            row.append(acc)
        rows.append(row)
    return Matrix(rows, n)


@dataclass(frozen=True)
class FamilyParams:
    alpha: Fraction
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction

    @classmethod
    def of(cls, *vals):
        if len(vals) == 1 and isinstance(vals[0], (list, tuple)):
            vals = vals[0]
        if len(vals) != 7:
            raise ValueError("family parameters are (alpha, a, b, c, d, e, f)")
        return cls(*[Fraction(v) for v in vals])

    def violations(self):
        """Names of the violated family conditions, in check order."""
        a, b, c, d, e, f = self.a, self.b, self.c, self.d, self.e, self.f
        out = []
        if not a and not d:
            out.append("a = d = 0")
        if b * b == 4 * a * c:
            out.append("b² = 4ac")
        if e * e == 4 * d * f:
            out.append("e² = 4df")
        if a * f == c * d:
            out.append("af = cd")
        if a * e != b * d:
            out.append("ae ≠ bd")
        return out

    def m(self):
        """The radicand ``(at^2+bt+c)/(dt^2+et+f)``."""
        num = Poly([self.c, self.b, self.a])
        den = Poly([self.f, self.e, self.d])
        return RatFunc(num, den)


def family_relation(p):
    """``(dx^2+ex+f)(y-alpha)^2 - (ax^2+bx+c)`` without any validation."""
    x, y = BiPoly.x(), BiPoly.y()
    N = p.a * x * x + p.b * x + p.c
    D = p.d * x * x + p.e * x + p.f
    shift = y - p.alpha
    return D * shift * shift - N


def family_embedding(p, seed=0):
    """The rank-2 embedding ``lambda(t) = alpha + sqrt(m)``."""
    bad = p.violations()
    if bad:
        also = f"also violated: {', '.join(bad[1:])}" if len(bad) > 1 else ""
        raise EmbeddingError(bad[0], also)
    e = embedding_new(family_relation(p), seed=seed)
    if (e.n, e.m) != (2, 2) or e.cert is not IrreducibilityTier.CERTIFIED:
        raise ArithmeticError("family relation failed certification")  # pragma: no cover
    return e
