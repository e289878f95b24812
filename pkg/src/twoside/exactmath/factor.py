"""Univariate factorization over Q (sympy-backed) and root search in Q(t)."""

from fractions import Fraction
from itertools import product

import sympy

from .poly import Poly, poly_gcd, poly_lcm
from .ratfunc import RatFunc

_X = sympy.Symbol("x")


def _to_sympy(p):
    coeffs = [sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)]
    return sympy.Poly(coeffs or [0], _X, domain=sympy.QQ)


def _from_sympy(sp):
    cs = [Fraction(int(c.p), int(c.q)) for c in reversed(sp.all_coeffs())]
    return Poly(cs)


def factor_Q(p):
    """Monic irreducible factors of ``p`` over Q with multiplicities."""
    if p.degree <= 0:
        return []
    _, facs = _to_sympy(p).factor_list()
    return [(_from_sympy(f).monic(), m) for f, m in facs]


def is_irreducible_Q(p):
    if p.degree <= 0:
        return False
    return bool(_to_sympy(p).is_irreducible)


def monic_divisors(p):
    facs = factor_Q(p)
    out = []
    for exps in product(*[range(m + 1) for _, m in facs]):
        d = Poly((Fraction(1),))
        for (f, _), e in zip(facs, exps):
            if e:
                d = d * f ** e
        out.append(d)
    return out


def rational_roots(p):
    """Rational roots of a univariate polynomial over Q."""
    roots = []
    for f, _ in factor_Q(p):
        if f.degree == 1:
            roots.append(-f.coeffs[0] / f.coeffs[1])
    return sorted(set(roots))


def clear_denominators(P):
    """Scale a polynomial over Q(t) to one with coefficients in Q[t]."""
    L = Poly((Fraction(1),))
    for c in P.coeffs:
        L = poly_lcm(L, c.den)
    return [(c * RatFunc.from_poly(L)).num for c in P.coeffs]


def roots_in_K(P):
    """All roots in Q(t) of a nonzero polynomial ``P`` with Q(t) coefficients.

    Candidates ``c * p/q`` have ``p | A_0`` and ``q | A_d`` (monic) after
    clearing denominators; the scalar ``c`` is a rational root of the
    gcd of the coefficient equations.
    """
    if not P or P.degree <= 0:
        return []
    A = clear_denominators(P)
    found = []
    while A and not A[0]:
        found.append(RatFunc())
        A = A[1:]
    d = len(A) - 1
    if d <= 0:
        return found
    for p in monic_divisors(A[0]):
        for q in monic_divisors(A[d]):
            if poly_gcd(p, q).degree > 0:
                continue
            H = [A[i] * p ** i * q ** (d - i) for i in range(d + 1)]
            top = max(h.degree for h in H)
            G = Poly()
            for k in range(top + 1):
                eq = Poly([h[k] for h in H])
                G = poly_gcd(G, eq) if G else eq.monic() if eq else G
            if not G or G.degree <= 0:
                continue
            for c in rational_roots(G):
                if not c:
                    continue
                r = RatFunc(p * c, q)
                if not P(r) and r not in found:
                    found.append(r)
    return found



FACTOR_DEGREE_CAP = 3


def t_degree(g):
    """t-degree of the primitive polynomial in Q[t][y] obtained by clearing ``g``."""
    cs = [c for c in clear_denominators(g) if c]
    content = cs[0].monic()
    for c in cs[1:]:
        content = poly_gcd(content, c)
    return max(c.exact_div(content).degree for c in cs)


def factor_K(P):
    """Irreducible factors over K = Q(t) of a monic ``P`` with ``deg P <= 3``.

    Linear factors are peeled off by root search; a remaining factor of
    degree 2 or 3 has no root in K and is therefore irreducible.
    Returns ``(g, mult, t_degree(g))`` triples.  Raises ``ValueError``
    beyond the certified degree.
    """
    if not P or P.degree <= 0:
        return []
    if P.degree > FACTOR_DEGREE_CAP:
        raise ValueError(f"factorization over K is certified only up to degree {FACTOR_DEGREE_CAP}")
    P = P * P.lc.inverse()
    mults = {}
    while P.degree > 0:
        roots = roots_in_K(P)
        if not roots:
            break
        r = roots[0]
        lin = Poly((-r, RatFunc(1)))
        P = P.exact_div(lin)
        mults[r] = mults.get(r, 0) + 1
    out = [(Poly((-r, RatFunc(1))), k) for r, k in mults.items()]
    if P.degree > 0:
        out.append((P, 1))
    out = [(g, k, t_degree(g)) for g, k in out]
    out.sort(key=lambda x: (x[0].degree, x[2], str(x[0].coeffs)))
    return out
