"""Smith form invariant factors of square matrices over K[x]."""

from .poly import Poly
from .ratfunc import RatFunc


def char_matrix(T):
    """``xI - T`` with entries in K[x]."""
    n = T.nrows
    one = RatFunc(1)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            c = -T[i, j]
            row.append(Poly((c, one)) if i == j else Poly((c,)))
        rows.append(row)
    return rows


def smith_invariant_factors(P):
    """Monic invariant factors ``d_1 | d_2 | ... | d_n`` of a square matrix.

    ``P`` is a list of rows of :class:`Poly` over K.  Zero invariant
    factors are returned as the zero polynomial.
    """
    A = [list(r) for r in P]
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("smith_invariant_factors: non-square input")
    for k in range(n):
        while True:
            piv = None
            for i in range(k, n):
                for j in range(k, n):
                    if A[i][j] and (piv is None or A[i][j].degree < A[piv[0]][piv[1]].degree):
                        piv = (i, j)
            if piv is None:
                return [A[i][i].monic() for i in range(n)]
            i0, j0 = piv
            A[k], A[i0] = A[i0], A[k]
            for row in A:
                row[k], row[j0] = row[j0], row[k]
            p = A[k][k]
            clean = True
            for i in range(k + 1, n):
                if A[i][k]:
                    q, r = A[i][k].divmod(p)
                    A[i] = [a - q * b for a, b in zip(A[i], A[k])]
                    if r:
                        clean = False
            for j in range(k + 1, n):
                if A[k][j]:
                    q, r = A[k][j].divmod(p)
                    for row in A:
                        row[j] = row[j] - q * row[k]
                    if r:
                        clean = False
            if not clean:
                continue
            bad = None
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    if A[i][j] and A[i][j].divmod(p)[1]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            A[k] = [a + b for a, b in zip(A[k], A[bad])]
    return [A[i][i].monic() for i in range(n)]


def invariant_factors_of(T):
    """Invariant factors of ``xI - T`` for a square matrix ``T`` over K."""
    return smith_invariant_factors(char_matrix(T))
