"""Dense matrices over an exact field (Q or Q(t)) and Gaussian elimination."""

from fractions import Fraction

from .poly import Poly
from .ratfunc import RatFunc


class NoSolution(ArithmeticError):
    """Raised by :func:`mat_solve` for an inconsistent system."""


class NotAnEmbeddingAction(ArithmeticError):
    pass


def _size(x):
    if isinstance(x, RatFunc):
        return x.num.degree + x.den.degree + 1
    return 0


def _one_like(x):
    if isinstance(x, RatFunc):
        return RatFunc(1)
    return Fraction(1)


def _zero_like(x):
    if isinstance(x, RatFunc):
        return RatFunc()
    return Fraction(0)


class Matrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        self.ncols = ncols
        for r in self.rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n, one=None):
        one = RatFunc(1) if one is None else one
        zero = one - one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, r, c, zero=None):
        zero = RatFunc() if zero is None else zero
        return cls([[zero] * c for _ in range(r)], c)

    @classmethod
    def diag(cls, entries):
        entries = list(entries)
        zero = _zero_like(entries[0])
        n = len(entries)
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)], n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{body}]"

    def transpose(self):
        return Matrix(zip(*self.rows), self.nrows) if self.rows else Matrix([], 0)

    T = property(transpose)

    def map(self, f):
        return Matrix([[f(x) for x in r] for r in self.rows], self.ncols)

    def __add__(self, other):
        _check(self.shape == other.shape, "shape mismatch in addition")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        _check(self.shape == other.shape, "shape mismatch in subtraction")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        return self.map(lambda a: -a)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return Matrix(mat_mul(self.rows, other.rows, other.ncols), other.ncols)
        return self.map(lambda a: a * other)

    def __rmul__(self, scalar):
        return self.map(lambda a: scalar * a)

    def __matmul__(self, other):
        return self * other

    def vecmul(self, v):
        """Row vector times matrix."""
        return vec_mat(v, self.rows, self.ncols)

    def trace(self):
        acc = _zero_like(self.rows[0][0])
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def is_square(self):
        return self.nrows == self.ncols

    # elimination wrappers
    def rref(self):
        rows, piv = rref(self.rows)
        return Matrix(rows, self.ncols), piv

    def rank(self):
        return rank(self.rows)

    def det(self):
        return det(self.rows)

    def inverse(self):
        return Matrix(inverse(self.rows), self.nrows)

    def kernel(self):
        """Basis of ``{x : M x = 0}`` as a list of column tuples."""
        return kernel(self.rows, self.ncols)

    def left_kernel(self):
        """Basis of ``{v : v M = 0}`` as a list of row tuples."""
        return kernel(self.transpose().rows, self.nrows)


def _check(cond, msg):
    if not cond:
        raise ValueError(msg)


def mat_mul(a, b, bcols):
    out = []
    for r in a:
        out.append(vec_mat(r, b, bcols))
    return out


def vec_mat(v, b, bcols):
    acc = None
    for x, brow in zip(v, b):
        if not x:
            continue
        if acc is None:
            acc = [x * y for y in brow]
        else:
            for j in range(bcols):
                y = brow[j]
                if y:
                    acc[j] = acc[j] + x * y
    if acc is None:
        z = _zero_like(v[0]) if len(v) else Fraction(0)
        if b and b[0]:
            z = _zero_like(b[0][0])
        return [z] * bcols
    return acc


def rref(rows):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    piv_cols = []
    r = 0
    for c in range(ncols):
        best = None
        for i in range(r, len(m)):
            x = m[i][c]
            if x and (best is None or _size(x) < _size(m[best][c])):
                best = i
        if best is None:
            continue
        m[r], m[best] = m[best], m[r]
        p = m[r][c]
        inv = 1 / p if not isinstance(p, RatFunc) else p.inverse()
        m[r] = [x * inv if x else x for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    for j in range(c, ncols):
                        y = pr[j]
                        if y:
                            row[j] = row[j] - f * y
        piv_cols.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(x) for x in m[:r]], piv_cols


def rank(rows):
    return len(rref(rows)[1])


def row_echelon_rank(rows):
    """Rank by forward elimination only (cheaper than full rref)."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        best = None
        for i in range(r, len(m)):
            x = m[i][c]
            if x and (best is None or _size(x) < _size(m[best][c])):
                best = i
        if best is None:
            continue
        m[r], m[best] = m[best], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                q = f / p
                row = m[i]
                pr = m[r]
                for j in range(c, ncols):
                    y = pr[j]
                    if y:
                        row[j] = row[j] - q * y
        r += 1
        if r == len(m):
            break
    return r


def det(rows):
    n = len(rows)
    if n == 0:
        return RatFunc(1)
    m = [list(r) for r in rows]
    acc = _one_like(m[0][0])
    for c in range(n):
        best = None
        for i in range(c, n):
            x = m[i][c]
            if x and (best is None or _size(x) < _size(m[best][c])):
                best = i
        if best is None:
            return _zero_like(m[0][0])
        if best != c:
            m[c], m[best] = m[best], m[c]
            acc = -acc
        p = m[c][c]
        acc = acc * p
        for i in range(c + 1, n):
            f = m[i][c]
            if f:
                q = f / p
                for j in range(c, n):
                    y = m[c][j]
                    if y:
                        m[i][j] = m[i][j] - q * y
    return acc


def inverse(rows):
    n = len(rows)
    one = _one_like(rows[0][0])
    zero = one - one
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red]


def kernel(rows, ncols):
    """Right kernel basis of a matrix given by rows (column vectors as tuples)."""
    if not rows:
        one = Fraction(1)
        return [tuple(one if i == j else Fraction(0) for i in range(ncols)) for j in range(ncols)]
    red, piv = rref(rows)
    sample = rows[0][0]
    one, zero = _one_like(sample), _zero_like(sample)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, pc in enumerate(piv):
            v[pc] = -red[r][f]
        basis.append(tuple(v))
    return basis


def mat_solve(M, b):
    """Solve ``M X = b`` exactly.  Raises :class:`NoSolution` if inconsistent."""
    if M.nrows != b.nrows:
        raise ValueError("shape mismatch: M has %d rows, b has %d" % (M.nrows, b.nrows))
    n = M.ncols
    aug = [list(r) + list(s) for r, s in zip(M.rows, b.rows)]
    red, piv = rref(aug)
    if any(p >= n for p in piv):
        raise NoSolution("inconsistent linear system")
    zero = _zero_like(M.rows[0][0]) if M.rows and M.rows[0] else RatFunc()
    sol = [[zero] * b.ncols for _ in range(n)]
    for r, pc in enumerate(piv):
        sol[pc] = list(red[r][n:])
    return Matrix(sol, b.ncols)


def solve_rows(basis_rows, targets):
    """Coefficients ``c`` with ``c @ basis == target`` for each target row."""
    B = Matrix(basis_rows)
    X = mat_solve(B.transpose(), Matrix(targets).transpose())
    return [tuple(r) for r in X.transpose().rows]


def charpoly(T):
    """Characteristic polynomial ``det(yI - T)`` as a monic Poly over K."""
    n = T.nrows
    one = _one_like(T.rows[0][0])
    zero = one - one
    I = Matrix.identity(n, one)
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    M = Matrix.zeros(n, n, zero)
    for k in range(1, n + 1):
        M = T * M + I * coeffs[n - k + 1]
        coeffs[n - k] = -(T * M).trace() * Fraction(1, k)
    return Poly(coeffs)


def poly_at_matrix(p, T):
    n = T.nrows
    one = _one_like(T.rows[0][0])
    acc = Matrix.zeros(n, n, one - one)
    I = Matrix.identity(n, one)
    for c in reversed(p.coeffs):
        acc = acc * T + I * c
    return acc


def hom_eval(T, c):
    """Evaluate the k-algebra map determined by ``t -> T`` at ``c = p/q``.

    Computes ``p(T) q(T)^{-1}``; ``q(T)`` is inverted by a linear solve.
    """
    if not isinstance(c, RatFunc):
        c = RatFunc(c) if not isinstance(c, Poly) else RatFunc.from_poly(c)
    n = T.nrows
    if c.is_constant():
        return Matrix.identity(n) * c.constant_value() if c else Matrix.zeros(n, n)
    P = poly_at_matrix(c.num, T)
    if c.den.degree == 0:
        return P
    Qm = poly_at_matrix(c.den, T)
    aug = [list(r) + list(s) for r, s in zip(Qm.rows, P.rows)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise NotAnEmbeddingAction("not an embedding-induced action")
    return Matrix([r[n:] for r in red], n)


def row_space_equal(a, b):
    return rref(a)[0] == rref(b)[0]
