"""Two-sided vector spaces ``K^n_T`` over K = Q(t).

Elements are row vectors of left coordinates.  The left action of K is
coordinatewise; the right action of ``c`` is ``v -> v * hom_eval(T, c)``,
so ``T`` is the matrix of right multiplication by ``t``.
"""

import os
import random
from dataclasses import dataclass
from fractions import Fraction

from .embedding import Embedding, coord_functions, phi_matrix, swap_dual
from .exactmath import Matrix, NotAnEmbeddingAction, Poly, RatFunc, charpoly, hom_eval, rf
from .exactmath.factor import FACTOR_DEGREE_CAP, clear_denominators, factor_K
from .exactmath.linalg import kernel, rank, rref, solve_rows
from .exactmath.poly import poly_gcd
from .exactmath.smith import invariant_factors_of

ZERO = RatFunc()
ONE = RatFunc(1)

DEFAULT_MAX_DEGREE = 40


class BimoduleError(ValueError):
    pass


class TierError(BimoduleError):
    """A question the available certification tier cannot settle."""


class CoordinateBoundError(ArithmeticError):
    pass


# -- provenance -----------------------------------------------------------


@dataclass(frozen=True)
class FromEmbedding:
    embedding: Embedding


@dataclass(frozen=True)
class Tensor:
    left: "TwoSidedVS"
    right: "TwoSidedVS"


@dataclass(frozen=True)
class DirectSum:
    parts: tuple


@dataclass(frozen=True)
class DualOf:
    base: "TwoSidedVS"
    side: str


@dataclass(frozen=True)
class Raw:
    note: str = ""


class TwoSidedVS:
    __slots__ = ("n", "T", "provenance", "_cache")

    def __init__(self, T, provenance=None, check=True):
        if not isinstance(T, Matrix):
            T = Matrix([[rf(x) for x in row] for row in T])
        if T.nrows != T.ncols:
            raise BimoduleError("right-multiplication matrix must be square")
        self.n = T.nrows
        self.T = T
        self.provenance = provenance if provenance is not None else Raw()
        self._cache = {}
        if check and isinstance(self.provenance, Raw) and self.n:
            _check_transcendental(T)

    def __repr__(self):
        kind = type(self.provenance).__name__
        return f"TwoSidedVS(n={self.n}, {kind})"

    def right_scalar(self, c):
        """Matrix of right multiplication by ``c``."""
        c = rf(c)
        M = self._cache.get(c)
        if M is None:
            M = hom_eval(self.T, c)
            self._cache[c] = M
        return M

    def act_right(self, v, c):
        c = rf(c)
        if c == ONE:
            return tuple(v)
        return tuple(self.right_scalar(c).vecmul(v))

    def zero(self):
        return (ZERO,) * self.n

    def unit(self, i):
        return tuple(ONE if j == i else ZERO for j in range(self.n))


def _check_transcendental(T):
    """No charpoly factor may be free of t, or ``hom_eval`` is undefined."""
    cp = charpoly(T)
    if _t_free_part(clear_denominators(cp)).degree > 0:
        raise NotAnEmbeddingAction("not an embedding-induced action")


def _t_free_part(cleared):
    """gcd over d of the y-polynomials multiplying t^d: the factor free of t."""
    top = max(c.degree for c in cleared if c)
    g = Poly()
    for d in range(top + 1):
        row = Poly([c[d] if d < len(c) else Fraction(0) for c in cleared])
        if row:
            g = poly_gcd(g, row) if g else row.monic()
    return g


def _factor_charpoly(T):
    if T.nrows > FACTOR_DEGREE_CAP:
        raise TierError("right dimension undetermined at certification tier")
    return factor_K(charpoly(T))


def raw_module(T):
    return TwoSidedVS(T, Raw())


def vs_from_embedding(e):
    return TwoSidedVS(phi_matrix(e).transpose(), FromEmbedding(e), check=False)


# -- structure ------------------------------------------------------------


def dims(V):
    """(left dimension, right dimension)."""
    p = V.provenance
    if isinstance(p, FromEmbedding):
        return (p.embedding.n, p.embedding.m)
    if isinstance(p, DirectSum):
        ds = [dims(W) for W in p.parts]
        return (sum(d[0] for d in ds), sum(d[1] for d in ds))
    if isinstance(p, Tensor):
        a, b = dims(p.left), dims(p.right)
        return (a[0] * b[0], a[1] * b[1])
    if isinstance(p, DualOf):
        a = dims(p.base)
        return (a[1], a[0])
    return (V.n, sum(mult * dt for _, mult, dt in _factor_charpoly(V.T)))


def is_rank_equal(V):
    left, right = dims(V)
    return left == right


def is_simple(V):
    """True/False when certified, ``None`` when the tier cannot decide."""
    p = V.provenance
    if isinstance(p, FromEmbedding):
        return True
    if isinstance(p, DirectSum) and sum(1 for W in p.parts if W.n) >= 2:
        return False
    if V.n == 0:
        return False
    try:
        facs = _factor_charpoly(V.T)
    except TierError:
        return None
    return len(facs) == 1 and facs[0][1] == 1


@dataclass(frozen=True)
class IsoWitness:
    P: Matrix

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotIsomorphic:
    reason: str

    def __bool__(self):
        return False


def invariant_factors(V):
    return invariant_factors_of(V.T)


def iso_test(V, W, seed=0, attempts=20):
    """Decide ``V ≅ W``; on success return ``P`` with ``P T_V = T_W P``."""
    if V.n != W.n:
        return NotIsomorphic(f"left dimensions differ: {V.n} vs {W.n}")
    n = V.n
    if n == 0:
        return IsoWitness(Matrix([], 0))
    fv, fw = invariant_factors(V), invariant_factors(W)
    if fv != fw:
        return NotIsomorphic("invariant factors differ")
    # linear conditions on the entries of P (row-major unknowns)
    eqs = []
    for i in range(n):
        for j in range(n):
            row = [ZERO] * (n * n)
            for k in range(n):
                row[i * n + k] = row[i * n + k] + V.T[k, j]
                row[k * n + j] = row[k * n + j] - W.T[i, k]
            eqs.append(row)
    basis = kernel(eqs, n * n)
    rng = random.Random(seed)
    for attempt in range(attempts):
        if attempt == 0:
            coeffs = [1] * len(basis)
        else:
            coeffs = [rng.randint(-5, 5) for _ in basis]
        flat = [ZERO] * (n * n)
        for c, b in zip(coeffs, basis):
            if c:
                flat = [x + y * c for x, y in zip(flat, b)]
        P = Matrix([flat[i * n:(i + 1) * n] for i in range(n)], n)
        if P.det():
            if P * V.T != W.T * P:
                raise ArithmeticError("intertwiner check failed")  # pragma: no cover
            return IsoWitness(P)
    raise ArithmeticError("invariant factors agree but no invertible intertwiner found")


# -- tensors and sums -----------------------------------------------------


def tensor(V, W):
    """``V ⊗_K W`` in the row-major basis ``(i, j) -> i * W.n + j``."""
    nV, nW = V.n, W.n
    N = nV * nW
    rows = [[ZERO] * N for _ in range(N)]
    for j in range(nW):
        for l in range(nW):
            c = W.T[j, l]
            if not c:
                continue
            M = V.right_scalar(c)
            for i in range(nV):
                for k in range(nV):
                    if M[i, k]:
                        rows[i * nW + j][k * nW + l] = M[i, k]
    return TwoSidedVS(Matrix(rows, N), Tensor(V, W), check=False)


def tensor_many(mods):
    """Right-associated tensor ``V_0 ⊗ (V_1 ⊗ (...))``."""
    mods = list(mods)
    if not mods:
        raise BimoduleError("empty tensor product")
    acc = mods[-1]
    for V in reversed(mods[:-1]):
        acc = tensor(V, acc)
    return acc


def element_tensor(V, x, w):
    """Coordinates of ``x ⊗ w`` for ``x`` in V and any row ``w`` of a right factor.

    Scalars of ``w`` are passed across the tensor sign through V's right
    action: ``x ⊗ (c e_r) = (x·c) ⊗ e_r``.
    """
    N = len(w)
    out = [ZERO] * (V.n * N)
    for r, c in enumerate(w):
        if not c:
            continue
        xc = V.act_right(x, c)
        for b in range(V.n):
            if xc[b]:
                out[b * N + r] = xc[b]
    return tuple(out)


def left_tensor_rows(mods, index, tail):
    """Coordinates of ``e_{a_0} ⊗ ... ⊗ e_{a_{s-1}} ⊗ tail`` in the right-associated product."""
    z = tuple(tail)
    for V, a in zip(reversed(mods), reversed(index)):
        z = element_tensor(V, V.unit(a), z)
    return z


def kron(x, y):
    return tuple(a * b if a and b else ZERO for a in x for b in y)


def direct_sum(*mods):
    if len(mods) == 1 and isinstance(mods[0], (list, tuple)):
        mods = tuple(mods[0])
    N = sum(V.n for V in mods)
    rows = [[ZERO] * N for _ in range(N)]
    off = 0
    for V in mods:
        for i in range(V.n):
            for j in range(V.n):
                rows[off + i][off + j] = V.T[i, j]
        off += V.n
    return TwoSidedVS(Matrix(rows, N), DirectSum(tuple(mods)), check=False)


# -- sub-bimodules --------------------------------------------------------


@dataclass(frozen=True)
class SubBimodule:
    ambient: TwoSidedVS
    basis: tuple  # rref rows

    @property
    def dim(self):
        return len(self.basis)


def sub_closure(V, gens):
    gens = [tuple(rf(x) for x in g) for g in gens]
    if not gens:
        raise BimoduleError("sub_closure needs at least one generator")
    basis, _ = rref(gens)
    while True:
        grown = list(basis) + [tuple(V.T.vecmul(b)) for b in basis]
        new, _ = rref(grown)
        if len(new) == len(basis):
            return SubBimodule(V, tuple(new))
        basis = new


def quotient_dim(V, S):
    return V.n - rank(S.basis) if S.basis else V.n


def _complement(S):
    n = S.ambient.n
    _, piv = rref(S.basis) if S.basis else ([], [])
    return [S.ambient.unit(j) for j in range(n) if j not in piv]


def sub_module(S):
    """``S`` as a module ``K^r_M`` with ``S T = M S``."""
    imgs = [tuple(S.ambient.T.vecmul(b)) for b in S.basis]
    M = solve_rows(S.basis, imgs)
    return TwoSidedVS(Matrix(M, len(S.basis)), Raw("sub"))


def quotient_module(S):
    V = S.ambient
    comp = _complement(S)
    if not comp:
        return TwoSidedVS(Matrix([], 0), Raw("quotient"), check=False)
    full = list(S.basis) + comp
    r = len(S.basis)
    imgs = [tuple(V.T.vecmul(c)) for c in comp]
    coords = solve_rows(full, imgs)
    N = [row[r:] for row in coords]
    return TwoSidedVS(Matrix(N, len(comp)), Raw("quotient"))


# -- right coordinates ----------------------------------------------------


def transport(e, v):
    """Right coordinates of ``v ∈ V(e)`` in the right basis ``{t^l·1}``."""
    mu = swap_dual(e)
    out = [ZERO] * e.m
    tp = ONE
    for i, vi in enumerate(v):
        if vi:
            cf = coord_functions(mu, vi)
            for l in range(e.m):
                if cf[l]:
                    out[l] = out[l] + tp * cf[l]
        tp = tp * RatFunc.t()
    return tuple(out)


def _frame(V):
    """A function giving right coordinates in a fixed right basis, if one is known."""
    p = V.provenance
    if isinstance(p, FromEmbedding):
        return lambda v: transport(p.embedding, v)
    if isinstance(p, DirectSum):
        fs = [_frame(W) for W in p.parts]
        if any(f is None for f in fs):
            return None
        sizes = [W.n for W in p.parts]

        def frame(v):
            out, off = [], 0
            for f, k in zip(fs, sizes):
                out.extend(f(v[off:off + k]))
                off += k
            return tuple(out)

        return frame
    return None


def max_degree():
    env = os.environ.get("TWOSIDE_MAX_DEGREE")
    return int(env) if env else DEFAULT_MAX_DEGREE


def _schedule(dmax):
    D, out = 0, []
    while D < dmax:
        out.append(D)
        D = 1 if D == 0 else 2 * D
    out.append(dmax)
    return out


def _clear_row(vals):
    from .exactmath.poly import poly_lcm

    L = Poly((Fraction(1),))
    for c in vals:
        if c:
            L = poly_lcm(L, c.den)
    Lr = RatFunc.from_poly(L)
    return [(c * Lr).num if c else Poly() for c in vals]


def sweep_right_coordinates(T, Y, v, dmax=None):
    """Solve ``sum_i y_i·c_i = v`` over K by the degree sweep.

    ``c_i = p_i/q`` with ``deg p_i, deg q <= D``; the condition
    ``sum_i y_i p_i(T) = v q(T)`` is linear over Q in the coefficients.
    """
    dmax = max_degree() if dmax is None else dmax
    n = len(Y)
    size = len(v)
    Tm = T if isinstance(T, Matrix) else Matrix(T)
    ypow = [[tuple(y)] for y in Y]
    vpow = [tuple(v)]
    for D in _schedule(dmax):
        while len(vpow) <= D:
            for lst in ypow:
                lst.append(tuple(Tm.vecmul(lst[-1])))
            vpow.append(tuple(Tm.vecmul(vpow[-1])))
        cols = []
        for i in range(n):
            cols.extend(ypow[i][: D + 1])
        cols.extend(tuple(-x for x in w) for w in vpow[: D + 1])
        nunk = len(cols)
        eqs = []
        for r in range(size):
            polys = _clear_row([c[r] for c in cols])
            top = max((p.degree for p in polys), default=-1)
            for d in range(top + 1):
                eqs.append([p[d] if d < len(p) else Fraction(0) for p in polys])
        if not eqs:
            eqs = [[Fraction(0)] * nunk]
        ker = kernel(eqs, nunk)
        qoff = n * (D + 1)
        for kv in ker:
            q = Poly(kv[qoff:])
            if not q:
                continue
            qr = RatFunc.from_poly(q)
            return tuple(RatFunc.from_poly(Poly(kv[i * (D + 1):(i + 1) * (D + 1)])) / qr for i in range(n))
    raise CoordinateBoundError("coordinate degree bound exceeded; raise --max-degree")


# -- simultaneous bases ---------------------------------------------------


@dataclass(frozen=True)
class SimulBasis:
    vectors: Matrix  # rows y_i in left coordinates
    rightT: Matrix  # A(t): y_i·t = sum_j A_ij y_j
    leftT: Matrix  # B(t): t·y_i = sum_j y_j·B_ji


def _right_coords_raw(V, Y, v, dmax=None):
    if not any(v):
        return (ZERO,) * len(Y)
    frame = _frame(V)
    if frame is not None:
        R = Matrix([frame(y) for y in Y])
        return tuple(solve_rows(R.rows, [frame(v)])[0])
    return sweep_right_coordinates(V.T, Y, v, dmax)


def mixed_coordinates(V, basis, v, side="right", dmax=None):
    """Coordinates of ``v`` in a simultaneous basis, on the requested side."""
    v = tuple(rf(x) for x in v)
    Y = basis.vectors.rows
    if side == "left":
        return tuple(solve_rows(Y, [v])[0])
    if side != "right":
        raise ValueError("side must be 'left' or 'right'")
    c = _right_coords_raw(V, Y, v, dmax)
    if reexpand_right(V, Y, c) != v:
        raise ArithmeticError("right coordinates failed re-expansion")
    return c


def reexpand_right(V, Y, c):
    acc = [ZERO] * V.n
    for y, ci in zip(Y, c):
        if ci:
            acc = [a + b for a, b in zip(acc, V.act_right(y, ci))]
    return tuple(acc)


def _candidate(rng, n):
    return [[RatFunc(Poly([rng.randint(-3, 3) for _ in range(3)])) for _ in range(n)] for _ in range(n)]


def simultaneous_basis(V, seed, retries=200, dmax=None):
    """Randomized search for a basis of both the left and right actions."""
    if seed is None:
        raise ValueError("simultaneous_basis requires an explicit seed")
    left, right = dims(V)
    if left != right:
        raise BimoduleError(f"simultaneous basis needs rank-equal module; dims are ({left}, {right})")
    n = V.n
    rng = random.Random(seed)
    for attempt in range(retries):
        Y = Matrix.identity(n) if attempt == 0 else Matrix(_candidate(rng, n), n)
        basis = try_simultaneous_basis(V, Y, dmax)
        if basis is not None:
            return basis
    raise BimoduleError(
        f"no simultaneous basis found after {retries} candidates (seed {seed}); this does not disprove existence"
    )


def try_simultaneous_basis(V, Y, dmax=None):
    """Return a :class:`SimulBasis` if the rows of ``Y`` qualify, else None.

    ``Y`` must be a left basis whose right span contains ``t·y_i`` for
    every ``i``; for a rank-equal module that span is then all of V.
    """
    n = V.n
    if not Y.det():
        return None
    frame = _frame(V)
    if frame is not None:
        R = Matrix([frame(y) for y in Y.rows])
        if not R.det():
            return None
    Bcols = []
    for y in Y.rows:
        ty = tuple(RatFunc.t() * x for x in y)
        try:
            c = _right_coords_raw(V, Y.rows, ty, dmax)
        except (CoordinateBoundError, ArithmeticError):
            return None
        if reexpand_right(V, Y.rows, c) != ty:
            return None
        Bcols.append(c)
    B = Matrix([[Bcols[i][j] for i in range(n)] for j in range(n)], n)
    A = Y * V.T * Y.inverse()
    return SimulBasis(Y, A, B)


def is_right_basis(V, rows, dmax=None):
    """Right independence plus right spanning, checked through coordinates."""
    Y = Matrix(rows)
    return try_simultaneous_basis(V, Y, dmax) is not None


def ab_identity_check(V, basis, samples):
    """Check ``sum_j a_jk(b_ji(δ)) = δ δ_ik`` and ``sum_j b_kj(a_ij(λ)) = δ_ki λ``.

    Returns ``(True, None)`` or ``(False, offending sample)``.
    """
    n = V.n
    A, B = basis.rightT, basis.leftT
    try:
        for d in samples:
            d = rf(d)
            Bd = hom_eval(B, d)
            Ad = hom_eval(A, d)
            for i in range(n):
                for k in range(n):
                    acc = ZERO
                    for j in range(n):
                        if Bd[j, i]:
                            acc = acc + hom_eval(A, Bd[j, i])[j, k]
                    if acc != (d if i == k else ZERO):
                        return False, d
                    acc = ZERO
                    for j in range(n):
                        if Ad[i, j]:
                            acc = acc + hom_eval(B, Ad[i, j])[k, j]
                    if acc != (d if i == k else ZERO):
                        return False, d
    except NotAnEmbeddingAction:
        return False, d
    return True, None


# -- duals ----------------------------------------------------------------


def op_module(V, seed=0):
    """Exchange the two actions; needs a simultaneous basis of V."""
    sb = simultaneous_basis(V, seed)
    return TwoSidedVS(sb.leftT.transpose(), Raw("op"))


def dual_matrix_route(V, side="right", seed=0):
    """Right dual ``K^n_{B(t)}`` or left dual ``op(K^n_{A(t)ᵀ})``."""
    sb = simultaneous_basis(V, seed)
    if side == "right":
        M = sb.leftT
    elif side == "left":
        X = TwoSidedVS(sb.rightT.transpose(), Raw("left dual model"))
        M = simultaneous_basis(X, seed).leftT.transpose()
    else:
        raise ValueError("side must be 'left' or 'right'")
    return TwoSidedVS(M, DualOf(V, side), check=False)


def dual(V, side="right", seed=0):
    p = V.provenance
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if isinstance(p, FromEmbedding):
        return vs_from_embedding(swap_dual(p.embedding))
    if isinstance(p, DirectSum) and all(isinstance(W.provenance, (FromEmbedding, DirectSum)) for W in p.parts):
        return direct_sum([dual(W, side, seed) for W in p.parts])
    try:
        left, right = dims(V)
    except TierError:
        raise BimoduleError("dual unavailable at this tier") from None
    if left != right:
        raise BimoduleError("dual unavailable at this tier")
    return dual_matrix_route(V, side, seed)


def iterated_dual(V, i, seed=0):
    out = V
    side = "right" if i > 0 else "left"
    for _ in range(abs(i)):
        out = dual(out, side, seed)
    return out
