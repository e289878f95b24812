"""Truncations of the non-commutative symmetric algebra of V(e).

Components are ``B_ij = V^{i*} ⊗ ... ⊗ V^{(j-1)*}`` (right-associated,
row-major), with ``V^{i*} = V(e)`` for even ``i`` and ``V(swap e)`` for
odd ``i``.  ``R_ij`` is spanned by the unit images placed in each pair of
adjacent slots; ``A_ij = B_ij / R_ij``.
"""

import itertools
from dataclasses import dataclass, field

from .adjunction import unit_element
from .bimodule import BimoduleError, dims, iterated_dual, kron, left_tensor_rows, sub_closure, vs_from_embedding
from .embedding import swap_dual
from .exactmath import RatFunc
from .exactmath.linalg import rref

ZERO = RatFunc()
ONE = RatFunc(1)
MAX_COMPONENT_DIM = 4096


class ResourceError(RuntimeError):
    pass


@dataclass(frozen=True)
class QSpace:
    parity: int  # 0 even, 1 odd
    generator: tuple
    sub: object  # SubBimodule

    @property
    def dim(self):
        return self.sub.dim


def _models(e):
    return (vs_from_embedding(e), vs_from_embedding(swap_dual(e)))


def q_space(e, parity, seed=0):
    """``Q`` inside ``V^{p*} ⊗ V^{(p+1)*}``: the unit of the dual pair."""
    if e.n != e.m:
        raise BimoduleError(f"rank-equal embedding required; dims are ({e.n}, {e.m})")
    lam, mu = _models(e)
    # dual(W) ⊗ W with W = V^{(p+1)*}
    W = mu if parity % 2 == 0 else lam
    u = unit_element(W, seed)
    return QSpace(parity % 2, u.coords, sub_closure(u.ambient, [u.coords]))


@dataclass
class NcTruncation:
    embedding: object
    dmax: int
    models: tuple
    q: tuple  # (QSpace even, QSpace odd)
    tables: dict = field(default_factory=dict)  # (start parity, length) -> (dimB, dimR, dimA)
    relations: dict = field(default_factory=dict)  # (start parity, length) -> rref rows of R

    def model(self, i):
        return self.models[i % 2]

    def table(self, i, j):
        return self.tables[(i % 2, j - i)]

    def dim_A(self, i, j):
        return self.table(i, j)[2]

    def relation_rows(self, i, j):
        return self.relations[(i % 2, j - i)]

    def a_dims(self, start=0):
        return tuple(self.tables[(start % 2, d)][2] for d in range(self.dmax + 1))


def relation_rows(models, qgens, start, length, shift=0):
    """Spanning rows of ``R`` for the window of the given start parity and length.

    ``shift = 1`` misplaces the factors in front of each Q by one parity.
    """
    n = models[0].n
    out = []
    for s in range(length - 1):
        head = [models[(start + k + shift) % 2] for k in range(s)]
        q = qgens[(start + s) % 2]
        tail_len = length - s - 2
        for a in itertools.product(range(n), repeat=s):
            for l in range(n ** tail_len):
                tail = tuple(ONE if k == l else ZERO for k in range(n ** tail_len))
                out.append(left_tensor_rows(head, a, kron(q, tail)))
    return out


def _span(rows):
    nz = [r for r in rows if any(r)]
    return tuple(rref(nz)[0]) if nz else ()


def ncsym_truncation(e, dmax=4, seed=0, swap_q=False, mis_slot=False):
    """Dimensions of ``B``, ``R`` and ``A`` for both start parities up to ``dmax``.

    ``swap_q`` exchanges the two Q generators; ``mis_slot`` shifts the
    parity of the factors in front of each Q.  Both exist as negative
    controls.
    """
    if e.n != e.m:
        raise BimoduleError(f"rank-equal embedding required; dims are ({e.n}, {e.m})")
    if dmax < 0:
        raise ValueError("dmax must be nonnegative")
    n = e.n
    if n ** dmax > MAX_COMPONENT_DIM:
        raise ResourceError(f"window too large: n^dmax = {n ** dmax} exceeds {MAX_COMPONENT_DIM}")
    models = _models(e)
    qs = (q_space(e, 0, seed), q_space(e, 1, seed))
    tr = NcTruncation(e, dmax, models, qs)
    gens = (qs[0].generator, qs[1].generator)
    if swap_q:
        gens = gens[::-1]
    for start in (0, 1):
        for d in range(dmax + 1):
            R = _span(relation_rows(models, gens, start, d, int(mis_slot))) if d >= 2 else ()
            dimB = n ** d
            tr.relations[(start, d)] = R
            tr.tables[(start, d)] = (dimB, len(R), dimB - len(R))
    return tr


def _contained(rows, basis):
    if not rows:
        return True
    return len(_span(list(basis) + list(rows))) == len(basis)


def multiplication_consistency(tr, top=None):
    """``R_ij ⊗ B_jk + B_ij ⊗ R_jk ⊆ R_ik`` for ``0 <= i < j < k <= top``.

    Returns ``(ok, witness)``; also checks ``dim A_ik <= dim A_ij · dim A_jk``.
    """
    top = tr.dmax if top is None else top
    n = tr.embedding.n
    for i, j, k in itertools.combinations(range(top + 1), 3):
        Rik = tr.relation_rows(i, k)
        Rij = tr.relation_rows(i, j)
        Rjk = tr.relation_rows(j, k)
        nbjk = n ** (k - j)
        left = []
        for r in Rij:
            for l in range(nbjk):
                left.append(kron(r, tuple(ONE if q == l else ZERO for q in range(nbjk))))
        head = [tr.model(i + s) for s in range(j - i)]
        right = []
        for a in itertools.product(range(n), repeat=j - i):
            for r in Rjk:
                right.append(left_tensor_rows(head, a, r))
        if not _contained(left, Rik):
            return False, (i, j, k, "R_ij ⊗ B_jk")
        if not _contained(right, Rik):
            return False, (i, j, k, "B_ij ⊗ R_jk")
        if tr.dim_A(i, k) > tr.dim_A(i, j) * tr.dim_A(j, k):
            return False, (i, j, k, "dimension bound")
    return True, None


def ncsym_exists_check(e, window=6, seed=0):
    """Every iterated dual for ``|i| <= window`` has rank ``n``."""
    V = vs_from_embedding(e)
    n = e.n
    if dims(V) != (n, n):
        return False
    for i in range(-window, window + 1):
        W = iterated_dual(V, i, seed)
        if dims(W) != (n, n):
            return False
    return True


def table_rows(tr, start=0):
    """``(i, j, dimB, dimR, dimA)`` rows for ``j = i .. i + dmax``."""
    return [(start, start + d) + tr.tables[(start % 2, d)] for d in range(tr.dmax + 1)]
