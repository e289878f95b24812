"""Unit and counit of the duality adjunction for modules V(e).

The dual model of ``W = V(e)`` is ``W' = V(swap e)``; ``w ∈ W'`` acts on
``W`` through the trace form ``<w, x> = Tr(w x)`` of the composite field,
with ``w`` moved into the power basis of ``W`` by :func:`transport`.
"""

import random
from dataclasses import dataclass

from .bimodule import (
    BimoduleError,
    FromEmbedding,
    SimulBasis,
    TwoSidedVS,
    dims,
    element_tensor,
    simultaneous_basis,
    sub_closure,
    tensor,
    transport,
    vs_from_embedding,
)
from .embedding import Embedding, swap_dual
from .exactmath import Matrix, Poly, RatFunc, rf
from .exactmath.linalg import row_space_equal

ZERO = RatFunc()
ONE = RatFunc(1)


def _embedding_of(V):
    if isinstance(V.provenance, FromEmbedding):
        return V.provenance.embedding
    raise BimoduleError("adjunction data is implemented for modules built from an embedding")


def pairing_eval(e, i, v):
    """The ``i``-th explicit dual functional (0-based) evaluated at ``v ∈ V(e)``.

    Expands ``v = sum_l t^l·λ(c_l)`` and returns ``c_i``; right K-linear.
    """
    if not 0 <= i < e.m:
        raise IndexError(f"functional index {i} out of range for m = {e.m}")
    return transport(e, tuple(rf(x) for x in v))[i]


@dataclass(frozen=True)
class PairingTable:
    embedding: Embedding
    gram: Matrix  # gram[i][j] = pairing_eval(e, i, y_j)

    @property
    def invertible(self):
        return bool(self.gram.det())


def pairing_table(e, basis):
    rows = basis.vectors.rows
    return PairingTable(e, Matrix([[pairing_eval(e, i, y) for y in rows] for i in range(e.m)], len(rows)))


def trace_pairing(e, w, x):
    """``<w, x>`` for ``w ∈ V(swap e)`` and ``x ∈ V(e)``."""
    R = e.relext
    return R.trace(R.mul(transport(swap_dual(e), w), x))


@dataclass(frozen=True)
class UnitElement:
    ambient: TwoSidedVS  # dual(V) ⊗ V
    coords: tuple
    basis: SimulBasis

    @property
    def dual_module(self):
        return self.ambient.provenance.left

    @property
    def module(self):
        return self.ambient.provenance.right


def dual_basis_functionals(V, basis):
    """Rows ``w_j`` of the dual model with ``<w_j, y_l> = δ_jl``."""
    e = _embedding_of(V)
    mu = swap_dual(e)
    D = vs_from_embedding(mu)
    n = e.n
    t = RatFunc.t()
    # right basis u_r = t^r·1 of the dual model
    us = [tuple((t ** r) if k == 0 else ZERO for k in range(D.n)) for r in range(n)]
    G = Matrix([[trace_pairing(e, u, y) for y in basis.vectors.rows] for u in us], n)
    C = G.inverse()
    ws = []
    for j in range(n):
        acc = [ZERO] * D.n
        for r in range(n):
            if C[j, r]:
                acc = [a + b for a, b in zip(acc, D.act_right(us[r], C[j, r]))]
        ws.append(tuple(acc))
    return D, ws


def unit_element(V, seed=0, basis=None):
    """``η(1) = sum_j φ_j ⊗ y_j`` in ``dual(V) ⊗ V``."""
    left, right = dims(V)
    if left != right:
        raise BimoduleError(f"unit needs a rank-equal module; dims are ({left}, {right})")
    if basis is None:
        basis = simultaneous_basis(V, seed)
    D, ws = dual_basis_functionals(V, basis)
    amb = tensor(D, V)
    acc = [ZERO] * amb.n
    for w, y in zip(ws, basis.vectors.rows):
        acc = [a + b for a, b in zip(acc, element_tensor(D, w, y))]
    return UnitElement(amb, tuple(acc), basis)


def counit_ambient(V):
    """``V ⊗ dual(V)``, the domain of the counit."""
    e = _embedding_of(V)
    return tensor(V, vs_from_embedding(swap_dual(e)))


def counit_apply(V, w):
    """``ε(sum a_ab e_a ⊗ f_b) = sum a_ab <f_b, e_a>`` on standard coordinates."""
    e = _embedding_of(V)
    m = e.m
    D = vs_from_embedding(swap_dual(e))
    acc = ZERO
    for a in range(V.n):
        for b in range(m):
            c = rf(w[a * m + b])
            if c:
                acc = acc + c * trace_pairing(e, D.unit(b), V.unit(a))
    return acc


def presentation(V, basis, a):
    """Coordinates of ``sum_ij a_ij y_i ⊗ φ_j`` in ``V ⊗ dual(V)``."""
    D, ws = dual_basis_functionals(V, basis)
    acc = [ZERO] * (V.n * D.n)
    for i, y in enumerate(basis.vectors.rows):
        for j, w in enumerate(ws):
            c = rf(a[i][j])
            if c:
                term = element_tensor(V, tuple(c * x for x in y), w)
                acc = [p + q for p, q in zip(acc, term)]
    return tuple(acc)


def _random_vector(rng, n):
    return tuple(RatFunc(Poly([rng.randint(-3, 3) for _ in range(3)]), Poly([rng.randint(1, 3), rng.randint(-2, 2)])) for _ in range(n))


def _first_triangle(V, D, z, v, e):
    n = V.n
    out = [ZERO] * n
    for b in range(D.n):
        for c in range(n):
            zbc = z[b * n + c]
            if zbc:
                out[c] = out[c] + trace_pairing(e, D.unit(b), V.act_right(v, zbc))
    return tuple(out)


def _second_triangle(V, D, z, w, e):
    n = V.n
    out = [ZERO] * D.n
    for b in range(D.n):
        for c in range(n):
            zbc = z[b * n + c]
            if zbc:
                s = trace_pairing(e, w, V.unit(c))
                if s:
                    fb = D.act_right(D.unit(b), s)
                    out = [o + zbc * x for o, x in zip(out, fb)]
    return tuple(out)


def triangle_check(V, seed=0, unit=None, extra=20):
    """Both zig-zag composites are the identity on a basis plus random elements.

    Returns ``(ok, diagnostic)``.
    """
    e = _embedding_of(V)
    if unit is None:
        unit = unit_element(V, seed)
    D = unit.dual_module
    z = unit.coords
    rng = random.Random(seed)
    vs = [V.unit(i) for i in range(V.n)] + [_random_vector(rng, V.n) for _ in range(extra)]
    for v in vs:
        if _first_triangle(V, D, z, v, e) != v:
            return False, f"first identity fails at {v}"
    ws = [D.unit(i) for i in range(D.n)] + [_random_vector(rng, D.n) for _ in range(extra)]
    for w in ws:
        if _second_triangle(V, D, z, w, e) != w:
            return False, f"second identity fails at {w}"
    return True, None


def is_central(unit):
    t = RatFunc.t()
    left = tuple(t * x for x in unit.coords)
    right = tuple(unit.ambient.T.vecmul(unit.coords))
    return left == right


def unit_subspace(unit):
    return sub_closure(unit.ambient, [unit.coords])


def same_unit_subspace(u1, u2):
    return row_space_equal(unit_subspace(u1).basis, unit_subspace(u2).basis)
