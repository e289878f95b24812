import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from twoside import corpus
from twoside.embedding import (
    ALGEBRAIC,
    INSEPARABLE,
    NOT_OVER_K,
    REDUCIBLE,
    EmbeddingError,
    FamilyParams,
    IrreducibilityTier,
    coord_functions,
    embedding_new,
    family_embedding,
    family_relation,
    phi_matrix,
    relext_structure,
    swap_dual,
)
from twoside.exactmath import Matrix, Poly, RatFunc, charpoly, discriminant_y, parse_bipoly, rf
from twoside.exactmath.factor import factor_K, roots_in_K

from conftest import ratfuncs

M = rf("(t^2+1)/(t^2+2)")
ZERO, ONE = rf(0), rf(1)


def test_validation_examples():
    e = embedding_new("y - x")
    assert (e.n, e.m, e.cert) == (1, 1, IrreducibilityTier.CERTIFIED)
    e = corpus.embedding("E_fam")
    assert (e.n, e.m, e.cert) == (2, 2, IrreducibilityTier.CERTIFIED)
    with pytest.raises(EmbeddingError) as exc:
        embedding_new("y^2 - x^2")
    assert exc.value.condition == REDUCIBLE


@pytest.mark.parametrize(
    "rel, cond",
    [
        ("x^2 + 1", NOT_OVER_K),
        ("y^2 - 2", ALGEBRAIC),
        ("(y - x)^2", INSEPARABLE),
        ("(x + 1)*(y - x)", REDUCIBLE),
        ("y^2 - x^2 - 2*x - 1", REDUCIBLE),
        ("y^3 - x^3", REDUCIBLE),
        ("0", NOT_OVER_K),
    ],
)
def test_rejections(rel, cond):
    with pytest.raises(EmbeddingError) as exc:
        embedding_new(rel)
    assert exc.value.condition == cond


def test_tiers():
    assert corpus.embedding("cube_root").cert is IrreducibilityTier.ASSUMED
    assert corpus.embedding("sqrt").cert is IrreducibilityTier.CERTIFIED


def test_swap_examples():
    e = swap_dual(embedding_new("y - x - 1"))
    assert e.F.to_str() == "x - y - 1"
    s = swap_dual(embedding_new("y - x^2"))
    assert s.F == parse_bipoly("x - y^2") and (s.n, s.m) == (2, 1)
    # relations are defined up to a nonzero scalar
    assert swap_dual(embedding_new("y - x")).F == parse_bipoly("y - x") * -1


@pytest.mark.parametrize("name", sorted(corpus.RELATIONS))
def test_swap_is_involution(name):
    e = corpus.embedding(name)
    assert swap_dual(swap_dual(e)) == e


def test_relext_examples():
    R = relext_structure(corpus.embedding("E_fam"))
    assert R.f == Poly([-M, ZERO, ONE])
    # 0-based beta[1][1] is s*s = m*1 + 0*s
    assert R.beta[1][1] == (M, ZERO)
    assert R.beta[0] == ((ONE, ZERO), (ZERO, ONE))
    R1 = relext_structure(embedding_new("y - x"))
    assert R1.n == 1 and R1.beta[0][0] == (ONE,)
    R2 = relext_structure(embedding_new("y^2 - x"))
    assert R2.beta[1][1] == (rf("t"), ZERO)


def test_coord_function_examples():
    e = corpus.embedding("E_fam")
    assert coord_functions(e, rf("t")) == (ZERO, ONE)
    assert coord_functions(e, rf("t^2")) == (M, ZERO)
    c = rf("(t^3+1)/(t-5)")
    assert coord_functions(embedding_new("y - x"), c) == (c,)


def test_phi_matrix_examples():
    e = corpus.embedding("E_fam")
    phi = phi_matrix(e)
    assert phi == Matrix([[ZERO, M], [ONE, ZERO]])
    assert phi.transpose() == Matrix([[ZERO, ONE], [M, ZERO]])
    assert phi_matrix(embedding_new("y - x")) == Matrix([[rf("t")]])
    assert phi_matrix(embedding_new("y - x^2")) == Matrix([[rf("t^2")]])


@pytest.mark.parametrize("name", sorted(corpus.RELATIONS))
def test_charpoly_of_phi_is_f(name):
    e = corpus.embedding(name)
    assert charpoly(phi_matrix(e)) == e.relext.f


@pytest.mark.parametrize("name", sorted(corpus.RELATIONS))
def test_separability_certificate(name):
    assert discriminant_y(corpus.embedding(name).F)


@pytest.mark.parametrize("name", sorted(corpus.RELATIONS))
def test_coordinate_product_rule(name):
    e = corpus.embedding(name)
    R = e.relext
    rng = random.Random(7)
    for _ in range(100):
        b = RatFunc(Poly([rng.randint(-3, 3) for _ in range(3)]), Poly([rng.randint(1, 3), rng.randint(-2, 2)]))
        c = RatFunc(Poly([rng.randint(-3, 3) for _ in range(2)]), Poly([rng.randint(1, 2), 1]))
        cb, cc = coord_functions(e, b), coord_functions(e, c)
        lhs = coord_functions(e, b * c)
        for k in range(e.n):
            rhs = ZERO
            for i in range(e.n):
                for j in range(e.n):
                    rhs = rhs + cb[i] * cc[j] * R.beta[i][j][k]
            assert lhs[k] == rhs


@given(ratfuncs(2), ratfuncs(2))
def test_coord_functions_linear(a, b):
    e = corpus.embedding("hyperbola")
    ca, cb = coord_functions(e, a), coord_functions(e, b)
    assert coord_functions(e, a + b) == tuple(x + y for x, y in zip(ca, cb))
    assert coord_functions(e, a * 3) == tuple(x * 3 for x in ca)


def test_rank_criterion_on_corpus():
    for e in corpus.all_embeddings():
        assert e.rank_equal == (e.F.deg_x == e.F.deg_y)


# -- family ---------------------------------------------------------------


def test_family_examples():
    e = family_embedding(FamilyParams.of(0, 1, 0, 1, 1, 0, 2))
    assert e.F == parse_bipoly("(x^2+2)*y^2 - (x^2+1)") and (e.n, e.m) == (2, 2)
    with pytest.raises(EmbeddingError) as exc:
        family_embedding(FamilyParams.of(0, 1, 2, 1, 1, 0, 2))
    assert exc.value.condition == "b² = 4ac"
    s = family_embedding(FamilyParams.of(1, 1, 0, 1, 1, 0, 2))
    assert s.F == parse_bipoly("(x^2+2)*(y-1)^2 - (x^2+1)") and (s.n, s.m) == (2, 2)


@pytest.mark.parametrize(
    "params, cond",
    [
        ((0, 1, 0, 1, 2, 0, 2), "af = cd"),
        ((0, 1, 0, 1, 1, 2, 1), "e² = 4df"),
        ((0, 1, 1, 1, 1, 0, 2), "ae ≠ bd"),
        ((0, 0, 1, 1, 0, 1, 2), "a = d = 0"),
    ],
)
def test_family_condition_names(params, cond):
    with pytest.raises(EmbeddingError) as exc:
        family_embedding(FamilyParams.of(*params))
    assert exc.value.condition == cond


def test_family_arity():
    with pytest.raises(ValueError):
        FamilyParams.of(1, 2, 3)


q = st.integers(-6, 6)


@given(q, q, q, q, q, q, q)
def test_family_outputs_are_certified_rank_two(alpha, a, b, c, d, e, f):
    p = FamilyParams.of(alpha, a, b, c, d, e, f)
    if p.violations():
        with pytest.raises(EmbeddingError):
            family_embedding(p)
        return
    emb = family_embedding(p)
    assert (emb.n, emb.m) == (2, 2) and emb.cert is IrreducibilityTier.CERTIFIED
    assert embedding_new(family_relation(p)).F == emb.F


def test_degenerate_direction_is_reducible():
    # a/d = 4, double roots r = 1 and u = -1: m = 4((t-1)/(t+1))^2
    p = FamilyParams.of(0, 4, -8, 4, 1, 2, 1)
    assert {"b² = 4ac", "e² = 4df"} <= set(p.violations())
    with pytest.raises(EmbeddingError) as exc:
        embedding_new(family_relation(p))
    assert exc.value.condition == REDUCIBLE


# -- root search and factoring over K -------------------------------------


def K_poly(*cs):
    return Poly([rf(c) for c in cs])


def test_roots_in_K():
    P = K_poly("-(t+1)^2/(t-2)^2", 0, 1)
    assert set(roots_in_K(P)) == {rf("(t+1)/(t-2)"), rf("-(t+1)/(t-2)")}
    assert roots_in_K(K_poly("-t", 0, 1)) == []


def test_factor_K_peels_roots():
    P = K_poly("-t", 0, 1) * K_poly("-t-1", 1)
    facs = sorted(factor_K(P), key=lambda f: f[0].degree)
    assert [(g.degree, m, d) for g, m, d in facs] == [(1, 1, 1), (2, 1, 1)]
    with pytest.raises(ValueError):
        factor_K(K_poly(1, 0, 0, 0, 1))


def test_specialization_witness_uses_sympy_independently():
    F = corpus.embedding("fermat_cubic").F
    x, y = sympy.symbols("x y")
    expr = sum(sympy.Rational(c) * x**i * y**j for (i, j), c in F.terms.items())
    assert sympy.Poly(expr, x, y).is_irreducible
