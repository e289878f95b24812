import pytest

from twoside import corpus
from twoside.bimodule import BimoduleError, tensor, vs_from_embedding
from twoside.embedding import FamilyParams, family_embedding, swap_dual
from twoside.exactmath import rf
from twoside.ncsym import (
    MAX_COMPONENT_DIM,
    ResourceError,
    multiplication_consistency,
    ncsym_exists_check,
    ncsym_truncation,
    q_space,
    table_rows,
)

E = corpus.embedding("E_fam")
RANK_EQUAL = [e.name for e in corpus.rank_equal_embeddings()]


@pytest.fixture(scope="module")
def fam():
    return ncsym_truncation(E, 4, seed=0)


def test_q_space_examples():
    q = q_space(corpus.embedding("identity"), 0)
    assert q.dim == 1 and q.sub.ambient.n == 1
    even, odd = q_space(E, 0), q_space(E, 1)
    assert even.dim == odd.dim == 1
    assert even.sub.ambient.n == odd.sub.ambient.n == 4


@pytest.mark.parametrize("name", RANK_EQUAL)
def test_dim_q_is_one(name):
    e = corpus.embedding(name)
    assert q_space(e, 0).dim == 1 and q_space(e, 1).dim == 1


def test_q_is_central_in_its_tensor():
    lam, mu = vs_from_embedding(E), vs_from_embedding(swap_dual(E))
    amb = tensor(lam, mu)
    z = q_space(E, 0).generator
    t = rf("t")
    assert tuple(amb.T.vecmul(z)) == tuple(t * x for x in z)


def test_truncation_examples(fam):
    assert ncsym_truncation(corpus.embedding("identity"), 4).a_dims() == (1, 1, 0, 0, 0)
    assert ncsym_truncation(E, 2).dim_A(0, 2) == 3
    assert fam.a_dims(0) == (1, 2, 3, 4, 5)


def test_structural_dims(fam):
    for i in range(2):
        assert fam.dim_A(i, i) == 1
        assert fam.dim_A(i, i + 1) == 2
    for d in range(5):
        dimB, dimR, dimA = fam.table(0, d)
        assert dimB == 2**d and dimA == dimB - dimR


def test_r03_dimension(fam):
    assert fam.table(0, 3)[1] == 4


def test_shift_coherence(fam):
    assert fam.a_dims(0) == fam.a_dims(1)
    for d in range(5):
        assert fam.dim_A(0, d) == fam.dim_A(1, 1 + d) == fam.dim_A(2, 2 + d)


def test_shift_coherence_on_shifted_family():
    tr = ncsym_truncation(corpus.embedding("E_fam_shifted"), 4)
    assert tr.a_dims(0) == tr.a_dims(1) == (1, 2, 3, 4, 5)


def test_family_pattern_on_random_instance():
    e = family_embedding(FamilyParams.of(2, 1, 2, 3, 1, 2, 5))
    assert ncsym_truncation(e, 4).a_dims(0) == (1, 2, 3, 4, 5)


def test_multiplication_consistency(fam):
    assert multiplication_consistency(ncsym_truncation(corpus.embedding("identity"), 3)) == (True, None)
    assert multiplication_consistency(fam) == (True, None)


def test_mis_slotted_control_fails():
    ok, witness = multiplication_consistency(ncsym_truncation(E, 4, mis_slot=True))
    assert not ok and witness[:3] == (0, 1, 3)


def test_swapped_q_is_invisible_on_family():
    # the two units have identical coordinates here, so swapping them changes nothing
    assert q_space(E, 0).generator == q_space(E, 1).generator
    assert ncsym_truncation(E, 4, swap_q=True).a_dims() == (1, 2, 3, 4, 5)


def test_swapped_q_changes_shifted_table():
    tr = ncsym_truncation(corpus.embedding("E_fam_shifted"), 4, swap_q=True)
    assert tr.a_dims() == (1, 2, 3, 4, 4)


def test_exists_examples():
    assert ncsym_exists_check(E, 6)
    assert not ncsym_exists_check(corpus.embedding("square"), 2)
    assert ncsym_exists_check(corpus.embedding("identity"), 6)


def test_truncation_needs_rank_equal():
    with pytest.raises(BimoduleError):
        ncsym_truncation(corpus.embedding("square"), 2)


def test_resource_cap():
    with pytest.raises(ResourceError):
        ncsym_truncation(E, 13)
    assert 2**12 == MAX_COMPONENT_DIM


def test_table_rows(fam):
    rows = table_rows(fam, 1)
    assert rows[0] == (1, 1, 1, 0, 1)
    assert rows[-1] == (1, 5, 16, 11, 5)
    assert [r[4] for r in rows] == [1, 2, 3, 4, 5]


def test_relation_rows_are_rref(fam):
    for key, rows in fam.relations.items():
        pivots = [next(i for i, x in enumerate(r) if x) for r in rows]
        assert pivots == sorted(pivots)
        assert all(rows[k][p] == 1 for k, p in enumerate(pivots))
