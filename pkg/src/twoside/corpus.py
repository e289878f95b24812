"""Built-in relations used by the self-test and the test-suite."""

from functools import lru_cache

from .embedding import embedding_new

E_FAM = "(x^2+2)*y^2 - (x^2+1)"

RELATIONS = {
    "identity": "y - x",
    "shift": "y - x - 1",
    "inverse": "x*y - 1",
    "mobius": "(x - 1)*y - (x + 1)",
    "square": "y - x^2",
    "sqrt": "y^2 - x",
    "E_fam": E_FAM,
    "E_fam_shifted": "(x^2+2)*(y-2)^2 - (2*x^2+x)",
    "hyperbola": "y^2 - x^2 - 1",
    "cube_root": "y^3 - x",
    "fermat_cubic": "y^3 - x^3 - 1",
}


@lru_cache(maxsize=None)
def embedding(name):
    return embedding_new(RELATIONS[name], name=name)


def all_embeddings():
    return [embedding(k) for k in RELATIONS]


def rank_equal_embeddings():
    return [e for e in all_embeddings() if e.n == e.m]
