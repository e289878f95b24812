"""The ten acceptance checks, shared by ``twoside selftest`` and the tests."""

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import corpus
from .adjunction import same_unit_subspace, triangle_check, unit_element
from .bimodule import (
    Raw,
    SimulBasis,
    TwoSidedVS,
    ab_identity_check,
    dims,
    direct_sum,
    dual,
    dual_matrix_route,
    iso_test,
    iterated_dual,
    simultaneous_basis,
    vs_from_embedding,
)
from .embedding import REDUCIBLE, EmbeddingError, FamilyParams, embedding_new, family_embedding, family_relation
from .exactmath import Matrix, Poly, RatFunc, hom_eval, is_square_in_K, lueroth_degree, rf
from .exactmath.linalg import row_echelon_rank
from .ncsym import multiplication_consistency, ncsym_exists_check, ncsym_truncation, q_space

CONDITIONS = ("af = cd", "b² = 4ac", "e² = 4df", "ae ≠ bd")


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    budget: float = None

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.seconds:.2f}s) {self.detail}".rstrip()


def _violated(p):
    """Independent restatement of the family constraints."""
    a, b, c, d, e, f = p[1:]
    out = set()
    if a * f == c * d:
        out.add("af = cd")
    if b * b == 4 * a * c:
        out.add("b² = 4ac")
    if e * e == 4 * d * f:
        out.add("e² = 4df")
    if a * e != b * d:
        out.add("ae ≠ bd")
    if a == 0 and d == 0:
        out.add("a = d = 0")
    return out


def random_family_params(count, seed=0, lo=-6, hi=6):
    """Tuples ``(alpha, a, ..., f)`` satisfying all constraints.

    ``ae = bd`` is imposed by construction (``e = b d / a`` or ``b = a e / d``).
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        alpha = Fraction(rng.randint(lo, hi), rng.randint(1, 3))
        a, c, d, f = (rng.randint(lo, hi) for _ in range(4))
        if a:
            b = rng.randint(lo, hi)
            e = Fraction(b * d, a)
        elif d:
            e = rng.randint(lo, hi)
            b = Fraction(a * e, d)
        else:
            continue
        p = (alpha, Fraction(a), Fraction(b), Fraction(c), Fraction(d), Fraction(e), Fraction(f))
        if not _violated(p):
            out.append(p)
    return out


def single_violation_params(per_condition=5, seed=0):
    rng = random.Random(seed)
    out = []
    for name in CONDITIONS:
        found = 0
        while found < per_condition:
            p = tuple(Fraction(rng.randint(-4, 4)) for _ in range(7))
            if _violated(p) == {name}:
                out.append((name, p))
                found += 1
    return out


def degenerate_params(count=5, seed=0):
    """``b² = 4ac`` and ``e² = 4df`` with ``a/d`` a square and distinct double roots."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.choice([1, 2, 3, -1])
        k = rng.randint(1, 4)
        a = d * k * k
        r, u = rng.randint(-4, 4), rng.randint(-4, 4)
        if r == u:
            continue
        alpha = rng.randint(-3, 3)
        out.append(tuple(Fraction(x) for x in (alpha, a, -2 * a * r, a * r * r, d, -2 * d * u, d * u * u)))
    return out


def _timed(number, title, budget, fn):
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure, reported verbatim
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    dt = time.perf_counter() - t0
    if budget is not None and dt > budget:
        ok, detail = False, f"{detail} runtime {dt:.1f}s exceeds {budget}s".strip()
    return CriterionResult(number, title, ok, detail, dt, budget)


# -- criteria -------------------------------------------------------------


def criterion_1(seed=0):
    def run():
        for p in random_family_params(100, seed):
            e = family_embedding(FamilyParams.of(p))
            V = vs_from_embedding(e)
            raw = TwoSidedVS(V.T, Raw("family"))
            if dims(V) != (2, 2) or dims(raw) != (2, 2):
                return False, f"dims {dims(V)} / {dims(raw)} for {p}"
        for name, p in single_violation_params(5, seed):
            try:
                family_embedding(FamilyParams.of(p))
            except EmbeddingError as exc:
                if exc.condition != name:
                    return False, f"{p}: expected {name!r}, got {exc.condition!r}"
            else:
                return False, f"{p} accepted despite violating {name}"
        for p in degenerate_params(5, seed):
            P = FamilyParams.of(p)
            if not is_square_in_K(P.m()):
                return False, f"m not a square for {p}"
            try:
                embedding_new(family_relation(P))
            except EmbeddingError as exc:
                if exc.condition != REDUCIBLE:
                    return False, f"{p}: {exc}"
            else:
                return False, f"degenerate {p} accepted"
        return True, "100 valid, 20 single violations, 5 degenerate"

    return _timed(1, "family rank", 60, run)


def criterion_2(seed=0):
    def run():
        for p in random_family_params(100, seed):
            m = FamilyParams.of(p).m()
            if lueroth_degree(m) != 2 or is_square_in_K(m):
                return False, f"m = {m}"
        return True, "100 tuples"

    return _timed(2, "Lüroth degree and non-square", 10, run)


def family_sample(count=10, seed=0):
    return [family_embedding(FamilyParams.of(p)) for p in random_family_params(count, seed + 1000)]


def criterion_3(seed=0):
    def run():
        es = [corpus.embedding("E_fam")] + family_sample(10, seed)
        for e in es:
            V = vs_from_embedding(e)
            mu = dual(V)
            right = dual_matrix_route(V, "right", seed)
            left = dual_matrix_route(V, "left", seed)
            if not iso_test(right, mu):
                return False, f"right dual ≇ swap model for {e.F}"
            if not iso_test(left, right):
                return False, f"left dual ≇ right dual for {e.F}"
        return True, f"{len(es)} embeddings"

    return _timed(3, "dual formula", 300, run)


def criterion_4(seed=0):
    def run():
        es = [e for e in corpus.all_embeddings() if e.n <= 3]
        for e in es:
            V = vs_from_embedding(e)
            W = TwoSidedVS(V.T.transpose(), Raw("transpose"), check=False)
            w = iso_test(V, W, seed)
            if not w or w.P * V.T != W.T * w.P:
                return False, f"transpose iso fails for {e.F}"
        return True, f"{len(es)} embeddings"

    return _timed(4, "transpose isomorphism", None, run)


def ab_samples(seed=0):
    rng = random.Random(seed)
    num = [rng.randint(-3, 3) for _ in range(3)]
    den = [rng.randint(1, 3), rng.randint(-2, 2)]
    return [rf(1), rf("t"), rf("t^2"), rf("1/(t+1)"), RatFunc(Poly(num), Poly(den))]


def perturbed(basis):
    B = basis.leftT
    rows = [list(r) for r in B.rows]
    rows[0][0] = rows[0][0] + 1
    return SimulBasis(basis.vectors, basis.rightT, Matrix(rows, B.ncols))


def criterion_5(seed=0):
    def run():
        for name in ("identity", "E_fam"):
            V = vs_from_embedding(corpus.embedding(name))
            sb = simultaneous_basis(V, seed)
            ok, bad = ab_identity_check(V, sb, ab_samples(seed))
            if not ok:
                return False, f"{name}: fails at {bad}"
            ok, _ = ab_identity_check(V, perturbed(sb), ab_samples(seed))
            if ok:
                return False, f"{name}: perturbed B passed"
        return True, "identity and E_fam; controls rejected"

    return _timed(5, "A/B inverse law", None, run)


def criterion_6(seed=0):
    def run():
        for name in ("identity", "E_fam"):
            V = vs_from_embedding(corpus.embedding(name))
            units = [unit_element(V, seed + s) for s in range(5)]
            ok, diag = triangle_check(V, seed, units[0])
            if not ok:
                return False, f"{name}: {diag}"
            if not all(same_unit_subspace(units[0], u) for u in units[1:]):
                return False, f"{name}: unit subspace depends on the basis"
        return True, "triangles hold; 5 seeds agree"

    return _timed(6, "adjunction", 120, run)


def criterion_7(seed=0):
    def run():
        sq = vs_from_embedding(corpus.embedding("square"))
        sh = vs_from_embedding(corpus.embedding("shift"))
        mods = {"y - x^2": sq, "y - x - 1": sh, "sum": direct_sum(sq, sh), "E_fam": vs_from_embedding(corpus.embedding("E_fam"))}
        for name, V in mods.items():
            n, m = dims(V)
            for i in range(-4, 5):
                got = dims(iterated_dual(V, i, seed))
                want = (n, m) if i % 2 == 0 else (m, n)
                if got != want:
                    return False, f"{name}, i={i}: {got} != {want}"
        E = mods["E_fam"]
        back = dual_matrix_route(dual_matrix_route(E, "right", seed), "left", seed)
        if not iso_test(back, E):
            return False, "(*V)* ≇ V on E_fam"
        return True, "alternation for |i| <= 4; double dual on E_fam"

    return _timed(7, "double dual and alternation", None, run)


def criterion_8(seed=0):
    def run():
        for e in corpus.rank_equal_embeddings():
            if not ncsym_exists_check(e, 6, seed):
                return False, f"existence fails for {e.F}"
        if ncsym_exists_check(corpus.embedding("square"), 2, seed):
            return False, "y - x^2 reported as existing"
        return True, f"{len(corpus.rank_equal_embeddings())} rank-equal embeddings; y - x^2 rejected"

    return _timed(8, "existence", None, run)


# -- brute force oracle for truncation dimensions -------------------------


def _tensor_matrix(TX, TY):
    nX, nY = TX.nrows, TY.nrows
    N = nX * nY
    rows = [[RatFunc()] * N for _ in range(N)]
    for j in range(nY):
        for l in range(nY):
            if TY[j, l]:
                M = hom_eval(TX, TY[j, l])
                for i in range(nX):
                    for k in range(nX):
                        rows[i * nY + j][k * nY + l] = M[i, k]
    return Matrix(rows, N)


def brute_force_a_dims(e, dmax=4, seed=0):
    """``dim A_{0,d}`` from left-associated tensors and whole-block scalar passing."""
    n = e.n
    lam = vs_from_embedding(e).T
    mu = dual(vs_from_embedding(e)).T
    models = [lam, mu]
    qs = [q_space(e, 0, seed).generator, q_space(e, 1, seed).generator]
    out = []
    for d in range(dmax + 1):
        if d < 2:
            out.append(n ** d)
            continue
        rows = []
        for s in range(d - 1):
            # (B_{0,s} ⊗ Q_s) ⊗ B_{s+2,d}
            head = None
            for k in range(s):
                head = models[k % 2] if head is None else _tensor_matrix(head, models[k % 2])
            q = qs[s % 2]
            if head is None:
                left = [list(q)]
            else:
                left = []
                for a in range(head.nrows):
                    acc = [RatFunc()] * (head.nrows * len(q))
                    for r, c in enumerate(q):
                        if c:
                            img = hom_eval(head, c).rows[a]
                            for b in range(head.nrows):
                                acc[b * len(q) + r] = acc[b * len(q) + r] + img[b]
                    left.append(acc)
            tail = n ** (d - s - 2)
            for x in left:
                for l in range(tail):
                    rows.append([c if k == l else RatFunc() for c in x for k in range(tail)])
        out.append(n ** d - row_echelon_rank(rows))
    return tuple(out)


def criterion_9(seed=0):
    def run():
        E = corpus.embedding("E_fam")
        pipe = ncsym_truncation(E, 4, seed).a_dims(0)
        brute = brute_force_a_dims(E, 4, seed)
        if pipe != (1, 2, 3, 4, 5) or brute != pipe:
            return False, f"pipeline {pipe}, oracle {brute}"
        ident = ncsym_truncation(corpus.embedding("identity"), 4, seed).a_dims(0)
        if ident != (1, 1, 0, 0, 0):
            return False, f"identity {ident}"
        return True, "E_fam (1, 2, 3, 4, 5) both ways; identity (1, 1, 0, 0, 0)"

    return _timed(9, "truncation dimensions", 600, run)


def criterion_10(seed=0):
    def run():
        E = corpus.embedding("E_fam")
        for parity in (0, 1):
            if q_space(E, parity, seed).dim != 1:
                return False, f"dim Q_{parity} != 1"
        tr = ncsym_truncation(E, 4, seed)
        ok, wit = multiplication_consistency(tr, 4)
        if not ok:
            return False, f"containment fails at {wit}"
        bad = ncsym_truncation(E, 4, seed, mis_slot=True)
        if multiplication_consistency(bad, 4)[0]:
            return False, "mis-slotted control passed"
        return True, "dim Q = 1 both parities; containment for i<j<k<=4"

    return _timed(10, "relation-space structure", None, run)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def run_all(seed=0, only=None):
    out = []
    for i, fn in enumerate(CRITERIA, 1):
        if only and i not in only:
            continue
        out.append(fn(seed))
    return out
