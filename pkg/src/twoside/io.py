"""File records and report serialization."""

import hashlib
import json
from fractions import Fraction

from .bimodule import DirectSum, FromEmbedding, TwoSidedVS, direct_sum, raw_module, vs_from_embedding
from .embedding import Embedding, IrreducibilityTier, embedding_new
from .exactmath import BiPoly, Matrix, Poly, RatFunc, parse_bipoly, rf

SCHEMA = 1


def embedding_record(e):
    rec = {"F": e.F.to_triples()}
    if e.name:
        rec["name"] = e.name
    return rec


def relation_from_record(rec):
    if "F" in rec:
        return BiPoly.from_triples(rec["F"])
    if "relation" in rec:
        return parse_bipoly(rec["relation"])
    raise ValueError("embedding record needs a term list 'F' or a 'relation' string")


def embedding_from_record(rec, seed=0):
    return embedding_new(relation_from_record(rec), seed=seed, name=rec.get("name"))


def module_record(V):
    p = V.provenance
    if isinstance(p, FromEmbedding):
        return {"kind": "embedding", **embedding_record(p.embedding)}
    if isinstance(p, DirectSum):
        return {"kind": "sum", "parts": [module_record(W) for W in p.parts]}
    return {"kind": "raw", "n": V.n, "T": [[str(x) for x in row] for row in V.T.rows]}


def module_from_record(rec, seed=0):
    kind = rec.get("kind", "embedding")
    if kind == "embedding":
        return vs_from_embedding(embedding_from_record(rec, seed))
    if kind == "sum":
        return direct_sum([module_from_record(r, seed) for r in rec["parts"]])
    if kind == "raw":
        n = int(rec["n"])
        T = [[rf(str(x)) for x in row] for row in rec["T"]]
        if len(T) != n or any(len(r) != n for r in T):
            raise ValueError(f"raw module: T must be {n}x{n}")
        return raw_module(Matrix(T, n))
    raise ValueError(f"unknown module kind {kind!r}")


def load_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def jsonable(x):
    """Exact values become strings; containers are converted recursively."""
    if isinstance(x, (RatFunc, Fraction, Poly, BiPoly)):
        return str(x) if not isinstance(x, Poly) else x.to_str("x")
    if isinstance(x, IrreducibilityTier):
        return x.value
    if isinstance(x, Embedding):
        return embedding_record(x)
    if isinstance(x, Matrix):
        return [[jsonable(c) for c in r] for r in x.rows]
    if isinstance(x, TwoSidedVS):
        return module_record(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def digest(inputs):
    blob = json.dumps(jsonable(inputs), sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def make_report(command, inputs, results, notes=()):
    return {
        "schema": SCHEMA,
        "command": command,
        "input_digest": digest(inputs),
        "inputs": jsonable(inputs),
        "results": jsonable(results),
        "notes": list(notes),
    }


def dump_report(report):
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def read_report(text):
    rep = json.loads(text)
    if rep.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {rep.get('schema')!r}")
    for key in ("command", "input_digest", "results"):
        if key not in rep:
            raise ValueError(f"report missing field {key!r}")
    return rep
