"""``twoside`` command-line front end."""

import argparse
import csv
import io as _io
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .acceptance import random_family_params, run_all
from .adjunction import is_central, triangle_check, unit_element, unit_subspace
from .bimodule import (
    BimoduleError,
    CoordinateBoundError,
    FromEmbedding,
    Raw,
    TierError,
    TwoSidedVS,
    ab_identity_check,
    dims,
    dual,
    dual_matrix_route,
    invariant_factors,
    is_simple,
    iso_test,
    simultaneous_basis,
    vs_from_embedding,
)
from .embedding import EmbeddingError, FamilyParams, family_embedding, phi_matrix
from .exactmath import ParseError, parse_bipoly
from .io import dump_report, embedding_from_record, load_json, make_report, module_from_record
from .ncsym import ResourceError, ncsym_exists_check, ncsym_truncation, table_rows

EXIT_OK, EXIT_VALIDATION, EXIT_TIER, EXIT_RESOURCE = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


# -- input handling -------------------------------------------------------


def _parse_params(text):
    try:
        vals = [v.strip() for v in text.split(",")]
        return FamilyParams.of(vals)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad --params {text!r}: {exc}", EXIT_VALIDATION) from None


def _load_inputs(args):
    """List of (label, module, embedding or None) from the input flags."""
    out = []
    for rel in args.relation or []:
        from .embedding import embedding_new

        e = embedding_new(parse_bipoly(rel), seed=args.seed)
        out.append((rel, vs_from_embedding(e), e))
    for path in args.file or []:
        rec = load_json(path)
        if rec.get("kind", "embedding") == "embedding":
            e = embedding_from_record(rec, args.seed)
            out.append((path, vs_from_embedding(e), e))
        else:
            out.append((path, module_from_record(rec, args.seed), None))
    for p in args.params or []:
        e = family_embedding(_parse_params(p), seed=args.seed)
        out.append((p, vs_from_embedding(e), e))
    return out


def _single(args):
    inputs = _load_inputs(args)
    if len(inputs) != 1:
        raise CliError("exactly one input (--relation, --file or --params) is required", EXIT_VALIDATION)
    return inputs[0]


def _embedding_summary(e):
    return {
        "relation": e.F.to_str(),
        "F": e.F.to_triples(),
        "n": e.n,
        "m": e.m,
        "rank_equal": e.rank_equal,
        "tier": e.cert.value,
    }


def _module_summary(V):
    out = {"left_dim": V.n, "T": V.T}
    notes = []
    try:
        left, right = dims(V)
        out["dims"] = [left, right]
        out["rank"] = left if left == right else None
    except TierError as exc:
        out["dims"] = [V.n, None]
        out["rank"] = None
        notes.append(str(exc))
    simple = is_simple(V)
    out["simple"] = "unknown" if simple is None else simple
    if simple is None:
        notes.append("simplicity undetermined at certification tier")
    out["invariant_factors"] = invariant_factors(V)
    return out, notes


# -- subcommands ----------------------------------------------------------


def cmd_validate(args):
    label, V, e = _single(args)
    if e is None:
        raise CliError("validate expects a relation", EXIT_VALIDATION)
    notes = [] if e.cert.value == "Certified" else ["irreducibility assumed with specialization witnesses"]
    return {"input": label}, {"embedding": _embedding_summary(e), "valid": True}, notes, EXIT_OK


def _family_info(vals):
    p = FamilyParams.of(vals)
    e = family_embedding(p)
    V = vs_from_embedding(e)
    left, right = dims(V)
    return {
        "params": [str(v) for v in vals],
        "m": str(p.m()),
        "relation": e.F.to_str(),
        "dims": [left, right],
        "rank": left if left == right else None,
        "tier": e.cert.value,
    }


def cmd_family(args):
    tuples = [[str(v) for v in (lambda p: (p.alpha, p.a, p.b, p.c, p.d, p.e, p.f))(_parse_params(s))] for s in args.params or []]
    if args.random:
        tuples += [[str(v) for v in p] for p in random_family_params(args.random, args.seed)]
    if not tuples:
        raise CliError("family needs --params or --random", EXIT_VALIDATION)
    if args.jobs > 1 and len(tuples) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_family_info, tuples))
    else:
        results = [_family_info(t) for t in tuples]
    if args.action == "validate":
        results = [{k: r[k] for k in ("params", "relation", "tier")} for r in results]
    return {"params": tuples, "action": args.action}, {"instances": results}, [], EXIT_OK


def cmd_info(args):
    label, V, e = _single(args)
    res, notes = _module_summary(V)
    if e is not None:
        res["embedding"] = _embedding_summary(e)
        res["phi"] = phi_matrix(e)
    code = EXIT_TIER if notes else EXIT_OK
    return {"input": label}, res, notes, code


def cmd_dual(args):
    label, V, e = _single(args)
    if args.route == "matrix" or (args.route == "auto" and e is None):
        D = dual_matrix_route(V, args.side, args.seed) if args.route == "matrix" else dual(V, args.side, args.seed)
    else:
        D = dual(V, args.side, args.seed)
    res = {"side": args.side, "route": args.route}
    if isinstance(D.provenance, FromEmbedding):
        res["relation"] = D.provenance.embedding.F.to_str()
        res["F"] = D.provenance.embedding.F.to_triples()
    mod, notes = _module_summary(D)
    res.update(mod)
    return {"input": label, "side": args.side, "route": args.route}, res, notes, EXIT_OK


def cmd_iso(args):
    inputs = _load_inputs(args)
    if args.transpose and len(inputs) == 1:
        label, V, _ = inputs[0]
        inputs.append((label + " (transpose)", TwoSidedVS(V.T.transpose(), Raw("transpose"), check=False), None))
    if len(inputs) != 2:
        raise CliError("iso needs two inputs, or one input with --transpose", EXIT_VALIDATION)
    (la, V, _), (lb, W, _) = inputs
    w = iso_test(V, W, args.seed)
    res = {"isomorphic": bool(w)}
    if w:
        res["P"] = w.P
    else:
        res["reason"] = w.reason
    res["invariant_factors"] = [invariant_factors(V), invariant_factors(W)]
    return {"inputs": [la, lb]}, res, [], EXIT_OK


def cmd_adjoint(args):
    label, V, e = _single(args)
    sb = simultaneous_basis(V, args.seed)
    ab_ok, bad = ab_identity_check(V, sb, ["1", "t", "t^2", "1/(t+1)"])
    u = unit_element(V, args.seed, basis=sb)
    tri_ok, diag = triangle_check(V, args.seed, u)
    res = {
        "basis": sb.vectors,
        "A": sb.rightT,
        "B": sb.leftT,
        "ab_identity": ab_ok,
        "unit": list(u.coords),
        "unit_subspace_dim": unit_subspace(u).dim,
        "central": is_central(u),
        "triangle": tri_ok,
    }
    notes = [d for d in (diag, None if bad is None else f"A/B law fails at {bad}") if d]
    ok = ab_ok and tri_ok and res["central"]
    return {"input": label, "seed": args.seed}, res, notes, EXIT_OK if ok else 1


def cmd_ncsym(args):
    label, V, e = _single(args)
    if e is None:
        raise CliError("ncsym expects an embedding input", EXIT_VALIDATION)
    exists = ncsym_exists_check(e, args.window, args.seed)
    if not exists:
        res = {"exists": False, "dims": list(dims(V))}
        return {"input": label}, res, ["iterated duals are not all of full rank"], EXIT_VALIDATION
    tr = ncsym_truncation(e, args.dmax, args.seed)
    rows = table_rows(tr, args.start)
    res = {
        "exists": True,
        "table": [dict(zip(("i", "j", "dimB", "dimR", "dimA"), r)) for r in rows],
        "q_even": list(tr.q[0].generator),
        "q_odd": list(tr.q[1].generator),
        "dimA": [r[4] for r in rows],
    }
    return {"input": label, "dmax": args.dmax, "start": args.start, "window": args.window}, res, [], EXIT_OK


def cmd_selftest(args):
    only = {int(x) for x in args.only.split(",")} if args.only else None
    results = run_all(args.seed, only)
    res = {
        "criteria": [
            {"number": r.number, "title": r.title, "passed": r.passed, "detail": r.detail} for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    return {"seed": args.seed, "only": sorted(only) if only else None}, res, [], EXIT_OK if res["passed"] else 1


COMMANDS = {
    "validate": cmd_validate,
    "family": cmd_family,
    "info": cmd_info,
    "dual": cmd_dual,
    "iso": cmd_iso,
    "adjoint-check": cmd_adjoint,
    "ncsym": cmd_ncsym,
    "selftest": cmd_selftest,
}


# -- output ---------------------------------------------------------------


def _render_text(command, res, notes, elapsed):
    from .io import jsonable

    lines = [f"twoside {command}"]
    if command == "selftest":
        for r in res["criteria"]:
            status = "PASS" if r["passed"] else "FAIL"
            lines.append(f"  [{status}] criterion {r['number']}: {r['title']}  {r['detail']}")
        lines.append(f"  elapsed: {elapsed:.3f}s")
        return "\n".join(lines) + "\n"

    def walk(prefix, val):
        if isinstance(val, dict):
            for k, v in val.items():
                walk(f"{prefix}{k}.", v)
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            for i, v in enumerate(val):
                walk(f"{prefix}{i}.", v)
        else:
            lines.append(f"  {prefix[:-1]}: {val}")

    walk("", jsonable(res))
    for n in notes:
        lines.append(f"  note: {n}")
    lines.append(f"  elapsed: {elapsed:.3f}s")
    return "\n".join(lines) + "\n"


def _render_csv(command, res):
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if command == "ncsym" and "table" in res:
        w.writerow(["i", "j", "dimB", "dimR", "dimA"])
        for r in res["table"]:
            w.writerow([r["i"], r["j"], r["dimB"], r["dimR"], r["dimA"]])
    elif command == "family":
        w.writerow(["params", "relation", "left", "right", "tier"])
        for r in res["instances"]:
            d = r.get("dims", [None, None])
            w.writerow([" ".join(r["params"]), r["relation"], d[0], d[1], r["tier"]])
    elif command == "selftest":
        w.writerow(["criterion", "title", "passed", "detail"])
        for r in res["criteria"]:
            w.writerow([r["number"], r["title"], r["passed"], r["detail"]])
    else:
        raise CliError(f"csv output is not available for {command}", EXIT_VALIDATION)
    return buf.getvalue()


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--max-degree", type=int, help="cap for the mixed-coordinate degree sweep")
    return common


def _input_flags(p, many=False):
    p.add_argument("--relation", "-r", action="append", help="relation F(x, y), e.g. 'y - x^2'")
    p.add_argument("--file", "-f", action="append", help="JSON embedding or module record")
    p.add_argument("--params", action="append", help="family parameters alpha,a,b,c,d,e,f")


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="twoside", description="Two-sided vector spaces over Q(t).")
    parser.add_argument("--version", action="version", version=f"twoside {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a relation")
    _input_flags(p)
    p = sub.add_parser("family", parents=[common], help="rank-2 family instances")
    p.add_argument("--params", action="append", help="alpha,a,b,c,d,e,f")
    p.add_argument("--random", type=int, default=0, help="also draw N random valid tuples")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    p.add_argument("action", nargs="?", choices=("validate", "info"), default="info")
    p = sub.add_parser("info", parents=[common], help="dimensions, simplicity and invariant factors")
    _input_flags(p)
    p = sub.add_parser("dual", parents=[common], help="left or right dual")
    _input_flags(p)
    p.add_argument("--side", choices=("left", "right"), default="right")
    p.add_argument("--route", choices=("auto", "swap", "matrix"), default="auto")
    p = sub.add_parser("iso", parents=[common], help="isomorphism test with witness")
    _input_flags(p)
    p.add_argument("--transpose", action="store_true", help="compare K^n_T with K^n_{T^t}")
    p = sub.add_parser("adjoint-check", parents=[common], help="unit, counit and triangle identities")
    _input_flags(p)
    p = sub.add_parser("ncsym", parents=[common], help="truncation table of the symmetric algebra")
    _input_flags(p)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--start", type=int, default=0, choices=(0, 1))
    p.add_argument("--window", type=int, default=6, help="window for the existence check")
    p = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    p.add_argument("--only", help="comma-separated criterion numbers")
    return parser


def run(argv=None, stdout=None, stderr=None):
    """Execute a command; returns ``(exit code, report dict or None)``."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_degree is not None:
        if args.max_degree < 0:
            parser.error("--max-degree must be nonnegative")
        os.environ["TWOSIDE_MAX_DEGREE"] = str(args.max_degree)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    t0 = time.perf_counter()
    try:
        inputs, res, notes, code = COMMANDS[args.command](args)
    except CliError as exc:
        return _fail(args, str(exc), exc.code, stdout, stderr)
    except (EmbeddingError, ParseError) as exc:
        return _fail(args, str(exc), EXIT_VALIDATION, stdout, stderr)
    except TierError as exc:
        return _fail(args, str(exc), EXIT_TIER, stdout, stderr)
    except (ResourceError, CoordinateBoundError, MemoryError) as exc:
        return _fail(args, str(exc) or type(exc).__name__, EXIT_RESOURCE, stdout, stderr)
    except (BimoduleError, ValueError, ArithmeticError, OSError) as exc:
        return _fail(args, str(exc), EXIT_VALIDATION, stdout, stderr)
    elapsed = time.perf_counter() - t0
    report = make_report(args.command, inputs, res, notes)
    if args.format == "json":
        text = dump_report(report)
    elif args.format == "csv":
        try:
            text = _render_csv(args.command, report["results"])
        except CliError as exc:
            return _fail(args, str(exc), exc.code, stdout, stderr)
    else:
        text = _render_text(args.command, res, notes, elapsed)
    _emit(args, text, stdout)
    return code, report


def _emit(args, text, stdout):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def _fail(args, message, code, stdout, stderr):
    stderr.write(f"twoside {args.command}: error: {message}\n")
    if args.format == "json":
        report = make_report(args.command, {"argv": args.command}, {"error": message, "exit_code": code})
        _emit(args, dump_report(report), stdout)
        return code, report
    return code, None


def main(argv=None):
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
