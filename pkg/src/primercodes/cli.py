"""Command-line interface.

Message and word conventions:
  bits            0/1 strings, e.g. 0110
  GF(4) symbols   digit strings over 0-3 or DNA letters (A=0, T=1, C=2, G=3)
  polynomials     comma-separated ascending coefficients, e.g. 1,1,3,1,3,1,1
  block indices   comma-separated integers (primer-general)

Every JSON artifact carries "schema_version" and the "run_config" that
produced it, including the seed.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import __version__, oracle
from .balance import GcEncoderParams, construct_bin_balanced, construct_gc_balanced, gc_desk_params
from .codebook import export_words, render
from .cyclic import (
    CyclicCode,
    DecodeError,
    LinearEncoder,
    bch_narrow_sense,
    code_from_generator,
    code_properties,
    reversible_bch,
)
from .dnacomp import construct_dna_computing
from .polyring import Poly
from .primer import (
    ApdBlockParams,
    RcGenSet,
    almost_desk_code,
    construct_primer_almost_balanced,
    construct_primer_general,
    construct_primer_rc,
    example1_code,
    example1_rc_set,
    primer_general_desk,
    redundancy,
    search_rc_generating,
    validate_rc_generating,
)

SCHEMA_VERSION = 1
CONSTRUCTIONS = ("bin-balanced", "gc-balanced", "primer-general", "primer-almost", "primer-rc", "dna-computing")


class CliError(Exception):
    pass


# I/O helpers

def write_atomic(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(obj, out: str | None) -> None:
    text = obj if isinstance(obj, str) else json.dumps(obj, indent=2, default=oracle._jsonable) + "\n"
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise CliError(f"file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}") from None


def run_config(args) -> dict:
    skip = {"func"}
    cfg = {k: v for k, v in vars(args).items() if k not in skip}
    cfg["version"] = __version__
    return cfg


def artifact(args, kind: str, body: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": kind, "run_config": run_config(args), **body}


def parse_poly(text: str, q: int) -> Poly:
    try:
        return Poly([int(x) for x in text.replace(" ", "").split(",") if x != ""], q)
    except ValueError:
        raise CliError(f"cannot parse polynomial {text!r}; use comma-separated coefficients") from None


def parse_symbols(text: str, q: int) -> np.ndarray:
    text = text.strip().upper()
    letters = {"A": 0, "T": 1, "C": 2, "G": 3}
    if q == 4 and text and set(text) <= set(letters):
        return np.array([letters[c] for c in text], dtype=np.uint8)
    try:
        w = np.array([int(c) for c in text], dtype=np.uint8)
    except ValueError:
        raise CliError(f"cannot parse word {text!r}") from None
    if w.size and w.max() >= q:
        raise CliError(f"symbol outside GF({q}) in {text!r}")
    return w


def code_descriptor(C: CyclicCode, shorten: int = 0) -> dict:
    d = C.descriptor()
    d["shorten"] = shorten
    return d


def code_from_descriptor(d: dict) -> tuple[CyclicCode, int]:
    try:
        C = code_from_generator(int(d["q"]), int(d["n"]), Poly(d["generator"], int(d["q"])))
    except KeyError as exc:
        raise CliError(f"code descriptor lacks field {exc.args[0]!r}") from None
    except ValueError as exc:
        raise CliError(f"invalid code descriptor: {exc}") from None
    if d.get("distance") is not None:
        C = C.with_distance(int(d["distance"]), d.get("distance_status", "designed"))
    return C, int(d.get("shorten", 0))


def load_code(path: str | None):
    if path is None:
        return None, 0
    d = load_json(path)
    return code_from_descriptor(d.get("code", d))


def load_rcset(path: str | None, q: int):
    if path is None:
        return None
    d = load_json(path)
    d = d.get("rcset", d)
    try:
        return RcGenSet.from_dict(d, q)
    except (KeyError, ValueError) as exc:
        raise CliError(f"invalid rc set file: {exc}") from None


# code build

def cmd_code_build(args):
    if args.family == "bch":
        C = bch_narrow_sense(args.m, args.d)
    elif args.family == "reversible-bch":
        C = reversible_bch(args.q, args.m, args.delta)
    else:
        if args.n is None or args.generator is None:
            raise CliError("from-generator needs --n and --generator")
        C = code_from_generator(args.q, args.n, parse_poly(args.generator, args.q))
    if args.verify:
        C = C.verified(budget=args.budget, seed=args.seed)
    contains_one, rev = code_properties(C)
    body = {"code": code_descriptor(C, args.shorten),
            "properties": {"contains_all_one": contains_one, "reversible": rev}}
    emit(artifact(args, "code", body), args.out)
    return 0


# construct / encode / decode

def _build(cfg: dict):
    """Rebuild a construction from its stored configuration."""
    name = cfg["construction"]
    code, shorten = (code_from_descriptor(cfg["code"]) if cfg.get("code") else (None, 0))
    if name == "bin-balanced":
        C = code or bch_narrow_sense(3, 3).verified()
        hstar = Poly(cfg["hstar"], 2) if cfg.get("hstar") else None
        return construct_bin_balanced(C, hstar, cfg.get("mode") or "encodable")
    if name == "gc-balanced":
        if code is None:
            return construct_gc_balanced(gc_desk_params())
        A = LinearEncoder(code, shorten)
        p = A.n - A.k
        B = LinearEncoder(code, shorten + p)
        M = cfg.get("M") or 2**B.k // (2**p * A.k)
        return construct_gc_balanced(GcEncoderParams(A, B, p, M))
    if name == "primer-general":
        prefix = cfg.get("prefix") or "ones"
        if code is None:
            params, B = primer_general_desk()
        else:
            B = LinearEncoder(code, shorten)
            params = ApdBlockParams(cfg.get("ell") or 8, cfg.get("r") or 2, B.n - B.k)
        return construct_primer_general(params, B, prefix)
    if name == "primer-almost":
        return construct_primer_almost_balanced(code or almost_desk_code())
    if name in ("primer-rc", "dna-computing"):
        C = code or example1_code()
        S = RcGenSet.from_dict(cfg["rcset"], C.q) if cfg.get("rcset") else None
        if name == "primer-rc":
            S = S or (example1_rc_set() if code is None else search_rc_generating(C, "rc"))
            return construct_primer_rc(C, S, cfg.get("max_m_degree"))
        S = S or search_rc_generating(C, "rc2")
        return construct_dna_computing(C, S, cfg.get("max_m_degree"))
    raise CliError(f"unknown construction {name!r}")


def _build_config(args) -> dict:
    code, shorten = load_code(args.code)
    cfg = {"construction": args.construction,
           "code": code_descriptor(code, shorten) if code is not None else None}
    for key in ("hstar", "mode", "prefix", "ell", "r", "M", "max_m_degree"):
        cfg[key] = getattr(args, key, None)
    if cfg["hstar"]:
        cfg["hstar"] = parse_poly(cfg["hstar"], 2).to_list()
    q = code.q if code is not None else 4
    S = load_rcset(getattr(args, "rcset", None), q)
    cfg["rcset"] = S.to_dict() if S is not None else None
    return cfg


def cmd_construct(args):
    cfg = _build_config(args)
    obj = _build(cfg)
    body = {"build": cfg, "metadata": obj.metadata()}
    if hasattr(obj, "words"):
        if args.max_words is not None and obj.size > args.max_words:
            raise CliError(f"codebook has {obj.size} words, above --max-words {args.max_words}")
        body["words"] = [render(w, obj.q) for w in obj.words]
    emit(artifact(args, "codebook", body), args.out)
    return 0


def _load_built(path: str):
    d = load_json(path)
    if "build" not in d:
        raise CliError(f"{path} is not a codebook file (no 'build' section)")
    return _build(d["build"]), d


def _parse_message(obj, name: str, text: str, index):
    if name == "bin-balanced":
        if obj.mode == "census":
            return int(text)
        return parse_symbols(text, 2)
    if name == "gc-balanced":
        if index is None:
            raise CliError("gc-balanced messages need --index i (1..M)")
        return parse_symbols(text, 2), int(index)
    if name == "primer-general":
        return tuple(int(x) for x in text.split(","))
    if name == "primer-almost":
        return int(text)
    if index is None:
        raise CliError(f"{name} messages need --index i (1..P)")
    return parse_symbols(text, obj.q), int(index)


def _format_message(name: str, msg) -> dict:
    if name in ("gc-balanced", "primer-rc", "dna-computing"):
        m, i = msg
        return {"message": "".join(str(int(x)) for x in m), "index": int(i)}
    if name == "primer-general":
        return {"message": ",".join(str(int(x)) for x in msg)}
    if isinstance(msg, (int, np.integer)):
        return {"message": str(int(msg))}
    return {"message": "".join(str(int(x)) for x in msg)}


def cmd_encode(args):
    obj, d = _load_built(args.codebook)
    name = d["build"]["construction"]
    msg = _parse_message(obj, name, args.message, args.index)
    try:
        w = obj.encode(*msg) if name == "gc-balanced" else obj.encode(msg)
    except ValueError as exc:
        raise CliError(f"cannot encode: {exc}") from None
    print(render(w, obj.q))
    return 0


def cmd_decode(args):
    obj, d = _load_built(args.codebook)
    name = d["build"]["construction"]
    w = parse_symbols(args.word, obj.q)
    try:
        msg = obj.decode(w)
    except DecodeError as exc:
        raise CliError(f"decode failed: {exc}") from None
    out = _format_message(name, msg)
    print(out["message"] if "index" not in out else f"{out['message']} {out['index']}")
    return 0


# rcgen

def cmd_rcgen(args):
    code, _ = load_code(args.code)
    C = code or example1_code()
    if args.action == "validate":
        S = load_rcset(args.rcset, C.q)
        if S is None:
            if code is not None:
                raise CliError("validate needs --rcset when --code is given")
            S = example1_rc_set()
        if args.flavor:
            S = RcGenSet(S.hstar, S.p, args.flavor)
        rep = validate_rc_generating(C, S)
        emit(artifact(args, "rc-report", {"report": rep.to_dict(), "rcset": S.to_dict()}), args.out)
        return 0 if rep.ok else 1
    try:
        S = search_rc_generating(C, args.flavor or "rc")
    except ValueError as exc:
        raise CliError(str(exc)) from None
    emit(artifact(args, "rcset", {"rcset": S.to_dict(), "code": code_descriptor(C)}), args.out)
    return 0


# verify

def _load_words(path: str):
    if path.endswith(".json"):
        d = load_json(path)
        if "words" not in d:
            raise CliError(f"{path} holds no word list")
        return oracle.as_matrix(d["words"]), int(d.get("metadata", {}).get("q", 0)) or None
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith(">")]
    if lines and lines[0].startswith("index,"):
        lines = [ln.split(",")[1] for ln in lines[1:]]
    return oracle.as_matrix(lines), None


def cmd_verify(args):
    kw = {"budget": args.budget, "seed": args.seed, "trials": args.trials}
    prop = args.property
    if prop == "distance" and args.code:
        C, _ = load_code(args.code)
        d, mode = oracle.min_distance_linear(C.generator_matrix, C.q, args.budget, args.seed)
        ok = args.d is None or d >= args.d
        rep = oracle.VerificationReport(
            "distance", ("pass" if mode == "exhaustive" else "sampled-pass") if ok else "fail",
            None if ok else {"min_weight": d}, C.q**C.k if mode == "exhaustive" else 0,
            "exhaustive" if mode == "exhaustive" else "sampled",
            args.seed if mode != "exhaustive" else None, None, {"d": d},
        )
    else:
        if not args.input:
            raise CliError("verify needs --input (codebook JSON or word list)")
        X, q = _load_words(args.input)
        if prop == "distance":
            if args.d is None:
                raise CliError("verify distance needs --d")
            rep = oracle.verify_distance(X, args.d, mode=args.mode, **kw)
        elif prop == "wmu":
            rep = oracle.verify_wmu(X, args.kappa, mode=args.mode, **kw)
        elif prop == "apd":
            if args.f is None:
                raise CliError("verify apd needs --f")
            rep = oracle.verify_apd(X, args.f, mode=args.mode, q=q, **kw)
        elif prop == "balance":
            rep = oracle.verify_balance(X, args.balance_mode, q=q)
        elif prop == "revdist":
            if args.d is None:
                raise CliError("verify revdist needs --d")
            rep = oracle.verify_reverse_distances(X, args.d, mode=args.mode, **kw)
        elif prop == "runs":
            r = oracle.max_run(X)
            ok = args.max_run is None or r <= args.max_run
            rep = oracle.VerificationReport("max-run", "pass" if ok else "fail", None if ok else {"max_run": r},
                                            X.size, detail={"max_run": r})
        else:  # census
            count, sizes = oracle.cyclic_class_census(X)
            rep = oracle.VerificationReport("census", "pass", work=X.size,
                                            detail={"classes": count, "orbit_sizes": list(sizes)})
    emit(artifact(args, "verification", {"report": rep.to_dict()}), args.out)
    return 0 if rep.ok else 1


# export

def cmd_export(args):
    d = load_json(args.input)
    if "words" not in d:
        raise CliError(f"{args.input} holds no word list")
    q = int(d.get("metadata", {}).get("q", 4))
    X = oracle.as_matrix(d["words"])
    emit(export_words(X, q, args.format), args.out)
    return 0


# demo

def cmd_demo(args):
    C = example1_code()
    t_d, mode = oracle.min_distance_linear(C.generator_matrix, 4)
    contains_one, rev = code_properties(C)
    S = example1_rc_set()
    rep = validate_rc_generating(C, S)
    P = construct_primer_rc(C, S)
    size = P.size
    red = redundancy(C.n, size, 4)
    bound = (t_d + 1) * math.log(C.n + 1, 4)
    sub = construct_primer_rc(C, S, max_m_degree=2).words
    rows = [
        ("code", f"[{C.n},{C.k},{t_d}]_4 ({mode} census)"),
        ("g self-reciprocal", rev),
        ("g(1) != 0", contains_one),
        ("rc-generating", rep.ok),
        ("k*", P.k_star),
        ("P", S.P),
        ("size", size),
        (">= 2^14", size >= 2**14),
        ("redundancy", f"{red:.3f}"),
        ("(d+1) log4(n+1)", f"{bound:g}"),
        ("redundancy bound holds", red <= bound),
        ("sub-codebook (deg m < 2)", len(sub)),
        ("  min distance", oracle.min_distance(sub)[0]),
        ("  9-WMU", oracle.verify_wmu(sub, 9).verdict),
        ("  9-APD", oracle.verify_apd(sub, 9).verdict),
    ]
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        v = str(v).lower() if isinstance(v, bool) else v
        print(f"{k:<{width}}  {v}")
    return 0


# parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="primercodes", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, seed=True):
        p.add_argument("-o", "--out", help="output file (default: stdout)")
        if seed:
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--budget", type=int, default=oracle.BUDGET, help="exhaustive-scan budget")

    code = sub.add_parser("code", help="build cyclic codes")
    csub = code.add_subparsers(dest="action", required=True)
    b = csub.add_parser("build", help="build a code descriptor")
    b.add_argument("family", choices=("bch", "reversible-bch", "from-generator"))
    b.add_argument("--q", type=int, default=2, choices=(2, 4))
    b.add_argument("--m", type=int)
    b.add_argument("--d", type=int, help="designed distance (bch)")
    b.add_argument("--delta", type=int, help="designed distance (reversible-bch)")
    b.add_argument("--n", type=int)
    b.add_argument("--generator", help="ascending coefficients, comma separated")
    b.add_argument("--shorten", type=int, default=0)
    b.add_argument("--verify", action="store_true", help="attach the exact distance when enumerable")
    common(b)
    b.set_defaults(func=cmd_code_build)

    c = sub.add_parser("construct", help="run a construction and write the codebook")
    c.add_argument("construction", choices=CONSTRUCTIONS)
    c.add_argument("--code", help="code descriptor JSON (default: the desk instance)")
    c.add_argument("--rcset", help="rc set JSON (primer-rc, dna-computing)")
    c.add_argument("--hstar", help="representative-selecting h* for bin-balanced")
    c.add_argument("--mode", choices=("encodable", "census"), help="bin-balanced representative mode")
    c.add_argument("--prefix", choices=("ones", "zeros"), help="primer-general marker: 0 1^ell or 0^ell 1")
    c.add_argument("--ell", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--M", type=int)
    c.add_argument("--max-m-degree", type=int, dest="max_m_degree")
    c.add_argument("--max-words", type=int, default=1 << 20)
    common(c)
    c.set_defaults(func=cmd_construct)

    for name, fn in (("encode", cmd_encode), ("decode", cmd_decode)):
        p = sub.add_parser(name, help=f"{name} with a stored codebook")
        p.add_argument("construction", choices=CONSTRUCTIONS)
        p.add_argument("--codebook", required=True, help="codebook JSON written by construct")
        if name == "encode":
            p.add_argument("--message", required=True)
            p.add_argument("--index", type=int, help="i for (m, i) messages")
        else:
            p.add_argument("--word", required=True)
        p.set_defaults(func=fn)

    r = sub.add_parser("rcgen", help="validate or search rc-generating sets")
    r.add_argument("action", choices=("validate", "search"))
    r.add_argument("--code")
    r.add_argument("--rcset")
    r.add_argument("--flavor", choices=("rc", "rc2"))
    common(r, seed=False)
    r.set_defaults(func=cmd_rcgen)

    v = sub.add_parser("verify", help="run an oracle; exit status 0 iff it passes")
    v.add_argument("property", choices=("distance", "wmu", "apd", "balance", "revdist", "runs", "census"))
    v.add_argument("--input", help="codebook JSON, plain word list, CSV or FASTA")
    v.add_argument("--code", help="code descriptor (distance of the whole code)")
    v.add_argument("--kappa", type=int, default=1)
    v.add_argument("--f", type=int)
    v.add_argument("--d", type=int)
    v.add_argument("--max-run", type=int, dest="max_run")
    v.add_argument("--balance-mode", choices=("balanced", "gc", "almost"), default="balanced")
    v.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto")
    v.add_argument("--trials", type=int, default=10_000)
    common(v)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="export a codebook as lines, CSV or FASTA")
    e.add_argument("--input", required=True)
    e.add_argument("--format", choices=("lines", "csv", "fasta"), default="lines")
    common(e, seed=False)
    e.set_defaults(func=cmd_export)

    d = sub.add_parser("demo", help="worked examples")
    d.add_argument("name", choices=("example1",))
    d.set_defaults(func=cmd_demo)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "mode", None) == "sampled":
        args.budget = 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
