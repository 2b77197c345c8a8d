"""Command-line entry point.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage or budget error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Optional, Sequence

from . import cache as cache_mod
from .complexes import (
    DEFAULT_MAX_FACES,
    DEFAULT_MAX_NODES,
    compare_readings,
    diameter_count,
    enumerate_facets,
    enumerate_symmetric_facets,
    fh_vector,
    hilbert_series,
)
from .counting import bounds_report, typeA_count
from .errors import BudgetExceeded, VerificationError
from .gale import CyclicSpec, cyclic_facets, verify_cyclic_iso
from .groebner import buchberger, check_dreitenoere, minors_ideal
from .homology import is_homology_sphere, sphere_profile
from .monomials import mono_str, sr_generators, support, verify_nab
from .polygon import Mode, ground_set

log = logging.getLogger("bcross")


class UsageError(Exception):
    pass


def _complex(args):
    ground = ground_set(args.mode, args.n, args.k)
    if getattr(args, "reading", "symmetrized") != "symmetrized":
        return enumerate_facets(ground, reading=args.reading, check=False,
                                max_nodes=args.max_nodes)
    directory = None if args.no_cache else cache_mod.cache_dir(args.cache_dir)
    return cache_mod.facets_cached(ground, directory, use_cache=not args.no_cache,
                                   max_nodes=args.max_nodes)


def cmd_facets(args):
    if args.symmetric:
        if Mode.parse(args.mode) is not Mode.BSYM:
            raise UsageError("--symmetric needs --mode BSym")
        cx = enumerate_symmetric_facets(2 * args.n, args.k, max_nodes=args.max_nodes)
        out = cache_mod.complex_to_json(cx)
        out["diameters"] = [diameter_count(cx.ground, f) for f in cx.facets]
    else:
        cx = _complex(args)
        out = cache_mod.complex_to_json(cx)
        out["reading"] = cx.reading
    out.update(count=len(cx), dim=cx.dim, pure=cx.pure)
    return out, 0


def cmd_fvector(args):
    cx = _complex(args)
    fh = fh_vector(cx, args.max_faces)
    return {"mode": cx.ground.mode.value, "n": args.n, "k": args.k, "f": list(fh.f),
            "h": list(fh.h), "symmetric": fh.symmetric, "unimodal": fh.unimodal,
            "hilbert_series": hilbert_series(fh.h)}, 0


def _policy(text: str):
    if text in ("all", "none", "auto"):
        return text
    if text.startswith("sample"):
        m = int(text.split(":", 1)[1]) if ":" in text else 50
        return ("sample", m)
    raise UsageError(f"bad link policy {text!r}")


def cmd_homology(args):
    policy = _policy(args.link_policy)
    cx = _complex(args)
    rep = is_homology_sphere(cx, policy, seed=args.seed,
                             max_faces=args.max_faces)
    ok = rep.passed and rep.betti == sphere_profile(cx.dim)
    return {"mode": cx.ground.mode.value, "n": args.n, "k": args.k, "dim": rep.dim,
            "betti": rep.betti[1:], "reduced_betti_from_minus1": rep.betti,
            "policy": rep.policy, "seed": rep.seed, "faces_checked": rep.faces_checked,
            "failures": [list(f) for f in rep.failures], "sphere": ok}, 0 if ok else 1


def cmd_count(args):
    if Mode.parse(args.mode) is Mode.A:
        out = {"mode": "A", "n": args.n, "k": args.k, "typeA_count": typeA_count(args.n, args.k)}
        if args.enumerate:
            out["enumerated"] = len(_complex(args))
            return out, 0 if out["enumerated"] == out["typeA_count"] else 1
        return out, 0
    rep = bounds_report(args.n, args.k)
    if args.enumerate:
        args.mode = "B"
        rep.enumerated = len(_complex(args))
    d = rep.to_dict()
    return d, 0 if rep.sandwich_ok in (None, True) else 1


def cmd_sr_ideal(args):
    gens = sr_generators(args.n, args.k)
    return {"n": args.n, "k": args.k, "count": len(gens),
            "generators": [[list(p) for p in support(g, args.n)] for g in gens],
            "text": [mono_str(g, args.n) for g in gens]}, 0


def cmd_lm_check(args):
    rep = verify_nab(args.n, args.k, max_size=args.max_minor)
    return {"n": args.n, "k": args.k, "checked": rep.checked, "passed": rep.passed,
            "counterexamples": rep.counterexamples}, 0 if rep.passed else 1


def cmd_groebner(args):
    try:
        rep = check_dreitenoere(args.n, args.k, max_seconds=args.max_seconds,
                                max_pairs=args.max_pairs, strict=False)
    except BudgetExceeded as exc:
        if args.allow_skip:
            return {"n": args.n, "k": args.k, "status": "skipped-budget", "reason": str(exc)}, 0
        raise
    out = rep.to_dict()
    if args.dump:
        G = buchberger(minors_ideal(args.n, args.k).gens, max_pairs=args.max_pairs,
                       max_seconds=args.max_seconds, check_input=False)
        out["basis"] = G.to_json()
    return out, 0 if rep.agree and rep.containment else 1


def cmd_gale(args):
    facets = cyclic_facets(CyclicSpec(args.d, args.N))
    return {"d": args.d, "N": args.N, "count": len(facets),
            "facets": [list(f) for f in facets]}, 0


def cmd_cyclic_iso(args):
    if args.n < 3:
        raise UsageError("cyclic-iso needs n >= 3")
    args.mode, args.k, args.reading = Mode.B, args.n - 2, "symmetrized"
    rep = verify_cyclic_iso(args.n, reverse=args.reverse, cx=_complex(args))
    return {"n": rep.n, "reverse": rep.reverse, "facets_typeb": rep.facets_typeb,
            "facets_cyclic": rep.facets_cyclic, "identical": rep.identical,
            "nonfaces_ok": rep.nonfaces_ok, "passed": rep.passed}, 0 if rep.passed else 1


def cmd_readings(args):
    rep = compare_readings(args.n, args.k, max_nodes=args.max_nodes)
    return rep, 0


def cmd_verify(args):
    from .verify import Context, run_suite, suite_exit_code
    ctx = Context(cache=None if args.no_cache else str(cache_mod.cache_dir(args.cache_dir)),
                  seed=args.seed, stretch_seconds=args.max_seconds or 300.0)
    only = set(args.only.split(",")) if args.only else None
    outcomes = run_suite(args.suite, ctx, only)
    for o in outcomes:
        print(o.line(), file=sys.stderr)
    code = suite_exit_code(outcomes, args.allow_skip)
    return {"suite": args.suite, "seed": args.seed, "exit_code": code,
            "items": [o.to_dict() for o in outcomes]}, code


def _write(out, args):
    fmt = args.format
    if fmt == "json":
        text = json.dumps(out, indent=None if args.compact else 1, default=str) + "\n"
    elif fmt == "csv":
        if args.command != "count":
            raise UsageError("csv output is limited to the count command")
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(out))
        w.writeheader()
        w.writerow(out)
        text = buf.getvalue()
    else:
        text = "\n".join(f"{k}: {v}" for k, v in out.items()) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--output", "-o")
    common.add_argument("--compact", action="store_true", help="single-line JSON")
    common.add_argument("--cache-dir", help="defaults to $BCROSS_CACHE or ./cache")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    common.add_argument("--max-faces", type=int, default=DEFAULT_MAX_FACES)
    common.add_argument("--max-pairs", type=int, default=100_000)
    common.add_argument("--max-seconds", type=float)
    common.add_argument("--seed", type=int)
    common.add_argument("--allow-skip", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true")

    nk = argparse.ArgumentParser(add_help=False)
    nk.add_argument("--n", type=int, required=True)
    nk.add_argument("--k", type=int, required=True)

    mode = argparse.ArgumentParser(add_help=False)
    mode.add_argument("--mode", default="B", type=Mode.parse,
                      help="A (n-gon), B (classes of the 2n-gon) or BSym (the 2n-gon)")
    mode.add_argument("--reading", choices=["symmetrized", "pairwise"], default="symmetrized")

    p = argparse.ArgumentParser(prog="bcross", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("facets", parents=[common, nk, mode], help="list facets")
    s.add_argument("--symmetric", action="store_true",
                   help="with --mode BSym: only rotation-invariant facets")
    s.set_defaults(func=cmd_facets)
    sub.add_parser("fvector", parents=[common, nk, mode]).set_defaults(func=cmd_fvector)
    s = sub.add_parser("homology", parents=[common, nk, mode])
    s.add_argument("--link-policy", default="auto", help="all, none, auto or sample:M")
    s.set_defaults(func=cmd_homology)
    s = sub.add_parser("count", parents=[common, nk, mode])
    s.add_argument("--enumerate", action="store_true")
    s.set_defaults(func=cmd_count)
    sub.add_parser("sr-ideal", parents=[common, nk]).set_defaults(func=cmd_sr_ideal)
    s = sub.add_parser("lm-check", parents=[common, nk])
    s.add_argument("--max-minor", type=int, default=4)
    s.set_defaults(func=cmd_lm_check)
    s = sub.add_parser("groebner", parents=[common, nk])
    s.add_argument("--dump", action="store_true", help="include the reduced basis")
    s.set_defaults(func=cmd_groebner)
    s = sub.add_parser("gale", parents=[common])
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--N", type=int, required=True)
    s.set_defaults(func=cmd_gale)
    s = sub.add_parser("cyclic-iso", parents=[common])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--reverse", action="store_true")
    s.set_defaults(func=cmd_cyclic_iso)
    sub.add_parser("readings", parents=[common, nk]).set_defaults(func=cmd_readings)
    s = sub.add_parser("verify", parents=[common])
    s.add_argument("--suite", default="small", choices=["small", "quick"])
    s.add_argument("--only", help="comma-separated item ids")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        out, code = args.func(args)
        _write(out, args)
        return code
    except (UsageError, ValueError) as exc:
        print(f"bcross: error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"bcross: budget exceeded: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"bcross: verification failed: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
