"""Command-line front end.

Exit codes: 0 pass, 1 axiom failure, 2 input error, 3 resource cap.
JSON goes to stdout, a human-readable summary to stderr.
"""
from __future__ import annotations

import argparse
import os
import sys
import time

from .axioms import DEFAULT_MULTI_CAP, AxiomId, check_axiom
from .core import CapExceeded, DCAError, SetFunction, lift, mask_of
from .duality import (
    DualityConfig,
    ExchangeContext,
    HypothesisViolated,
    check_conjugate_submodular,
    conjugate,
    verify_lemma_g1g2,
)
from .family import FamilyAxiomId, check_family
from .generators import (
    DEFAULT_GRID,
    CorpusSpec,
    concave_cardinality_valuation,
    corpus_array,
    uniform_matroid_bases,
    weighted_matroid_valuation,
)
from .io import ParseError, decode_value, dumps, family_to_json, function_to_json, load_family, load_function

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def _floats(text: str) -> list[float]:
    out = []
    for token in (t.strip() for t in text.split(",")):
        if not token:
            continue
        try:
            out.append(decode_value(token) if token.startswith("-inf") else decode_value(float(token)))
        except ValueError as exc:
            raise ParseError(f"bad number list {text!r}") from exc
    return out


def _elements(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad element list {text!r}") from exc


def _emit(doc) -> None:
    sys.stdout.write(dumps(doc) + "\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _default_threads() -> int:
    return os.cpu_count() or 1


def cmd_check(args) -> int:
    f = load_function(args.file)
    try:
        axioms = [AxiomId(a) for a in args.axioms]
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    reports = [check_axiom(f, a, threads=args.threads, multi_cap=args.multi_cap) for a in axioms]
    for r in reports:
        _say(f"{r.axiom}: {'PASS' if r.passed else 'FAIL'} ({r.pairs_examined} tuples, {r.elapsed:.3f}s)")
    passed = all(r.passed for r in reports)
    _emit({"passed": passed, "reports": [r.to_json() for r in reports]})
    return EXIT_PASS if passed else EXIT_FAIL


def cmd_family_check(args) -> int:
    F = load_family(args.file)
    try:
        axioms = [FamilyAxiomId(a) for a in args.axioms]
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    reports = [check_family(F, a, threads=args.threads, multi_cap=args.multi_cap) for a in axioms]
    for r in reports:
        _say(f"{r.axiom}: {'PASS' if r.passed else 'FAIL'}")
    passed = all(r.passed for r in reports)
    _emit({"passed": passed, "reports": [r.to_json() for r in reports]})
    return EXIT_PASS if passed else EXIT_FAIL


def cmd_suite(args) -> int:
    from .suite import run_suite

    grid = tuple(_floats(args.grid)) if args.grid else DEFAULT_GRID
    if args.random is not None:
        spec = CorpusSpec(args.n, grid, mode="random", count=args.random, seed=args.seed)
    else:
        spec = CorpusSpec(args.n, grid, mode="exhaustive")
    start = time.perf_counter()
    tables = corpus_array(spec)
    run = run_suite(tables, threads=args.threads)
    for r in run.results:
        _say(f"{r.theorem:7s} {'PASS' if r.passed else 'FAIL'}  checked={r.instances_checked} "
             f"pos={r.positives} neg={r.negatives} discrepancies={len(r.discrepancies)}")
    _say(f"{tables.shape[0]} instances in {time.perf_counter() - start:.2f}s")
    _emit(run.to_json())
    return EXIT_PASS if run.passed else EXIT_FAIL


def cmd_lift(args) -> int:
    f = load_function(args.file)
    lifted, spec = lift(f, args.s)
    _say(f"r={spec.r} r'={spec.r_min} s={spec.s} aux={spec.aux}")
    _emit({"lift": {"r": spec.r, "r_min": spec.r_min, "s": spec.s, "aux": spec.aux},
           "function": function_to_json(lifted)})
    return EXIT_PASS


def cmd_conjugate(args) -> int:
    f = load_function(args.file)
    p = _floats(args.p)
    try:
        value = conjugate(f, p)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    _say(f"g(p) = {value}")
    _emit({"p": p, "value": value})
    return EXIT_PASS


def cmd_duality(args) -> int:
    f = load_function(args.file)
    try:
        ctx = ExchangeContext(mask_of(_elements(args.X), f.n), mask_of(_elements(args.Y), f.n),
                              mask_of(_elements(args.I), f.n))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    cfg = DualityConfig(q_samples=args.samples, pair_samples=args.pairs, seed=args.seed)
    try:
        lemma = verify_lemma_g1g2(f, ctx, cfg)
        sub = check_conjugate_submodular(f, cfg)
    except HypothesisViolated as exc:
        _say(f"hypothesis violated: {exc}")
        _emit({"error": "HypothesisViolated", "message": str(exc)})
        return EXIT_FAIL
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    ok = lemma.passed and sub.passed
    _say(f"lemma: min slack {lemma.min_slack} over {lemma.samples} q; "
         f"submodularity: {sub.violations} violations over {sub.samples} pairs")
    _emit({"lemma": lemma.to_json(), "submodularity": sub.to_json(), "passed": ok})
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_generate(args) -> int:
    if args.kind == "corpus":
        grid = tuple(_floats(args.grid)) if args.grid else DEFAULT_GRID
        if args.random is not None:
            spec = CorpusSpec(args.n, grid, mode="random", count=args.random, seed=args.seed)
        else:
            spec = CorpusSpec(args.n, grid)
        doc = {"n": args.n, "functions": [function_to_json(SetFunction(args.n, row))
                                           for row in corpus_array(spec)]}
    elif args.kind == "weighted-matroid":
        if args.rank is None:
            raise ParseError("--rank is required for weighted-matroid")
        w = _floats(args.weights) if args.weights else [0.0] * args.n
        B = uniform_matroid_bases(args.rank, args.n)
        doc = function_to_json(weighted_matroid_valuation(B, w))
        doc["bases"] = family_to_json(B)["members"]
    else:
        if not args.phi:
            raise ParseError("--phi is required for cardinality")
        w = _floats(args.weights) if args.weights else None
        doc = function_to_json(concave_cardinality_valuation(args.n, _floats(args.phi), w))
    text = dumps(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        _say(f"wrote {args.out}")
    else:
        sys.stdout.write(text + "\n")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mnat", description="Exchange-axiom checker for set functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def threads(p):
        p.add_argument("--threads", type=int, default=_default_threads())

    p = sub.add_parser("check", help="check function axioms")
    p.add_argument("file")
    p.add_argument("axioms", nargs="+", metavar="AXIOM", help=", ".join(a.value for a in AxiomId))
    p.add_argument("--multi-cap", type=int, default=DEFAULT_MULTI_CAP)
    threads(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("family-check", help="check set-family axioms")
    p.add_argument("file")
    p.add_argument("axioms", nargs="+", metavar="AXIOM", help=", ".join(a.value for a in FamilyAxiomId))
    p.add_argument("--multi-cap", type=int, default=DEFAULT_MULTI_CAP)
    threads(p)
    p.set_defaults(func=cmd_family_check)

    p = sub.add_parser("suite", help="run the theorem-equivalence suite on a corpus")
    p.add_argument("--n", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", type=int, metavar="COUNT")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid", help="comma-separated values, e.g. -inf,0,1,2")
    threads(p)
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("lift", help="equi-cardinal lifting")
    p.add_argument("file")
    p.add_argument("--s", type=int, default=None)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("conjugate", help="evaluate g(p) = max_Z f(Z) - p(Z)")
    p.add_argument("file")
    p.add_argument("--p", required=True)
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("duality", help="sampled conjugate inequalities for one exchange context")
    p.add_argument("file")
    p.add_argument("--X", required=True)
    p.add_argument("--Y", required=True)
    p.add_argument("--I", default="")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--pairs", type=int, default=500)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("generate", help="write a generated instance or corpus")
    p.add_argument("--kind", choices=("corpus", "weighted-matroid", "cardinality"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--random", type=int, metavar="COUNT")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid")
    p.add_argument("--rank", type=int)
    p.add_argument("--weights")
    p.add_argument("--phi")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        _say(f"resource cap: {exc}")
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_CAP
    except (ParseError, OSError, DCAError, ValueError) as exc:
        _say(f"input error: {exc}")
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
