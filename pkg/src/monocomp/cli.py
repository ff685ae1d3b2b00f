"""Command-line front end tying generators, checkers and searches together.

All machine output is canonical JSON on stdout (sorted keys, no whitespace,
numbers are ints or exact "p/q" strings), so identical invocations produce
identical bytes.  Wall-clock timings and provenance go to the run manifest
file instead.

Exit codes: 0 done / holds / not applicable, 1 counterexample or violated
conclusion, 2 bad input or unmet precondition, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__
from .analysis import (
    check_additive_theorem,
    check_conjecture_instance,
    check_corollary,
    check_tetel_instance,
    check_theorem_two_colors,
    main_lemma_report,
    parse_general_json,
    stability_report,
)
from .bigraph import (
    GraphError,
    dumps_canonical,
    graph_json,
    parse_graph_json,
)
from .constructions import (
    ConstructionSpec,
    InvalidSpec,
    construction_certificate,
)
from .search import (
    CHECKERS,
    PreconditionViolated,
    SearchConfig,
    alpha_frontier,
    exhaustive_verify,
    exists_coloring_below,
    min_max_mono_component,
    random_search,
)

_EXIT_OK = 0
_EXIT_COUNTEREXAMPLE = 1
_EXIT_INPUT = 2
_EXIT_BUDGET = 3


def _digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()


def _write_manifest(path: str, argv, digest: str, seed, summary: dict, elapsed: float):
    manifest = {
        "argv": list(argv),
        "input_digest": digest,
        "seed": seed,
        "version": __version__,
        "timings": {"elapsed_us": int(elapsed * 1_000_000)},
        "outcome": summary,
    }
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(manifest, sort_keys=True, indent=2))
        fh.write("\n")


def _load_host(source: str):
    """Load a (host, coloring-or-None) pair from a file or a gen: spec.

    Spec strings look like "gen:circulant:m=8,n=8,d=2" or
    "gen:lower-bound:r=2,t1=1,t2=1"; "gen:complete:m=4,n=4" is sugar for a
    circulant with d=0.
    """
    if source.startswith("gen:"):
        parts = source.split(":")
        if len(parts) != 3:
            raise InvalidSpec(f"bad generator spec {source!r}")
        variant = parts[1]
        params = {}
        if parts[2]:
            for item in parts[2].split(","):
                key, _, value = item.partition("=")
                params[key.strip()] = int(value)
        if variant == "complete":
            variant, params = "circulant", {**params, "d": 0}
        try:
            host, col = ConstructionSpec(variant=variant, **params).build()
        except TypeError as exc:
            raise InvalidSpec(f"bad generator parameters in {source!r}: {exc}") from exc
        return host, col, dumps_canonical(graph_json(host, col))
    with open(source, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, dict) and "graph" in data:
        data = data["graph"]
    host, col = parse_graph_json(data)
    return host, col, dumps_canonical(data)


def cmd_gen(args) -> tuple[dict, int, str, dict]:
    params = {}
    if args.variant == "cyclic":
        params["k"] = args.k
    elif args.variant in ("lower-bound", "double-star-gap"):
        params.update(r=args.r, t1=args.t1, t2=args.t2)
    elif args.variant in ("circulant", "complete"):
        params.update(m=args.m, n=args.n)
        params["d"] = 0 if args.variant == "complete" else args.d
    variant = "circulant" if args.variant == "complete" else args.variant
    host, col = ConstructionSpec(variant=variant, **params).build()
    cert = construction_certificate(host, col)
    graph_doc = graph_json(host, col)
    doc = {"graph": graph_doc, "certificate": cert.to_json_dict()}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps_canonical(graph_doc))
            fh.write("\n")
    digest = _digest(dumps_canonical(graph_doc))
    return doc, _EXIT_OK, digest, {"variant": variant, **params}


def _single_class(args):
    """A (class graph, r) pair for the per-class lemma reports."""
    host, col, text = _load_host(args.file)
    if col is None:
        g = host
        r = args.r if args.r else 2
    else:
        if not (0 <= args.color < col.r):
            raise GraphError(f"--color must be in [0, {col.r})")
        g = col.classes[args.color]
        r = args.r if args.r else col.r
    return g, r, text


def cmd_analyze(args) -> tuple[dict, int, str, dict]:
    if args.check == "corollary":
        with open(args.file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if isinstance(data, dict) and "m" in data:
            raise GraphError(
                "corollary expects a general graph file {n, r, edges}, "
                "not a bipartite one"
            )
        gg = parse_general_json(data)
        text = dumps_canonical(data)
        verdict = check_corollary(gg, args.r or gg.r, variant=args.variant)
        doc = verdict.to_json_dict()
        code = _EXIT_OK if (not verdict.applicable or verdict.holds) else _EXIT_COUNTEREXAMPLE
        return doc, code, _digest(text), {"check": args.check, "holds": verdict.holds}

    if args.check in ("stability", "mainlemma"):
        g, r, text = _single_class(args)
        if args.check == "stability":
            report = stability_report(g, r)
            violated = not report.dichotomy
        else:
            report = main_lemma_report(g, r)
            violated = (
                report.precondition_ok
                and report.hypothesis_ok
                and not report.all_properties
            )
        doc = report.to_json_dict()
        code = _EXIT_COUNTEREXAMPLE if violated else _EXIT_OK
        return doc, code, _digest(text), {"check": args.check, "violated": violated}

    host, col, text = _load_host(args.file)
    if col is None:
        raise GraphError(f"--check {args.check} needs a colored graph")
    if args.check == "r2":
        verdict = check_theorem_two_colors(host, col)
    elif args.check == "conjecture":
        verdict = check_conjecture_instance(
            host, col, args.r or col.r, refined=args.refined
        )
    elif args.check == "tetel":
        verdict = check_tetel_instance(host, col, args.r or col.r)
    elif args.check == "additive":
        verdict = check_additive_theorem(host, col)
    else:
        raise GraphError(f"unknown check {args.check!r}")
    doc = verdict.to_json_dict()
    code = _EXIT_OK if (not verdict.applicable or verdict.holds) else _EXIT_COUNTEREXAMPLE
    return doc, code, _digest(text), {"check": args.check, "holds": verdict.holds}


def _outcome_exit(kind: str) -> int:
    if kind == "Counterexample":
        return _EXIT_COUNTEREXAMPLE
    if kind == "BudgetExhausted":
        return _EXIT_BUDGET
    return _EXIT_OK


def cmd_search(args) -> tuple[dict, int, str, dict]:
    if args.mode == "frontier":
        return _run_frontier(args)
    if not args.host:
        raise GraphError(f"--mode {args.mode} needs --host")
    host, _col, text = _load_host(args.host)
    cfg = SearchConfig(
        mode="random" if args.mode == "random" else "exhaustive",
        seed=args.seed,
        canonicalize_colors=not args.no_canonicalize,
        split_depth=args.split_depth,
        budget=args.budget,
    )
    target = args.target
    if args.mode == "minmax":
        out = min_max_mono_component(host, args.r, cfg, workers=args.workers)
    elif args.mode == "below":
        if target is None:
            raise GraphError("--mode below needs --target")
        out = exists_coloring_below(host, args.r, target, cfg, workers=args.workers)
    elif args.mode in ("verify", "random"):
        checker_cls = CHECKERS.get(args.check)
        if checker_cls is None:
            raise GraphError(f"unknown checker {args.check!r}")
        checker = checker_cls()
        if args.mode == "verify":
            out = exhaustive_verify(
                host, args.r, target, checker, cfg, workers=args.workers
            )
        else:
            err = checker.precondition_error(host, args.r)
            if err:
                raise PreconditionViolated(err)
            out = random_search(
                host, args.r, target, checker, cfg, workers=args.workers
            )
    else:
        raise GraphError(f"unknown search mode {args.mode!r}")
    doc = out.to_json_dict()
    summary = {"mode": args.mode, "kind": out.kind, "examined": out.examined}
    return doc, _outcome_exit(out.kind), _digest(text), summary


def _parse_alphas(text: str):
    from fractions import Fraction

    out = []
    for item in text.split(","):
        item = item.strip()
        if item:
            out.append(Fraction(item))
    return out


def _run_frontier(args) -> tuple[dict, int, str, dict]:
    if args.total_n is None:
        raise GraphError("frontier scan needs --total-n")
    alphas = _parse_alphas(args.alphas or "")
    cfg = SearchConfig(seed=args.seed, budget=args.budget, split_depth=args.split_depth)
    table = alpha_frontier(args.total_n, alphas, r=args.r, cfg=cfg, workers=args.workers)
    params = {"total_n": args.total_n, "alphas": [str(a) for a in alphas], "r": args.r}
    digest = _digest(dumps_canonical(params))
    return table, _EXIT_OK, digest, {"rows": len(table["rows"])}


def _add_search_options(sub, with_host: bool = True):
    if with_host:
        sub.add_argument("--host", help="graph file or gen:<spec>")
    sub.add_argument("--r", type=int, default=2, help="number of colors")
    sub.add_argument("--target", help="rational target like 4 or 7/2")
    sub.add_argument("--check", default="gy1", choices=sorted(CHECKERS))
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--split-depth", type=int, default=4, dest="split_depth")
    sub.add_argument("--budget", type=int, default=1 << 62)
    sub.add_argument(
        "--workers",
        type=int,
        default=int(os.environ.get("MONO_WORKERS", "1")),
        help="parallel workers (default env MONO_WORKERS or 1)",
    )
    sub.add_argument("--no-canonicalize", action="store_true")
    sub.add_argument("--total-n", type=int, default=None, dest="total_n")
    sub.add_argument("--alphas", default="", help="comma-separated rationals")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monocomp",
        description="Monochromatic components of r-edge-colored bipartite graphs:"
        " generators, theorem checkers, adversarial search.",
    )
    parser.add_argument(
        "--manifest",
        default="mono-manifest.json",
        help="run manifest path (use /dev/null to discard)",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    def add_sub(name, **kwargs):
        sub = subs.add_parser(name, **kwargs)
        # accepted after the subcommand too; only overrides when given
        sub.add_argument("--manifest", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        return sub

    gen = add_sub("gen", help="emit a construction with its certificate")
    gen.add_argument(
        "variant",
        choices=["cyclic", "lower-bound", "double-star-gap", "circulant", "complete"],
    )
    gen.add_argument("--k", type=int, default=3)
    gen.add_argument("--r", type=int, default=2)
    gen.add_argument("--t1", type=int, default=1)
    gen.add_argument("--t2", type=int, default=1)
    gen.add_argument("--m", type=int, default=4)
    gen.add_argument("--n", type=int, default=4)
    gen.add_argument("--d", type=int, default=1)
    gen.add_argument("--out", help="also write the bare graph JSON here")

    ana = add_sub("analyze", help="run one theorem check on a graph file")
    ana.add_argument("file")
    ana.add_argument(
        "--check",
        required=True,
        choices=["r2", "conjecture", "tetel", "additive", "stability", "mainlemma", "corollary"],
    )
    ana.add_argument("--r", type=int, default=0, help="colors (default: from file)")
    ana.add_argument("--color", type=int, default=0, help="class for per-class reports")
    ana.add_argument(
        "--variant", default="seven-eighths", choices=["general", "seven-eighths"]
    )
    ana.add_argument("--refined", action="store_true", help="record-only refined degrees")

    sea = add_sub("search", help="adversarial search over colorings")
    sea.add_argument(
        "--mode",
        required=True,
        choices=["minmax", "below", "verify", "random", "frontier"],
    )
    _add_search_options(sea)

    scan = add_sub("scan", help="degree-slack frontier scan")
    _add_search_options(scan, with_host=False)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        if args.command == "gen":
            doc, code, digest, summary = cmd_gen(args)
            seed = None
        elif args.command == "analyze":
            doc, code, digest, summary = cmd_analyze(args)
            seed = None
        elif args.command == "search":
            doc, code, digest, summary = cmd_search(args)
            seed = args.seed
        elif args.command == "scan":
            doc, code, digest, summary = _run_frontier(args)
            seed = args.seed
        else:  # pragma: no cover - argparse enforces choices
            raise GraphError(f"unknown command {args.command!r}")
    except (GraphError, InvalidSpec, PreconditionViolated, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_INPUT
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_INPUT
    sys.stdout.write(dumps_canonical(doc))
    sys.stdout.write("\n")
    elapsed = time.perf_counter() - started
    summary = {**summary, "exit_code": code}
    try:
        _write_manifest(args.manifest, argv, digest, seed, summary, elapsed)
    except OSError as exc:
        print(f"warning: could not write manifest: {exc}", file=sys.stderr)
    return code
