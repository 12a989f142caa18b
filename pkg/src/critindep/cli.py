"""Command-line front end.

Commands: analyze, generate, recognize, verify, hx.
Exit codes: 0 success, 1 verification failure, 2 parse/config error,
3 exact fields requested beyond their limits.
"""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys
from pathlib import Path

from . import critical as cr
from . import unicyclic as uc
from .errors import FormatError, GraphError, ScriptError
from .graphs import Graph, parse_edge_list, parse_graph6, to_graph6
from .reports import analyze, render_text
from .verification import FAMILIES, Limits, SweepConfig, run_sweep

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_LIMIT = 3


def _limits_from(args) -> Limits:
    env = os.environ

    def pick(flag_value, env_key, default):
        if flag_value is not None:
            return flag_value
        if env_key in env:
            return int(env[env_key])
        return default

    base = Limits()
    return Limits(
        enumeration=pick(args.enum_limit, "CRITINDEP_ENUM_LIMIT",
                         base.enumeration),
        omega=pick(args.omega_limit, "CRITINDEP_OMEGA_LIMIT", base.omega),
        alpha_exact=pick(args.alpha_limit, "CRITINDEP_ALPHA_LIMIT",
                         base.alpha_exact),
        matching_brute=base.matching_brute,
        pair_subsets=base.pair_subsets,
        ge_oracle=base.ge_oracle,
    )


def _load_graph(path: str, fmt: str) -> tuple[Graph, bytes, str]:
    data = Path(path).read_bytes()
    text = data.decode()
    if fmt == "auto":
        stripped = [ln for ln in text.splitlines()
                    if ln.strip() and not ln.strip().startswith("#")]
        fmt = "edgelist" if stripped and " " in stripped[0].strip() \
            else "graph6"
    if fmt == "edgelist":
        return parse_edge_list(text), data, "edgelist"
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    return parse_graph6(first), data, "graph6"


def _emit(payload: dict, args) -> None:
    if not args.no_timestamp:
        payload["generated_at"] = datetime.datetime.now(
            datetime.timezone.utc).isoformat()
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(render_text(payload), end="")


def cmd_analyze(args) -> int:
    limits = _limits_from(args)
    try:
        g, data, fmt = _load_graph(args.path, args.format)
    except (FormatError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    report = analyze(g, limits, source=data, fmt=fmt, seed=args.seed)
    if args.exact and "skipped" in report:
        for field, reason in sorted(report["skipped"].items()):
            print(f"error: exact field {field} unavailable: {reason}",
                  file=sys.stderr)
        return EXIT_LIMIT
    _emit(report, args)
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        if args.script:
            script = uc.parse_script(Path(args.script).read_text())
        else:
            cyc, n_p2, n_leaf = (int(x) for x in args.random.split(","))
            script, _ = uc.generate_random(cyc, n_p2, n_leaf, seed=args.seed)
        cu = uc.generate(script)
    except (ScriptError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    g6 = to_graph6(cu.graph)
    colors = cu.coloring_json()
    if args.out:
        Path(args.out + ".g6").write_text(g6 + "\n")
        Path(args.out + ".colors.json").write_text(colors + "\n")
        Path(args.out + ".script").write_text(uc.script_to_text(script))
        print(f"wrote {args.out}.g6, {args.out}.colors.json, "
              f"{args.out}.script")
    else:
        print(g6)
        print(colors)
    return EXIT_OK


def cmd_recognize(args) -> int:
    try:
        g, _, _ = _load_graph(args.path, args.format)
        cu = uc.recognize(g)
    except (FormatError, UnicodeDecodeError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if cu is None:
        print("KE")
    else:
        print(cu.coloring_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = args.checks.split(",") if args.checks else None
    config = SweepConfig(
        family=args.family,
        min_n=args.min_n,
        max_n=args.max_n,
        samples=args.samples,
        seed=args.seed,
        checks=checks,
        limits=_limits_from(args),
        inject_failure=args.inject_failure,
    )
    try:
        result = run_sweep(config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    payload = {
        "config": {
            "family": config.family,
            "min_n": config.min_n,
            "max_n": config.max_n,
            "samples": config.samples,
            "seed": config.seed,
            "checks": checks,
        },
        "graphs": result.graphs,
        "checks": result.counts,
        "failures": [{"graph6": g6, "check": cid}
                     for g6, cid in result.certificates],
    }
    if not args.no_timestamp:
        payload["generated_at"] = datetime.datetime.now(
            datetime.timezone.utc).isoformat()
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(f"family={config.family} graphs={result.graphs} "
              f"seed={config.seed}")
        for cid in sorted(result.counts):
            c = result.counts[cid]
            print(f"  {cid}: pass={c['pass']} fail={c['fail']} "
                  f"skipped={c['skipped']}")
    if result.certificates:
        cert_path = args.cert or "failures.cert"
        with open(cert_path, "w") as fh:
            for g6, cid in result.certificates:
                fh.write(f"{g6} {cid}\n")
        print(f"certificates written to {cert_path}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_hx(args) -> int:
    try:
        g, _, _ = _load_graph(args.path, args.format)
        xset = [int(v) for v in args.set.split(",")] if args.set else []
        gadget = cr.build_hx(g, xset)
    except (FormatError, UnicodeDecodeError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    embedded = sorted(gadget.embedding[u] for u in gadget.x)
    gadget_ker = sorted(cr.ker(gadget.gadget))
    payload = {
        "gadget_graph6": to_graph6(gadget.gadget),
        "v": gadget.v_label,
        "w": gadget.w_label,
        "embedding": {str(k): v for k, v in sorted(gadget.embedding.items())},
        "embedded_x": embedded,
        "gadget_ker": gadget_ker,
        "ker_equals_x": gadget_ker == embedded,
    }
    print(json.dumps(payload, sort_keys=True, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="critindep",
        description="Critical independence structure toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_graph=True):
        if with_graph:
            p.add_argument("--format", choices=("auto", "edgelist", "graph6"),
                           default="auto")
        p.add_argument("--json", action="store_true")
        p.add_argument("--no-timestamp", action="store_true")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--enum-limit", type=int, default=None)
        p.add_argument("--omega-limit", type=int, default=None)
        p.add_argument("--alpha-limit", type=int, default=None)

    p = sub.add_parser("analyze", help="full report for one graph")
    p.add_argument("path")
    p.add_argument("--exact", action="store_true",
                   help="fail (exit 3) instead of skipping limited fields")
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="build a colored unicyclic graph")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--script", help="build script path")
    group.add_argument("--random", metavar="CYCLE,P2,LEAF",
                       help="random script parameters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output file prefix")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("recognize",
                       help="recover the canonical coloring or report KE")
    p.add_argument("path")
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"),
                   default="auto")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--checks", help="comma-separated check ids (default all)")
    p.add_argument("--cert", help="certificate output path")
    p.add_argument("--inject-failure", action="store_true",
                   help="force one failure (exercises the failure path)")
    add_common(p, with_graph=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hx", help="build the two-vertex gadget for --set")
    p.add_argument("path")
    p.add_argument("--set", required=True,
                   help="comma-separated independent vertex set")
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"),
                   default="auto")
    p.set_defaults(func=cmd_hx)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
