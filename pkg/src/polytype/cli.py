"""Command-line surface: enum, psi, delta, gamma, census.

Exit codes: 0 success, 1 usage error, 2 failures suppressed by
--keep-going, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .census import run_census
from .enumeration import EnumOptions, conical_polygons, enumerate_polygons
from .geometry import polygon_to_obj
from .newton import is_conical, pair_from_obj, pair_to_obj
from .polyhedral import (
    DegeneratePairError,
    InternalInconsistencyError,
    delta_polytope,
    gamma_polytopes,
    pair_edges,
    psi,
    sigma_data,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        sys.exit(1)


def _load_pair(path):
    with open(path) as fh:
        return pair_from_obj(json.load(fh))


def _cmd_enum(args):
    opts = EnumOptions(
        k=args.k,
        min_dim=args.min_dim,
        up_to_translation=args.up_to_translation,
        hard_cap=max(args.k, 9),
    )
    stream = enumerate_polygons(opts)
    if args.conical:
        stream = (P for P in stream if is_conical(P))
    sink = open(args.out, "w") if args.out else sys.stdout
    try:
        count = 0
        for P in stream:
            count += 1
            if not args.count_only:
                sink.write(json.dumps(polygon_to_obj(P), separators=(",", ":")))
                sink.write("\n")
        if args.count_only:
            sink.write("%d\n" % count)
    finally:
        if sink is not sys.stdout:
            sink.close()
    return 0


def _pair_report(pair, want):
    report = {"A1": pair_to_obj(pair)["A1"], "A2": pair_to_obj(pair)["A2"]}
    flags = []
    try:
        if want == "psi":
            result = psi(pair)
            sig = result.sigma_data
            report.update(
                psi=list(result.psi),
                sigma=polygon_to_obj(sig.sigma),
                delta=polygon_to_obj(result.delta),
                gammas=[polygon_to_obj(g) for g in result.gammas],
                gaps={"m_v": sig.m_v, "m_h": sig.m_h, "m_c": sig.m_c},
            )
        elif want == "delta":
            sig = sigma_data(pair)
            report["delta"] = polygon_to_obj(delta_polytope(pair, sig))
        elif want == "gamma":
            report["gammas"] = [polygon_to_obj(g) for g in gamma_polytopes(pair)]
    except DegeneratePairError as exc:
        flags.append("degenerate:%s" % exc.tag)
    report["flags"] = flags
    return report


def _cmd_pair(args, want):
    pair = _load_pair(args.pair)
    try:
        report = _pair_report(pair, want)
    except InternalInconsistencyError as exc:
        sys.stderr.write("internal inconsistency: %s\n" % exc)
        return 3
    json.dump(report, sys.stdout, indent=2 if args.pretty else None)
    sys.stdout.write("\n")
    return 0


def _cmd_census(args):
    checkpoint = args.checkpoint
    resume = bool(checkpoint and os.path.exists(checkpoint) and not args.restart)
    try:
        summary = run_census(
            degree=args.degree,
            jobs=args.jobs,
            checkpoint=checkpoint,
            out=args.out,
            paranoid=args.paranoid,
            keep_going=args.keep_going,
            resume=resume,
            limit=args.limit,
        )
    except InternalInconsistencyError as exc:
        sys.stderr.write("internal inconsistency: %s\n" % exc)
        return 3
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    json.dump(summary.to_obj(), sys.stdout, indent=2 if args.pretty else None)
    sys.stdout.write("\n")
    if summary.inconsistencies:
        return 2
    return 0


def build_parser():
    parser = _Parser(prog="polytype", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", help="list lattice polytopes in k*simplex")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--min-dim", type=int, default=2, choices=(0, 1, 2))
    p.add_argument("--up-to-translation", action="store_true")
    p.add_argument("--conical", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out", metavar="FILE.jsonl")

    for name in ("psi", "delta", "gamma"):
        p = sub.add_parser(name, help="compute %s for a pair file" % name)
        p.add_argument("--pair", required=True, metavar="FILE.json")
        p.add_argument("--pretty", action="store_true")

    p = sub.add_parser("census", help="census of polyhedral types")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("POLYTYPE_JOBS", "0")) or None,
    )
    p.add_argument("--checkpoint", metavar="FILE")
    p.add_argument("--restart", action="store_true", help="ignore an existing checkpoint")
    p.add_argument("--out", metavar="FILE.jsonl")
    p.add_argument("--paranoid", action="store_true")
    p.add_argument("--keep-going", action="store_true")
    p.add_argument("--limit", type=int, help="stop after N pairs (testing)")
    p.add_argument("--degree-cap", type=int, default=5)
    p.add_argument("--pretty", action="store_true")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "enum":
            return _cmd_enum(args)
        if args.command in ("psi", "delta", "gamma"):
            return _cmd_pair(args, args.command)
        if args.command == "census":
            if args.jobs is None:
                args.jobs = os.cpu_count() or 1
            if args.degree > args.degree_cap:
                parser.error(
                    "degree %d above cap %d (raise with --degree-cap)"
                    % (args.degree, args.degree_cap)
                )
            return _cmd_census(args)
    except FileNotFoundError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    except ValueError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    parser.error("unknown command")


if __name__ == "__main__":
    sys.exit(main())
