#!/usr/bin/env python3
"""
Multicores CLI - gap posets, cores, lattice paths and the verification suites

Exit codes: 0 success, 1 usage or precondition error, 2 counterexample or mismatch.
"""

from __future__ import annotations

import sys
import json
import logging
import argparse
from pathlib import Path

from pydantic import ValidationError

from multicores.config import Limits, SuiteRanges
from multicores.errors import MulticoreError
from multicores.exact_algebra import QPolynomial
from multicores.partitions import Partition, hooks, render_diagram
from multicores.paths import (
    count_gd,
    count_rect_paths,
    enumerate_gd,
    enumerate_rect_paths,
    path_partition,
    path_svg,
    paths_grid_svg,
)
from multicores.semigroup_poset import (
    build_gap_poset,
    count_lower_ideals,
    enumerate_cores,
    enumerate_lower_ideals,
    multi_catalan,
)
from multicores.verify import SUITES, qdet_coarea, reports_to_json, run_suite, summarize, symmetry_table

logger = logging.getLogger("multicores")

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE = 0, 1, 2

# verify flag -> SuiteRanges fields it bounds
RANGE_FLAGS = {
    "max_s": ("conjecture_max_s", "symmetry_max_s", "multi_catalan_max_s", "decomposition_max_s", "motzkin_max"),
    "max_n": ("catalan_identity_max", "hessenberg_max", "gd_max_n", "gd_bijection_max_n"),
    "max_t": ("popoviciu_max",),
    "max_p": ("multi_catalan_max_p", "gf_max_p", "decomposition_max_p"),
    "max_k": ("gd_max_k", "gd_bijection_max_k", "gd_power_max"),
    "sum_max": ("pair_sum_max", "coarea_sum_max"),
    "box": ("box_kreweras", "box_qdet"),
    "terms": ("gf_terms",),
}


class UsageError(MulticoreError):
    """Bad command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def require_format(args, allowed: tuple[str, ...]) -> None:
    if args.format not in allowed:
        raise UsageError(f"--format {args.format} is not available for '{args.command}'; use one of {', '.join(allowed)}")


def sort_ideals(ideals) -> list[list[int]]:
    return sorted((sorted(i) for i in ideals), key=lambda v: (len(v), v))


def reject_with_count_only(args, *flags: str) -> None:
    if not args.count_only:
        return
    if args.format == "svg":
        raise UsageError("--count-only cannot be combined with --format svg; it never builds a listing")
    for flag in flags:
        if getattr(args, flag, None):
            raise UsageError(f"--count-only cannot be combined with --{flag.replace('_', '-')}; it never builds a listing")


def _item(value):
    return tuple(value) if isinstance(value, list) else value


def compare_listing(path: str, key: str, fresh: list) -> int:
    stored = json.loads(Path(path).read_text())
    listed = stored.get(key) if isinstance(stored, dict) else None
    if listed is None:
        raise UsageError(f"{path} has no '{key}' listing; produce it with --format json --list")
    listed, fresh = [_item(v) for v in listed], [_item(v) for v in fresh]
    if sorted(listed) == sorted(fresh):
        print(f"✅ {path}: {len(listed)} {key} agree with a fresh enumeration")
        return EXIT_OK
    missing = sorted(set(fresh) - set(listed))
    extra = sorted(set(listed) - set(fresh))
    print(f"❌ {path}: {len(listed)} {key} listed, {len(fresh)} expected; "
          f"missing {missing[:3]}, unexpected {extra[:3]}")
    return EXIT_COUNTEREXAMPLE


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_poset(args, limits: Limits) -> int:
    require_format(args, ("plain", "json", "dot"))
    poset = build_gap_poset(args.gens)
    if args.from_file:
        export = poset.export()
        return max(compare_listing(args.from_file, key, export[key]) for key in ("gaps", "covers"))
    if args.format == "dot":
        print(poset.to_dot(reduce=args.hasse))
    elif args.format == "json":
        payload = poset.export()
        payload["gap_count"] = str(len(poset.gaps))
        payload["frobenius_number"] = str(poset.frobenius_number)
        emit_json(payload)
    else:
        edges = poset.hasse_edges() if args.hasse else poset.covers
        print(f"P_S for S = {', '.join(map(str, poset.generators))}")
        print(f"gaps ({len(poset.gaps)}): {' '.join(map(str, poset.gaps))}")
        print(f"frobenius number: {poset.frobenius_number}")
        print(f"covers: {' '.join(f'{a}>{b}' for a, b in edges)}")
    return EXIT_OK


def cmd_ideals(args, limits: Limits) -> int:
    require_format(args, ("plain", "json"))
    reject_with_count_only(args, "from_file")
    poset = build_gap_poset(args.gens)
    if args.count_only:
        count = count_lower_ideals(poset, limits.max_count)
        ideals = None
    else:
        ideals = sort_ideals(enumerate_lower_ideals(poset, limits.max_items))
        count = len(ideals)
    if args.from_file:
        return compare_listing(args.from_file, "ideals", ideals)
    if args.format == "json":
        payload = {"generators": list(poset.generators), "count": str(count)}
        if args.list and ideals is not None:
            payload["ideals"] = ideals
        emit_json(payload)
        return EXIT_OK
    print(f"{count} lower ideals of P_S for S = {', '.join(map(str, poset.generators))}")
    if args.list and ideals is not None:
        for ideal in ideals:
            print("{" + ",".join(map(str, ideal)) + "}")
    return EXIT_OK


def cmd_cores(args, limits: Limits) -> int:
    require_format(args, ("plain", "json"))
    reject_with_count_only(args, "from_file")
    poset = build_gap_poset(args.gens)
    if args.count_only:
        count = count_lower_ideals(poset, limits.max_count)
        if args.format == "json":
            emit_json({"generators": list(poset.generators), "count": str(count)})
        else:
            print(count)
        return EXIT_OK

    cores = sorted(enumerate_cores(poset, limits.max_items), key=lambda p: (p.size, p.parts))
    listing = [list(p.parts) for p in cores]
    if args.from_file:
        return compare_listing(args.from_file, "cores", listing)
    total = sum(p.size for p in cores)
    if args.format == "json":
        payload = {"generators": list(poset.generators), "count": str(len(cores))}
        if args.total_size:
            payload["total_size"] = str(total)
        if args.list:
            payload["cores"] = listing
        emit_json(payload)
        return EXIT_OK
    if args.total_size:
        print(total)
        return EXIT_OK
    if args.list:
        for core in cores:
            print(core)
    else:
        print(f"{len(cores)} cores for S = {', '.join(map(str, poset.generators))}")
    return EXIT_OK


def _emit_paths(args, limits: Limits, paths, count: int, header: dict, render_steps) -> int:
    if args.from_file:
        return compare_listing(args.from_file, "paths", [list(p.steps) for p in paths])
    if args.svg:
        Path(args.svg).write_text(paths_grid_svg(paths))
        logger.info(f"Wrote {len(paths)} paths to {args.svg}")
    if args.format == "svg":
        print(paths_grid_svg(paths) if len(paths) != 1 else path_svg(paths[0], labels=True))
    elif args.format == "json":
        payload = {**{k: str(v) for k, v in header.items()}, "count": str(count)}
        if args.list:
            payload["paths"] = [list(p.steps) for p in paths]
        emit_json(payload)
    else:
        print(count)
        if args.list:
            for path in paths:
                print(render_steps(path))
    return EXIT_OK


def cmd_paths(args, limits: Limits) -> int:
    require_format(args, ("plain", "json", "svg"))
    reject_with_count_only(args, "from_file", "svg")
    listing = args.list or args.svg or args.from_file or args.format == "svg"
    if args.kind == "rect":
        if args.count_only or not listing:
            count = count_rect_paths(args.s, args.t)
            return _emit_paths(args, limits, [], count, {"s": args.s, "t": args.t}, None)
        paths = sorted(enumerate_rect_paths(args.s, args.t, limits.max_items), key=lambda p: p.steps)
        return _emit_paths(args, limits, paths, len(paths), {"s": args.s, "t": args.t},
                           lambda p: f"{''.join(p.steps)}  {path_partition(p)}")
    if args.count_only or not listing:
        return _emit_paths(args, limits, [], count_gd(args.n, args.k), {"n": args.n, "k": args.k}, None)
    paths = sorted(enumerate_gd(args.n, args.k, limits.max_items), key=lambda p: p.steps)
    return _emit_paths(args, limits, paths, len(paths), {"n": args.n, "k": args.k}, lambda p: " ".join(p.steps))


def cmd_count(args, limits: Limits) -> int:
    require_format(args, ("plain", "json"))
    if args.kind == "multi-catalan":
        value = multi_catalan(args.s, args.p)
    elif args.kind == "rect":
        value = count_rect_paths(args.s, args.t)
    else:
        value = count_gd(args.n, args.k)
    if args.format == "json":
        emit_json({"count": str(value)})
    else:
        print(value)
    return EXIT_OK


def cmd_qdet(args, limits: Limits) -> int:
    require_format(args, ("plain", "json"))
    shape = Partition.from_weak(sorted(args.shape, reverse=True))
    poly: QPolynomial = qdet_coarea(shape)
    if args.format == "json":
        emit_json({"shape": list(shape.parts), "coefficients": [str(c) for c in poly.coeffs]})
    else:
        print(poly)
        print(list(poly.coeffs))
    return EXIT_OK


def cmd_diagram(args, limits: Limits) -> int:
    require_format(args, ("plain", "json"))
    shape = Partition(parts=tuple(args.shape))
    if args.format == "json":
        emit_json({"parts": list(shape.parts), "hooks": hooks(shape)})
    else:
        print(render_diagram(shape, "english" if args.english else "french", show_hooks=not args.no_hooks))
    return EXIT_OK


def cmd_symmetry_table(args, limits: Limits) -> int:
    require_format(args, ("plain",))
    print(symmetry_table(args.s))
    return EXIT_OK


def cmd_verify(args, limits: Limits) -> int:
    require_format(args, ("plain", "json"))
    overrides = {}
    for flag, fields in RANGE_FLAGS.items():
        value = getattr(args, flag)
        if value is not None:
            overrides.update({field: value for field in fields})
    ranges = SuiteRanges(**overrides)
    reports = run_suite(args.suite, ranges, limits.jobs)

    if args.format == "json":
        print(reports_to_json(reports))
    else:
        print(summarize(reports).to_string(index=False))
        for report in reports:
            bad = report.first_counterexample
            if bad is not None:
                print(f"\n❌ {report.statement}: counterexample {bad.parameters} ({bad.detail})")

    statuses = {r.status for r in reports}
    if "fail" in statuses:
        return EXIT_COUNTEREXAMPLE
    if "untested" in statuses or not reports:
        print("⚠️  some statements had no instances in the requested range", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["plain", "json", "dot", "svg"], default="plain")
    common.add_argument("--max-items", type=int, default=None, help="listing cap (default 10^6)")
    common.add_argument("--max-count", type=int, default=None, help="counting cap (default 10^7)")
    common.add_argument("--jobs", type=int, default=None, help="worker processes for verify (default 1)")
    common.add_argument("--verbose", "-v", action="store_true", help="log progress to stderr")

    parser = _Parser(prog="run_multicores.py", description="Simultaneous core partitions, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    poset = sub.add_parser("poset", parents=[common], help="gaps and covers of P_S")
    poset.add_argument("--gens", type=int_list, required=True)
    poset.add_argument("--hasse", action="store_true", help="transitively reduced covers only")
    poset.add_argument("--from-file", help="check the gaps and covers of a JSON export against a fresh build")
    poset.set_defaults(handler=cmd_poset)

    ideals = sub.add_parser("ideals", parents=[common], help="lower ideals of P_S")
    ideals.add_argument("--gens", type=int_list, required=True)
    mode = ideals.add_mutually_exclusive_group()
    mode.add_argument("--count-only", action="store_true")
    mode.add_argument("--list", action="store_true")
    ideals.add_argument("--from-file", help="check a JSON listing against a fresh enumeration")
    ideals.set_defaults(handler=cmd_ideals)

    cores = sub.add_parser("cores", parents=[common], help="S-cores through the ideal bijection")
    cores.add_argument("--gens", type=int_list, required=True)
    mode = cores.add_mutually_exclusive_group()
    mode.add_argument("--count-only", action="store_true")
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--total-size", action="store_true")
    cores.add_argument("--from-file")
    cores.set_defaults(handler=cmd_cores)

    paths = sub.add_parser("paths", help="rectangle and generalized Dyck paths")
    kinds = paths.add_subparsers(dest="kind", required=True)
    rect = kinds.add_parser("rect", parents=[common])
    rect.add_argument("--s", type=int, required=True)
    rect.add_argument("--t", type=int, required=True)
    gd = kinds.add_parser("gd", parents=[common])
    gd.add_argument("--n", type=int, required=True)
    gd.add_argument("--k", type=int, required=True)
    for p in (rect, gd):
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--count-only", action="store_true")
        mode.add_argument("--list", action="store_true")
        p.add_argument("--svg", metavar="FILE", help="write every path to an SVG grid")
        p.add_argument("--from-file")
        p.set_defaults(handler=cmd_paths)

    count = sub.add_parser("count", help="closed-form counts")
    counts = count.add_subparsers(dest="kind", required=True)
    mc = counts.add_parser("multi-catalan", parents=[common])
    mc.add_argument("--s", type=int, required=True)
    mc.add_argument("--p", type=int, required=True)
    cr = counts.add_parser("rect", parents=[common])
    cr.add_argument("--s", type=int, required=True)
    cr.add_argument("--t", type=int, required=True)
    cg = counts.add_parser("gd", parents=[common])
    cg.add_argument("--n", type=int, required=True)
    cg.add_argument("--k", type=int, required=True)
    for p in (mc, cr, cg):
        p.set_defaults(handler=cmd_count)

    qdet = sub.add_parser("qdet", parents=[common], help="coarea polynomial of the subpartitions of a shape")
    qdet.add_argument("--shape", type=int_list, required=True)
    qdet.set_defaults(handler=cmd_qdet)

    diagram = sub.add_parser("diagram", parents=[common], help="Ferrers diagram with hook lengths")
    diagram.add_argument("--shape", type=int_list, required=True)
    diagram.add_argument("--english", action="store_true")
    diagram.add_argument("--no-hooks", action="store_true")
    diagram.set_defaults(handler=cmd_diagram)

    table = sub.add_parser("symmetry-table", parents=[common], help="the rectangle R_s for P_(s,s+2)")
    table.add_argument("--s", type=int, required=True)
    table.set_defaults(handler=cmd_symmetry_table)

    verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("suite", choices=["all", *SUITES])
    for flag in RANGE_FLAGS:
        verify.add_argument("--" + flag.replace("_", "-"), dest=flag, type=int, default=None)
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("multicores").setLevel(logging.INFO if args.verbose else logging.WARNING)

    try:
        limits = Limits.from_env(max_items=args.max_items, max_count=args.max_count, jobs=args.jobs)
        return args.handler(args, limits)
    except (MulticoreError, ValidationError, OSError, json.JSONDecodeError) as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:
        logger.error(f"Unexpected failure in '{args.command}': {exc}", exc_info=True)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
