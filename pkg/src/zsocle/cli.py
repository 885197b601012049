"""``zsocle`` command line: ``info``, ``zs-table`` and ``verify``.

Exit codes: 0 success, 1 a theorem check failed, 2 usage or parse error,
3 group order cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .groups import GroupError, OrderCapExceeded
from .report import (
    ALL_CHECKS,
    CACHE_ENV,
    DEFAULT_CHECKS,
    build_context,
    cache_dir,
    cached_table_report,
    canonical_json,
    reports_json,
    run_checks,
    table_csv,
    table_report,
    table_text,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _error_code(exc: Exception) -> int:
    return EXIT_CAP if isinstance(exc, OrderCapExceeded) else EXIT_USAGE


def cmd_info(args) -> int:
    ctx = build_context(args.spec)
    js = ctx.js
    print(f"group     {ctx.spec}")
    print(f"order     {ctx.group.order}")
    print(f"p         {ctx.p}")
    print(f"powerful  {'yes' if ctx.powerful else 'no'}")
    print(f"chain     {' > '.join(str(o) for o in js.chain_orders())}")
    for i, d in enumerate(js.chain, start=1):
        gens = [ctx.group.labels[g] for lvl, _, g in js.gens if lvl == i]
        extra = f"  gens {', '.join(gens)}" if gens else ""
        print(f"  D_{i:<3} order {d.order:<6} r_{i} = {js.ranks.get(i, 0)}{extra}")
    print(f"Loewy length {js.loewy_length}")
    return EXIT_OK


def cmd_zs_table(args) -> int:
    t0 = time.perf_counter()
    directory = cache_dir(args.cache_dir)
    if directory is not None:
        report = cached_table_report(args.spec, use_weights=not args.no_weights, directory=directory)
    else:
        report = table_report(build_context(args.spec), use_weights=not args.no_weights)
    if args.format == "json":
        text = canonical_json(report)
        if args.timing:
            body = json.loads(text)
            body["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
            text = json.dumps(body, indent=2) + "\n"
    elif args.format == "csv":
        text = table_csv(report)
    else:
        text = table_text(report)
        if args.timing:
            text += f"time {time.perf_counter() - t0:.3f}s\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _verify_one(spec: str, checks: tuple[str, ...], k: int, timing: bool) -> tuple[int, str, dict]:
    """Run the suites on one spec; returns ``(exit code, text, json body)``."""
    t0 = time.perf_counter()
    try:
        ctx = build_context(spec)
        reports = run_checks(ctx, checks, k=k)
    except GroupError as exc:
        code = _error_code(exc)
        return code, f"{spec}: ERROR {exc}\n", {"spec": spec, "error": str(exc), "exit": code}
    body = reports_json(ctx, reports)
    lines = [f"== {spec} (order {ctx.group.order}, p={ctx.p})"]
    lines += [r.summary() for r in reports]
    if timing:
        body["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
        lines.append(f"time {body['timing']['seconds']:.3f}s")
    return (EXIT_OK if body["ok"] else EXIT_FAIL), "\n".join(lines) + "\n", body


def cmd_verify(args) -> int:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip()) if args.checks else DEFAULT_CHECKS
    unknown = [c for c in checks if c not in ALL_CHECKS]
    if unknown:
        print(f"error: unknown checks {', '.join(unknown)}; choose from {', '.join(ALL_CHECKS)}", file=sys.stderr)
        return EXIT_USAGE
    if args.k < 1:
        print("error: --k must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    jobs = [(spec, checks, args.k, args.timing) for spec in args.specs]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, *zip(*jobs)))
    else:
        results = [_verify_one(*job) for job in jobs]
    if args.format == "json":
        sys.stdout.write(json.dumps([body for _, _, body in results], indent=2) + "\n")
    else:
        for _, text, _ in results:
            sys.stdout.write(text)
    codes = [code for code, _, _ in results]
    # a resource cap beats a parse error beats a failed check
    for code in (EXIT_CAP, EXIT_USAGE, EXIT_FAIL):
        if code in codes:
            return code
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zsocle",
        description="Centers, socles and ZS^n = Z ∩ Soc^n of modular p-group algebras.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", help="order, p, dimension subgroups and Loewy length")
    info.add_argument("spec")
    info.set_defaults(func=cmd_info)

    table = sub.add_parser("zs-table", help="dim J^n, Soc^n and ZS^n for n = 0..LL")
    table.add_argument("spec")
    table.add_argument("--format", choices=("text", "json", "csv"), default="text")
    table.add_argument("-o", "--output", help="write to a file instead of stdout")
    table.add_argument("--cache-dir", help=f"cache directory (default: ${CACHE_ENV}, unset means no cache)")
    table.add_argument("--no-weights", action="store_true", help="compute rad/soc dimensions by linear algebra only")
    table.add_argument("--timing", action="store_true", help="append wall-clock timing")
    table.set_defaults(func=cmd_zs_table)

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("specs", nargs="+", metavar="spec")
    verify.add_argument("--checks", help=f"comma-separated subset of {','.join(ALL_CHECKS)}")
    verify.add_argument("--k", type=int, default=2, help="matrix size for the morita check")
    verify.add_argument("--jobs", type=int, default=1, help="verify several specs in parallel")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--timing", action="store_true")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _error_code(exc)


if __name__ == "__main__":
    sys.exit(main())
