"""Reports on a single group: the per-``n`` dimension table and verification suites.

A report is a plain dict whose canonical JSON form (sorted construction
order, no timing) is byte-identical across runs for the same spec and
package version.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from pathlib import Path

import numpy as np

from . import __version__
from .algebra import AlgebraError, GroupAlgebra, group_algebra, morita_invariance_check, otokita_bound_check
from .groups import Group, is_p_group
from .groupspec import SpecError, parse_group_spec, spec_fingerprint
from .jennings import (
    JenningsStructure,
    VerificationReport,
    dimension_subgroups_group_theoretic,
    is_powerful,
    jennings_spanning_scan,
    main_theorem_levels,
    verify_jennings_theorem,
    verify_main_theorem,
    verify_okuyama,
    verify_powerful_theorem,
    verify_rigidity,
    verify_zs12_explicit,
)

__all__ = [
    "ALL_CHECKS",
    "DEFAULT_CHECKS",
    "CACHE_ENV",
    "Context",
    "build_context",
    "cache_dir",
    "cached_table_report",
    "canonical_json",
    "infer_prime",
    "read_report",
    "reports_json",
    "run_checks",
    "table_csv",
    "table_report",
    "table_text",
    "write_report",
]

ALL_CHECKS = ("jennings", "rigidity", "main", "powerful", "zs12", "morita", "okuyama", "otokita", "scan")
# morita builds M_k(FG) of dimension k^2 |G|, so it only runs on request
DEFAULT_CHECKS = tuple(c for c in ALL_CHECKS if c != "morita")
CACHE_ENV = "ZSOCLE_CACHE_DIR"


def infer_prime(g: Group) -> int:
    p = is_p_group(g)
    if p == 1:
        p = g.p_hint
    if not p or p == 1:
        raise SpecError(f"cannot infer p: |G| = {g.order} is not a prime power")
    return p


class Context:
    """A parsed group together with its group algebra and Jennings structure."""

    def __init__(self, spec: str, group: Group):
        self.spec = spec
        self.group = group
        self.p = infer_prime(group)
        self.algebra: GroupAlgebra = group_algebra(group, self.p)
        self.js: JenningsStructure = dimension_subgroups_group_theoretic(group, self.p)

    @property
    def powerful(self) -> bool:
        return is_powerful(self.group, self.p)


def build_context(spec: str) -> Context:
    return Context(spec, parse_group_spec(spec))


def _chain_rows(ctx: Context) -> list[dict]:
    js = ctx.js
    rows = []
    for i, d in enumerate(js.chain, start=1):
        gens = [ctx.group.labels[g] for lvl, _, g in js.gens if lvl == i]
        rows.append({"i": i, "order": d.order, "rank": js.ranks.get(i, 0), "gens": gens})
    return rows


def table_report(ctx: Context, use_weights: bool = True, timing: bool = False) -> dict:
    """Per-``n`` dimensions of ``J^n``, ``Soc^n`` and ``ZS^n`` for ``n = 0..LL``.

    With ``use_weights`` the radical and socle dimensions are read off the
    Jennings weights; otherwise they come from linear algebra.
    """
    t0 = time.perf_counter()
    a, js = ctx.algebra, ctx.js
    ll = js.loewy_length
    if not use_weights:
        ll = a.loewy_length()
    table = []
    for n in range(ll + 1):
        if use_weights:
            dim_rad = int(np.count_nonzero(js.weights >= n))
            dim_soc = int(np.count_nonzero(js.coweights < n))
        else:
            dim_rad = a.radical_power(n).dim
            dim_soc = a.socle(n).dim
        table.append({"n": n, "dim_rad": dim_rad, "dim_soc": dim_soc, "dim_zs": a.zs(n).dim})
    out = {
        "spec": ctx.spec,
        "order": ctx.group.order,
        "p": ctx.p,
        "powerful": ctx.powerful,
        "loewy_length": ll,
        "chain": _chain_rows(ctx),
        "table": table,
        "dim_center": a.center().dim,
    }
    if timing:
        out["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    return out


def canonical_json(report: dict) -> str:
    """JSON text of ``report`` without the timing field."""
    body = {k: v for k, v in report.items() if k != "timing"}
    return json.dumps(body, indent=2) + "\n"


def write_report(report: dict, path) -> None:
    Path(path).write_text(json.dumps(report, indent=2) + "\n")


def read_report(path) -> dict:
    return json.loads(Path(path).read_text())


def table_csv(report: dict) -> str:
    lines = ["n,dim_rad,dim_soc,dim_center,dim_zs"]
    for row in report["table"]:
        lines.append(f"{row['n']},{row['dim_rad']},{row['dim_soc']},{report['dim_center']},{row['dim_zs']}")
    return "\n".join(lines) + "\n"


def table_text(report: dict) -> str:
    head = (
        f"{report['spec']}: order {report['order']}, p={report['p']}, "
        f"LL {report['loewy_length']}, dim Z {report['dim_center']}"
    )
    lines = [head, f"{'n':>4} {'rad':>6} {'soc':>6} {'ZS':>6}"]
    for row in report["table"]:
        lines.append(f"{row['n']:>4} {row['dim_rad']:>6} {row['dim_soc']:>6} {row['dim_zs']:>6}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# cache


def cache_dir(explicit: str | None = None) -> Path | None:
    """The cache directory, or ``None`` when caching is off (the default)."""
    path = explicit or os.environ.get(CACHE_ENV)
    return Path(path) if path else None


def cache_key(spec: str, use_weights: bool) -> str:
    h = hashlib.sha256(f"{spec_fingerprint(spec)}|{__version__}|weights={use_weights}".encode())
    return h.hexdigest()


def cached_table_report(spec: str, use_weights: bool = True, directory: Path | None = None) -> dict:
    """Table report for ``spec``, read from or stored in ``directory`` if given."""
    path = directory / f"{cache_key(spec, use_weights)}.json" if directory else None
    if path is not None and path.is_file():
        try:
            return read_report(path)
        except (OSError, json.JSONDecodeError):
            pass
    report = table_report(build_context(spec), use_weights=use_weights)
    if path is not None:
        try:
            directory.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(canonical_json(report))
            tmp.replace(path)
        except OSError:
            pass
    return report


# ---------------------------------------------------------------------------
# verification


def _okuyama(ctx: Context) -> VerificationReport:
    return verify_okuyama(ctx.js, ctx.algebra, strict=False)


def _otokita(ctx: Context) -> VerificationReport:
    rep = VerificationReport("otokita bound")
    a = ctx.algebra
    dims = [(n, a.zs(n).dim, a.dim - a.radical_power(n).dim) for n in range(a.loewy_length() + 1)]
    bad = [n for n, z, b in dims if z > b]
    rep.add(
        "dim ZS^n <= dim A - dim J^n",
        otokita_bound_check(a) and not bad,
        f"violated at n={bad}" if bad else f"n = 0..{len(dims) - 1}",
    )
    return rep


def _morita(ctx: Context, k: int) -> VerificationReport:
    rep = VerificationReport(f"morita (k={k})")
    m = morita_invariance_check(ctx.algebra, k)
    rep.add(
        "dim ZS^n(A) = dim ZS^n(M_k(A))",
        m.equal,
        f"dim {ctx.algebra.dim} vs {k * k * ctx.algebra.dim}; LL {m.loewy_length_a} vs {m.loewy_length_b}",
    )
    return rep


def _powerful(ctx: Context) -> VerificationReport:
    if not ctx.powerful:
        rep = VerificationReport("powerful theorem")
        rep.skip("hypothesis", "group is not powerful")
        return rep
    return verify_powerful_theorem(ctx.js, ctx.algebra, strict=False)


def run_checks(ctx: Context, checks=DEFAULT_CHECKS, k: int = 2) -> list[VerificationReport]:
    """Run the named suites; unexpected errors become failed checks."""
    unknown = [c for c in checks if c not in ALL_CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    js, a = ctx.js, ctx.algebra
    runners = {
        "jennings": lambda: [verify_jennings_theorem(js, a, strict=False)],
        "rigidity": lambda: [verify_rigidity(a, strict=False)],
        "main": lambda: [verify_main_theorem(js, a, s, strict=False) for s in main_theorem_levels(js)],
        "powerful": lambda: [_powerful(ctx)],
        "zs12": lambda: [verify_zs12_explicit(js, a, strict=False)],
        "morita": lambda: [_morita(ctx, k)],
        "okuyama": lambda: [_okuyama(ctx)],
        "otokita": lambda: [_otokita(ctx)],
        "scan": lambda: [jennings_spanning_scan(js, a)],
    }
    out = []
    for name in checks:
        try:
            out.extend(runners[name]())
        except (ArithmeticError, AlgebraError, ValueError) as exc:
            rep = VerificationReport(name)
            rep.add("completed", False, f"{type(exc).__name__}: {exc}")
            out.append(rep)
    return out


def reports_json(ctx: Context, reports: list[VerificationReport]) -> dict:
    return {
        "spec": ctx.spec,
        "order": ctx.group.order,
        "p": ctx.p,
        "ok": all(r.ok for r in reports),
        "suites": [
            {
                "name": r.name,
                "status": r.status,
                "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in r.checks],
            }
            for r in reports
        ],
    }
