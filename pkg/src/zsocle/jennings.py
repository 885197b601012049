"""Dimension subgroups, Jennings bases and the central-element theorems.

For a finite p-group ``G`` the dimension subgroups
``D_i = {g : g - 1 in J^i}`` satisfy ``D_1 = G`` and
``D_i = (D_ceil(i/p))^p [D_(i-1), G]``.  Choosing ``g_i1, ..., g_ir_i`` in
``D_i`` whose images form a basis of ``D_i / D_(i+1)``, the ordered
products ``prod (g_ij - 1)^m_ij`` (``0 <= m_ij < p``) form a basis of
``F_p G`` graded by weight ``sum i m_ij`` along the radical filtration and
by coweight ``sum i (p - 1 - m_ij)`` along the socle filtration.

The ``verify_*`` functions recompute the relevant statements from linear
algebra and return a :class:`VerificationReport`; with ``strict=True`` a
failed check raises :class:`TheoremViolation`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import ceil

import numpy as np

from .algebra import GroupAlgebra, group_sum
from .fplinalg import Subspace
from .groups import (
    Group,
    GroupError,
    SubgroupSet,
    commutator_subgroup,
    is_p_group,
    minimal_generators_mod,
    power_subgroup,
    subgroup_product,
)

__all__ = [
    "Check",
    "JenningsMonomial",
    "JenningsStructure",
    "TheoremViolation",
    "VerificationReport",
    "dimension_subgroups_group_theoretic",
    "dimension_subgroups_ring_theoretic",
    "is_powerful",
    "jennings_basis",
    "jennings_spanning_scan",
    "monomial_element",
    "predicted_central_monomials",
    "rad_span_by_weight",
    "soc_span_by_weight",
    "verify_jennings_theorem",
    "main_theorem_levels",
    "verify_main_theorem",
    "verify_okuyama",
    "verify_powerful_theorem",
    "verify_rigidity",
    "verify_zs12_explicit",
]


class TheoremViolation(AssertionError):
    def __init__(self, report: "VerificationReport"):
        super().__init__(report.summary())
        self.report = report


@dataclass
class Check:
    name: str
    status: str  # "pass", "fail", "finding" or "skip"
    detail: str = ""


@dataclass
class VerificationReport:
    name: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, "pass" if ok else "fail", detail))
        return ok

    def finding(self, name: str, detail: str) -> None:
        self.checks.append(Check(name, "finding", detail))

    def skip(self, name: str, detail: str) -> None:
        self.checks.append(Check(name, "skip", detail))

    @property
    def status(self) -> str:
        if not self.ok:
            return "FAIL"
        if self.checks and all(c.status == "skip" for c in self.checks):
            return "SKIP"
        if self.findings and all(c.status in ("finding", "skip") for c in self.checks):
            return "FINDING"
        return "PASS"

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def findings(self) -> list[Check]:
        return [c for c in self.checks if c.status == "finding"]

    def summary(self) -> str:
        lines = [f"{self.name}: {self.status}"]
        for c in self.checks:
            lines.append(f"  [{c.status.upper()}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        return "\n".join(lines)

    def _finish(self, strict: bool) -> "VerificationReport":
        if strict and not self.ok:
            raise TheoremViolation(self)
        return self


# ---------------------------------------------------------------------------
# dimension subgroups


@dataclass(frozen=True, eq=False)
class JenningsStructure:
    """Dimension-subgroup chain ``D_1 > ... > D_t = 1`` with chosen generators.

    ``chain[i - 1]`` is ``D_i``.  ``gens`` lists ``(i, j, element)`` in
    lexicographic order; ``ranks[i]`` is ``r_i`` for ``1 <= i < t``.
    """

    group: Group
    p: int
    chain: tuple[SubgroupSet, ...]
    gens: tuple[tuple[int, int, int], ...]
    ranks: dict[int, int]

    @property
    def t(self) -> int:
        return len(self.chain)

    def D(self, i: int) -> SubgroupSet:
        if i < 1:
            raise ValueError("dimension subgroups are indexed from 1")
        return self.chain[i - 1] if i <= self.t else self.group.trivial()

    @property
    def levels(self) -> tuple[int, ...]:
        return tuple(i for i, _, _ in self.gens)

    @property
    def loewy_length(self) -> int:
        return 1 + (self.p - 1) * sum(i * r for i, r in self.ranks.items())

    def chain_orders(self) -> list[int]:
        return [d.order for d in self.chain]

    @cached_property
    def exponent_grid(self) -> np.ndarray:
        """Exponent rows of all monomials in :meth:`monomials` order."""
        k = len(self.gens)
        grid = np.indices((self.p,) * k).reshape(k, -1).T if k else np.zeros((1, 0), dtype=np.intp)
        grid.setflags(write=False)
        return grid

    @cached_property
    def weights(self) -> np.ndarray:
        return self.exponent_grid @ np.asarray(self.levels, dtype=np.intp)

    @cached_property
    def coweights(self) -> np.ndarray:
        return (self.p - 1 - self.exponent_grid) @ np.asarray(self.levels, dtype=np.intp)

    def monomials(self):
        """All Jennings monomials, first generator varying slowest."""
        for exps in itertools.product(range(self.p), repeat=len(self.gens)):
            yield JenningsMonomial(exps, self.levels, self.p)

    def monomial(self, exponents) -> "JenningsMonomial":
        if isinstance(exponents, dict):
            exponents = tuple(exponents.get((i, j), 0) for i, j, _ in self.gens)
        return JenningsMonomial(tuple(exponents), self.levels, self.p)


@dataclass(frozen=True)
class JenningsMonomial:
    exponents: tuple[int, ...]
    levels: tuple[int, ...]
    p: int

    def __post_init__(self):
        if len(self.exponents) != len(self.levels):
            raise ValueError("one exponent per Jennings generator")
        if any(not 0 <= m < self.p for m in self.exponents):
            raise ValueError(f"exponents must lie in [0, {self.p})")

    @property
    def weight(self) -> int:
        return sum(i * m for i, m in zip(self.levels, self.exponents))

    @property
    def coweight(self) -> int:
        return sum(i * (self.p - 1 - m) for i, m in zip(self.levels, self.exponents))

    def as_dict(self) -> dict[tuple[int, int], int]:
        out, seen = {}, {}
        for i, m in zip(self.levels, self.exponents):
            seen[i] = seen.get(i, 0) + 1
            out[(i, seen[i])] = m
        return out


def _require_p_group(g: Group, p: int) -> None:
    q = is_p_group(g)
    if q not in (p, 1):
        raise GroupError(f"{g!r} is not a {p}-group")


def _structure_from_chain(g: Group, p: int, chain: list[SubgroupSet]) -> JenningsStructure:
    gens, ranks = [], {}
    for i in range(1, len(chain)):
        r_i = 0
        if chain[i - 1].order != chain[i].order:
            picks = minimal_generators_mod(g, chain[i - 1], chain[i], p)
            r_i = len(picks)
            gens.extend((i, j + 1, x) for j, x in enumerate(picks))
        ranks[i] = r_i
    return JenningsStructure(g, p, tuple(chain), tuple(gens), ranks)


def dimension_subgroups_group_theoretic(g: Group, p: int) -> JenningsStructure:
    """Chain from ``D_1 = G``, ``D_i = (D_ceil(i/p))^p [D_(i-1), G]``."""
    _require_p_group(g, p)
    chain = [g.whole()]
    while chain[-1].order > 1:
        i = len(chain) + 1
        chain.append(subgroup_product(power_subgroup(chain[ceil(i / p) - 1], p), commutator_subgroup(chain[-1], g)))
    return _structure_from_chain(g, p, chain)


def dimension_subgroups_ring_theoretic(a: GroupAlgebra) -> list[SubgroupSet]:
    """``D_i = {g : g - 1 in J^i}`` by membership tests, until trivial."""
    g = a.group
    a._require_radical()
    diffs = np.eye(g.order, dtype=np.int64)
    diffs[:, 0] -= 1
    chain, i = [], 1
    while True:
        inside = ~a.radical_power(i).residual(diffs).any(axis=1)
        chain.append(g.subgroup(np.flatnonzero(inside)))
        if chain[-1].order == 1:
            return chain
        i += 1


def is_powerful(g: Group, p: int) -> bool:
    _require_p_group(g, p)
    derived = commutator_subgroup(g.whole(), g)
    return derived <= power_subgroup(g.whole(), 4 if p == 2 else p)


# ---------------------------------------------------------------------------
# Jennings basis


def _check_algebra(js: JenningsStructure, a: GroupAlgebra) -> None:
    if not isinstance(a, GroupAlgebra) or a.group is not js.group or a.p != js.p:
        raise ValueError("algebra is not F_p G for this Jennings structure")


def _times_g_minus_1(a: GroupAlgebra, v: np.ndarray, g: int) -> np.ndarray:
    return (a.right_mul_group_element(v, g) - v) % a.p


def monomial_element(js: JenningsStructure, a: GroupAlgebra, m: JenningsMonomial):
    """``prod (g_ij - 1)^m_ij`` with factors in lexicographic order of ``(i, j)``."""
    _check_algebra(js, a)
    if m.levels != js.levels or m.p != js.p:
        raise ValueError("monomial does not match this Jennings structure")
    v = a.unit.copy()
    for (_, _, g), e in zip(js.gens, m.exponents):
        for _ in range(e):
            v = _times_g_minus_1(a, v, g)
    return a.element(v)


def _basis_matrix(js: JenningsStructure, a: GroupAlgebra) -> np.ndarray:
    """Rows are the monomial elements in :meth:`JenningsStructure.monomials` order."""
    cached = getattr(a, "_jennings_cache", None)
    if cached is not None and cached[0] is js:
        return cached[1]
    V = a.unit[None, :].copy()
    for _, _, g in js.gens:
        powers = [V]
        for _ in range(js.p - 1):
            powers.append(_times_g_minus_1(a, powers[-1], g))
        V = np.stack(powers, axis=1).reshape(-1, a.dim)
    V.setflags(write=False)
    a._jennings_cache = (js, V)
    return V


def jennings_basis(js: JenningsStructure, a: GroupAlgebra):
    """All ``|G|`` monomials paired with their elements; checks they form a basis."""
    _check_algebra(js, a)
    V = _basis_matrix(js, a)
    if Subspace.span(V, a.p, a.dim).dim != a.dim:
        raise ArithmeticError("Jennings monomials are linearly dependent")
    return [(m, a.element(v)) for m, v in zip(js.monomials(), V)]


def _span_where(js, a, mask) -> Subspace:
    return Subspace.span(_basis_matrix(js, a)[mask], a.p, a.dim)


def rad_span_by_weight(js: JenningsStructure, a: GroupAlgebra, n: int) -> Subspace:
    """Span of the monomials of weight ``>= n``."""
    _check_algebra(js, a)
    return _span_where(js, a, js.weights >= n)


def soc_span_by_weight(js: JenningsStructure, a: GroupAlgebra, n: int) -> Subspace:
    """Span of the monomials of coweight ``< n``."""
    _check_algebra(js, a)
    return _span_where(js, a, js.coweights < n)


def _spans_exactly(space: Subspace, rows: np.ndarray) -> bool:
    # rows are linearly independent (a subset of the Jennings basis)
    return rows.shape[0] == space.dim and (rows.shape[0] == 0 or space.contains_all(rows))


def _predicted_mask(js: JenningsStructure, s: int) -> np.ndarray:
    high = np.asarray(js.levels, dtype=np.intp) >= s
    return np.all(js.exponent_grid[:, high] == js.p - 1, axis=1)


def _low_coweights(js: JenningsStructure, s: int) -> np.ndarray:
    low = np.where(np.asarray(js.levels, dtype=np.intp) < s, js.levels, 0)
    return (js.p - 1 - js.exponent_grid) @ low.astype(np.intp)


def predicted_central_monomials(js: JenningsStructure, s: int) -> list[JenningsMonomial]:
    """Monomials with every exponent at level ``>= s`` equal to ``p - 1``."""
    if s < 1:
        raise ValueError("s must be at least 1")
    derived = commutator_subgroup(js.group.whole(), js.group)
    if not derived <= js.D(s):
        raise ValueError(f"D_{s} does not contain [G, G]")
    mask = _predicted_mask(js, s)
    return [js.monomial(row) for row in js.exponent_grid[mask]]


def main_theorem_levels(js: JenningsStructure) -> list[int]:
    """Levels ``s`` with ``D_s >= [G, G]``, dropping those where ``r_(s-1) = 0``
    (they repeat the statement for ``s - 1`` verbatim)."""
    derived = commutator_subgroup(js.group.whole(), js.group)
    return [s for s in range(1, js.t + 1) if derived <= js.D(s) and (s == 1 or js.ranks.get(s - 1, 0) > 0)]


def _noncentral_rows(a: GroupAlgebra, rows: np.ndarray) -> np.ndarray:
    """Indices of rows failing ``x g == g x`` for some group element ``g``."""
    mul = a.group.mul
    bad = np.zeros(rows.shape[0], dtype=bool)
    for g in range(a.group.order):
        xg = np.empty_like(rows)
        xg[:, mul[:, g]] = rows
        gx = np.empty_like(rows)
        gx[:, mul[g]] = rows
        bad |= np.any(xg != gx, axis=1)
    return np.flatnonzero(bad)


def _fmt(js: JenningsStructure, exps) -> str:
    names = [js.group.labels[g] for _, _, g in js.gens]
    parts = [f"({n}-1)^{e}" if e > 1 else f"({n}-1)" for n, e in zip(names, exps) if e]
    return "*".join(parts) or "1"


# ---------------------------------------------------------------------------
# verification suites


def verify_jennings_theorem(js: JenningsStructure, a: GroupAlgebra, strict: bool = True) -> VerificationReport:
    """Ring-theoretic chain, weight spans and the Loewy length formula."""
    _check_algebra(js, a)
    rep = VerificationReport("jennings")
    ring = dimension_subgroups_ring_theoretic(a)
    group_chain = list(js.chain)
    rep.add(
        "dimension subgroups (ring = group recursion)",
        ring == group_chain,
        f"orders {[d.order for d in group_chain]} vs {[d.order for d in ring]}",
    )
    rep.add("chain members normal", all(d.is_normal() for d in js.chain))
    size = 1
    for r in js.ranks.values():
        size *= js.p**r
    rep.add("prod p^r_i = |G|", size == js.group.order, f"{size} vs {js.group.order}")
    V = _basis_matrix(js, a)
    independent = V.shape[0] == a.dim and Subspace.span(V, a.p, a.dim).dim == a.dim
    if not rep.add("Jennings monomials form a basis", independent):
        return rep._finish(strict)
    ll = a.nilpotency_index()
    rep.add("Loewy length formula", ll == js.loewy_length, f"formula {js.loewy_length}, J^n = 0 first at {ll}")
    bad_rad = [n for n in range(ll + 1) if not _spans_exactly(a.radical_power(n), V[js.weights >= n])]
    rep.add("rad^n = span(weight >= n)", not bad_rad, f"mismatch at n={bad_rad}" if bad_rad else f"n = 0..{ll}")
    bad_soc = [n for n in range(ll + 1) if not _spans_exactly(a.socle(n), V[js.coweights < n])]
    rep.add("soc^n = span(coweight < n)", not bad_soc, f"mismatch at n={bad_soc}" if bad_soc else f"n = 0..{ll}")
    return rep._finish(strict)


def verify_rigidity(a: GroupAlgebra, strict: bool = True) -> VerificationReport:
    rep = VerificationReport("rigidity")
    ll = a.nilpotency_index()
    bad = [n for n in range(ll + 1) if a.socle(n) != a.radical_power(ll - n)]
    rep.add("soc^n = rad^(LL-n)", not bad, f"LL={ll}" + (f", mismatch at n={bad}" if bad else ""))
    return rep._finish(strict)


def verify_main_theorem(js: JenningsStructure, a: GroupAlgebra, s: int, strict: bool = True) -> VerificationReport:
    _check_algebra(js, a)
    rep = VerificationReport(f"main theorem (s={s})")
    predicted_central_monomials(js, s)  # validates the hypothesis on D_s
    mask = _predicted_mask(js, s)
    V = _basis_matrix(js, a)
    rows, exps = V[mask], js.exponent_grid[mask]

    bad = _noncentral_rows(a, rows)
    rep.add(
        "predicted monomials central",
        bad.size == 0,
        f"{rows.shape[0]} monomials" + (f"; not central: {[_fmt(js, exps[k]) for k in bad[:3]]}" if bad.size else ""),
    )

    top = js.p - 1
    tail = js.monomial([0 if i < s else top for i in js.levels])
    ds_plus = group_sum(a, js.D(s))
    rep.add("tail product = D_s^+", monomial_element(js, a, tail) == ds_plus, f"|D_{s}| = {js.D(s).order}")

    ideal = Subspace.span(a.right_mult_matrix(ds_plus.coeffs), a.p, a.dim)
    quotient = js.group.order // js.D(s).order
    rep.add(
        "span(predicted) = FG·D_s^+",
        _spans_exactly(ideal, rows) and rows.shape[0] == quotient,
        f"{rows.shape[0]} monomials, dim FG·D_s^+ = {ideal.dim}, |G/D_s| = {quotient}",
    )

    # ZS^n ascends, so each monomial is tested at the first n the theorem covers
    low = _low_coweights(js, s)[mask]
    missing = sorted(
        {int(c) + 1 for c in np.unique(low) if not a.zs(int(c) + 1).contains_all(rows[low == c])}
    )
    rep.add("predicted monomials with low coweight < n lie in ZS^n", not missing, f"fails at n={missing}" if missing else "")

    n_s = 1 + (js.p - 1) * sum(i * r for i, r in js.ranks.items() if i < s)
    dim = a.zs(n_s).dim
    rep.add("dim ZS^(n_s) >= |G/D_s|", dim >= quotient, f"n_s={n_s}: {dim} >= {quotient}")
    return rep._finish(strict)


def _powerful_mask(js: JenningsStructure, n: int) -> np.ndarray:
    levels = np.asarray(js.levels, dtype=np.intp)
    grid, top = js.exponent_grid, js.p - 1
    upper = np.all(grid[:, levels >= 2] == top, axis=1)
    return upper & ((top - grid[:, levels == 1]).sum(axis=1) < n)


def verify_powerful_theorem(js: JenningsStructure, a: GroupAlgebra, strict: bool = True) -> VerificationReport:
    _check_algebra(js, a)
    p = js.p
    if not is_powerful(js.group, p):
        raise ValueError(f"{js.group!r} is not powerful")
    rep = VerificationReport("powerful theorem")
    rep.add("D_2 = D_p", js.D(2) == js.D(p), f"|D_2| = {js.D(2).order}, |D_p| = {js.D(p).order}")
    V = _basis_matrix(js, a)
    bad = [n for n in range(1, p + 1) if not _spans_exactly(a.zs(n), V[_powerful_mask(js, n)])]
    dims = [a.zs(n).dim for n in range(1, p + 1)]
    rep.add("ZS^n = predicted span for 1 <= n <= p", not bad, f"dims {dims}" + (f"; mismatch at n={bad}" if bad else ""))
    rep.add("soc^p inside Z", a.socle(p) <= a.center())
    above = a.socle(p + 1)
    if above <= a.center():
        rep.finding("soc^(p+1) inside Z", "holds for this group")
    else:
        inside = np.flatnonzero(~above.residual(V).any(axis=1))
        bad = inside[np.isin(np.arange(inside.size), _noncentral_rows(a, V[inside]))]
        witness = _fmt(js, js.exponent_grid[bad[-1]]) if bad.size else None
        rep.finding("soc^(p+1) not inside Z", f"witness {witness}" if witness else "no monomial witness")
    return rep._finish(strict)


def verify_zs12_explicit(js: JenningsStructure, a: GroupAlgebra, strict: bool = True) -> VerificationReport:
    _check_algebra(js, a)
    rep = VerificationReport("ZS^1 and ZS^2 explicit")
    top = js.p - 1
    full = [top] * len(js.gens)
    rows = [monomial_element(js, a, js.monomial(full)).coeffs]
    rep.add("ZS^1 = F·(top monomial)", _spans_exactly(a.zs(1), np.array(rows)), f"dim ZS^1 = {a.zs(1).dim}")
    for k, i in enumerate(js.levels):
        if i == 1:
            exps = list(full)
            exps[k] = top - 1
            rows.append(monomial_element(js, a, js.monomial(exps)).coeffs)
    r1 = js.ranks.get(1, 0)
    rep.add(
        "ZS^2 = explicit span",
        _spans_exactly(a.zs(2), np.array(rows)),
        f"dim ZS^2 = {a.zs(2).dim}, 1 + r_1 = {1 + r1}",
    )
    rep.add("soc^2 inside Z", a.socle(2) <= a.center())
    return rep._finish(strict)


def verify_okuyama(js: JenningsStructure, a: GroupAlgebra, strict: bool = True) -> VerificationReport:
    """``dim ZS^2 = 1 + r_1``, cross-checked with the explicit ZS^2 basis."""
    rep = VerificationReport("okuyama")
    r1 = js.ranks.get(1, 0)
    dim = a.zs(2).dim
    rep.add("dim ZS^2 = 1 + r_1", dim == 1 + r1, f"{dim} vs 1 + {r1}")
    explicit = verify_zs12_explicit(js, a, strict=False)
    rep.add("agrees with explicit ZS^2 basis", explicit.checks[1].status == "pass")
    return rep._finish(strict)


def jennings_spanning_scan(js: JenningsStructure, a: GroupAlgebra) -> VerificationReport:
    """Report the ``n`` where the monomials inside ``ZS^n`` do not span it."""
    _check_algebra(js, a)
    rep = VerificationReport("Jennings spanning scan")
    V = _basis_matrix(js, a)
    failing = []
    for n in range(1, js.loewy_length + 1):
        target = a.zs(n)
        # monomials are independent, so their span inside ZS^n has dimension = count
        count = int((~target.residual(V).any(axis=1)).sum())
        if count != target.dim:
            failing.append((n, count, target.dim))
    if failing:
        rep.finding(
            "ZS^n without a Jennings-monomial basis",
            "; ".join(f"n={n}: monomials span {g} of {t}" for n, g, t in failing),
        )
    else:
        rep.add("every ZS^n spanned by Jennings monomials", True, f"n = 1..{js.loewy_length}")
    rep.data["failing_n"] = [n for n, _, _ in failing]
    return rep
