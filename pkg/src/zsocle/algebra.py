"""Finite-dimensional unital associative algebras over F_p.

An algebra is presented through its right and left regular
representations: ``right_mult_matrix(y)`` is the matrix ``R`` with
``x * y == x @ R`` for coefficient row vectors, and ``left_mult_matrix(x)``
is ``L`` with ``x * y == y @ L``.  Three concrete kinds exist: dense
structure constants, group algebras (products through the group table)
and full matrix algebras over another algebra.

The Jacobson radical is never computed; constructors that know it attach
it.  Radical powers, right socles ``{x : x J^n = 0}``, the center and
``ZS^n = Z ∩ Soc^n`` are derived from it and memoized per instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .fplinalg import Subspace, as_fp, check_prime, common_left_kernel, matmul
from .groups import Group, SubgroupSet, is_p_group

__all__ = [
    "Algebra",
    "AlgebraElement",
    "AlgebraError",
    "GroupAlgebra",
    "MatrixAlgebra",
    "MoritaReport",
    "RadicalUnknownError",
    "StructureConstantAlgebra",
    "center",
    "central_ideal_check",
    "group_algebra",
    "group_sum",
    "loewy_length",
    "matrix_algebra",
    "morita_invariance_check",
    "multiply",
    "otokita_bound_check",
    "radical_power",
    "socle_n",
    "zs",
]

DENSE_TABLE_LIMIT = 256


class AlgebraError(ValueError):
    pass


class RadicalUnknownError(AlgebraError):
    def __init__(self, msg: str = "radical not supplied"):
        super().__init__(msg)


class Algebra:
    """Base class; subclasses provide the regular representations."""

    def __init__(
        self,
        dim: int,
        p: int,
        unit,
        basis_labels: Sequence[str],
        radical: Subspace | None = None,
        radical_generators=None,
        algebra_generators=None,
    ):
        self.dim = int(dim)
        self.p = check_prime(p)
        self.unit = as_fp(unit, self.p)
        self.unit.setflags(write=False)
        self.basis_labels = tuple(basis_labels)
        if len(self.basis_labels) != self.dim:
            raise AlgebraError("need one label per basis element")
        self.radical = radical
        # rows X with J = A X = X A; defaults to a basis of J
        self._rad_gens = None if radical_generators is None else as_fp(radical_generators, self.p)
        # rows generating A as a unital algebra; defaults to the full basis
        self._alg_gens = None if algebra_generators is None else as_fp(algebra_generators, self.p)
        self._rad_powers: list[Subspace] = []
        self._socles: dict[int, Subspace] = {}
        self._center: Subspace | None = None
        self._zs: dict[int, Subspace] = {}

    # -- representation ---------------------------------------------------

    def right_mult_matrix(self, y) -> np.ndarray:
        raise NotImplementedError

    def left_mult_matrix(self, x) -> np.ndarray:
        raise NotImplementedError

    def mul(self, x, y) -> np.ndarray:
        """Product of coefficient vectors (``x`` may be a stack of rows)."""
        return matmul(as_fp(x, self.p), self.right_mult_matrix(y), self.p)

    def basis_vector(self, i: int) -> np.ndarray:
        e = np.zeros(self.dim, dtype=np.int64)
        e[i] = 1
        return e

    def element(self, coeffs) -> "AlgebraElement":
        return AlgebraElement(self, coeffs)

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, self.unit)

    def structure_constants(self) -> np.ndarray:
        """``T[i, j, k]`` = coefficient of ``b_k`` in ``b_i b_j``."""
        return np.stack([self.right_mult_matrix(self.basis_vector(j)) for j in range(self.dim)], axis=1)

    @property
    def algebra_generators(self) -> np.ndarray:
        return np.eye(self.dim, dtype=np.int64) if self._alg_gens is None else self._alg_gens

    def check_axioms(self, samples: int = 200, seed: int = 0) -> None:
        """Associativity and two-sided unit, exhaustive on basis triples up to dim 64."""
        d, p = self.dim, self.p
        eye = np.eye(d, dtype=np.int64)
        for i in range(d):
            e = eye[i]
            if not (np.array_equal(self.mul(e, self.unit), e) and np.array_equal(self.mul(self.unit, e), e)):
                raise AlgebraError(f"unit fails on basis element {i}")
        if d <= 64:
            left = [self.left_mult_matrix(e) for e in eye]
            for i in range(d):
                for j in range(d):
                    ij = self.mul(eye[i], eye[j])
                    # (b_i b_j) y == b_i (b_j y) for every y
                    if not np.array_equal(self.left_mult_matrix(ij), matmul(left[j], left[i], p)):
                        raise AlgebraError(f"associativity fails for basis pair ({i}, {j})")
        else:
            rng = np.random.default_rng(seed)
            for _ in range(samples):
                x, y, z = rng.integers(0, p, size=(3, d))
                if not np.array_equal(self.mul(self.mul(x, y), z), self.mul(x, self.mul(y, z))):
                    raise AlgebraError("associativity fails on a sampled triple")

    # -- radical, socle, center -------------------------------------------

    def _require_radical(self) -> Subspace:
        if self.radical is None:
            raise RadicalUnknownError()
        return self.radical

    @property
    def radical_generators(self) -> np.ndarray:
        rad = self._require_radical()
        return rad.basis if self._rad_gens is None else self._rad_gens

    def radical_power(self, n: int) -> Subspace:
        """``J^n``, spanned by a basis of ``J^(n-1)`` times ``X`` since
        ``J^(n-1) J = J^(n-1) A X = J^(n-1) X``."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        rad = self._require_radical()
        if not self._rad_powers:
            self._rad_powers = [Subspace.full(self.dim, self.p), rad]
        gens = self.radical_generators
        while len(self._rad_powers) <= n:
            prev = self._rad_powers[-1]
            if prev.dim == 0:
                return prev
            prods = [matmul(prev.basis, self.right_mult_matrix(x), self.p) for x in gens]
            nxt = Subspace.span(np.vstack(prods), self.p, self.dim)
            if nxt == prev:
                raise AlgebraError("supplied radical is not nilpotent")
            self._rad_powers.append(nxt)
        return self._rad_powers[n]

    def nilpotency_index(self) -> int:
        n = 0
        while self.radical_power(n).dim:
            n += 1
        return n

    def socle(self, n: int) -> Subspace:
        """Right socle ``Soc^n = {x : x J^n = 0}``.

        Built as ``Soc^n = {x : x y in Soc^(n-1) for y in X}``, valid because
        ``Soc^(n-1)`` is a two-sided ideal and ``J = X A``.
        """
        if n < 0:
            raise ValueError("n must be nonnegative")
        if n not in self._socles:
            if n == 0:
                soc = Subspace.zero(self.dim, self.p)
            elif self.radical_power(n).dim == 0:
                soc = Subspace.full(self.dim, self.p)
            else:
                prev = self.socle(n - 1)
                quotient = np.eye(self.dim, dtype=np.int64)
                if prev.dim:
                    # v -> residual of v modulo Soc^(n-1)
                    quotient[prev.pivots] = (quotient[prev.pivots] - prev.basis) % self.p
                blocks = (
                    matmul(self.right_mult_matrix(y), quotient, self.p) for y in self.radical_generators
                )
                soc = common_left_kernel(blocks, self.dim, self.p)
            self._socles[n] = soc
        return self._socles[n]

    def center(self) -> Subspace:
        if self._center is None:
            blocks = ((self.right_mult_matrix(b) - self.left_mult_matrix(b)) % self.p for b in self.algebra_generators)
            self._center = common_left_kernel(blocks, self.dim, self.p)
        return self._center

    def zs(self, n: int) -> Subspace:
        if n not in self._zs:
            self._zs[n] = self.center() & self.socle(n)
        return self._zs[n]

    def loewy_length(self) -> int:
        """Nilpotency index of J, cross-checked against ``min{n : ZS^n = Z}``."""
        ll = self.nilpotency_index()
        z = self.center()
        via_zs = 0
        while self.zs(via_zs) != z:
            via_zs += 1
        if via_zs != ll:
            raise AlgebraError(f"Loewy length mismatch: J^n gives {ll}, ZS^n gives {via_zs}")
        return ll


class AlgebraElement:
    """An element of an :class:`Algebra` with arithmetic operators."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: Algebra, coeffs):
        coeffs = as_fp(coeffs, parent.p)
        if coeffs.shape != (parent.dim,):
            raise AlgebraError(f"expected {parent.dim} coefficients")
        coeffs.setflags(write=False)
        self.parent = parent
        self.coeffs = coeffs

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.parent is not self.parent:
                raise AlgebraError("elements belong to different algebras")
            return other
        if isinstance(other, (int, np.integer)):
            return AlgebraElement(self.parent, int(other) * self.parent.unit)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return AlgebraElement(self.parent, int(other) * self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return AlgebraElement(self.parent, int(other) * self.coeffs)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.parent, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.parent, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        return AlgebraElement(self.parent, -self.coeffs)

    def __pow__(self, e: int):
        out = self.parent.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            other = self._coerce(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return other.parent is self.parent and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.coeffs.tobytes()))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __repr__(self) -> str:
        terms = []
        for i in np.flatnonzero(self.coeffs):
            c, lab = int(self.coeffs[i]), self.parent.basis_labels[i]
            if lab == "1":
                terms.append(str(c))
            else:
                terms.append(lab if c == 1 else f"{c}*{lab}")
        return " + ".join(terms) or "0"


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.parent is not y.parent:
        raise AlgebraError("elements belong to different algebras")
    a = x.parent
    return AlgebraElement(a, a.mul(x.coeffs, y.coeffs))


# ---------------------------------------------------------------------------
# concrete algebras


class StructureConstantAlgebra(Algebra):
    """Algebra given by a dense table ``T[i, j, k]`` (``b_i b_j = sum_k T[i,j,k] b_k``)."""

    def __init__(self, table, p: int, unit, basis_labels=None, radical=None, radical_generators=None):
        p = check_prime(p)
        table = as_fp(table, p)
        d = table.shape[0]
        if table.shape != (d, d, d):
            raise AlgebraError("structure constants must have shape (d, d, d)")
        if d > DENSE_TABLE_LIMIT:
            raise AlgebraError(f"dense tables are limited to dimension {DENSE_TABLE_LIMIT}")
        table.setflags(write=False)
        self.table = table
        labels = basis_labels or [f"b{i}" for i in range(d)]
        super().__init__(d, p, unit, labels, radical, radical_generators)

    def right_mult_matrix(self, y) -> np.ndarray:
        # R[i, k] = sum_j y_j T[i, j, k]
        return matmul(np.moveaxis(self.table, 1, 2).reshape(-1, self.dim), as_fp(y, self.p), self.p).reshape(
            self.dim, self.dim
        )

    def left_mult_matrix(self, x) -> np.ndarray:
        # L[j, k] = sum_i x_i T[i, j, k]
        return matmul(as_fp(x, self.p), self.table.reshape(self.dim, -1), self.p).reshape(self.dim, self.dim)


class GroupAlgebra(Algebra):
    """``F_p G`` with basis the group elements; products via the group table."""

    def __init__(self, group: Group, p: int):
        p = check_prime(p)
        self.group = group
        n = group.order
        unit = np.zeros(n, dtype=np.int64)
        unit[0] = 1
        pg = is_p_group(group)
        radical = rad_gens = None
        if pg == p or pg == 1:
            # augmentation ideal, spanned by g - 1
            aug = np.eye(n, dtype=np.int64)[1:] - np.eye(n, dtype=np.int64)[0]
            radical = Subspace.span(aug, p, n)
            rad_gens = np.zeros((len(group.generators), n), dtype=np.int64)
            for r, s in enumerate(group.generators):
                rad_gens[r, s] += 1
                rad_gens[r, 0] -= 1
        alg_gens = np.eye(n, dtype=np.int64)[list(group.generators)] if group.generators else np.zeros((0, n))
        super().__init__(n, p, unit, group.labels, radical, rad_gens, alg_gens)
        # (x*y)[k] = sum_g x[g] y[g^-1 k]
        self._right_index = group.mul[group.inv]
        # (x*y)[k] = sum_h y[h] x[k h^-1]
        self._left_index = group.mul[:, group.inv].T

    def right_mult_matrix(self, y) -> np.ndarray:
        return as_fp(y, self.p)[self._right_index]

    def left_mult_matrix(self, x) -> np.ndarray:
        return as_fp(x, self.p)[self._left_index]

    def mul(self, x, y) -> np.ndarray:
        y = as_fp(y, self.p)
        nz = np.flatnonzero(y)
        if nz.size * 8 < self.dim:
            # sparse right factor: x * y = sum_h y_h (x * h)
            x = as_fp(x, self.p)
            out = np.zeros_like(x)
            for h in nz:
                out[..., self.group.mul[:, h]] += x * y[h]
            return out % self.p
        return super().mul(x, y)

    def group_element(self, g: int) -> np.ndarray:
        return self.basis_vector(g)

    def right_mul_group_element(self, v, g: int) -> np.ndarray:
        """``v * g`` by permuting coefficients."""
        v = as_fp(v, self.p)
        out = np.empty_like(v)
        out[..., self.group.mul[:, g]] = v
        return out


class MatrixAlgebra(Algebra):
    """``M_k(A)`` with basis ``e_ab ⊗ b_i`` at index ``(a*k + b)*dim(A) + i``."""

    def __init__(self, base: Algebra, k: int):
        if k < 1:
            raise AlgebraError("matrix size must be positive")
        self.base, self.k = base, k
        d, p = base.dim, base.p
        dim = k * k * d
        unit = np.zeros((k, k, d), dtype=np.int64)
        for a in range(k):
            unit[a, a] = base.unit
        labels = [
            lab if k == 1 else f"E{a + 1}{b + 1}({lab})"
            for a in range(k)
            for b in range(k)
            for lab in base.basis_labels
        ]
        radical = rad_gens = None
        if base.radical is not None:
            rb = base.radical.basis
            rows = np.zeros((k, k, rb.shape[0], k, k, d), dtype=np.int64)
            for a in range(k):
                for b in range(k):
                    rows[a, b, :, a, b, :] = rb
            radical = Subspace.span(rows.reshape(-1, dim), p, dim)
            bx = base.radical_generators
            gens = np.zeros((k, bx.shape[0], k, k, d), dtype=np.int64)
            for a in range(k):
                gens[a, :, a, a, :] = bx
            rad_gens = gens.reshape(-1, dim)
        ag = []
        for a in range(k):
            for b in range(k):
                m = np.zeros((k, k, d), dtype=np.int64)
                m[a, b] = base.unit
                ag.append(m.ravel())
        for g in base.algebra_generators:
            m = np.zeros((k, k, d), dtype=np.int64)
            m[0, 0] = g
            ag.append(m.ravel())
        super().__init__(dim, p, unit.ravel(), labels, radical, rad_gens, np.array(ag))

    def right_mult_matrix(self, y) -> np.ndarray:
        k, d = self.k, self.base.dim
        Y = as_fp(y, self.p).reshape(k, k, d)
        block = np.zeros((k, d, k, d), dtype=np.int64)
        for b in range(k):
            for c in range(k):
                if Y[b, c].any():
                    block[b, :, c, :] = self.base.right_mult_matrix(Y[b, c])
        return np.kron(np.eye(k, dtype=np.int64), block.reshape(k * d, k * d))

    def left_mult_matrix(self, x) -> np.ndarray:
        k, d = self.k, self.base.dim
        X = as_fp(x, self.p).reshape(k, k, d)
        # rows (b, c, l) -> cols (a, c, i): L_A(X[a, b])[l, i]
        blocks = np.zeros((k, k, d, d), dtype=np.int64)
        for a in range(k):
            for b in range(k):
                if X[a, b].any():
                    blocks[b, a] = self.base.left_mult_matrix(X[a, b])
        full = np.einsum("baLI,cC->bcLaCI", blocks, np.eye(k, dtype=np.int64))
        return full.reshape(self.dim, self.dim)


# ---------------------------------------------------------------------------
# operations


def group_algebra(g: Group, p: int) -> GroupAlgebra:
    return GroupAlgebra(g, p)


def matrix_algebra(a: Algebra, k: int) -> MatrixAlgebra:
    return MatrixAlgebra(a, k)


def radical_power(a: Algebra, n: int) -> Subspace:
    return a.radical_power(n)


def socle_n(a: Algebra, n: int) -> Subspace:
    return a.socle(n)


def center(a: Algebra) -> Subspace:
    return a.center()


def zs(a: Algebra, n: int) -> Subspace:
    return a.zs(n)


def loewy_length(a: Algebra) -> int:
    return a.loewy_length()


def group_sum(a: GroupAlgebra, n: SubgroupSet) -> AlgebraElement:
    """``N^+``, the sum of all elements of ``N``."""
    if not isinstance(a, GroupAlgebra) or n.group is not a.group:
        raise AlgebraError("subgroup does not belong to this group algebra")
    v = np.zeros(a.dim, dtype=np.int64)
    v[n.members] = 1
    return a.element(v)


def central_ideal_check(a: GroupAlgebra, n: SubgroupSet) -> bool:
    """Whether the ideal ``FG · N^+`` lies in the center."""
    if not n.is_normal():
        raise AlgebraError("N must be normal")
    nplus = group_sum(a, n).coeffs
    ideal = Subspace.span(a.right_mult_matrix(nplus), a.p, a.dim)
    return ideal <= a.center()


@dataclass(frozen=True)
class MoritaReport:
    k: int
    loewy_length_a: int
    loewy_length_b: int
    dims_a: tuple[int, ...]
    dims_b: tuple[int, ...]

    @property
    def equal(self) -> bool:
        return self.loewy_length_a == self.loewy_length_b and self.dims_a == self.dims_b


def morita_invariance_check(a: Algebra, k: int = 2) -> MoritaReport:
    """Compare ``dim ZS^n`` of ``a`` and ``M_k(a)`` for ``n = 0..max Loewy length``."""
    a._require_radical()
    b = matrix_algebra(a, k)
    la, lb = a.loewy_length(), b.loewy_length()
    top = max(la, lb)
    return MoritaReport(
        k,
        la,
        lb,
        tuple(a.zs(n).dim for n in range(top + 1)),
        tuple(b.zs(n).dim for n in range(top + 1)),
    )


def otokita_bound_check(a: Algebra) -> bool:
    """``dim ZS^n <= dim A - dim J^n`` for every ``n`` (local algebras only)."""
    rad = a._require_radical()
    if rad.dim != a.dim - 1:
        raise AlgebraError("algebra is not local")
    ll = a.loewy_length()
    return all(a.zs(n).dim <= a.dim - a.radical_power(n).dim for n in range(ll + 1))

