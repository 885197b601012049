"""Exact linear algebra over a prime field F_p.

Matrices are plain ``numpy`` integer arrays whose entries are kept reduced
into ``[0, p)``.  Subspaces of ``F_p^d`` are stored canonically by the
reduced row echelon form of a basis, so two :class:`Subspace` values are
equal exactly when their basis matrices coincide.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

import numpy as np
from sympy import isprime

__all__ = [
    "DimensionMismatchError",
    "Subspace",
    "as_fp",
    "check_prime",
    "common_left_kernel",
    "contains",
    "kernel",
    "matmul",
    "rank",
    "rref",
    "subspace_intersect",
    "subspace_sum",
]

_FLOAT_EXACT = 2**53
_INT_SAFE = 2**62


class DimensionMismatchError(ValueError):
    """Operands live in different ambient spaces or over different fields."""


@lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    p = int(p)
    if not isprime(p):
        raise ValueError(f"modulus {p} is not prime")
    if (p - 1) ** 2 >= _INT_SAFE:
        raise ValueError(f"modulus {p} too large for native products")
    return p


def as_fp(a, p: int) -> np.ndarray:
    """Return ``a`` as an int64 array reduced mod ``p`` (always a copy)."""
    return np.mod(np.asarray(a, dtype=np.int64), p)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Matrix product mod ``p``.

    Uses a float64 BLAS product whenever every partial sum is exactly
    representable, otherwise chunks the inner dimension in int64.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    inner = a.shape[-1]
    bound = (p - 1) ** 2
    if inner * bound < _FLOAT_EXACT:
        out = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
        return np.mod(out, p).astype(np.int64)
    step = max(1, _INT_SAFE // max(bound, 1))
    out = None
    for s in range(0, inner, step):
        part = np.mod(a[..., s : s + step] @ b[s : s + step], p)
        out = part if out is None else np.mod(out + part, p)
    if out is None:
        out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
    return out


def _rref_inplace(a: np.ndarray, p: int) -> list[int]:
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r, c:] = (a[r, c:] * pow(lead, -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            # columns left of c are already zero in the pivot row
            a[hit, c:] = (a[hit, c:] - np.outer(col[hit], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return pivots


def rref(m, p: int) -> tuple[np.ndarray, int]:
    """Reduced row echelon form of ``m`` over F_p and its rank.

    The result has the shape of ``m``; zero rows are moved to the bottom.
    """
    a = as_fp(m, p)
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    pivots = _rref_inplace(a, p)
    return a, len(pivots)


def rank(m, p: int) -> int:
    return rref(m, p)[1]


def kernel(m, p: int) -> "Subspace":
    """The subspace ``{v : m @ v == 0}`` of ``F_p^cols``."""
    a = as_fp(m, p)
    if a.ndim != 2:
        raise ValueError("kernel expects a 2-d matrix")
    cols = a.shape[1]
    pivots = _rref_inplace(a, p)
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    basis[np.arange(len(free)), free] = 1
    if pivots and free:
        basis[:, pivots] = (-a[: len(pivots)][:, free].T) % p
    return Subspace.span(basis, p, cols)


def common_left_kernel(blocks: Iterable[np.ndarray], dim: int, p: int) -> "Subspace":
    """``{x in F_p^dim : x @ B == 0 for every B in blocks}``.

    The blocks are consumed one at a time and the candidate space shrinks
    as it goes, so the full stacked matrix is never formed.
    """
    cand = np.eye(dim, dtype=np.int64)
    for block in blocks:
        if cand.shape[0] == 0:
            break
        img = matmul(cand, block, p)
        if not img.any():
            continue
        coeffs = kernel(img.T, p).basis
        cand = matmul(coeffs, cand, p)
    return Subspace.span(cand, p, dim)


class Subspace:
    """A subspace of ``F_p^ambient_dim`` held as a canonical RREF basis.

    ``basis`` is read-only with one row per basis vector, no zero rows,
    strictly increasing pivots and identity columns at the pivots.
    """

    __slots__ = ("basis", "p", "ambient_dim", "pivots", "_hash")

    def __init__(self, basis: np.ndarray, p: int, ambient_dim: int, pivots=None):
        # trusted constructor; use Subspace.span for arbitrary spanning sets
        basis = np.asarray(basis, dtype=np.int64).reshape(-1, ambient_dim)
        basis.setflags(write=False)
        self.basis = basis
        self.p = p
        self.ambient_dim = ambient_dim
        if pivots is None:
            pivots = [int(np.flatnonzero(row)[0]) for row in basis]
        self.pivots = np.asarray(pivots, dtype=np.intp)
        self._hash = None

    @classmethod
    def span(cls, vectors, p: int, ambient_dim: int | None = None) -> "Subspace":
        p = check_prime(p)
        a = as_fp(vectors, p)
        if ambient_dim is None:
            if a.ndim != 2:
                raise ValueError("ambient_dim required for an empty spanning set")
            ambient_dim = a.shape[1]
        a = a.reshape(-1, ambient_dim)
        pivots = _rref_inplace(a, p)
        return cls(a[: len(pivots)].copy(), p, ambient_dim, pivots)

    @classmethod
    def zero(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(np.zeros((0, ambient_dim), dtype=np.int64), check_prime(p), ambient_dim, [])

    @classmethod
    def full(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(np.eye(ambient_dim, dtype=np.int64), check_prime(p), ambient_dim, range(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim}, p={self.p})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.p == other.p
            and self.ambient_dim == other.ambient_dim
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.ambient_dim, self.basis.tobytes()))
        return self._hash

    def _check_compatible(self, other: "Subspace") -> None:
        if self.p != other.p or self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(
                f"F_{self.p}^{self.ambient_dim} vs F_{other.p}^{other.ambient_dim}"
            )

    def residual(self, vectors) -> np.ndarray:
        """Reduce each row of ``vectors`` against the basis."""
        v = as_fp(vectors, self.p)
        if v.shape[-1] != self.ambient_dim:
            raise DimensionMismatchError(
                f"vector length {v.shape[-1]} != ambient dimension {self.ambient_dim}"
            )
        if self.dim == 0:
            return v
        return (v - matmul(v[..., self.pivots], self.basis, self.p)) % self.p

    def contains(self, vec) -> bool:
        return not self.residual(vec).any()

    def contains_all(self, vectors) -> bool:
        return not self.residual(np.reshape(vectors, (-1, self.ambient_dim))).any()

    def __contains__(self, vec) -> bool:
        return self.contains(vec)

    def __le__(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return other.contains_all(self.basis)

    def __ge__(self, other: "Subspace") -> bool:
        return other <= self

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return subspace_intersect(self, other)

    def coordinates(self, vectors) -> np.ndarray:
        """Coefficients expressing member vectors in the basis."""
        v = as_fp(vectors, self.p)
        if self.residual(v).any():
            raise ValueError("vector not in subspace")
        return v[..., self.pivots]

    def iter_vectors(self):
        """Every vector of the subspace (``p**dim`` of them)."""
        for coeffs in itertools.product(range(self.p), repeat=self.dim):
            yield np.asarray(coeffs, dtype=np.int64) @ self.basis % self.p


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    u._check_compatible(v)
    if v.dim == 0:
        return u
    if u.dim == 0:
        return v
    return Subspace.span(np.vstack([u.basis, v.basis]), u.p, u.ambient_dim)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Zassenhaus intersection: row-reduce ``[[U, U], [V, 0]]``."""
    u._check_compatible(v)
    d, p = u.ambient_dim, u.p
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(d, p)
    block = np.zeros((u.dim + v.dim, 2 * d), dtype=np.int64)
    block[: u.dim, :d] = u.basis
    block[: u.dim, d:] = u.basis
    block[u.dim :, :d] = v.basis
    pivots = _rref_inplace(block, p)
    rows = [r for r, c in enumerate(pivots) if c >= d]
    return Subspace.span(block[rows, d:], p, d)


def contains(u: Subspace, vec) -> bool:
    vec = np.asarray(vec)
    if vec.shape != (u.ambient_dim,):
        raise DimensionMismatchError(f"expected a vector of length {u.ambient_dim}")
    return u.contains(vec)
