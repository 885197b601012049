import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import all_vectors, brute_span

from zsocle.fplinalg import (
    DimensionMismatchError,
    Subspace,
    check_prime,
    contains,
    kernel,
    matmul,
    rank,
    rref,
    subspace_intersect,
    subspace_sum,
)


def e(i, dim):
    v = [0] * dim
    v[i] = 1
    return v


# --- examples ---------------------------------------------------------------


def test_rref_examples():
    r, k = rref(np.zeros((2, 2)), 3)
    assert k == 0 and not r.any()
    r, k = rref(np.eye(3), 2)
    assert k == 3 and (r == np.eye(3)).all()
    r, k = rref([[1, 1], [1, 2]], 3)
    assert k == 2 and (r == np.eye(2)).all()


def test_kernel_examples():
    assert kernel(np.eye(2), 5).dim == 0
    k = kernel(np.zeros((2, 3)), 2)
    assert k.dim == 3 and k == Subspace.full(3, 2)
    k = kernel([[1, 1, 1]], 3)
    assert k.dim == 2 and k.contains([1, 2, 0])
    assert contains(k, [1, 2, 0])


def test_sum_examples():
    u = Subspace.span([[1, 2, 0], [0, 1, 1]], 3)
    assert subspace_sum(u, Subspace.zero(3, 3)) == u
    assert subspace_sum(Subspace.span([e(0, 3)], 2), Subspace.span([e(1, 3)], 2)) == Subspace.span([e(0, 3), e(1, 3)], 2)
    assert subspace_sum(Subspace.span([[1, 1, 0]], 3), Subspace.span([[1, 2, 0]], 3)) == Subspace.span(
        [e(0, 3), e(1, 3)], 3
    )


def test_intersect_examples():
    u = Subspace.span([[1, 2, 0], [0, 1, 1]], 3)
    assert subspace_intersect(u, u) == u
    a = Subspace.span([e(0, 3), e(1, 3)], 3)
    b = Subspace.span([e(1, 3), e(2, 3)], 3)
    assert subspace_intersect(a, b) == Subspace.span([e(1, 3)], 3)


def test_contains_examples():
    assert Subspace.zero(4, 5).contains([0, 0, 0, 0])
    assert not Subspace.span([e(1, 2)], 2).contains(e(0, 2))
    with pytest.raises(DimensionMismatchError):
        contains(Subspace.full(3, 2), [1, 0])


def test_mismatch_errors():
    with pytest.raises(DimensionMismatchError):
        subspace_sum(Subspace.full(2, 3), Subspace.full(3, 3))
    with pytest.raises(DimensionMismatchError):
        subspace_intersect(Subspace.full(2, 3), Subspace.full(2, 5))


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        check_prime(4)
    with pytest.raises(ValueError):
        Subspace.span([[1, 0]], 6)


def test_canonical_form():
    s = Subspace.span([[2, 1, 0, 1], [1, 1, 1, 0]], 3)
    b = s.basis
    assert (np.diff(s.pivots) > 0).all()
    assert (b[np.arange(s.dim), s.pivots] == 1).all()
    assert (b[:, s.pivots] == np.eye(s.dim, dtype=np.int64)).all()
    again, _ = rref(b, 3)
    assert (again[: s.dim] == b).all()


def test_matmul_large_modulus_exact():
    p = 2_147_483_629
    rng = np.random.default_rng(1)
    a = rng.integers(0, p, size=(5, 7))
    b = rng.integers(0, p, size=(7, 3))
    want = np.array([[sum(int(a[i, k]) * int(b[k, j]) for k in range(7)) % p for j in range(3)] for i in range(5)])
    assert (matmul(a, b, p) == want).all()


# --- exhaustive oracles (ambient <= 6, p <= 3) -------------------------------


def _random_space(rng, dim, p):
    k = int(rng.integers(0, dim + 1))
    return rng.integers(0, p, size=(k, dim))


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("dim", [1, 2, 3, 4, 5, 6])
def test_exhaustive_oracle(p, dim):
    rng = np.random.default_rng(100 * p + dim)
    trials = 12 if p ** dim <= 81 else 4
    everything = all_vectors(dim, p)
    for _ in range(trials):
        gu, gv = _random_space(rng, dim, p), _random_space(rng, dim, p)
        u, v = Subspace.span(gu, p, dim), Subspace.span(gv, p, dim)
        su, sv = brute_span(gu, p, dim), brute_span(gv, p, dim)
        assert len(su) == p**u.dim and len(sv) == p**v.dim
        assert {tuple(x) for x in u.iter_vectors()} == su
        member = ~u.residual(everything).any(axis=1)
        assert {tuple(x) for x in everything[member]} == su
        assert brute_span(np.vstack([gu, gv]), p, dim) == {tuple(x) for x in (u + v).iter_vectors()}
        assert su & sv == {tuple(x) for x in (u & v).iter_vectors()}
        assert u.dim + v.dim == (u + v).dim + (u & v).dim


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(0, 1), min_size=4, max_size=4), max_size=5),
       st.lists(st.lists(st.integers(0, 1), min_size=4, max_size=4), max_size=5))
def test_modular_law_f2_4(gu, gv):
    u = Subspace.span(np.array(gu, dtype=np.int64).reshape(-1, 4), 2, 4)
    v = Subspace.span(np.array(gv, dtype=np.int64).reshape(-1, 4), 2, 4)
    assert u.dim + v.dim == subspace_sum(u, v).dim + subspace_intersect(u, v).dim


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5), st.integers(1, 6), st.sampled_from([2, 3, 5, 7]), st.randoms(use_true_random=False))
def test_rank_nullity_and_idempotence(rows, cols, p, rnd):
    m = np.array([[rnd.randrange(p) for _ in range(cols)] for _ in range(rows)], dtype=np.int64)
    r, k = rref(m, p)
    assert k + kernel(m, p).dim == cols
    r2, k2 = rref(r, p)
    assert k2 == k and (r2 == r).all()
    assert not matmul(m, kernel(m, p).basis.T, p).any()
    assert rank(m.T, p) == k


def test_equal_spans_give_equal_subspaces():
    rng = np.random.default_rng(7)
    for _ in range(20):
        g = rng.integers(0, 5, size=(3, 6))
        mix = rng.integers(0, 5, size=(4, 3))
        s1 = Subspace.span(g, 5, 6)
        s2 = Subspace.span(np.vstack([(mix @ g) % 5, g[::-1]]), 5, 6)
        assert s1 == s2 and hash(s1) == hash(s2)
