import numpy as np
import pytest
from oracles import naive_center, naive_radical_powers, naive_socle

from zsocle.algebra import (
    AlgebraError,
    RadicalUnknownError,
    StructureConstantAlgebra,
    center,
    central_ideal_check,
    group_algebra,
    group_sum,
    loewy_length,
    matrix_algebra,
    morita_invariance_check,
    multiply,
    otokita_bound_check,
    radical_power,
    socle_n,
    zs,
)
from zsocle.catalog import builtin_groups
from zsocle.fplinalg import Subspace
from zsocle.groups import (
    commutator_subgroup,
    conjugacy_classes,
    cyclic,
    dihedral,
    elementary_abelian,
    extraspecial_minus,
    extraspecial_plus,
    quaternion,
)


def small_algebras():
    for spec, g in builtin_groups():
        if g.order <= 32:
            yield spec, group_algebra(g, g.p_hint)


# --- examples ---------------------------------------------------------------


def test_group_algebra_examples():
    f = group_algebra(cyclic(1), 5)
    assert f.dim == 1 and loewy_length(f) == 1
    a3 = group_algebra(cyclic(3), 3)
    assert a3.dim == 3 and radical_power(a3, 1).dim == 2
    x = group_algebra(extraspecial_plus(3), 3)
    assert x.dim == 27 and radical_power(x, 1).dim == 26
    with pytest.raises(ValueError):
        group_algebra(cyclic(3), 4)


def test_radical_not_supplied():
    a = group_algebra(cyclic(6), 2)
    with pytest.raises(RadicalUnknownError, match="radical not supplied"):
        radical_power(a, 1)
    with pytest.raises(RadicalUnknownError):
        zs(a, 1)
    assert center(a).dim == 6


def test_matrix_algebra_examples():
    a = group_algebra(cyclic(2), 2)
    m = matrix_algebra(a, 2)
    assert m.dim == 8 and radical_power(m, 1).dim == 4
    unit = np.zeros(8, dtype=np.int64)
    unit[0 * a.dim] = unit[3 * a.dim] = 1  # e_11 ⊗ 1 + e_22 ⊗ 1
    assert (m.unit == unit).all()
    m.check_axioms()
    one = matrix_algebra(a, 1)
    assert (one.structure_constants() == a.structure_constants()).all()
    mf = matrix_algebra(group_algebra(cyclic(1), 2), 2)
    assert center(mf).dim == 1


def test_multiply_examples():
    a = group_algebra(cyclic(3), 3)
    g = a.element(a.group_element(1))
    one = a.one()
    assert multiply(g, one) == g
    assert ((g - 1) ** 3).is_zero()
    x = group_algebra(extraspecial_plus(3), 3)
    ea, eb = (x.element(x.group_element(x.group.index_of(s))) for s in "ab")
    assert not ((eb - 1) * (ea - 1) - (ea - 1) * (eb - 1)).is_zero()
    with pytest.raises(AlgebraError):
        multiply(g, ea)


def test_radical_power_examples():
    a = group_algebra(cyclic(9), 3)
    assert radical_power(a, 0) == Subspace.full(9, 3)
    assert [radical_power(a, n).dim for n in range(12)] == [max(0, 9 - n) for n in range(12)]
    x = group_algebra(extraspecial_plus(3), 3)
    assert radical_power(x, 9).dim == 0 and radical_power(x, 8).dim > 0


def test_socle_examples():
    a = group_algebra(cyclic(3), 3)
    assert socle_n(a, 0).dim == 0
    s1 = socle_n(a, 1)
    x = a.element(a.group_element(1)) - 1
    assert s1 == Subspace.span([(x * x).coeffs], 3)
    g = group_algebra(extraspecial_plus(3), 3)
    assert socle_n(g, 1) == Subspace.span([np.ones(27, dtype=np.int64)], 3)
    assert socle_n(g, 40) == Subspace.full(27, 3)


def test_center_examples():
    assert center(group_algebra(elementary_abelian(2, 3), 2)).dim == 8
    assert center(group_algebra(extraspecial_plus(3), 3)).dim == 11
    assert center(group_algebra(dihedral(16), 2)).dim == 7


def test_zs_examples():
    for p in (2, 3, 5):
        a = group_algebra(cyclic(p), p)
        assert [zs(a, n).dim for n in range(p + 2)] == [min(n, p) for n in range(p + 2)]
        for n in range(p + 1):
            assert zs(a, n) == socle_n(a, n)
    x = group_algebra(extraspecial_plus(3), 3)
    assert [zs(x, n).dim for n in range(1, 10)] == [1, 3, 6, 8, 9, 9, 10, 10, 11]
    assert zs(x, 0).dim == 0 and zs(x, 30) == center(x)


def test_loewy_length_examples():
    assert loewy_length(group_algebra(cyclic(9), 3)) == 9
    assert loewy_length(group_algebra(extraspecial_minus(3), 3)) == 11


def test_group_sum_examples():
    a = group_algebra(cyclic(2), 2)
    assert group_sum(a, a.group.trivial()) == a.one()
    assert (group_sum(a, a.group.whole()).coeffs == [1, 1]).all()
    x = group_algebra(extraspecial_plus(3), 3)
    g = x.group
    c = g.index_of("c")
    want = np.zeros(27, dtype=np.int64)
    want[[0, c, g.mul[c, c]]] = 1
    assert (group_sum(x, commutator_subgroup(g.whole())).coeffs == want).all()
    with pytest.raises(AlgebraError):
        group_sum(x, cyclic(3).whole())


def test_central_ideal_examples():
    x = group_algebra(extraspecial_plus(3), 3)
    g = x.group
    assert central_ideal_check(x, g.whole())
    assert central_ideal_check(x, commutator_subgroup(g.whole()))
    assert not central_ideal_check(x, g.trivial())


def test_morita_examples():
    a = group_algebra(cyclic(2), 2)
    assert morita_invariance_check(a, 1).equal
    r = morita_invariance_check(a, 2)
    assert r.equal and r.dims_a[1:3] == (1, 2)


def test_otokita_examples():
    for p in (2, 3, 5):
        a = group_algebra(cyclic(p), p)
        assert all(zs(a, n).dim == a.dim - radical_power(a, n).dim for n in range(p + 1))
        assert otokita_bound_check(a)
    x = group_algebra(extraspecial_plus(3), 3)
    assert otokita_bound_check(x)
    assert zs(x, 2).dim == 3 <= 27 - radical_power(x, 2).dim
    assert otokita_bound_check(group_algebra(extraspecial_minus(3), 3))
    with pytest.raises(AlgebraError):
        otokita_bound_check(matrix_algebra(group_algebra(cyclic(2), 2), 2))


# --- properties against naive definitions ------------------------------------


def test_fast_paths_match_definitions():
    for spec, a in small_algebras():
        if a.dim > 16:
            continue
        a.check_axioms()
        powers = naive_radical_powers(a)
        ll = len(powers) - 1
        assert ll == a.loewy_length(), spec
        for n, jn in enumerate(powers):
            assert a.radical_power(n) == jn, (spec, n)
            assert a.socle(n) == naive_socle(a, jn), (spec, n)
        assert a.center() == naive_center(a), spec


def test_filtration_properties():
    for spec, a in small_algebras():
        ll = a.loewy_length()
        rad = a.radical_power(1)
        for n in range(ll + 1):
            assert a.radical_power(n + 1) <= a.radical_power(n)
            assert a.socle(n) <= a.socle(n + 1)
            prods = np.array([a.mul(x, y) for x in a.radical_power(n).basis[:6] for y in rad.basis[:6]])
            assert a.radical_power(n + 1).contains_all(prods.reshape(-1, a.dim)), (spec, n)
        assert a.socle(0).dim == 0 and a.socle(ll) == Subspace.full(a.dim, a.p)


def test_class_sums_span_center():
    for spec, a in small_algebras():
        sums = np.zeros((0, a.dim), dtype=np.int64)
        for cls in conjugacy_classes(a.group):
            row = np.zeros(a.dim, dtype=np.int64)
            row[cls] = 1
            sums = np.vstack([sums, row])
        assert a.center() == Subspace.span(sums, a.p, a.dim), spec


def test_zs_is_ideal_of_center():
    for spec, a in small_algebras():
        z = a.center()
        for n in range(a.loewy_length() + 1):
            zn = a.zs(n)
            prods = [a.mul(x, w) for x in zn.basis for w in z.basis]
            if prods:
                assert zn.contains_all(np.array(prods)), (spec, n)
            assert zn == a.center() & a.socle(n)


def test_rigidity_and_reynolds():
    for spec, a in small_algebras():
        ll = a.loewy_length()
        for n in range(ll + 1):
            assert a.socle(n) == a.radical_power(ll - n), (spec, n)
        assert a.zs(1) == Subspace.span([np.ones(a.dim, dtype=np.int64)], a.p, a.dim)


def test_structure_constant_algebra():
    # F_3[x]/(x^3) with basis 1, x, x^2
    table = np.zeros((3, 3, 3), dtype=np.int64)
    for i in range(3):
        for j in range(3):
            if i + j < 3:
                table[i, j, i + j] = 1
    rad = Subspace.span([[0, 1, 0], [0, 0, 1]], 3)
    a = StructureConstantAlgebra(table, 3, [1, 0, 0], radical=rad, radical_generators=[[0, 1, 0]])
    a.check_axioms()
    assert a.loewy_length() == 3
    assert [a.zs(n).dim for n in range(4)] == [0, 1, 2, 3]
    bad = table.copy()
    bad[1, 1] = [1, 0, 0]  # x^2 = 1 breaks associativity with x^2 * x
    with pytest.raises(AlgebraError):
        StructureConstantAlgebra(bad, 3, [1, 0, 0]).check_axioms()


def test_morita_quaternion():
    assert morita_invariance_check(group_algebra(quaternion(8), 2), 2).equal
