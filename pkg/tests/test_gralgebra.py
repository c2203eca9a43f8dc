from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semigraded.errors import BadParam, GradingViolation, SemigroupMismatch, UnknownName
from semigraded.gralgebra import (
    GradedAlgebra,
    adjoin_unit,
    catalog_names,
    direct_sum,
    find_unit,
    full_matrix,
    ideal_generated,
    is_graded_subspace,
    opposite,
    paper_catalog,
    parse_catalog_spec,
    quotient_algebra,
    subalgebra_on,
    subspace_product,
    subspace_sum,
    upper_triangular,
    validate,
    validate_or_raise,
    with_trivial_grading,
)
from semigraded.linalg import Subspace, vec
from semigraded.semigroup import catalog_semigroup, trivial_semigroup

CATALOG_ARGS = {
    "exampleT1": (2,), "exampleT2": (2,), "exampleT3": (2,),
    "mk_column_graded": (2,), "utk_column_graded": (3,),
    "full_matrix": (2,), "upper_triangular": (3,),
    "thm_T1_fractional": (), "thm_T2_fractional": (), "thm_T3_fractional": (),
    "mk_zhalf_graded": (),
}


def m2_label(alg, name):
    return alg.basis_labels.index(name)


def test_every_catalog_entry_validates():
    for name in catalog_names():
        alg = paper_catalog(name, *CATALOG_ARGS[name])
        assert validate(alg)["ok"], name


def test_catalog_unknown_and_bad_params():
    with pytest.raises(UnknownName):
        paper_catalog("unheard_of")
    with pytest.raises(BadParam):
        paper_catalog("full_matrix")
    with pytest.raises(BadParam):
        paper_catalog("mk_column_graded", 1)


def test_parse_catalog_spec():
    assert parse_catalog_spec("catalog:full_matrix(3)").dim == 9
    assert parse_catalog_spec("thm_T3_fractional").dim == 6


def test_grading_violation_detected():
    # swap e12 of the diag/antidiag graded M2 into degree zero
    alg = paper_catalog("mk_zhalf_graded")
    bad = GradedAlgebra(
        dim=alg.dim, basis_labels=alg.basis_labels, structure=alg.structure,
        degree=(0, 0, 1, 0), semigroup=alg.semigroup, unit=alg.unit)
    report = validate(bad)
    assert not report["ok"]
    assert any(v[0] == "grading" for v in report["violations"])
    with pytest.raises(GradingViolation):
        validate_or_raise(bad)


def test_zero_algebra_any_degrees_ok():
    zero = GradedAlgebra(2, ("x", "y"), {}, (0, 1), catalog_semigroup("T2"))
    assert validate(zero)["ok"]


def test_matrix_unit_products():
    m2 = full_matrix(2)
    e11, e12, e21 = (m2.basis_vector(m2_label(m2, l)) for l in ("e11", "e12", "e21"))
    assert m2.multiply(e11, e12) == e12
    assert m2.multiply(e12, e12) == tuple(vec((0, 0, 0, 0)))
    assert m2.multiply(e12, e21) == e11


def test_direct_sum_componentwise_product():
    m2 = full_matrix(2)
    s = direct_sum(m2, m2)
    assert s.dim == 8
    left = tuple(m2.basis_vector(0)) + (Fraction(0),) * 4
    right = (Fraction(0),) * 4 + tuple(m2.basis_vector(0))
    assert s.multiply(left, right) == (Fraction(0),) * 8


def test_direct_sum_semigroup_mismatch():
    with pytest.raises(SemigroupMismatch):
        direct_sum(full_matrix(2), paper_catalog("mk_zhalf_graded"))


def test_components_and_support():
    a = paper_catalog("exampleT1", 2)
    assert a.component(0).dim == 4
    assert a.component(1).dim == 3
    assert a.support() == [0, 1]
    mk = paper_catalog("mk_column_graded", 3)
    assert mk.support() == [0, 1, 2]
    assert all(mk.component(t).dim == 3 for t in mk.support())


def test_component_project_resolution():
    a = paper_catalog("exampleT1", 2)
    v = tuple(vec(range(1, a.dim + 1)))
    total = [Fraction(0)] * a.dim
    for t in a.support():
        piece = a.component_project(t, v)
        total = [x + y for x, y in zip(total, piece)]
    assert tuple(total) == v
    p = a.component_project(0, v)
    assert a.component_project(0, p) == p
    assert a.component_project(1, p) == (Fraction(0),) * a.dim


def test_find_unit():
    m2 = full_matrix(2)
    assert find_unit(m2) == m2.unit
    assert find_unit(paper_catalog("thm_T3_fractional")) is None
    zero = GradedAlgebra(1, ("z",), {}, (0,), trivial_semigroup())
    assert find_unit(zero) is None


def test_adjoin_unit_zero_algebra():
    zero = GradedAlgebra(1, ("z",), {}, (0,), trivial_semigroup())
    plus = adjoin_unit(zero)
    assert plus.dim == 2
    z = plus.basis_vector(0)
    assert plus.multiply(z, z) == (Fraction(0), Fraction(0))
    assert plus.multiply(plus.unit, z) == z


def test_adjoin_unit_to_unital_m2():
    m2 = full_matrix(2)
    plus = adjoin_unit(m2)
    assert plus.dim == 5
    assert validate(plus)["ok"]
    old_unit = tuple(m2.unit) + (Fraction(0),)
    # the old unit stays idempotent but is no longer the unit
    assert plus.multiply(old_unit, old_unit) == old_unit
    assert find_unit(plus) == plus.unit
    assert plus.unit != old_unit
    assert adjoin_unit(plus).dim == m2.dim + 2


def test_subspace_products_in_m2():
    m2 = full_matrix(2)
    span_e11 = Subspace(4, [m2.basis_vector(m2_label(m2, "e11"))])
    span_e12 = Subspace(4, [m2.basis_vector(m2_label(m2, "e12"))])
    prod = subspace_product(m2, span_e11, span_e12)
    assert prod == span_e12
    assert subspace_product(m2, span_e12, span_e12).is_zero()


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=7, max_size=7),
       st.lists(st.integers(-3, 3), min_size=7, max_size=7),
       st.lists(st.integers(-3, 3), min_size=7, max_size=7))
def test_multiply_associative_on_random_vectors(xs, ys, zs):
    a = paper_catalog("thm_T1_fractional")
    u, v, w = tuple(vec(xs)), tuple(vec(ys)), tuple(vec(zs))
    assert a.multiply(a.multiply(u, v), w) == a.multiply(u, a.multiply(v, w))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=4, max_size=4),
       st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_subspace_product_bilinear(xs, ys):
    m2 = full_matrix(2)
    s = Subspace(4, [tuple(vec(xs))])
    t1 = Subspace(4, [tuple(vec(ys))])
    t2 = Subspace(4, [m2.basis_vector(1)])
    lhs = subspace_product(m2, s, subspace_sum(t1, t2))
    rhs = subspace_sum(subspace_product(m2, s, t1), subspace_product(m2, s, t2))
    assert lhs == rhs


def test_ideal_generated():
    m2 = full_matrix(2)
    full = ideal_generated(m2, [m2.basis_vector(m2_label(m2, "e12"))])
    assert full.dim == 4
    ut2 = upper_triangular(2)
    e12 = ut2.basis_vector(ut2.basis_labels.index("e12"))
    ideal = ideal_generated(ut2, [e12])
    assert ideal.dim == 1 and ideal.contains(e12)
    assert ideal_generated(m2, []).is_zero()
    # closure: multiplying the ideal by any basis element stays inside
    for i in range(ut2.dim):
        e = ut2.basis_vector(i)
        for row in ideal.rows:
            assert ideal.contains(ut2.multiply(e, row))
            assert ideal.contains(ut2.multiply(row, e))


def test_is_graded_subspace():
    a = paper_catalog("exampleT1", 2)
    for t in a.support():
        assert is_graded_subspace(a, a.component(t))
    assert is_graded_subspace(a, Subspace.zero(a.dim))
    assert is_graded_subspace(a, a.full_subspace())
    # (0, e12) mixes the two components
    i0 = a.basis_labels.index("(e12,0)")
    i1 = a.basis_labels.index("(e12,e12)")
    mixed = Subspace(a.dim, [tuple(
        Fraction(1) if k == i1 else Fraction(-1) if k == i0 else Fraction(0)
        for k in range(a.dim))])
    assert not is_graded_subspace(a, mixed)


def test_opposite_involution_and_m2_selfopposite():
    a = paper_catalog("exampleT3", 2)
    opp = opposite(a)
    assert validate(opp)["ok"]
    back = opposite(opp)
    assert back.structure == a.structure
    assert back.semigroup.table == a.semigroup.table
    # transpose gives an isomorphism M2 -> M2^op
    m2 = full_matrix(2)
    m2op = opposite(m2)
    transpose = {0: 0, 1: 2, 2: 1, 3: 3}  # e11,e12,e21,e22 -> e11,e21,e12,e22
    for i in range(4):
        for j in range(4):
            lhs = m2op.mul_basis(transpose[i], transpose[j])
            rhs = {transpose[k]: c for k, c in m2.mul_basis(i, j).items()}
            assert lhs == rhs


def test_quotient_algebra():
    ut2 = upper_triangular(2)
    rad = Subspace(3, [ut2.basis_vector(1)])  # span e12
    q, project, lift = quotient_algebra(ut2, rad, graded=False)
    assert q.dim == 2
    assert validate(q)["ok"]
    assert project(ut2.basis_vector(1)) == (Fraction(0), Fraction(0))
    assert q.unit == (Fraction(1), Fraction(1))


def test_subalgebra_on_diagonal():
    m2 = full_matrix(2)
    diag = Subspace(4, [m2.basis_vector(0), m2.basis_vector(3)])
    sub, rows = subalgebra_on(m2, diag, graded=True)
    assert sub.dim == 2
    assert validate(sub)["ok"]
    assert sub.unit is not None


def test_with_trivial_grading():
    a = with_trivial_grading(paper_catalog("mk_column_graded", 2))
    assert a.support() == [0]
    assert validate(a)["ok"]


def test_thm_catalog_shapes():
    t1 = paper_catalog("thm_T1_fractional")
    assert t1.dim == 7 and t1.component(0).dim == 4 and t1.component(1).dim == 3
    t3 = paper_catalog("thm_T3_fractional")
    assert t3.dim == 6 and t3.component(0).dim == 4 and t3.component(1).dim == 2
    t2 = paper_catalog("thm_T2_fractional")
    assert t2.dim == 7 and find_unit(t2) is None
