from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from semigraded.linalg import (
    Subspace,
    mat_mul,
    matrix_rank,
    minimal_polynomial,
    nullspace,
    rational_roots,
    rref,
    solve,
    vec,
)


def test_rref_identity():
    rows, pivots = rref([(1, 0), (0, 1)])
    assert rows == [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    assert pivots == [0, 1]


def test_rref_dependent_rows():
    rows, pivots = rref([(1, 2), (2, 4), (0, 1)])
    assert len(rows) == 2


def test_solve_simple():
    x = solve([(1, 1), (1, -1)], (3, 1))
    assert x == (Fraction(2), Fraction(1))


def test_solve_inconsistent():
    assert solve([(1, 1), (1, 1)], (0, 1)) is None


def test_nullspace():
    ns = nullspace([(1, 1, 0)], 3)
    assert ns.dim == 2
    for row in ns.rows:
        assert row[0] + row[1] == 0


def test_subspace_contains_and_reduce():
    s = Subspace(3, [(1, 0, 1), (0, 1, 0)])
    assert s.contains((2, 3, 2))
    assert not s.contains((1, 0, 0))


def test_zassenhaus_intersection():
    a = Subspace(3, [(1, 0, 0), (0, 1, 0)])
    b = Subspace(3, [(0, 1, 0), (0, 0, 1)])
    inter = a.intersect(b)
    assert inter.dim == 1
    assert inter.contains((0, 1, 0))


def test_coordinates_roundtrip():
    s = Subspace(3, [(1, 2, 0), (0, 0, 1)])
    v = (2, 4, 5)
    coords = s.coordinates(v)
    rebuilt = [Fraction(0)] * 3
    for c, row in zip(coords, s.rows):
        rebuilt = [r + c * x for r, x in zip(rebuilt, row)]
    assert tuple(rebuilt) == vec(v)


small_vecs = st.lists(st.integers(-4, 4), min_size=3, max_size=3)


@settings(max_examples=40, deadline=None)
@given(st.lists(small_vecs, min_size=1, max_size=3))
def test_subspace_idempotent_ops(rows):
    s = Subspace(3, rows)
    assert s.sum(s) == s
    assert s.intersect(s) == s
    assert s.intersect(Subspace.full(3)) == s
    assert s.sum(Subspace.zero(3)) == s


@settings(max_examples=40, deadline=None)
@given(st.lists(small_vecs, min_size=1, max_size=3), st.lists(small_vecs, min_size=1, max_size=3))
def test_dimension_formula(rows_a, rows_b):
    a, b = Subspace(3, rows_a), Subspace(3, rows_b)
    assert a.sum(b).dim + a.intersect(b).dim == a.dim + b.dim


def test_minimal_polynomial_of_projection():
    # projection matrix: minimal polynomial x^2 - x
    m = [vec((1, 0)), vec((0, 0))]
    coeffs = minimal_polynomial(m)
    assert coeffs == [Fraction(0), Fraction(-1), Fraction(1)]


def test_minimal_polynomial_nilpotent():
    m = [vec((0, 1)), vec((0, 0))]
    coeffs = minimal_polynomial(m)
    assert coeffs == [Fraction(0), Fraction(0), Fraction(1)]  # x^2


def test_rational_roots():
    # (x - 1/2)(x + 3) = x^2 + 5/2 x - 3/2
    roots = rational_roots([Fraction(-3, 2), Fraction(5, 2), Fraction(1)])
    assert set(roots) == {Fraction(1, 2), Fraction(-3)}


def test_rational_roots_irreducible():
    assert rational_roots([Fraction(-2), Fraction(0), Fraction(1)]) == []  # x^2 - 2


def test_matrix_rank():
    assert matrix_rank([(1, 2), (2, 4)]) == 1
    assert matrix_rank([(1, 0), (0, 1)]) == 2


def test_mat_mul():
    a = [vec((1, 1)), vec((0, 1))]
    b = [vec((1, 0)), vec((1, 1))]
    assert mat_mul(a, b) == [vec((2, 1)), vec((1, 1))]
