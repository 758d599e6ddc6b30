from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hopfcyc.errors import NotWellDefined, SingularMatrix
from hopfcyc.exact_linalg import (Mat, Subspace, format_rational, image, intersect, invert,
                                  kernel, kron, parse_rational, quotient, rank,
                                  restrict_corestrict, subspace_sum)

small = st.integers(-3, 3)
rationals = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


@st.composite
def matrices(draw, max_dim=5, entries=small):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    return Mat.from_rows(rows)


def test_scalars_roundtrip():
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational("-8/4") == -2 and isinstance(parse_rational("-8/4"), int)
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_identity_and_products():
    a = Mat.from_rows([[1, 2], [3, 4]])
    assert (Mat.identity(2) @ a) == a
    assert (a @ invert(a)).is_identity()
    assert a.T.to_dense() == [[1, 3], [2, 4]]


def test_singular_inverse_reports_rank():
    with pytest.raises(SingularMatrix) as e:
        invert(Mat.from_rows([[1, 2], [2, 4]]))
    assert e.value.rank == 1


def test_kron_ordering_left_factor_most_significant():
    a = Mat.from_rows([[0, 1], [1, 0]])
    e0 = Mat.column_vector([1, 0])
    e1 = Mat.column_vector([0, 1])
    # e0 (x) e1 is basis vector 1; swapping the left leg gives e1 (x) e1 = basis vector 3
    v = kron(e0, e1)
    assert v.col(0) == {1: 1}
    assert (kron(a, Mat.identity(2)) @ v).col(0) == {3: 1}


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_dense_oracle(m):
    assert rank(m) == oracles.rank(oracles.dense(m), m.cols)


@settings(max_examples=60, deadline=None)
@given(matrices(entries=rationals))
def test_rank_nullity_and_kernel(m):
    k = kernel(m)
    assert k.dim + rank(m) == m.cols
    assert (m @ k.inclusion).is_zero()
    assert image(m).dim == rank(m)


@settings(max_examples=40, deadline=None)
@given(matrices(max_dim=3), matrices(max_dim=3), matrices(max_dim=3), matrices(max_dim=3))
def test_kron_mixed_product(a, b, c, d):
    if a.cols != c.rows or b.cols != d.rows:
        c = Mat.identity(a.cols)
        d = Mat.identity(b.cols)
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@settings(max_examples=40, deadline=None)
@given(matrices(max_dim=5))
def test_quotient_projection_section(m):
    w = image(m)
    q = quotient(m.rows, w)
    assert (q.projection @ q.section).is_identity()
    assert (q.projection @ w.inclusion).is_zero()
    assert q.dim + w.dim == m.rows


@settings(max_examples=40, deadline=None)
@given(matrices(max_dim=4), matrices(max_dim=4))
def test_intersection_and_sum_dimensions(a, b):
    if a.rows != b.rows:
        return
    A, B = image(a), image(b)
    assert intersect(A, B).dim + subspace_sum(A, B).dim == A.dim + B.dim


def test_subspace_coordinates_are_a_left_inverse():
    s = Subspace.span(3, Mat.from_rows([[1, 0], [1, 1], [0, 1]]))
    assert s.coordinates(s.inclusion).is_identity()
    assert not s.contains(Mat.column_vector([1, 0, 0]))


def test_restrict_corestrict_detects_non_descent():
    q = quotient(2, Subspace.span(2, Mat.column_vector([1, -1])))
    swap_ok = Mat.from_rows([[0, 1], [1, 0]])
    assert restrict_corestrict(swap_ok, dom=q, cod=q).is_identity()
    with pytest.raises(NotWellDefined) as e:
        restrict_corestrict(Mat.from_rows([[1, 0], [0, 2]]), dom=q, cod=q)
    assert e.value.witness["column"] in (0, 1)
