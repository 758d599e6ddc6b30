from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfcyc.exact_linalg import Mat, kron
from hopfcyc.hopf_core import (antipode_anti_properties, antipode_inverse, convolution,
                               convolution_unit, is_cocommutative, is_commutative,
                               iterated_coproduct, validate_hopf)
from hopfcyc.zoo import cyclic_group_algebra, hopf_zoo, sweedler_h4

ZOO = hopf_zoo()


@pytest.mark.parametrize("name", sorted(ZOO))
def test_zoo_entries_are_hopf_algebras(name):
    r = validate_hopf(ZOO[name])
    assert r.passed, r.failures


@pytest.mark.parametrize("name", sorted(ZOO))
def test_antipode_is_anti_multiplicative(name):
    assert antipode_anti_properties(ZOO[name]).passed


@pytest.mark.parametrize("name", sorted(ZOO))
def test_antipode_is_convolution_inverse_of_identity(name):
    h = ZOO[name]
    I = Mat.identity(h.dim)
    u = convolution_unit(h.coalgebra, h.algebra)
    assert convolution(h.antipode, I, h.coalgebra, h.algebra) == u
    assert convolution(I, h.antipode, h.coalgebra, h.algebra) == u


def test_commutativity_flags():
    for n in range(1, 7):
        h = cyclic_group_algebra(n)
        assert is_commutative(h.algebra) and is_cocommutative(h.coalgebra)
    h4 = sweedler_h4()
    assert not is_commutative(h4.algebra) and not is_cocommutative(h4.coalgebra)


def test_h4_antipode_has_order_four():
    h4 = sweedler_h4()
    S = h4.antipode
    assert not (S @ S).is_identity()
    assert (S @ S @ S @ S).is_identity()
    assert (antipode_inverse(h4) @ S).is_identity()


def test_iterated_coproduct_is_coassociative():
    h = sweedler_h4()
    c = h.coalgebra
    I = Mat.identity(h.dim)
    d2 = iterated_coproduct(c, 2)
    assert d2 == kron(c.comult, I) @ c.comult == kron(I, c.comult) @ c.comult


elements = st.lists(st.builds(Fraction, st.integers(-3, 3), st.integers(1, 2)), min_size=4, max_size=4)


@settings(max_examples=50, deadline=None)
@given(elements, elements)
def test_h4_comultiplication_is_multiplicative(x, y):
    h = sweedler_h4()
    X, Y = Mat.column_vector(x), Mat.column_vector(y)
    lhs = h.coalgebra.comult @ h.algebra.mult @ kron(X, Y)
    # (x1 y1) (x) (x2 y2)
    dx, dy = h.coalgebra.comult @ X, h.coalgebra.comult @ Y
    from hopfcyc.multilinear import permutation_map
    mid = permutation_map((4, 4, 4, 4), (0, 2, 1, 3))
    rhs = kron(h.algebra.mult, h.algebra.mult) @ mid @ kron(dx, dy)
    assert lhs == rhs
