import pytest

from hopfcyc.exact_linalg import Mat, kron
from hopfcyc.rep_structures import (LEFT, LEFT_RIGHT, RIGHT, RIGHT_LEFT, ActionData, SaydData,
                                    check_sayd, regular_action, regular_coaction, trivial_action,
                                    trivial_coaction, validate_action, validate_coaction,
                                    validate_comodule_algebra, validate_module_coalgebra)
from hopfcyc.zoo import cyclic_group_algebra, hopf_zoo, sweedler_h4

ZOO = hopf_zoo()


@pytest.mark.parametrize("name", sorted(ZOO))
@pytest.mark.parametrize("side", [LEFT, RIGHT])
def test_regular_structures_satisfy_axioms(name, side):
    h = ZOO[name]
    assert validate_action(regular_action(h, side)).passed
    assert validate_coaction(regular_coaction(h, side)).passed


@pytest.mark.parametrize("name", sorted(ZOO))
def test_regular_module_coalgebra_and_comodule_algebra(name):
    h = ZOO[name]
    assert validate_module_coalgebra(h.coalgebra, regular_action(h, RIGHT)).passed
    assert validate_comodule_algebra(h.algebra, regular_coaction(h, RIGHT)).passed


def test_broken_action_is_caught():
    h = cyclic_group_algebra(2)
    bad = ActionData(h, 2, RIGHT, Mat.from_rows([[1, 2, 0, 0], [0, 0, 1, 1]]))
    r = validate_action(bad)
    assert not r.passed
    assert r.failures[0].witness is not None


@pytest.mark.parametrize("chirality", [LEFT_RIGHT, RIGHT_LEFT])
def test_trivial_module_is_sayd_over_group_algebra(chirality):
    h = cyclic_group_algebra(3)
    act_side, co_side = (LEFT, RIGHT) if chirality == LEFT_RIGHT else (RIGHT, LEFT)
    s = SaydData(h, 1, trivial_action(h, 1, act_side), trivial_coaction(h, 1, co_side), chirality)
    assert check_sayd(s).passed


def test_trivial_module_is_not_sayd_over_h4():
    # the modular pair (eps, 1) is not in involution for H4, since S^2 is not the identity
    h = sweedler_h4()
    s = SaydData(h, 1, trivial_action(h, 1, RIGHT), trivial_coaction(h, 1, LEFT), RIGHT_LEFT)
    r = check_sayd(s)
    assert not r["AYD condition"].passed
    assert r["stability"].passed


def test_sayd_needs_matching_sides():
    h = cyclic_group_algebra(2)
    with pytest.raises(ValueError):
        SaydData(h, 1, trivial_action(h, 1, RIGHT), trivial_coaction(h, 1, RIGHT), RIGHT_LEFT)
