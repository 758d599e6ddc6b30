import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hopfcyc.cyclic_core import check_cyclic, cyclic_homology_ranks
from hopfcyc.errors import NotGalois
from hopfcyc.exact_linalg import invert
from hopfcyc.galois_ext import (balanced_tensor, check_kappa_ext, compare_homology_ext,
                                from_input, hopf_cyclic_module_19, kappa_ext,
                                regular_inverse_formula, relative_cyclic_module_ext, sayd_A_B,
                                tensor_over_H, tensor_over_H_generic, verify_extension)
from hopfcyc.rep_structures import check_sayd
from hopfcyc.zoo import EXT_FIXTURES, cyclic_group_algebra, regular_extension

GALOIS = [n for n in EXT_FIXTURES if n != "kC2-trivial-ext"]


@pytest.fixture(scope="module", params=GALOIS)
def ext(request):
    return from_input(EXT_FIXTURES[request.param]())


def _kappa_terms(ext, label):
    kd = kappa_ext(ext)
    h, a = ext.hopf, ext.algebra
    col = kd.lifted.col(h.index(label))
    return {(a.basis[r // a.dim], a.basis[r % a.dim]): v for r, v in col.items()}


def test_extension_bundle(ext):
    r = verify_extension(ext)
    assert r.passed, [c.name for c in r.failures]


def test_kappa_identities(ext):
    assert check_kappa_ext(ext, kappa_ext(ext)).passed


def test_sayd(ext):
    assert check_sayd(sayd_A_B(ext)).passed


@pytest.mark.parametrize("name", ["kC2-ext", "H4-ext"])
def test_closed_form_inverse(name):
    e = from_input(EXT_FIXTURES[name]())
    assert regular_inverse_formula(e) == e.beta_inv == invert(e.beta)


def test_kappa_values():
    c2 = from_input(EXT_FIXTURES["kC2-ext"]())
    assert _kappa_terms(c2, "g") == {("g", "g"): 1}
    h4 = from_input(EXT_FIXTURES["H4-ext"]())
    # kappa(x) = S(x1) (x) x2 = -gx (x) 1 + g (x) x
    assert _kappa_terms(h4, "x") == {("gx", "1"): -1, ("g", "x"): 1}


def test_coinvariants_of_subgroup_quotient():
    e = from_input(EXT_FIXTURES["H4/kC2-ext"]())
    assert e.coinvariants.dim == 2
    assert e.tensor_B.dim == 8


def test_trivial_coaction_is_not_galois():
    with pytest.raises(NotGalois):
        from_input(EXT_FIXTURES["kC2-trivial-ext"]())


@pytest.mark.parametrize("name", ["kC2-ext", "H4-ext", "H4/kC2-ext"])
def test_normal_form_matches_generic_quotient(name):
    e = from_input(EXT_FIXTURES[name]())
    s = sayd_A_B(e)
    for n in range(3):
        a, b = tensor_over_H(e.hopf, s, n), tensor_over_H_generic(e.hopf, s, n)
        assert a.dim == b.dim
        assert a.kernel.pivots == b.kernel.pivots and a.kernel.inclusion == b.kernel.inclusion


def test_relative_cyclic_module_kc2():
    e = from_input(EXT_FIXTURES["kC2-ext"]())
    rel, spaces = relative_cyclic_module_ext(e, 3)
    assert check_cyclic(rel).passed
    hm = hopf_cyclic_module_19(e.hopf, sayd_A_B(e), 3)
    assert check_cyclic(hm).passed
    assert hm.dims == rel.dims


@pytest.mark.parametrize("name,N", [("k-ext", 3), ("kC2-ext", 3), ("H4-ext", 2),
                                    ("H4/kC2-ext", 2), ("kS3-sign-ext", 2)])
def test_homology_comparison(name, N):
    r = compare_homology_ext(from_input(EXT_FIXTURES[name]()), N)
    assert r.passed, [c.name for c in r.failures]
    assert r.ranks["transfer"] == "intertwining"
    assert r.ranks["hopf"] == r.ranks["relative"]


def test_homology_matches_connes_oracle():
    e = from_input(EXT_FIXTURES["H4-ext"]())
    rel, _ = relative_cyclic_module_ext(e, 3)
    assert cyclic_homology_ranks(rel).vector() == oracles.connes_homology(rel)[1] == [2, 1, 2]


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 4))
def test_balanced_tensor_over_k_is_the_full_tensor_power(n):
    e = from_input(EXT_FIXTURES["kC2-ext"]())
    assert balanced_tensor(e.algebra, e.coinvariants, n).dim == 2 ** n


@settings(max_examples=8, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3))
def test_homology_comparison_for_cyclic_group_algebras(n, N):
    e = from_input(regular_extension(cyclic_group_algebra(n)))
    r = compare_homology_ext(e, N)
    assert r.passed and r.ranks["transfer"] == "intertwining"
