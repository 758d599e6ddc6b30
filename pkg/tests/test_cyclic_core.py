from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from hopfcyc.cyclic_core import (CocyclicData, CyclicData, check_cocyclic, check_cyclic,
                                 compare_cocyclic, compare_cyclic, cyclic_cohomology_ranks,
                                 cyclic_homology_ranks, dualize_cocyclic, dualize_cyclic,
                                 hopf_cocyclic_110, point_cocyclic, point_cyclic)
from hopfcyc.exact_linalg import Mat, invert
from hopfcyc.galois_ext import from_input as ext_from_input, relative_cyclic_module_ext
from hopfcyc.galois_coext import perturb
from hopfcyc.rep_structures import LEFT, RIGHT, RIGHT_LEFT, SaydData, trivial_action, trivial_coaction
from hopfcyc.zoo import EXT_FIXTURES, cyclic_group_algebra, trivial_hopf


@pytest.fixture(scope="module")
def kc2_relative():
    ext = ext_from_input(EXT_FIXTURES["kC2-ext"]())
    return relative_cyclic_module_ext(ext, 4)[0]


def test_point_modules_pass_and_have_known_ranks():
    assert check_cocyclic(point_cocyclic(4)).passed
    assert check_cyclic(point_cyclic(4)).passed
    assert cyclic_cohomology_ranks(point_cocyclic(4)).vector() == [1, 0, 1, 0]
    assert cyclic_homology_ranks(point_cyclic(4)).vector() == [1, 0, 1, 0]


def test_point_ranks_match_oracle():
    assert oracles.connes_cohomology(point_cocyclic(5))[1] == [1, 0, 1, 0, 1]
    assert oracles.connes_homology(point_cyclic(5))[1] == [1, 0, 1, 0, 1]


def test_hopf_cocyclic_on_trivial_data_is_the_point():
    k = trivial_hopf()
    m = SaydData(k, 1, trivial_action(k, 1, RIGHT), trivial_coaction(k, 1, LEFT), RIGHT_LEFT)
    c = hopf_cocyclic_110(k, m, 3)
    assert compare_cocyclic(c, point_cocyclic(3), 3).passed


def test_hopf_cocyclic_on_kc2_trivial_coefficients():
    h = cyclic_group_algebra(2)
    m = SaydData(h, 1, trivial_action(h, 1, RIGHT), trivial_coaction(h, 1, LEFT), RIGHT_LEFT)
    c = hopf_cocyclic_110(h, m, 4)
    r = check_cocyclic(c)
    assert r.passed and len(r.checks) > 90
    assert cyclic_cohomology_ranks(c).vector() == oracles.connes_cohomology(c)[1]


def test_shape_validation():
    one = Mat.identity(1)
    with pytest.raises(ValueError):
        CocyclicData(1, (1, 1), ((one,),), ((), (one,)), (one, one))


def test_relative_module_axioms(kc2_relative):
    assert check_cyclic(kc2_relative).passed


def test_duality_round_trip(kc2_relative):
    c = kc2_relative
    dual = dualize_cyclic(c)
    assert dual.max_degree == c.max_degree - 1
    assert check_cocyclic(dual).passed
    back = dualize_cocyclic(dual)
    assert check_cyclic(back).passed
    assert compare_cyclic(c, back, c.max_degree - 2).passed


def test_cocyclic_duality_round_trip_on_point():
    c = point_cocyclic(4)
    back = dualize_cyclic(dualize_cocyclic(c))
    assert compare_cocyclic(c, back, 2).passed


def test_mutant_face_is_detected_with_location(kc2_relative):
    c = kc2_relative
    faces = list(c.faces)
    faces[2] = (perturb(faces[2][0], 0, 0),) + faces[2][1:]
    mutant = CyclicData(c.max_degree, c.dims, tuple(faces), c.degeneracies, c.tau, "mutant")
    r = check_cyclic(mutant)
    assert not r.passed
    bad = r.failures[0]
    assert bad.witness is not None and bad.degree is not None


def test_mutant_dual_fails_downstream(kc2_relative):
    c = kc2_relative
    dual = dualize_cyclic(c)
    tau = list(dual.tau)
    tau[1] = -tau[1]
    mutant = CocyclicData(dual.max_degree, dual.dims, dual.cofaces, dual.codegeneracies,
                          tuple(tau))
    assert not check_cyclic(dualize_cocyclic(mutant)).passed


def test_ranks_match_connes_oracle(kc2_relative):
    hh, hc = oracles.connes_homology(kc2_relative)
    rt = cyclic_homology_ranks(kc2_relative)
    assert rt.vector() == hc
    assert [rt.hochschild[n] for n in sorted(rt.hochschild)] == hh



def _conjugate(c: CyclicData, gs):
    """Same cyclic module written in new bases g_n: maps f -> g f g^-1."""
    gi = [invert(g) for g in gs]
    faces = tuple(tuple(gs[n - 1] @ f @ gi[n] for f in c.faces[n]) for n in range(c.max_degree + 1))
    degen = tuple(tuple(gs[n + 1] @ s @ gi[n] for s in c.degeneracies[n]) for n in range(c.max_degree))
    tau = tuple(gs[n] @ t @ gi[n] for n, t in enumerate(c.tau))
    return CyclicData(c.max_degree, c.dims, faces, degen, tau, "conjugated")


@settings(max_examples=15, deadline=None)
@given(st.data())
def test_axioms_and_ranks_are_basis_independent(kc2_relative, data):
    c = kc2_relative.truncate(3)
    gs = []
    for d in c.dims:
        # unit upper triangular with random rational entries, times a random diagonal
        rows = [[0] * d for _ in range(d)]
        for i in range(d):
            rows[i][i] = data.draw(st.sampled_from([1, -1, 2, Fraction(1, 3)]))
            for j in range(i + 1, d):
                rows[i][j] = data.draw(st.integers(-2, 2))
        gs.append(Mat.from_rows(rows))
    conj = _conjugate(c, gs)
    assert check_cyclic(conj).passed
    assert cyclic_homology_ranks(conj).vector() == cyclic_homology_ranks(c).vector()
