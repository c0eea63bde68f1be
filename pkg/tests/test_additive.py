import itertools
from fractions import Fraction

import pytest

from rankfun.additive import (
    AdditiveFn,
    ObjectPsiRank,
    alternative_presentations,
    additivity_failures,
    check_sigma_invariant,
    correspondence_suite,
    decompose_invariant,
    eval_additive,
    irreducible_decompositions,
    is_irreducible,
    object_values_from_additive,
    presenting_morphism_for,
    psi_mod,
    psi_mod_eval,
    reconstruct,
    sample_morphisms,
    sigma_orbits,
    varphi,
    varphi_eval,
)
from rankfun.nakayama.algebra import NakayamaAlgebra, NakayamaModule, projective, simple, twist_data
from rankfun.nakayama.morphisms import ProjMorphism, image_of
from rankfun.rank_morphisms import ParityError

C3 = NakayamaAlgebra.cyclic(3, 2)


@pytest.fixture(scope="module")
def tw3():
    return twist_data(C3, 3)


@pytest.fixture(scope="module")
def tw1():
    return twist_data(C3, 1)


def test_ones_on_projective_is_loewy_length():
    for ell in (2, 3, 4):
        alg = NakayamaAlgebra.cyclic(3, ell)
        assert eval_additive(AdditiveFn.ones(alg), projective(alg, 2), alg) == ell


def test_zero_module():
    assert eval_additive(AdditiveFn.ones(C3), NakayamaModule(), C3) == 0


def test_indicator_on_length_two():
    a = AdditiveFn({1: 1, 2: 0, 3: 0})
    assert eval_additive(a, NakayamaModule(((1, 2),)), C3) == 1
    assert eval_additive(a, NakayamaModule(((2, 2),)), C3) == 1


def test_negative_rejected():
    with pytest.raises(ValueError):
        AdditiveFn({1: -1})


def test_sigma_invariance(tw3):
    assert check_sigma_invariant(AdditiveFn.ones(C3), tw3)
    assert not check_sigma_invariant(AdditiveFn({1: 1, 2: 0, 3: 0}), tw3)
    # kC_4/rad^3 with d = 2: Omega^4 shifts by 6, so two orbits
    tw = twist_data(NakayamaAlgebra.cyclic(4, 3), 2)
    orbits = sigma_orbits(tw)
    assert len(orbits) == 2
    assert check_sigma_invariant(orbits[0].indicator(tw.algebra), tw)


def test_invariance_simple_level_equals_module_level():
    alg = NakayamaAlgebra.cyclic(4, 3)
    tw = twist_data(alg, 2)
    for vec in itertools.product(range(2), repeat=4):
        a = AdditiveFn.from_vector(vec)
        module_level = all(
            eval_additive(a, tw.suspend(NakayamaModule(((i, t),))), alg) == eval_additive(a, NakayamaModule(((i, t),)), alg)
            for i, t in alg.indecomposables()
        )
        assert module_level == check_sigma_invariant(a, tw)


def test_varphi_identity_zero_and_arrow():
    a = AdditiveFn({1: 2, 2: 3, 3: 5})
    assert varphi_eval(a, ProjMorphism.identity(C3, (2,))) == eval_additive(a, projective(C3, 2), C3)
    assert varphi_eval(a, ProjMorphism.zero(C3, (1,), (2,))) == 0
    assert varphi_eval(AdditiveFn.ones(C3), ProjMorphism.single_path(C3, 2, 1)) == 1


def test_psi_of_projective_is_identity_value(tw3):
    rm = varphi(AdditiveFn({1: 1, 2: 2, 3: 0}))
    f = presenting_morphism_for(projective(C3, 2), C3)
    assert f == ProjMorphism.identity(C3, (2,))
    assert psi_mod_eval(rm, projective(C3, 2), tw3) == rm(ProjMorphism.identity(C3, (2,)))


def test_presentations_agree(tw3):
    a = AdditiveFn.ones(C3)
    obj = ObjectPsiRank(object_values_from_additive(a, C3), tw3)
    for rm in (varphi(a), obj):
        values = {rm(f) for f in alternative_presentations(C3, 2, 1)}
        assert len(values) == 1
        assert all(image_of(f) == simple(2) for f in alternative_presentations(C3, 2, 1))


def test_psi_of_phi_on_simples(tw3):
    for vec in itertools.product(range(3), repeat=3):
        a = AdditiveFn.from_vector(vec)
        assert psi_mod(varphi(a), tw3) == a


def test_parity_gate():
    tw = twist_data(C3, 2)
    with pytest.raises(ParityError):
        psi_mod_eval(varphi(AdditiveFn.ones(C3)), simple(1), tw)
    with pytest.raises(ParityError):
        ObjectPsiRank({1: 2, 2: 2, 3: 2}, tw)
    # phi needs no parity
    assert varphi_eval(AdditiveFn.ones(C3), ProjMorphism.single_path(C3, 1, 1)) == 1


def test_decompose_examples(tw3, tw1):
    assert decompose_invariant(AdditiveFn.ones(C3), tw3)[0][1] == 1
    terms = decompose_invariant(AdditiveFn.ones(C3).scale(2), tw3)
    assert [(o.vertices, c) for o, c in terms] == [((1, 2, 3), 2)]
    tw = twist_data(NakayamaAlgebra.cyclic(4, 3), 2)
    a = AdditiveFn.from_vector((3, 5, 3, 5))
    terms = decompose_invariant(a, tw)
    assert sorted(c for _, c in terms) == [3, 5]
    assert reconstruct(terms, tw.algebra) == a


def test_decompose_errors(tw3):
    with pytest.raises(ValueError):
        decompose_invariant(AdditiveFn({1: Fraction(1, 2), 2: Fraction(1, 2), 3: Fraction(1, 2)}), tw3)
    with pytest.raises(ValueError):
        decompose_invariant(AdditiveFn({1: 1, 2: 0, 3: 0}), tw3)


def test_irreducibles_are_orbit_indicators(tw1, tw3):
    for tw in (tw1, tw3):
        for vec in itertools.product(range(3), repeat=3):
            a = AdditiveFn.from_vector(vec)
            if not check_sigma_invariant(a, tw) or not any(vec):
                continue
            terms = decompose_invariant(a, tw)
            expected = len(terms) == 1 and terms[0][1] == 1
            assert is_irreducible(a, tw) == expected


def test_decomposition_unique(tw1):
    a = AdditiveFn.from_vector((2, 1, 3))
    decs = irreducible_decompositions(a, tw1)
    assert len(decs) == 1
    assert sorted(decs[0]) == sorted([(1, 0, 0)] * 2 + [(0, 1, 0)] + [(0, 0, 1)] * 3)


def test_correspondence_composition_length(tw3):
    rep = correspondence_suite(AdditiveFn.ones(C3), tw3)
    assert rep.passed
    f = ProjMorphism.single_path(C3, 1, 1)
    assert varphi(AdditiveFn.ones(C3))(f) == 1


def test_phi_additive(tw3):
    ms = sample_morphisms(C3)
    a1 = AdditiveFn({1: 1, 2: 0, 3: 2})
    a2 = AdditiveFn({1: 0, 2: 3, 3: 1})
    assert additivity_failures(a1, a2, tw3, ms) == []


def test_object_route_matches_images_everywhere(tw3):
    a = AdditiveFn.ones(C3).scale(3)
    obj = ObjectPsiRank(object_values_from_additive(a, C3), tw3)
    for f in sample_morphisms(C3):
        assert obj(f) == varphi_eval(a, f)


def test_object_route_ignores_padding(tw3):
    values = {1: 2, 2: 2, 3: 2}
    base = ObjectPsiRank(values, tw3)
    f = ProjMorphism.single_path(C3, 3, 1)
    for q in C3.vertices:
        for k in range(1, 4):
            assert ObjectPsiRank(values, tw3, pad=(q, k))(f) == base(f)
