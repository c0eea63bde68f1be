import itertools

import pytest

from rankfun.additive import AdditiveFn, decompose_invariant, object_values_from_additive
from rankfun.cone import (
    ConeTooLarge,
    build_cone,
    cone_from_data,
    decompose_integral,
    extreme_rays,
    hilbert_basis,
    irreducibility_certificate,
)
from rankfun.gallery import build_nakayama_proj, build_OA_cluster
from rankfun.rank_morphisms import ParityError
from rankfun.rank_objects import RankOnObjects, check_rank_on_objects


@pytest.mark.parametrize("d", [1, 2, 3, 5])
def test_oa_single_constant_ray(d):
    e = build_OA_cluster(d)
    rays = extreme_rays(build_cone(e.skeleton))
    assert rays == [tuple([1] * (2 * d + 2))]


def test_orthant_without_constraints():
    c = cone_from_data(["a", "b", "c"], [])
    assert extreme_rays(c) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert hilbert_basis(c).elements == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_dd_small_polygon_cone():
    # x >= 0, y >= 0, x - y >= 0 and 2y - x >= 0: rays (1, 1) and (2, 1)
    c = cone_from_data(["x", "y"], [(1, -1), (-1, 2)])
    assert extreme_rays(c) == [(1, 1), (2, 1)]


def test_hilbert_basis_of_non_unimodular_cone():
    # cone spanned by (1, 0) and (1, 2): Hilbert basis adds (1, 1)
    c = cone_from_data(["x", "y"], [(2, -1)])
    assert extreme_rays(c) == [(1, 0), (1, 2)]
    hb = hilbert_basis(c)
    assert hb.elements == [(1, 0), (1, 1), (1, 2)]
    assert all(cert["irreducible"] for cert in hb.certificates)


def test_equalities_must_be_pairs():
    with pytest.raises(ValueError):
        cone_from_data(["a", "b"], [], equalities=[("a", "b", "c")])
    with pytest.raises(ValueError):
        cone_from_data(["a", "b"], [], equalities=[("a", "z")])


def test_rays_satisfy_axioms(and2_d3, d3_custom):
    for entry in (and2_d3, build_OA_cluster(3)):
        for ray in extreme_rays(build_cone(entry.skeleton)):
            r = RankOnObjects(dict(zip(entry.skeleton.indecs, ray)))
            assert check_rank_on_objects(r, entry.skeleton).passed


def test_custom_assignment_decomposes_uniquely(d3_custom):
    c = build_cone(d3_custom.skeleton)
    decs = decompose_integral(c, d3_custom.reference_ranks["custom"])
    assert len(decs) == 1
    assert sum(len(d) for d in decs) == 5


def test_certificate_detects_split():
    c = cone_from_data(["x", "y"], [])
    cert = irreducibility_certificate(c, (1, 1))
    assert not cert["irreducible"]


def test_dimension_bound(monkeypatch, and2_d3):
    monkeypatch.setenv("RANKFUN_CONE_MAX_DIM", "2")
    with pytest.raises(ConeTooLarge):
        extreme_rays(build_cone(and2_d3.skeleton))


def test_morphism_lattice_needs_odd_d():
    with pytest.raises(ParityError):
        build_cone(build_OA_cluster(2).skeleton, lattice="morphisms")


@pytest.mark.parametrize("n,d", [(n, d) for n in range(1, 5) for d in (1, 3)])
def test_nakayama_hilbert_basis_is_orbit_indicators(n, d):
    e = build_nakayama_proj(n, 2, d)
    alg = e.twist.algebra
    hb = hilbert_basis(build_cone(e.skeleton, lattice="morphisms"))
    expected = []
    for o in e.twist.orbits():
        vals = object_values_from_additive(AdditiveFn({v: int(v in o) for v in alg.vertices}), alg)
        expected.append(tuple(int(vals[v]) for v in alg.vertices))
    assert sorted(hb.elements) == sorted(expected)


def test_nakayama_decomposition_matches_orbits():
    e = build_nakayama_proj(3, 2, 1)
    alg = e.twist.algebra
    c = build_cone(e.skeleton, lattice="morphisms")
    basis = hilbert_basis(c)
    for vec in itertools.product(range(3), repeat=3):
        a = AdditiveFn.from_vector(vec)
        vals = object_values_from_additive(a, alg)
        r = RankOnObjects({f"P{v}": x for v, x in vals.items()})
        decs = decompose_integral(c, r, basis)
        assert len(decs) == 1
        terms = decompose_invariant(a, e.twist)
        expected = []
        for orbit, mult in terms:
            ov = object_values_from_additive(orbit.indicator(alg), alg)
            expected += [tuple(int(ov[v]) for v in alg.vertices)] * mult
        assert sorted(decs[0]) == sorted(expected)
