"""Core map structure: permutations, faces, genus, canonical codes."""

import itertools
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import digon, k4, loop_map, path2, theta, torus_map, triangle, two_triangles
from lunefree.enumeration import EnumFilter, enumerate_universes
from lunefree.errors import (
    Disconnected,
    DuplicateEdgeUse,
    EmptyInput,
    UniSyntaxError,
)
from lunefree.planar_map import PlanarMap, build_map
from lunefree.verify import grow_random_map


def test_counts_and_faces():
    t = triangle()
    assert (t.nv, t.ne, t.nf) == (3, 3, 2)
    assert sorted(t.face_degrees) == [3, 3]
    assert t.genus() == 0
    m = k4()
    assert (m.nv, m.ne, m.nf) == (4, 6, 4)
    assert sorted(m.face_degrees) == [3, 3, 3, 3]
    assert tuple(m.degrees) == (3, 3, 3, 3)


def test_small_shapes():
    assert (theta().nv, theta().ne, theta().nf) == (2, 3, 3)
    assert (loop_map().nv, loop_map().ne, loop_map().nf) == (1, 1, 2)
    assert (path2().nv, path2().ne, path2().nf) == (2, 1, 1)
    assert torus_map().genus() == 1


def test_alpha_sigma_consistency():
    m = k4()
    for d in range(m.nd):
        assert m.alpha[m.alpha[d]] == d
        assert m.alpha[d] != d
        assert m.sigma_inv[m.sigma[d]] == d
    # phi orbits partition the darts
    assert sum(m.face_degrees) == m.nd


def test_face_of_matches_faces():
    m = theta()
    for face, cycle in enumerate(m.faces):
        for d in cycle:
            assert m.face_of[d] == face


def test_vertex_darts_are_rotation_blocks():
    m = k4()
    for v in range(m.nv):
        darts = m.vertex_darts(v)
        for a, b in zip(darts, darts[1:] + darts[:1]):
            assert m.sigma[a] == b


def test_edge_labels_round_trip():
    m = triangle()
    assert sorted(m.edge_labels) == ["a", "b", "c"]
    rows = m.rotations()
    assert build_map(rows) == m


def test_dual_of_tetrahedron_is_tetrahedron():
    m = k4()
    assert m.dual().isomorphic(m)
    assert m.dual().nv == m.nf


def test_dual_swaps_faces_and_vertices():
    m = theta()
    d = m.dual()
    assert (d.nv, d.ne, d.nf) == (m.nf, m.ne, m.nv)
    assert d.genus() == 0


def test_mirror_is_involution():
    for m in (triangle(), k4(), theta()):
        assert m.mirror().mirror() == m
        assert m.mirror().isomorphic(m, include_mirror=True)


def test_is_simple():
    assert triangle().is_simple()
    assert k4().is_simple()
    assert not theta().is_simple()
    assert not loop_map().is_simple()
    assert not digon().is_simple()


def test_disconnected_rejected():
    m = two_triangles()
    assert not m.is_connected()
    with pytest.raises(Disconnected):
        m.genus()
    with pytest.raises(Disconnected):
        m.canonical_code()


def test_build_map_input_validation():
    with pytest.raises(EmptyInput):
        build_map([])
    with pytest.raises(DuplicateEdgeUse):
        build_map([["a"], ["a"], ["a"]])
    with pytest.raises(DuplicateEdgeUse):
        build_map([["a"]])


def test_canonical_code_fixed_values():
    # frozen decodable traces; a change here is a format break
    assert triangle().canonical_code() == (3, 3, 2, 0, 1, 2, 0, 2, 2, 1, 2)
    assert k4().canonical_code() == (
        4, 6, 3, 0, 1, 2, 3, 0, 3, 4, 3, 1, 4, 5, 3, 2, 5, 3,
    )


def test_canonical_code_invariant_under_relabeling():
    rng = Random(7)
    for m in (k4(), theta(), loop_map()):
        code = m.canonical_code()
        for _ in range(6):
            perm = list(range(m.nd))
            rng.shuffle(perm)
            assert m.permuted(perm).canonical_code() == code


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_random_maps_code_invariance(seed, pseed):
    m = grow_random_map(Random(seed))
    perm = list(range(m.nd))
    Random(pseed).shuffle(perm)
    relabeled = m.permuted(perm)
    assert relabeled.canonical_code() == m.canonical_code()
    assert relabeled.isomorphic(m)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_random_growth_is_planar_and_connected(seed):
    m = grow_random_map(Random(seed))
    assert m.is_connected()
    assert m.genus() == 0


def test_mirror_can_change_oriented_code():
    # the second 10-crossing universe in canonical order is chiral
    u = list(enumerate_universes(EnumFilter(v_exact=10)))[1]
    m = u.map
    assert m.canonical_code() == m.mirror().canonical_code()
    assert (
        m.canonical_code(include_mirror=False)
        != m.mirror().canonical_code(include_mirror=False)
    )
    assert m.isomorphic(m.mirror(), include_mirror=True)
    assert not m.isomorphic(m.mirror(), include_mirror=False)


def test_isomorphic_distinguishes():
    assert not k4().isomorphic(theta())
    perm = list(range(k4().nd))
    Random(3).shuffle(perm)
    assert k4().isomorphic(k4().permuted(perm))


def test_permuted_preserves_structure():
    m = k4()
    perm = list(range(m.nd))
    Random(5).shuffle(perm)
    p = m.permuted(perm)
    assert sorted(p.degrees) == sorted(m.degrees)
    assert sorted(p.face_degrees) == sorted(m.face_degrees)
    assert p.genus() == 0


def test_equality_and_hash():
    assert triangle() == triangle()
    assert hash(triangle()) == hash(triangle())
    assert triangle() != theta()


def test_genus_formula_on_duals():
    for m in (k4(), theta(), loop_map()):
        assert m.dual().genus() == m.genus()
