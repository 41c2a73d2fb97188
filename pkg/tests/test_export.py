"""Planar-code bytes, straight-line layouts, DOT and SVG output."""

import math

import pytest

from conftest import digon, k4, loop_map, theta, triangle, two_triangles
from lunefree.constructions import BraidWord, braid_closure_shadow, prism, venn
from lunefree.errors import BadParams, NotSimple, NotThreeConnected
from lunefree.export import (
    Embedding,
    export_planar_code,
    is_three_connected,
    to_dot,
    to_svg,
    tutte_embed,
)
from lunefree.medial import wheel
from lunefree.planar_map import build_map


def cycle_map(n):
    return build_map([[("e", (v - 1) % n), ("e", v)] for v in range(n)])


def _groups(code):
    body = list(code[1:])
    groups = []
    cur = []
    for byte in body:
        if byte == 0:
            groups.append(cur)
            cur = []
        else:
            cur.append(byte)
    assert cur == []
    return groups


def test_planar_code_layout():
    m = venn().map
    code = export_planar_code(m)
    assert len(code) == 1 + sum(deg + 1 for deg in m.degrees)
    assert code[0] == 6
    groups = _groups(code)
    assert [len(g) for g in groups] == [4] * 6
    for v, group in enumerate(groups):
        nbrs = sorted(
            (set(m.endpoints(m.edge_of[d])) - {v} or {v}).pop()
            for d in m.vertex_darts(v)
        )
        assert sorted(b - 1 for b in group) == nbrs


def test_planar_code_k4():
    code = export_planar_code(k4())
    assert code[0] == 4 and len(code) == 17
    for v, group in enumerate(_groups(code)):
        assert sorted(group) == sorted(set(range(1, 5)) - {v + 1})


def test_planar_code_rejections():
    with pytest.raises(NotSimple):
        export_planar_code(braid_closure_shadow(BraidWord(2, (1, 1, 1))).map)
    with pytest.raises(NotSimple):
        export_planar_code(digon())
    with pytest.raises(BadParams):
        export_planar_code(cycle_map(256))


def test_is_three_connected():
    assert is_three_connected(k4())
    assert is_three_connected(venn().map)
    assert is_three_connected(prism(3))
    assert is_three_connected(wheel(5))
    assert not is_three_connected(triangle())  # too few vertices
    assert not is_three_connected(theta())  # not simple
    assert not is_three_connected(cycle_map(4))  # every pair separates
    assert not is_three_connected(two_triangles())


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _segments_cross(p, q, r, s, tol=1e-9):
    d1, d2 = _orient(p, q, r), _orient(p, q, s)
    d3, d4 = _orient(r, s, p), _orient(r, s, q)
    return d1 * d2 < -tol and d3 * d4 < -tol


def _assert_plane_drawing(m, emb, outer):
    ends = [m.endpoints(e) for e in range(m.ne)]
    for i, (a, b) in enumerate(ends):
        for c, d in ends[i + 1 :]:
            if {a, b} & {c, d}:
                continue
            assert not _segments_cross(emb[a], emb[b], emb[c], emb[d])
    rim = {m.vertex_of[d] for d in m.faces[outer]}
    for v in range(m.nv):
        radius = math.hypot(*emb[v])
        if v in rim:
            assert abs(radius - 1.0) < 1e-9
        else:
            assert radius < 1.0 - 1e-6


def test_tutte_embed():
    m = venn().map
    emb = tutte_embed(m, 0)
    _assert_plane_drawing(m, emb, 0)
    w = wheel(6)
    outer = max(range(w.nf), key=lambda f: w.face_degrees[f])
    emb = tutte_embed(w, outer)
    _assert_plane_drawing(w, emb, outer)
    # the hub averages its rim and lands at the centre
    assert math.hypot(*emb[0]) < 1e-9


def test_tutte_embed_rejections():
    with pytest.raises(NotThreeConnected):
        tutte_embed(cycle_map(4), 0)
    with pytest.raises(NotThreeConnected):
        tutte_embed(digon(), 0)
    with pytest.raises(BadParams):
        tutte_embed(k4(), 99)


def test_embedding_validation():
    emb = Embedding({0: (0.0, 0.0), 1: (1.0, 0.0)})
    assert emb[1] == (1.0, 0.0)
    with pytest.raises(BadParams):
        Embedding({0: (float("nan"), 0.0)})
    with pytest.raises(BadParams):
        Embedding({0: (0.0, 0.0), 1: (0.0, 1e-12)})


def test_svg_output():
    m = venn().map
    svg = to_svg(m)
    assert svg.startswith("<svg ")
    assert svg.count("<circle") == m.nv
    assert svg.count("<path") == m.ne
    assert " L " in svg and " Q " not in svg  # straight-line layout
    knotted = braid_closure_shadow(BraidWord(2, (1, 1, 1))).map
    curved = to_svg(knotted)
    assert curved.count("<circle") == 3
    assert " Q " in curved  # circular fallback bows parallel edges
    assert " C " in to_svg(loop_map())  # loops become lobes


def test_dot_output():
    m = k4()
    dot = to_dot(m)
    assert dot.startswith("graph {")
    assert dot.count(" -- ") == m.ne
    assert dot.count("!") == m.nv  # every vertex position is pinned
