"""Exhaustive generation against brute-force and frozen oracles."""

import pytest

from lunefree.config import Config
from lunefree.constructions import tight_link_graph_12
from lunefree.enumeration import (
    CrossCheckReport,
    EnumFilter,
    census_table,
    enumerate_plane_graphs,
    enumerate_universes,
    oracle_cross_check,
)
from lunefree.errors import BadParams, CeilingExceeded
from lunefree.planar_map import PlanarMap
from lunefree.verify import _lune_free


def _pairings(darts):
    if not darts:
        yield ()
        return
    a = darts[0]
    for i in range(1, len(darts)):
        rest = darts[1:i] + darts[i + 1 :]
        for p in _pairings(rest):
            yield ((a, darts[i]),) + p


def _brute_codes(v):
    # every 4-regular map relabels into consecutive vertex blocks, so
    # fixing sigma and sweeping all pairings of darts is exhaustive
    nd = 4 * v
    sigma = [4 * (d // 4) + (d + 1) % 4 for d in range(nd)]
    codes = set()
    for pairing in _pairings(tuple(range(nd))):
        alpha = [0] * nd
        for a, b in pairing:
            alpha[a], alpha[b] = b, a
        m = PlanarMap(sigma, alpha)
        try:
            if m.genus() == 0:
                codes.add(m.canonical_code())
        except Exception:
            continue
    return codes


def test_filter_validation():
    with pytest.raises(BadParams):
        EnumFilter()
    with pytest.raises(BadParams):
        EnumFilter(v_exact=3, v_max=3)
    with pytest.raises(BadParams):
        EnumFilter(v_exact=0)
    with pytest.raises(BadParams):
        EnumFilter(v_max=3, mu=0)


def test_general_counts_match_brute_force():
    for v in (1, 2, 3):
        grown = {
            u.map.canonical_code()
            for u in enumerate_universes(EnumFilter(require_simple=False, v_exact=v))
        }
        brute = _brute_codes(v)
        assert grown == brute
        assert len(brute) == {1: 1, 2: 3, 3: 7}[v]


def test_lune_free_counts():
    per_v = [
        len(list(enumerate_universes(EnumFilter(v_exact=v)))) for v in range(1, 13)
    ]
    assert per_v == [0, 0, 0, 0, 0, 1, 0, 1, 1, 3, 3, 13]


def test_lune_free_thirteen():
    # shares the module-level cache with the verification suite
    assert len(_lune_free(13)) == 21


def test_census_table():
    rows = census_table(8)
    assert [r.total_lune_free for r in rows] == [0, 0, 0, 0, 0, 1, 0, 1]
    six, eight = rows[5], rows[7]
    assert (six.v, six.total_lune_free, six.knot_graphs) == (6, 1, 0)
    assert (six.tight_lune_free, six.tight_knot) == (1, 0)
    assert (eight.knot_graphs, eight.tight_lune_free, eight.tight_knot) == (1, 1, 1)


def test_ceilings():
    with pytest.raises(CeilingExceeded):
        list(enumerate_universes(EnumFilter(v_exact=14)))
    with pytest.raises(CeilingExceeded):
        list(enumerate_universes(EnumFilter(require_simple=False, v_exact=11)))
    with pytest.raises(CeilingExceeded):
        list(enumerate_plane_graphs(13))
    with pytest.raises(CeilingExceeded):
        census_table(14)
    with pytest.raises(CeilingExceeded):
        oracle_cross_check(11)
    tight_cfg = Config(ceiling_simple=5)
    with pytest.raises(CeilingExceeded):
        list(enumerate_universes(EnumFilter(v_exact=6), config=tight_cfg))


def test_plane_graph_counts():
    assert list(enumerate_plane_graphs(5, simple_only=True)) == []
    only, = enumerate_plane_graphs(6, simple_only=True)
    assert (only.nv, only.ne) == (4, 6)
    both = list(enumerate_plane_graphs(8, simple_only=True))
    assert [g.nv for g in both] == [4, 5]
    loose = list(
        enumerate_plane_graphs(7, min_vertex_deg=1, min_face_deg=1, simple_only=True)
    )
    assert len(loose) == 216
    with pytest.raises(BadParams):
        list(enumerate_plane_graphs(5, min_vertex_deg=0))


def test_thread_count_does_not_change_output():
    flt = EnumFilter(v_max=9)
    serial = [u.map.canonical_code() for u in enumerate_universes(flt, Config())]
    forked = [
        u.map.canonical_code() for u in enumerate_universes(flt, Config(threads=2))
    ]
    assert serial == forked


def test_twelve_crossing_tight_census():
    tight = list(enumerate_universes(EnumFilter(v_exact=12, tight=True)))
    assert sorted(u.strand_count for u in tight) == [2, 3, 4, 4]
    link = next(u for u in tight if u.strand_count == 3)
    assert link.map.isomorphic(tight_link_graph_12().map)
    assert not list(enumerate_universes(EnumFilter(v_exact=12, tight=True, mu=1)))


def test_stream_is_sorted_and_valid():
    stream = list(enumerate_universes(EnumFilter(v_max=10)))
    codes = [u.map.canonical_code() for u in stream]
    assert codes == sorted(codes)
    assert sorted(u.strand_count for u in stream if u.v == 10) == [1, 2, 4]
    for u in stream:
        assert u.is_lune_free()
        assert u.face_census.identity_defect() == 0


def test_two_pipelines_agree():
    for v, expected in [(6, 1), (8, 1), (9, 1)]:
        report = oracle_cross_check(v)
        assert report == CrossCheckReport(v, expected)
