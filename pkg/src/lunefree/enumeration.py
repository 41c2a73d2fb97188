"""Exhaustive enumeration of universes and plane graphs at desk scale.

Both enumerations share one engine: a depth-first search that grows a
map dart by dart while keeping it embedded in the sphere.  Each face
of the partial map is a cyclic list of its open darts ("stubs"), with
a counter of placed darts between consecutive ones.  A new edge may
only join two stubs of the same face, splitting it in two, and a new
vertex is planted inside the face its entry edge points into;
planarity is therefore structural and no genus test is ever needed.
A split whose half keeps no stubs closes a face of known degree,
which drives the face-degree floors.

Vertices are created in discovery order, so every partial map is
connected and every finished map is reached from each of its darts.
The search therefore overcounts each class by roughly eight times the
vertex count; isomorph rejection is by canonical code at completion,
and deduplicating into a sorted code set makes the output order
reproducible, with or without worker processes.
"""

import dataclasses
from concurrent.futures import ProcessPoolExecutor

from .config import load_config
from .errors import BadParams, CeilingExceeded, Mismatch
from .knot_graph import Universe, as_universe
from .medial import medial
from .planar_map import PlanarMap, build_map

__all__ = [
    "EnumFilter",
    "CensusRow",
    "CrossCheckReport",
    "enumerate_universes",
    "enumerate_plane_graphs",
    "census_table",
    "oracle_cross_check",
]

# Completions only happen once every slot is matched, so any split
# shallower than the full edge count is sound; 6 gives a few hundred
# seams on the sizes where parallelism pays at all.
_SPLIT_DEPTH = 6


@dataclasses.dataclass(frozen=True)
class EnumFilter:
    """Size bound plus optional structural filters, all conjunctive.

    Exactly one of v_exact and v_max must be given.  require_simple
    selects the generation mode (simplicity is pruned during the
    search, not filtered afterwards); mu and tight are applied to the
    finished stream.  A universe with lunes never counts as tight.
    """

    require_simple: bool = True
    mu: int | None = None
    tight: bool | None = None
    v_exact: int | None = None
    v_max: int | None = None

    def __post_init__(self):
        if (self.v_exact is None) == (self.v_max is None):
            raise BadParams("give exactly one of v_exact and v_max")
        if self.bound < 1:
            raise BadParams("vertex bound must be positive")
        if self.mu is not None and self.mu < 1:
            raise BadParams("mu must be positive")

    @property
    def bound(self):
        return self.v_exact if self.v_exact is not None else self.v_max

    @property
    def sizes(self):
        if self.v_exact is not None:
            return range(self.v_exact, self.v_exact + 1)
        return range(1, self.v_max + 1)

    def keep(self, u: Universe) -> bool:
        if self.mu is not None and u.strand_count != self.mu:
            return False
        if self.tight is not None:
            tight = u.is_lune_free() and u.is_tight()
            if tight != self.tight:
                return False
        return True


@dataclasses.dataclass(frozen=True)
class CensusRow:
    v: int
    total_lune_free: int
    knot_graphs: int
    tight_lune_free: int
    tight_knot: int

    def __post_init__(self):
        assert self.knot_graphs <= self.total_lune_free
        assert self.tight_knot <= self.tight_lune_free <= self.total_lune_free


@dataclasses.dataclass(frozen=True)
class CrossCheckReport:
    """Outcome of a successful two-pipeline comparison."""

    v: int
    lune_free: int


class _Growth:
    """A partial sphere embedding with undoable edge placement.

    Darts are numbered in creation order and each vertex owns a
    contiguous block, so the rotation is implicit: the
    counterclockwise successor of a dart is the next dart in its
    block, cyclically.  The stubs of one face form a doubly-linked
    cycle snext/sprev in face-walk order; gap[d] counts the placed
    darts on the walk strictly between stub d and stub snext[d].

    Undo relies on two facts: matched darts keep their stale links,
    which still describe the cycle they were cut out of, and deeper
    placements are always unwound first, so the stale links are
    intact again by the time the matching undo runs.
    """

    __slots__ = ("deg", "base", "vert", "mate", "adj",
                 "snext", "sprev", "gap", "ec", "min_face", "simple")

    def __init__(self, min_face, simple):
        self.deg = []
        self.base = []
        self.vert = []
        self.mate = []
        self.adj = []
        self.snext = []
        self.sprev = []
        self.gap = []
        self.ec = 0
        self.min_face = min_face
        self.simple = simple

    # -------------------------------------------------------- vertices

    def _new_vertex(self, degree):
        b = len(self.mate)
        u = len(self.deg)
        self.deg.append(degree)
        self.base.append(b)
        self.adj.append(set())
        for i in range(degree):
            self.vert.append(u)
            self.mate.append(-1)
            self.snext.append(-1)
            self.sprev.append(-1)
            self.gap.append(0)
        return b

    def seed_vertex(self, degree):
        """The root vertex: its stubs form one face on their own."""
        b = self._new_vertex(degree)
        for i in range(degree):
            self.snext[b + i] = b + (i + 1) % degree
            self.sprev[b + i] = b + (i - 1) % degree
        return b

    def pop_vertex(self):
        b = self.base.pop()
        self.deg.pop()
        self.adj.pop()
        del self.vert[b:]
        del self.mate[b:]
        del self.snext[b:]
        del self.sprev[b:]
        del self.gap[b:]

    # ------------------------------------------------------ placements

    def sprout(self, d, degree):
        """Plant a fresh vertex inside d's face, entered from d.

        Returns its first dart, or None (state untouched) when the
        face would close below the floor, which only a degree-1
        vertex at the last stub of its face can do.
        """
        sn, sp, gap = self.snext, self.sprev, self.gap
        p = sp[d]
        if degree == 1 and p == d and gap[d] + 2 < self.min_face:
            return None
        b = self._new_vertex(degree)
        self.mate[d] = b
        self.mate[b] = d
        self.ec += 1
        if self.simple:
            u, w = self.vert[d], self.vert[b]
            self.adj[u].add(w)
            self.adj[w].add(u)
        if degree == 1:
            if p != d:
                n0 = sn[d]
                sn[p] = n0
                sp[n0] = p
                gap[p] += 2 + gap[d]
            return b
        first, last = b + 1, b + degree - 1
        for i in range(first, last):
            sn[i] = i + 1
            sp[i + 1] = i
        if p == d:
            # d was alone on its face; the walk reenters its old gap
            # through the far side of the new vertex
            sn[last] = first
            sp[first] = last
            gap[last] = gap[d] + 2
        else:
            n0 = sn[d]
            sn[p] = first
            sp[first] = p
            sn[last] = n0
            sp[n0] = last
            gap[p] += 1
            gap[last] = gap[d] + 1
        return b

    def unsprout(self, d):
        degree = self.deg[-1]
        if self.simple:
            u, w = self.vert[d], self.vert[self.mate[d]]
            self.adj[u].discard(w)
            self.adj[w].discard(u)
        self.ec -= 1
        self.mate[d] = -1
        self.pop_vertex()
        sn, sp, gap = self.snext, self.sprev, self.gap
        p = sp[d]
        if p == d:
            return
        n0 = sn[d]
        sn[p] = d
        sp[n0] = d
        gap[p] -= (2 + gap[d]) if degree == 1 else 1

    def join(self, d, q):
        """Match two stubs of one face, splitting it.

        Returns True, or None (state untouched) when a side would
        close below the face floor.  The d side keeps the walk
        segment strictly after q; the q side keeps the segment
        strictly after d.
        """
        sn, sp, gap = self.snext, self.sprev, self.gap
        a_first = sn[q]
        b_first = sn[d]
        if a_first == d and gap[q] + 1 < self.min_face:
            return None
        if b_first == q and gap[d] + 1 < self.min_face:
            return None
        if a_first != d:
            a_last = sp[d]
            sn[a_last] = a_first
            sp[a_first] = a_last
            gap[a_last] += 1 + gap[q]
        if b_first != q:
            b_last = sp[q]
            sn[b_last] = b_first
            sp[b_first] = b_last
            gap[b_last] += 1 + gap[d]
        self.mate[d] = q
        self.mate[q] = d
        self.ec += 1
        if self.simple:
            u, w = self.vert[d], self.vert[q]
            self.adj[u].add(w)
            self.adj[w].add(u)
        return True

    def unjoin(self, d, q):
        sn, sp, gap = self.snext, self.sprev, self.gap
        if self.simple:
            u, w = self.vert[d], self.vert[q]
            self.adj[u].discard(w)
            self.adj[w].discard(u)
        self.ec -= 1
        self.mate[d] = -1
        self.mate[q] = -1
        a_first = sn[q]
        b_first = sn[d]
        if a_first != d:
            a_last = sp[d]
            gap[a_last] -= 1 + gap[q]
            sn[a_last] = d
            sp[a_first] = q
        if b_first != q:
            b_last = sp[q]
            gap[b_last] -= 1 + gap[d]
            sn[b_last] = q
            sp[b_first] = d

    def snapshot(self):
        nd = len(self.mate)
        sigma = [0] * nd
        for d in range(nd):
            u = self.vert[d]
            b = self.base[u]
            sigma[d] = b + (d - b + 1) % self.deg[u]
        return PlanarMap(sigma, list(self.mate))


def _map_from_code(code):
    """Rebuild the canonical representative from its code.

    The code is the vertex and edge count followed by per-vertex
    first-use edge numbers in rotation order, which is exactly the
    input format of build_map.  Mirrored traces decode to the mirror
    map, which carries the same code.
    """
    nv = code[0]
    rows = []
    p = 2
    for _ in range(nv):
        k = code[p]
        rows.append(list(code[p + 1 : p + 1 + k]))
        p += 1 + k
    m = build_map(rows)
    assert p == len(code) and m.canonical_code() == code
    return m


def _grow_universes(v, simple, prefix=None, split=None):
    """All 4-regular sphere maps on v vertices.

    Returns the set of canonical codes; with split=k it returns
    (codes found above the seam, choice prefixes at depth k) so the
    subtrees can run elsewhere.  prefix replays one such seam.
    """
    g = _Growth(min_face=3 if simple else 1, simple=simple)
    g.seed_vertex(4)
    out = set()
    seams = []
    path = []
    plen = len(prefix) if prefix is not None else -1

    def rec(scan):
        mate = g.mate
        d = scan
        nd = len(mate)
        while d < nd and mate[d] >= 0:
            d += 1
        if d == nd:
            if len(g.deg) == v:
                out.add(g.snapshot().canonical_code())
            return
        # every placement settles one edge and discovers at most one
        # new vertex
        if len(g.deg) + (2 * v - g.ec) < v:
            return
        depth = len(path)
        if split is not None and depth == split:
            seams.append(tuple(path))
            return
        take = prefix[depth] if depth < plen else -1
        idx = 0
        u = g.vert[d]
        if len(g.deg) < v:
            if take < 0 or take == idx:
                g.sprout(d, 4)
                path.append(idx)
                rec(d + 1)
                path.pop()
                g.unsprout(d)
            idx += 1
        # all degrees are even, so a face whose stub count ever turns
        # odd can never be fully closed: a split sends an odd count to
        # an odd half, sprouting changes the count by two, and closed
        # means zero.  Joins that leave an odd side are dead ends.
        snext = g.snext
        vert = g.vert
        adj_u = g.adj[u] if simple else None
        even_between = True
        q = snext[d]
        while q != d:
            legal = not simple or (vert[q] != u and vert[q] not in adj_u)
            if legal and even_between:
                if take < 0 or take == idx:
                    if g.join(d, q) is not None:
                        path.append(idx)
                        rec(d + 1)
                        path.pop()
                        g.unjoin(d, q)
                idx += 1
            q = snext[q]
            even_between = not even_between

    rec(0)
    if split is not None:
        return out, seams
    return out


def _universe_slice(args):
    v, simple, prefix = args
    return _grow_universes(v, simple, prefix=prefix)


def _universe_codes(v, simple, threads):
    if threads > 1:
        above, seams = _grow_universes(v, simple, split=_SPLIT_DEPTH)
        if len(seams) > 1:
            jobs = [(v, simple, s) for s in seams]
            with ProcessPoolExecutor(max_workers=threads) as pool:
                for part in pool.map(_universe_slice, jobs, chunksize=8):
                    above |= part
            return above
        # narrow seam: nothing to farm out, fall through sequentially
    return _grow_universes(v, simple)


def _grow_planes(e_max, min_vdeg, min_fdeg, simple):
    """All connected sphere maps with at most e_max edges and the
    given degree floors.  Returns the set of canonical codes."""
    g = _Growth(min_face=min_fdeg, simple=simple)
    out = set()
    cap = 2 * e_max

    def rec(scan):
        mate = g.mate
        d = scan
        nd = len(mate)
        while d < nd and mate[d] >= 0:
            d += 1
        if d == nd:
            out.add(g.snapshot().canonical_code())
            return
        u = g.vert[d]
        for dd in range(min_vdeg, cap - nd + 1):
            if g.sprout(d, dd) is not None:
                rec(d + 1)
                g.unsprout(d)
        snext = g.snext
        vert = g.vert
        adj_u = g.adj[u] if simple else None
        q = snext[d]
        while q != d:
            if not simple or (vert[q] != u and vert[q] not in adj_u):
                if g.join(d, q) is not None:
                    rec(d + 1)
                    g.unjoin(d, q)
            q = snext[q]

    for d0 in range(min_vdeg, cap + 1):
        g.seed_vertex(d0)
        rec(0)
        g.pop_vertex()
    return out


def enumerate_universes(filt: EnumFilter, config=None):
    """Every universe within the filter bounds, one per isomorphism
    class (reflections identified), in canonical-code order."""
    cfg = config or load_config()
    ceiling = cfg.ceiling_simple if filt.require_simple else cfg.ceiling_general
    if filt.bound > ceiling:
        raise CeilingExceeded(
            "v=%d is above the configured ceiling %d" % (filt.bound, ceiling)
        )
    codes = set()
    for v in filt.sizes:
        codes |= _universe_codes(v, filt.require_simple, cfg.threads)
    for code in sorted(codes):
        u = as_universe(_map_from_code(code))
        if filt.keep(u):
            yield u


def enumerate_plane_graphs(
    e_max, min_vertex_deg=3, min_face_deg=3, simple_only=False, config=None
):
    """Every connected plane map with at most e_max edges meeting the
    degree floors, one per class, in canonical-code order.

    The floors prune the search rather than filter its output; with
    min degrees 3/3 these are exactly the maps whose medials have no
    faces smaller than a triangle.
    """
    cfg = config or load_config()
    if e_max > cfg.ceiling_edges:
        raise CeilingExceeded(
            "e=%d is above the configured ceiling %d" % (e_max, cfg.ceiling_edges)
        )
    if min(e_max, min_vertex_deg, min_face_deg) < 1:
        raise BadParams("bounds and floors must be positive")
    codes = _grow_planes(e_max, min_vertex_deg, min_face_deg, simple_only)
    for code in sorted(codes):
        yield _map_from_code(code)


def census_table(v_max, config=None):
    """Counts of lune-free universes per vertex count up to v_max."""
    cfg = config or load_config()
    if v_max > cfg.ceiling_simple:
        raise CeilingExceeded(
            "v=%d is above the configured ceiling %d" % (v_max, cfg.ceiling_simple)
        )
    rows = []
    for v in range(1, v_max + 1):
        flt = EnumFilter(require_simple=True, v_exact=v)
        total = knots = tights = tight_knots = 0
        for u in enumerate_universes(flt, cfg):
            total += 1
            knot = u.strand_count == 1
            knots += knot
            if u.is_tight():
                tights += 1
                tight_knots += knot
        rows.append(CensusRow(v, total, knots, tights, tight_knots))
    return rows


def oracle_cross_check(v, config=None) -> CrossCheckReport:
    """Compare the two lune-free pipelines at v crossings.

    Pipeline A enumerates 4-regular sphere maps directly; pipeline B
    enumerates plane maps with v edges and degree floors 3/3 and
    takes their medials.  Every lune-free universe arises both ways
    (its premedial graph has floors 3/3 because the face degrees of
    the universe are the vertex and face degrees of the premedial),
    so the canonical code sets must agree exactly.
    """
    cfg = config or load_config()
    if v > cfg.ceiling_general:
        raise CeilingExceeded(
            "v=%d is above the configured ceiling %d" % (v, cfg.ceiling_general)
        )
    direct = _universe_codes(v, True, cfg.threads)
    via_medial = set()
    for g in enumerate_plane_graphs(v, 3, 3, simple_only=False, config=cfg):
        if g.ne != v:
            continue
        u = medial(g)
        # floors 3/3 rule out small faces but not nested parallel
        # edges, so the simplicity filter is still needed here
        if u.is_lune_free():
            via_medial.add(u.map.canonical_code())
    if direct != via_medial:
        raise Mismatch(
            "pipelines disagree at v=%d" % v,
            only_direct=sorted(direct - via_medial),
            only_premedial=sorted(via_medial - direct),
        )
    return CrossCheckReport(v=v, lune_free=len(direct))
