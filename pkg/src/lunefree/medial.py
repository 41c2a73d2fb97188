"""Medial construction, checkerboard colorings, and their inverses.

The medial of a plane map G puts a vertex on every edge of G and an
edge through every corner, producing a 4-regular map: a universe.
Checkerboard-coloring that universe and shrinking the black faces
back to vertices recovers G, which is what premedial implements.

Angles of G (vertex-face incidences, i.e. corners) are chained by a
pair of involutions; the number of chains equals the strand count of
the medial, which lets strand questions about universes be answered
on maps half their size.
"""

from dataclasses import dataclass

from .errors import BadSize, ImproperColoring, PositiveGenus, TooSmall
from .knot_graph import Universe, as_universe
from .planar_map import PlanarMap, build_map


def medial(m: PlanarMap) -> Universe:
    """Medial universe of a connected plane map with >= 2 edges.

    Medial vertices are the edges of m; the rotation at edge (d1, d2)
    reads the four flanking corners counterclockwise.  Corner ids are
    the darts of m, each flanking exactly two edges.
    """
    if m.ne < 2:
        raise TooSmall("medial needs at least 2 edges, got %d" % m.ne)
    m.genus()  # connectivity check
    inv = m.sigma_inv
    rows = []
    for d1, d2 in m.edge_darts:
        rows.append([d1, inv[d1], d2, inv[d2]])
    return as_universe(build_map(rows))


@dataclass(frozen=True)
class FaceColoring:
    """A proper 2-coloring of the faces of a universe."""

    nf: int
    black: frozenset

    def is_black(self, face):
        return face in self.black

    @property
    def white(self):
        return frozenset(range(self.nf)) - self.black

    def swapped(self):
        return FaceColoring(self.nf, self.white)


def checkerboard(u: Universe, black=None) -> FaceColoring:
    """The checkerboard coloring with the given face black.

    Defaults to the face containing dart 0.  A universe always admits
    exactly two proper face 2-colorings, one the swap of the other.
    """
    m = u.map
    if black is None:
        black = m.face_of[0]
    color = [None] * m.nf
    color[black] = 1
    queue = [black]
    adj = [[] for _ in range(m.nf)]
    for d1, d2 in m.edge_darts:
        a, b = m.face_of[d1], m.face_of[d2]
        adj[a].append(b)
        adj[b].append(a)
    while queue:
        cur = queue.pop()
        for nxt in adj[cur]:
            if color[nxt] is None:
                color[nxt] = 1 - color[cur]
                queue.append(nxt)
            elif color[nxt] == color[cur]:
                # even vertex degrees make the face-adjacency bipartite
                raise AssertionError("universe faces must 2-color")
    return FaceColoring(m.nf, frozenset(f for f in range(m.nf) if color[f] == 1))


def premedial(u: Universe, coloring: FaceColoring = None) -> PlanarMap:
    """Shrink the black faces of a universe to vertices.

    Inverse of medial: black faces become vertices, white faces stay
    faces, and each crossing becomes an edge joining the two black
    faces it separates.  Edge labels are the crossing ids of u.
    """
    m = u.map
    if coloring is None:
        coloring = checkerboard(u)
    if coloring.nf != m.nf:
        raise ImproperColoring(
            "coloring has %d faces, universe has %d" % (coloring.nf, m.nf)
        )
    for e, (d1, d2) in enumerate(m.edge_darts):
        a, b = m.face_of[d1], m.face_of[d2]
        if coloring.is_black(a) == coloring.is_black(b):
            raise ImproperColoring("faces %d and %d share edge %d" % (a, b, e))
    rows = []
    for face, cycle in enumerate(m.faces):
        if coloring.is_black(face):
            rows.append([m.vertex_of[d] for d in cycle])
    return build_map(rows)


def angle_components(m: PlanarMap) -> int:
    """Number of chains of angles of a connected plane map.

    Angles are the corners; two are chained when they sit at opposite
    ends and on opposite sides of a common edge.  Each corner c(d)
    has exactly two partners, alpha(d) across its first edge and
    sigma_inv(alpha(sigma(d))) across its second, and the chain count
    equals the strand count of medial(m).
    """
    if m.genus() != 0:
        raise PositiveGenus("angle chains are a plane-map notion")
    sigma, alpha, inv = m.sigma, m.alpha, m.sigma_inv
    parent = list(range(m.nd))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for d in range(m.nd):
        for n in (alpha[d], inv[alpha[sigma[d]]]):
            ra, rb = find(d), find(n)
            if ra != rb:
                parent[ra] = rb
    return len({find(d) for d in range(m.nd)})


def is_special(m: PlanarMap) -> bool:
    """True when vertex and face degrees are >= 3 and every corner
    touches a degree-3 vertex or a 3-sided face."""
    degs, fdegs = m.degrees, m.face_degrees
    if min(degs) < 3 or min(fdegs) < 3:
        return False
    vo, fo = m.vertex_of, m.face_of
    return all(degs[vo[d]] == 3 or fdegs[fo[d]] == 3 for d in range(m.nd))


@dataclass(frozen=True)
class SpecialClass:
    """Structure flags for a plane map.

    The flags report raw structure (cubic: all vertex degrees 3,
    triangulation: all face degrees 3, wheel: hub plus rim cycle);
    the tag folds them into one verdict with precedence
    wheel > cubic > triangulation, and is "other" exactly when the
    map is not special.  The tetrahedron map carries all three flags.
    """

    tag: str
    cubic: bool
    triangulation: bool
    wheel: bool
    wheel_size: int = None


def _wheel_size(m: PlanarMap):
    n = m.nv - 1
    if n < 3 or not m.is_simple() or m.ne != 2 * n:
        return None
    degs = sorted(m.degrees)
    fdegs = sorted(m.face_degrees)
    if degs != sorted([3] * n + [max(n, 3)]) or fdegs != [3] * n + [max(n, 3)]:
        return None
    if n == 3:
        return 3  # tetrahedron: every vertex serves as hub
    hub = m.degrees.index(n)
    nbrs = sorted(m.vertex_of[m.alpha[d]] for d in m.vertex_darts(hub))
    if nbrs != sorted(v for v in range(m.nv) if v != hub):
        return None
    return n


def classify_special(m: PlanarMap) -> SpecialClass:
    """Classify a plane map into the catalogue of special maps."""
    cubic = all(deg == 3 for deg in m.degrees)
    triangulation = all(deg == 3 for deg in m.face_degrees)
    size = _wheel_size(m)
    wheel_flag = size is not None
    if not is_special(m):
        tag = "other"
    elif wheel_flag:
        tag = "wheel"
    elif cubic:
        tag = "cubic"
    elif triangulation:
        tag = "triangulation"
    else:
        tag = "other"
    return SpecialClass(tag, cubic, triangulation, wheel_flag, size)


def wheel(n: int) -> PlanarMap:
    """The wheel map: an n-cycle rim, each rim vertex tied to a hub.

    Vertex 0 is the hub; spokes leave it in rim order.  n >= 3.
    """
    if n < 3:
        raise BadSize("wheel needs a rim of at least 3, got %d" % n)
    hub = [("s", i) for i in range(n)]
    rows = [hub]
    for i in range(n):
        rows.append([("s", i), ("r", (i - 1) % n), ("r", i)])
    return build_map(rows)
