"""Analysis of universes: 4-regular connected sphere maps.

A universe is the shadow of a knot or link diagram: vertices are the
crossings, edges the arcs between them.  A strand runs straight
through each crossing, leaving on the dart opposite the one it
entered; the number of closed strands is the component count mu.
"""

from collections import Counter
from functools import cached_property

from .errors import NotFourRegular, NotLuneFree, PositiveGenus
from .planar_map import PlanarMap


class FaceCensus(Counter):
    """Face-degree counts: census[k] is the number of k-sided faces."""

    @property
    def total_faces(self):
        return sum(self.values())

    @property
    def total_degree(self):
        return sum(k * c for k, c in self.items())

    def identity_defect(self):
        """3*f1 + 2*f2 + f3 - 8 - sum over k>=5 of (k-4)*f_k.

        Zero for every universe: with e = 2v and f = v + 2, counting
        face degrees against 4f = 2e + 8 forces the balance.  For a
        lune-free universe this reduces to f3 = 8 + sum (k-4)*f_k,
        so f3 >= 8.
        """
        high = sum((k - 4) * c for k, c in self.items() if k >= 5)
        return 3 * self[1] + 2 * self[2] + self[3] - 8 - high


class Universe:
    """A validated 4-regular connected genus-0 map.

    Validation happens at construction: degree, connectivity and
    genus failures raise immediately, so holding a Universe is proof
    of shape.  All analyses are cached; instances are immutable.
    """

    def __init__(self, m: PlanarMap):
        bad = [v for v, deg in enumerate(m.degrees) if deg != 4]
        if bad:
            raise NotFourRegular(
                "vertex %d has degree %d, want 4" % (bad[0], m.degrees[bad[0]])
            )
        if m.genus() != 0:  # raises Disconnected on split input
            raise PositiveGenus("universes live on the sphere")
        self.map = m

    @property
    def v(self):
        return self.map.nv

    @property
    def e(self):
        return self.map.ne

    @property
    def f(self):
        return self.map.nf

    @cached_property
    def face_census(self):
        census = FaceCensus()
        for deg in self.map.face_degrees:
            census[deg] += 1
        return census

    @cached_property
    def strand_orbits(self):
        """Orbits of the through-crossing step d -> alpha(sigma^2(d)).

        Each strand is traced twice, once per direction, so the
        orbits come in reversed pairs and mu is half their number.
        """
        m = self.map
        sigma, alpha = m.sigma, m.alpha
        seen = [False] * m.nd
        orbits = []
        for d in range(m.nd):
            if seen[d]:
                continue
            orbit = [d]
            seen[d] = True
            x = alpha[sigma[sigma[d]]]
            while x != d:
                seen[x] = True
                orbit.append(x)
                x = alpha[sigma[sigma[x]]]
            orbits.append(tuple(orbit))
        return tuple(orbits)

    @cached_property
    def strand_count(self):
        assert len(self.strand_orbits) % 2 == 0
        return len(self.strand_orbits) // 2

    def is_knot_graph(self):
        """True when a single strand traverses every crossing."""
        return self.strand_count == 1

    @cached_property
    def lune_count(self):
        """Number of 2-sided faces."""
        return self.face_census[2]

    def is_lune_free(self):
        """True when the underlying map is simple.

        A simple universe cannot have 1- or 2-sided faces, so this
        implies lune_count == 0; the converse fails for nested
        parallel edges, which is why simplicity is the definition.
        """
        simple = self.map.is_simple()
        if simple:
            assert self.face_census[1] == 0 and self.lune_count == 0
        return simple

    def _flanks(self, e):
        d1, d2 = self.map.edge_darts[e]
        fo = self.map.face_of
        return fo[d1], fo[d2]

    def is_admissible(self):
        """True when some edge has both flanking faces of degree >= 4."""
        if not self.is_lune_free():
            raise NotLuneFree("admissibility is defined for lune-free universes")
        fd = self.map.face_degrees
        return any(
            fd[a] >= 4 and fd[b] >= 4 for a, b in map(self._flanks, range(self.e))
        )

    def is_tight(self):
        """True when every edge has a 3-sided face on at least one side.

        On lune-free universes this is exactly the negation of
        is_admissible.
        """
        if not self.is_lune_free():
            raise NotLuneFree("tightness is defined for lune-free universes")
        fd = self.map.face_degrees
        return all(
            fd[a] == 3 or fd[b] == 3 for a, b in map(self._flanks, range(self.e))
        )

    def __repr__(self):
        return "Universe(v=%d, mu=%d)" % (self.v, self.strand_count)


def as_universe(m: PlanarMap) -> Universe:
    """Validate a map as a universe (multigraphs allowed)."""
    return Universe(m)
