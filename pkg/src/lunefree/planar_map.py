"""Rotation systems: graphs embedded in oriented surfaces.

A map is a pair of permutations of its darts (half-edges).  Darts are
the integers 0..2e-1; ``sigma`` sends a dart to the next dart
counterclockwise around the same vertex and ``alpha`` to the other
half of the same edge.  Orbits of sigma are vertices, orbits of alpha
are edges, and orbits of ``phi = sigma o alpha`` walk face
boundaries; the face of a dart lies on its left.

Maps are built from per-vertex rotation lists and never mutated.

>>> tri = build_map([["a", "c"], ["b", "a"], ["c", "b"]])
>>> tri.nv, tri.ne, tri.nf
(3, 3, 2)
>>> tri.genus()
0
>>> tri.is_simple()
True
>>> loop = build_map([["a", "a"]])
>>> loop.face_degrees
(1, 1)
"""

from collections import Counter
from functools import cached_property

from .errors import Disconnected, DuplicateEdgeUse, EmptyInput, PositiveGenus


class PlanarMap:
    """An embedded multigraph, encoded by its dart permutations.

    ``sigma`` and ``alpha`` are sequences of dart indices; ``alpha``
    must be an involution without fixed points.  Vertices and edges
    are numbered by their least dart.  ``edge_labels`` optionally
    names each edge (defaults to the edge index).

    Two maps compare equal when their permutations are identical;
    use :meth:`isomorphic` for equality up to relabeling.
    """

    def __init__(self, sigma, alpha, edge_labels=None):
        self._sigma = tuple(sigma)
        self._alpha = tuple(alpha)
        nd = len(self._sigma)
        if nd == 0:
            raise EmptyInput("a map needs at least one edge")
        if sorted(self._sigma) != list(range(nd)):
            raise ValueError("sigma is not a permutation of the darts")
        if len(self._alpha) != nd:
            raise ValueError("sigma and alpha disagree on the dart count")
        for d in range(nd):
            a = self._alpha[d]
            if a == d or not 0 <= a < nd or self._alpha[a] != d:
                raise ValueError("alpha is not a fixed-point-free involution")

        vertex_of = [-1] * nd
        vertex_darts = []
        for d in range(nd):
            if vertex_of[d] >= 0:
                continue
            cycle = [d]
            vertex_of[d] = len(vertex_darts)
            x = self._sigma[d]
            while x != d:
                vertex_of[x] = len(vertex_darts)
                cycle.append(x)
                x = self._sigma[x]
            vertex_darts.append(tuple(cycle))
        self._vertex_of = tuple(vertex_of)
        self._vertex_darts = tuple(vertex_darts)

        edge_of = [-1] * nd
        edge_darts = []
        for d in range(nd):
            if edge_of[d] < 0:
                edge_of[d] = edge_of[self._alpha[d]] = len(edge_darts)
                edge_darts.append((d, self._alpha[d]))
        self._edge_of = tuple(edge_of)
        self._edge_darts = tuple(edge_darts)

        if edge_labels is None:
            edge_labels = range(len(edge_darts))
        self._edge_labels = tuple(edge_labels)
        if len(self._edge_labels) != len(edge_darts):
            raise ValueError("need exactly one label per edge")

    # ----------------------------------------------------------- sizes

    @property
    def nd(self):
        """Number of darts (= 2e)."""
        return len(self._sigma)

    @property
    def nv(self):
        return len(self._vertex_darts)

    @property
    def ne(self):
        return len(self._edge_darts)

    @property
    def nf(self):
        return len(self.faces)

    # ----------------------------------------------------- permutations

    @property
    def sigma(self):
        return self._sigma

    @property
    def alpha(self):
        return self._alpha

    @cached_property
    def sigma_inv(self):
        inv = [0] * self.nd
        for d, x in enumerate(self._sigma):
            inv[x] = d
        return tuple(inv)

    @cached_property
    def phi(self):
        """Face permutation: phi(d) = sigma(alpha(d))."""
        s, a = self._sigma, self._alpha
        return tuple(s[a[d]] for d in range(self.nd))

    # ------------------------------------------------ vertices and edges

    @property
    def vertex_of(self):
        return self._vertex_of

    @property
    def edge_of(self):
        return self._edge_of

    @property
    def edge_labels(self):
        return self._edge_labels

    def vertex_darts(self, v):
        """Darts at vertex v, in counterclockwise order."""
        return self._vertex_darts[v]

    @property
    def edge_darts(self):
        """Dart pairs by edge index."""
        return self._edge_darts

    @cached_property
    def degrees(self):
        return tuple(len(c) for c in self._vertex_darts)

    def endpoints(self, e):
        """Vertex pair of edge e (in dart order, so loops repeat)."""
        d1, d2 = self._edge_darts[e]
        return self._vertex_of[d1], self._vertex_of[d2]

    def rotations(self):
        """Per-vertex edge label lists, as accepted by build_map."""
        lab = self._edge_labels
        eo = self._edge_of
        return [[lab[eo[d]] for d in cycle] for cycle in self._vertex_darts]

    # ------------------------------------------------------------ faces

    @cached_property
    def faces(self):
        """Orbits of phi, each starting at its least dart."""
        phi = self.phi
        seen = [False] * self.nd
        out = []
        for d in range(self.nd):
            if seen[d]:
                continue
            cycle = [d]
            seen[d] = True
            x = phi[d]
            while x != d:
                seen[x] = True
                cycle.append(x)
                x = phi[x]
            out.append(tuple(cycle))
        return tuple(out)

    @cached_property
    def face_of(self):
        fo = [-1] * self.nd
        for i, cycle in enumerate(self.faces):
            for d in cycle:
                fo[d] = i
        return tuple(fo)

    @cached_property
    def face_degrees(self):
        return tuple(len(c) for c in self.faces)

    # ------------------------------------------------------- global shape

    def is_connected(self):
        seen = [False] * self.nd
        stack = [0]
        seen[0] = True
        n = 1
        while stack:
            d = stack.pop()
            for x in (self._sigma[d], self._alpha[d]):
                if not seen[x]:
                    seen[x] = True
                    n += 1
                    stack.append(x)
        return n == self.nd

    def genus(self):
        """Genus of the embedding surface; 0 means sphere.

        >>> build_map([["a", "b"], ["a", "b"]]).genus()
        0
        """
        if not self.is_connected():
            raise Disconnected("genus needs a connected map")
        g2 = 2 - (self.nv - self.ne + self.nf)
        assert g2 >= 0 and g2 % 2 == 0
        return g2 // 2

    def dual(self):
        """The face-vertex dual map, with edge labels carried over.

        Exact involution: dualizing twice restores sigma and alpha.
        """
        if self.genus() != 0:
            raise PositiveGenus("dual is only taken on sphere maps")
        return PlanarMap(self.phi, self._alpha, self._edge_labels)

    def mirror(self):
        """The map with all rotations reversed."""
        return PlanarMap(self.sigma_inv, self._alpha, self._edge_labels)

    def is_simple(self):
        """True when the map has no loops and no parallel edges."""
        seen = set()
        for d1, d2 in self._edge_darts:
            u, w = self._vertex_of[d1], self._vertex_of[d2]
            if u == w:
                return False
            key = (u, w) if u < w else (w, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    # ------------------------------------------------------ isomorphism

    def canonical_code(self, include_mirror=True):
        """A total-order key identifying the map up to relabeling.

        The code is the least breadth-first trace over all starting
        darts, and over both orientations when ``include_mirror`` is
        set, prefixed by the vertex and edge counts.  Codes of two
        maps are equal exactly when the maps are isomorphic as sphere
        embeddings (up to reflection when mirrored traces are
        included): the trace determines the rotation system.
        """
        if not self.is_connected():
            raise Disconnected("canonical code needs a connected map")
        sigmas = (self._sigma, self.sigma_inv) if include_mirror else (self._sigma,)
        best = None
        for sig in sigmas:
            for start in range(self.nd):
                code = self._trace(sig, start, best)
                if code is not None:
                    best = code
        return (self.nv, self.ne) + best

    def _trace(self, sig, start, best):
        # best, when given, prunes traces that are already losing
        alpha = self._alpha
        vo = self._vertex_of
        eo = self._edge_of
        vertex_num = {vo[start]: 0}
        entry = [start]
        edge_num = {}
        out = []
        pos = 0
        ahead = False  # strictly below best on the compared prefix
        i = 0
        while i < len(entry):
            d0 = entry[i]
            row = []
            d = d0
            while True:
                e = eo[d]
                num = edge_num.get(e)
                if num is None:
                    num = len(edge_num)
                    edge_num[e] = num
                    w = vo[alpha[d]]
                    if w not in vertex_num:
                        vertex_num[w] = len(entry)
                        entry.append(alpha[d])
                row.append(num)
                d = sig[d]
                if d == d0:
                    break
            out.append(len(row))
            out.extend(row)
            if best is not None and not ahead:
                # lexicographic: only the first differing element decides
                seg = tuple(out[pos:])
                ref = best[pos : len(out)]
                if seg != ref:
                    if seg > ref:
                        return None
                    ahead = True
                pos = len(out)
            i += 1
        out = tuple(out)
        if best is not None and best <= out:
            return None
        return out

    def isomorphic(self, other, include_mirror=True):
        """Sphere-embedding isomorphism, reflection included by default."""
        if self.nv != other.nv or self.ne != other.ne:
            return False
        if sorted(self.degrees) != sorted(other.degrees):
            return False
        return self.canonical_code(include_mirror) == other.canonical_code(
            include_mirror
        )

    def permuted(self, perm):
        """The same map with darts renamed by the permutation ``perm``."""
        nd = self.nd
        sigma = [0] * nd
        alpha = [0] * nd
        for d in range(nd):
            sigma[perm[d]] = perm[self._sigma[d]]
            alpha[perm[d]] = perm[self._alpha[d]]
        order = sorted(range(self.ne), key=lambda e: min(perm[d] for d in self._edge_darts[e]))
        labels = [self._edge_labels[e] for e in order]
        return PlanarMap(sigma, alpha, labels)

    # ------------------------------------------------------------- misc

    def __eq__(self, other):
        if not isinstance(other, PlanarMap):
            return NotImplemented
        return self._sigma == other._sigma and self._alpha == other._alpha

    def __hash__(self):
        return hash((self._sigma, self._alpha))

    def __repr__(self):
        return "PlanarMap(v=%d, e=%d)" % (self.nv, self.ne)


def build_map(rotations):
    """Build a map from per-vertex counterclockwise edge label lists.

    Every edge label must occur exactly twice overall; a label used
    twice at one vertex is a loop.  Vertices keep the given order and
    darts are numbered in reading order.  Disconnected input is
    accepted; operations that need connectivity raise Disconnected.

    >>> build_map([["a", "b", "c"], ["a", "c", "b"]])
    PlanarMap(v=2, e=3)
    >>> build_map([])
    Traceback (most recent call last):
        ...
    lunefree.errors.EmptyInput: no vertices
    """
    rotations = [list(r) for r in rotations]
    if not rotations:
        raise EmptyInput("no vertices")
    counts = Counter(lab for rot in rotations for lab in rot)
    for rot in rotations:
        for lab in rot:
            if counts[lab] != 2:
                raise DuplicateEdgeUse(
                    "edge %r used %d times, want exactly 2" % (lab, counts[lab])
                )
    for i, rot in enumerate(rotations):
        if not rot:
            raise EmptyInput("vertex %d has no edges" % i)

    sigma = []
    alpha = [-1] * sum(len(r) for r in rotations)
    open_dart = {}
    labels = []
    d = 0
    for rot in rotations:
        base = d
        k = len(rot)
        for i, lab in enumerate(rot):
            sigma.append(base + (i + 1) % k)
            if lab in open_dart:
                other = open_dart.pop(lab)
                alpha[other] = d
                alpha[d] = other
            else:
                open_dart[lab] = d
                labels.append(lab)
            d += 1
    return PlanarMap(sigma, alpha, labels)
