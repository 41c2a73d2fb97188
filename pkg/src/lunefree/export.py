"""Exports: planar-code bytes, straight-line layouts, DOT and SVG.

The barycentric layout pins an outer face to a regular polygon and
puts every interior vertex at the average of its neighbours; for a
3-connected simple sphere map the resulting straight-line drawing is
crossing-free.  DOT and SVG are presentation plumbing on top of it,
with a circular fallback for maps the layout theorem does not cover;
drawings are aids for the eyes, never part of a verdict.
"""

import dataclasses
import math

import numpy as np

from .errors import BadParams, NotSimple, NotThreeConnected, SingularSystem
from .planar_map import PlanarMap

__all__ = [
    "Embedding",
    "export_planar_code",
    "tutte_embed",
    "is_three_connected",
    "to_dot",
    "to_svg",
]


@dataclasses.dataclass(frozen=True)
class Embedding:
    """Vertex coordinates, dimensionless; finite and pairwise distinct."""

    coordinates: dict

    def __post_init__(self):
        pts = list(self.coordinates.items())
        for _, (x, y) in pts:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise BadParams("non-finite coordinate")
        for i, (u, (ux, uy)) in enumerate(pts):
            for w, (wx, wy) in pts[i + 1 :]:
                if math.hypot(ux - wx, uy - wy) <= 1e-9:
                    raise BadParams("vertices %r and %r coincide" % (u, w))

    def __getitem__(self, vertex):
        return self.coordinates[vertex]


def export_planar_code(m: PlanarMap) -> bytes:
    """Standard planar-code bytes: vertex count, then each vertex's
    neighbours in rotation order, 1-indexed, 0-terminated."""
    if not m.is_simple():
        raise NotSimple("planar code is ambiguous for multigraphs")
    if m.nv > 255:
        raise BadParams("single-byte planar code carries at most 255 vertices")
    vo = m.vertex_of
    alpha = m.alpha
    out = bytearray([m.nv])
    for v in range(m.nv):
        for d in m.vertex_darts(v):
            out.append(vo[alpha[d]] + 1)
        out.append(0)
    return bytes(out)


def _neighbour_sets(m):
    vo = m.vertex_of
    alpha = m.alpha
    return [
        {vo[alpha[d]] for d in m.vertex_darts(v)} for v in range(m.nv)
    ]


def is_three_connected(m: PlanarMap) -> bool:
    """Vertex 3-connectivity of the underlying graph, by deleting
    every vertex pair and checking what is left.  Quadratic times a
    search, which is fine at desk scale."""
    if m.nv < 4 or not m.is_simple() or not m.is_connected():
        return False
    nbr = _neighbour_sets(m)
    verts = range(m.nv)
    for a in verts:
        for b in range(a + 1, m.nv):
            seen = {a, b}
            start = next(v for v in verts if v not in seen)
            stack = [start]
            seen.add(start)
            n = 1
            while stack:
                for w in nbr[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        n += 1
                        stack.append(w)
            if n != m.nv - 2:
                return False
    return True


def tutte_embed(m: PlanarMap, outer_face: int) -> Embedding:
    """Barycentric coordinates with the chosen face pinned to a
    regular polygon; the interior positions solve the averaging
    system to residual below 1e-9."""
    if not is_three_connected(m):
        raise NotThreeConnected("the straight-line layout needs 3-connectivity")
    if not 0 <= outer_face < m.nf:
        raise BadParams("no face %d" % outer_face)
    vo = m.vertex_of
    cycle = [vo[d] for d in m.faces[outer_face]]
    coords = {}
    k = len(cycle)
    for i, v in enumerate(cycle):
        ang = math.pi / 2 + 2 * math.pi * i / k
        coords[v] = (math.cos(ang), math.sin(ang))
    inner = [v for v in range(m.nv) if v not in coords]
    if inner:
        where = {v: i for i, v in enumerate(inner)}
        n = len(inner)
        a = np.zeros((n, n))
        b = np.zeros((n, 2))
        alpha = m.alpha
        for v in inner:
            i = where[v]
            darts = m.vertex_darts(v)
            a[i, i] = len(darts)
            for d in darts:
                w = vo[alpha[d]]
                if w in where:
                    a[i, where[w]] -= 1.0
                else:
                    b[i] += coords[w]
        try:
            x = np.linalg.solve(a, b)
        except np.linalg.LinAlgError as err:
            raise SingularSystem(str(err)) from None
        residual = np.abs(a @ x - b).max()
        if residual >= 1e-9:
            raise SingularSystem("residual %g" % residual)
        for v in inner:
            coords[v] = tuple(x[where[v]])
    return Embedding({v: coords[v] for v in range(m.nv)})


def _circular(m):
    coords = {}
    for v in range(m.nv):
        ang = math.pi / 2 + 2 * math.pi * v / m.nv
        coords[v] = (math.cos(ang), math.sin(ang))
    return Embedding(coords)


def _best_layout(m):
    if is_three_connected(m):
        fd = m.face_degrees
        outer = max(range(m.nf), key=lambda f: (fd[f], -f))
        return tutte_embed(m, outer)
    return _circular(m)


def to_dot(m: PlanarMap) -> str:
    """Neato-flavoured DOT with pinned coordinates."""
    pos = _best_layout(m)
    lines = ["graph {", "  node [shape=point width=0.08]"]
    for v in range(m.nv):
        x, y = pos[v]
        lines.append('  %d [pos="%.4f,%.4f!"]' % (v, x, y))
    labels = m.edge_labels
    for e, (d1, d2) in enumerate(m.edge_darts):
        lines.append(
            '  %d -- %d [label="%s"]'
            % (m.vertex_of[d1], m.vertex_of[d2], labels[e])
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_svg(m: PlanarMap, size=420.0) -> str:
    """A plain drawing: dots for vertices, one path per edge.

    3-connected maps get the straight-line layout; everything else
    falls back to a circle with curved edges so that loops and
    parallel edges stay apart.
    """
    pos = _best_layout(m)
    pad = 0.12
    xs = [p[0] for p in pos.coordinates.values()]
    ys = [p[1] for p in pos.coordinates.values()]
    lo = min(min(xs), min(ys)) - pad
    hi = max(max(xs), max(ys)) + pad
    scale = size / (hi - lo)

    def at(v):
        x, y = pos[v]
        # svg y runs downward
        return (x - lo) * scale, (hi - y) * scale

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 %.0f %.0f">'
        % (size, size),
        '<g fill="none" stroke="black" stroke-width="1.5">',
    ]
    seen_pair = {}
    for d1, d2 in m.edge_darts:
        u, w = m.vertex_of[d1], m.vertex_of[d2]
        ux, uy = at(u)
        wx, wy = at(w)
        if u == w:
            # a loop: a little lobe sticking out of the vertex
            k = seen_pair.get((u, u), 0)
            seen_pair[(u, u)] = k + 1
            ang = 2 * math.pi * k / 4
            ox, oy = math.cos(ang), math.sin(ang)
            r = 0.35 * scale * 0.2
            parts.append(
                '<path d="M %.2f %.2f C %.2f %.2f %.2f %.2f %.2f %.2f"/>'
                % (
                    ux, uy,
                    ux + 4 * r * ox - 2 * r * oy, uy + 4 * r * oy + 2 * r * ox,
                    ux + 4 * r * ox + 2 * r * oy, uy + 4 * r * oy - 2 * r * ox,
                    ux, uy,
                )
            )
            continue
        key = (min(u, w), max(u, w))
        k = seen_pair.get(key, 0)
        seen_pair[key] = k + 1
        if k == 0:
            parts.append(
                '<path d="M %.2f %.2f L %.2f %.2f"/>' % (ux, uy, wx, wy)
            )
        else:
            # later parallel edges bow out alternately
            bend = 0.08 * scale * ((k + 1) // 2) * (1 if k % 2 else -1)
            mx, my = (ux + wx) / 2, (uy + wy) / 2
            length = math.hypot(wx - ux, wy - uy) or 1.0
            nx, ny = -(wy - uy) / length, (wx - ux) / length
            parts.append(
                '<path d="M %.2f %.2f Q %.2f %.2f %.2f %.2f"/>'
                % (ux, uy, mx + bend * nx, my + bend * ny, wx, wy)
            )
    parts.append("</g>")
    for v in range(m.nv):
        x, y = at(v)
        parts.append('<circle cx="%.2f" cy="%.2f" r="3.5"/>' % (x, y))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
