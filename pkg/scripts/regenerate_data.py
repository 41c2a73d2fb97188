"""Regenerate the stored cubic bases under src/lunefree/data/.

The 9- and 15-edge bases are prisms.  The 18- and 24-edge bases are
duals of stacked triangulations (repeated face stellations of the
tetrahedron) picked deterministically: among all stacks of the right
size whose dual is cubic, special and has a single angle chain, the
one with the least canonical code wins.  Run from the repo root:

    python3 scripts/regenerate_data.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from lunefree.constructions import prism
from lunefree.medial import angle_components, is_special, medial
from lunefree.planar_map import build_map
from lunefree.unitext import write_uni

K4 = build_map([["01", "02", "03"], ["12", "01", "31"], ["23", "02", "12"],
                ["31", "03", "23"]])

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "lunefree" / "data"


def stellate(m, face):
    """Insert a degree-3 vertex into a triangular face."""
    rots = m.rotations()
    cycle = m.faces[face]
    k = len(cycle)
    spokes = [("s", m.nv, i) for i in range(k)]
    for i, d in enumerate(cycle):
        w = m.vertex_of[m.alpha[d]]
        lab = m.edge_labels[m.edge_of[d]]
        rots[w].insert(rots[w].index(lab) + 1, spokes[(i + 1) % k])
    rots.append(list(reversed(spokes)))
    return build_map(rots)


def stacked_level(maps):
    seen = {}
    for m in maps:
        for face in range(len(m.faces)):
            child = stellate(m, face)
            code = child.canonical_code()
            if code not in seen:
                seen[code] = child
    return [seen[c] for c in sorted(seen)]


def good_dual(m):
    d = m.dual()
    if not d.is_simple():
        return None
    if not all(deg == 3 for deg in d.degrees):
        return None
    if not is_special(d) or angle_components(d) != 1:
        return None
    return d


def base_from_stack(depth):
    level = [K4]
    for _ in range(depth):
        level = stacked_level(level)
    hits = [(d.canonical_code(), d) for d in map(good_dual, level) if d is not None]
    if not hits:
        raise SystemExit("no base found at stack depth %d" % depth)
    hits.sort(key=lambda t: t[0])
    return hits[0][1]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    bases = {
        9: prism(3),
        15: prism(5),
        18: base_from_stack(4),
        24: base_from_stack(6),
    }
    for e, g in sorted(bases.items()):
        assert g.ne == e and all(deg == 3 for deg in g.degrees)
        assert g.is_simple() and is_special(g) and angle_components(g) == 1
        u = medial(g)
        assert u.is_lune_free() and u.is_tight() and u.strand_count == 1
        path = OUT / ("base%d.uni" % e)
        body = write_uni(g)
        path.write_text(
            "# cubic special base, single angle chain; medial is the\n"
            "# tight %d-crossing knot universe\n%s" % (e, body)
        )
        print("wrote", path.name, "v=%d e=%d" % (g.nv, g.ne))


if __name__ == "__main__":
    main()
