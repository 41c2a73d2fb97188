"""Plain-text rotation systems.

The format is line-oriented: a header ``map v=<V> e=<E>``, then one
line per vertex listing edge ids counterclockwise, for example::

    map v=3 e=6
    # trefoil shadow
    0: a c b a
    1: b c

would be rejected (edge counts are checked), but illustrates the
shape.  Edge ids are arbitrary whitespace-free tokens and each must
occur exactly twice in the whole document; a repeated id on one line
is a loop.  Blank lines and ``#`` comments are ignored.  Writing
always emits LF endings, vertices numbered 0..V-1 in map order.
"""

import re

from .errors import DuplicateEdgeUse, EdgeCountError, UniSyntaxError
from .planar_map import PlanarMap, build_map

_HEADER = re.compile(r"map\s+v=(\d+)\s+e=(\d+)\s*$")


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield lineno, line


def parse_uni(text: str) -> PlanarMap:
    """Parse a UniText document into a labeled map."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise UniSyntaxError("empty document", 1) from None
    m = _HEADER.match(header.strip())
    if not m:
        raise UniSyntaxError("expected 'map v=<V> e=<E>' header", lineno)
    nv, ne = int(m.group(1)), int(m.group(2))
    if nv == 0:
        raise UniSyntaxError("a map needs at least one vertex", lineno)

    rows = []
    for lineno, line in lines:
        head, sep, rest = line.partition(":")
        if not sep:
            raise UniSyntaxError("expected '<vertex>: <edge>...'", lineno)
        if not head.strip() or len(head.strip().split()) != 1:
            raise UniSyntaxError("bad vertex name %r" % head.strip(), lineno)
        edges = rest.split()
        if not edges:
            col = line.index(":") + 2
            raise UniSyntaxError("vertex line lists no edges", lineno, col)
        rows.append(edges)
        if len(rows) > nv:
            raise UniSyntaxError("more than the declared %d vertex lines" % nv, lineno)
    if len(rows) < nv:
        raise UniSyntaxError(
            "declared %d vertices, found %d lines" % (nv, len(rows)), lineno
        )

    seen = {}
    for row in rows:
        for tok in row:
            seen[tok] = seen.get(tok, 0) + 1
    bad = {tok: n for tok, n in seen.items() if n != 2}
    if bad:
        tok, n = sorted(bad.items())[0]
        raise EdgeCountError("edge %r used %d times, want exactly 2" % (tok, n))
    if len(seen) != ne:
        raise EdgeCountError("declared e=%d, found %d distinct edges" % (ne, len(seen)))
    try:
        return build_map(rows)
    except DuplicateEdgeUse as exc:  # unreachable after the count check
        raise EdgeCountError(str(exc)) from exc


def _tokens(m: PlanarMap):
    toks = [str(lab) for lab in m.edge_labels]
    ok = all(tok and not re.search(r"\s", tok) and "#" not in tok for tok in toks)
    if not ok or len(set(toks)) != len(toks):
        toks = ["e%d" % i for i in range(m.ne)]
    return toks

def write_uni(m: PlanarMap) -> str:
    """Serialize a map; inverse of parse_uni up to normalization.

    String labels that are unique and whitespace-free are kept
    verbatim, so parse/write round-trips exactly on normalized
    documents; anything else is renamed e0..e<E-1>.
    """
    toks = _tokens(m)
    out = ["map v=%d e=%d" % (m.nv, m.ne)]
    eo = m.edge_of
    for v in range(m.nv):
        row = " ".join(toks[eo[d]] for d in m.vertex_darts(v))
        out.append("%d: %s" % (v, row))
    return "\n".join(out) + "\n"
