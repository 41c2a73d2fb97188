"""HTTP face of the library.

One endpoint per command: analysis, construction, medial and inverse
medial, enumeration, the verification suites and format export.  The
command-line tool is a thin client of this app and talks to it in
process by default, so both interfaces run the same handlers.

Domain failures map to status 400 with the error class name, its
message and, for unrealizable constructions, the machine-readable
reason; malformed requests are pydantic's usual 422.
"""

from __future__ import annotations

import base64
from typing import Literal, Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .config import load_config
from .constructions import (
    braid_shadow,
    g8,
    k_lune_graph,
    lune_free_knot_graph,
    polygon_family,
    tight_knot_graph,
    venn,
)
from .enumeration import EnumFilter, census_table, enumerate_universes
from .errors import BadParams, Disconnected, LuneFreeError, Unrealizable
from .export import export_planar_code, to_dot, to_svg
from .knot_graph import Universe, as_universe
from .medial import checkerboard, medial, premedial, wheel
from .planar_map import PlanarMap
from .unitext import parse_uni, write_uni
from .verify import SUITES, run_suite

app = FastAPI(title="lunefree", version=__version__)


@app.exception_handler(LuneFreeError)
def _domain_error(request, exc: LuneFreeError):
    body = {"error": type(exc).__name__, "detail": str(exc)}
    if isinstance(exc, Unrealizable):
        body["reason"] = exc.reason
    return JSONResponse(status_code=400, content=body)


def _doc(m) -> str:
    return write_uni(m.map if isinstance(m, Universe) else m)


# ------------------------------------------------------------ analyze


class MapRequest(BaseModel):
    unitext: str


class AnalyzeResponse(BaseModel):
    """Everything worth knowing about one map.

    The universe block (mu, lune_count, lune_free) is null when the
    map is not 4-regular and connected; tight and admissible are null
    unless the universe is lune-free, where they are defined.
    """

    v: int
    e: int
    f: int
    census: dict[int, int]
    genus: Optional[int]
    simple: bool
    mu: Optional[int] = None
    lune_count: Optional[int] = None
    lune_free: Optional[bool] = None
    tight: Optional[bool] = None
    admissible: Optional[bool] = None


def _analyze(m: PlanarMap) -> AnalyzeResponse:
    census: dict[int, int] = {}
    for k in m.face_degrees:
        census[k] = census.get(k, 0) + 1
    try:
        genus = m.genus()
    except Disconnected:
        genus = None
    out = AnalyzeResponse(
        v=m.nv,
        e=m.ne,
        f=m.nf,
        census=census,
        genus=genus,
        simple=m.is_simple(),
    )
    try:
        u = as_universe(m)
    except LuneFreeError:
        return out
    update = {
        "mu": u.strand_count,
        "lune_count": u.lune_count,
        "lune_free": u.is_lune_free(),
    }
    if update["lune_free"]:
        update["tight"] = u.is_tight()
        update["admissible"] = u.is_admissible()
    return out.model_copy(update=update)


@app.post("/analyze")
def analyze(req: MapRequest) -> AnalyzeResponse:
    return _analyze(parse_uni(req.unitext))


# ---------------------------------------------------------- construct


_CONSTRUCTORS = {
    "venn": (0, venn),
    "g8": (0, g8),
    "family": (2, polygon_family),
    "tight": (1, tight_knot_graph),
    "lunefree": (1, lune_free_knot_graph),
    "klune": (2, k_lune_graph),
    "braid": (3, braid_shadow),
    "wheel": (1, wheel),
}


class ConstructRequest(BaseModel):
    name: str
    args: list[int] = Field(default_factory=list)


class DocumentResponse(BaseModel):
    unitext: str


@app.post("/construct")
def construct(req: ConstructRequest) -> DocumentResponse:
    if req.name not in _CONSTRUCTORS:
        raise BadParams(
            "unknown constructor %r; one of %s"
            % (req.name, " ".join(sorted(_CONSTRUCTORS)))
        )
    arity, func = _CONSTRUCTORS[req.name]
    if len(req.args) != arity:
        raise BadParams("%s takes %d arguments, got %d" % (req.name, arity, len(req.args)))
    return DocumentResponse(unitext=_doc(func(*req.args)))


# ------------------------------------------------------------- medial


class MedialRequest(BaseModel):
    unitext: str
    inverse: bool = False


@app.post("/medial")
def medial_route(req: MedialRequest) -> DocumentResponse:
    m = parse_uni(req.unitext)
    if req.inverse:
        u = as_universe(m)
        return DocumentResponse(unitext=_doc(premedial(u, checkerboard(u))))
    return DocumentResponse(unitext=_doc(medial(m)))


# ---------------------------------------------------------- enumerate


class EnumerateRequest(BaseModel):
    v: int
    simple: bool = False
    mu: Optional[int] = None
    tight: Optional[bool] = None
    threads: Optional[int] = None

    def overrides(self):
        return {"threads": self.threads}


class EnumerateResponse(BaseModel):
    unitexts: list[str]


@app.post("/enumerate")
def enumerate_route(req: EnumerateRequest) -> EnumerateResponse:
    filt = EnumFilter(
        require_simple=req.simple, mu=req.mu, tight=req.tight, v_exact=req.v
    )
    cfg = load_config(overrides=req.overrides())
    docs = [_doc(u) for u in enumerate_universes(filt, cfg)]
    return EnumerateResponse(unitexts=docs)


class CensusRowModel(BaseModel):
    v: int
    total_lune_free: int
    knot_graphs: int
    tight_lune_free: int
    tight_knot: int


class CensusCountModel(BaseModel):
    v: int
    count: int


class CensusResponse(BaseModel):
    """Counts per size up to v.

    rows carries the four-column lune-free table when no filter is
    active; counts carries plain filtered totals otherwise.
    """

    rows: Optional[list[CensusRowModel]] = None
    counts: Optional[list[CensusCountModel]] = None


@app.post("/census")
def census_route(req: EnumerateRequest) -> CensusResponse:
    cfg = load_config(overrides=req.overrides())
    if req.simple and req.mu is None and req.tight is None:
        rows = census_table(req.v, cfg)
        return CensusResponse(rows=[CensusRowModel(**row.__dict__) for row in rows])
    counts = []
    for v in range(1, req.v + 1):
        filt = EnumFilter(
            require_simple=req.simple, mu=req.mu, tight=req.tight, v_exact=v
        )
        counts.append(
            CensusCountModel(v=v, count=sum(1 for _ in enumerate_universes(filt, cfg)))
        )
    return CensusResponse(counts=counts)


# -------------------------------------------------------------- verify


class VerifyRequest(BaseModel):
    suite: Literal["paper", "quick"] = "paper"


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str
    seconds: float


class VerifyResponse(BaseModel):
    suite: str
    ok: bool
    checks: list[CheckModel]


@app.post("/verify")
def verify_route(req: VerifyRequest) -> VerifyResponse:
    assert req.suite in SUITES
    results = run_suite(req.suite)
    return VerifyResponse(
        suite=req.suite,
        ok=all(r.passed for r in results),
        checks=[CheckModel(**r.__dict__) for r in results],
    )


# -------------------------------------------------------------- export


class ExportRequest(BaseModel):
    unitext: str
    format: Literal["uni", "planarcode", "dot", "svg"]


class ExportResponse(BaseModel):
    format: str
    encoding: Literal["text", "base64"]
    content: str


@app.post("/export")
def export_route(req: ExportRequest) -> ExportResponse:
    m = parse_uni(req.unitext)
    if req.format == "planarcode":
        raw = base64.b64encode(export_planar_code(m)).decode("ascii")
        return ExportResponse(format=req.format, encoding="base64", content=raw)
    text = {"uni": write_uni, "dot": to_dot, "svg": to_svg}[req.format](m)
    return ExportResponse(format=req.format, encoding="text", content=text)


@app.get("/health")
def health():
    return {"ok": True, "version": __version__}
