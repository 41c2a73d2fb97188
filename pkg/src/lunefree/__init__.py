"""Combinatorial maps, knot shadows and lune-free graph constructions."""

from .config import Config, load_config
from .constructions import (
    BraidWord,
    RewriteSite,
    braid_closure_shadow,
    braid_shadow,
    crossing_device,
    double_move,
    g8,
    k_lune_graph,
    ladder,
    lune_free_knot_graph,
    plus_nine,
    polygon_family,
    prism,
    tight_base,
    tight_knot_graph,
    tight_link_graph_12,
    venn,
)
from .enumeration import (
    CensusRow,
    CrossCheckReport,
    EnumFilter,
    census_table,
    enumerate_plane_graphs,
    enumerate_universes,
    oracle_cross_check,
)
from .export import (
    Embedding,
    export_planar_code,
    is_three_connected,
    to_dot,
    to_svg,
    tutte_embed,
)
from .knot_graph import FaceCensus, Universe, as_universe
from .medial import (
    FaceColoring,
    angle_components,
    checkerboard,
    classify_special,
    is_special,
    medial,
    premedial,
    wheel,
)
from .planar_map import PlanarMap, build_map
from .unitext import parse_uni, write_uni
from .verify import CheckResult, format_results, run_check, run_suite

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "CensusRow",
    "CheckResult",
    "Config",
    "CrossCheckReport",
    "Embedding",
    "EnumFilter",
    "FaceCensus",
    "FaceColoring",
    "PlanarMap",
    "RewriteSite",
    "Universe",
    "__version__",
    "angle_components",
    "as_universe",
    "braid_closure_shadow",
    "braid_shadow",
    "build_map",
    "census_table",
    "checkerboard",
    "classify_special",
    "crossing_device",
    "double_move",
    "enumerate_plane_graphs",
    "enumerate_universes",
    "export_planar_code",
    "format_results",
    "g8",
    "is_special",
    "is_three_connected",
    "k_lune_graph",
    "ladder",
    "load_config",
    "lune_free_knot_graph",
    "medial",
    "oracle_cross_check",
    "parse_uni",
    "plus_nine",
    "polygon_family",
    "premedial",
    "prism",
    "run_check",
    "run_suite",
    "tight_base",
    "tight_knot_graph",
    "tight_link_graph_12",
    "to_dot",
    "to_svg",
    "tutte_embed",
    "venn",
    "wheel",
    "write_uni",
]
