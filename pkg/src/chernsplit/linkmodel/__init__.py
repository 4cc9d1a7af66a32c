"""Links, braids, torus loops and the integers computed from them."""

from .braid import BraidWord, braid_closure, parse_braid
from .embedding import braid_embedding, gauss_linking_integral
from .io import link_from_json, load_link, load_torus_loop, torus_loop_from_json
from .pd import (
    LinkingMatrix,
    PDCode,
    add_kink,
    disjoint_union,
    empty_diagram,
    linking_matrix,
    linking_number,
    reverse_component,
    self_writhe,
    writhe,
)
from .torus import TorusLoop, intersection_number, signed_crossing_count

__all__ = [
    "BraidWord",
    "LinkingMatrix",
    "PDCode",
    "TorusLoop",
    "add_kink",
    "braid_closure",
    "braid_embedding",
    "disjoint_union",
    "empty_diagram",
    "gauss_linking_integral",
    "intersection_number",
    "link_from_json",
    "linking_matrix",
    "linking_number",
    "load_link",
    "load_torus_loop",
    "parse_braid",
    "reverse_component",
    "self_writhe",
    "signed_crossing_count",
    "torus_loop_from_json",
    "writhe",
]
