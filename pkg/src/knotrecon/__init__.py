"""Reconnection numbers of knotted vortices and the invariants behind them."""

__version__ = "0.1.0"

from .braids import BraidWord, braid_closure, parse_braid_word, table_braid, torus_braid
from .diagram import LinkDiagram, diagram_stats, mirror, parse_pd, serialize_pd
from .invariants import (
    alexander_polynomial,
    burau_alexander_oracle,
    reconnection_bounds,
    reconnection_number_positive,
    signature,
)
from .laurent import LaurentPoly, normalize_laurent
from .reconnection import (
    apply_plan,
    cascade,
    crossing_switch_gadget,
    min_reconnections_search,
    plan_unknotting,
    smooth_crossing,
    verify_unknot,
)
from .seifert import seifert_circles, seifert_genus, seifert_graph, seifert_matrix
