"""Universal covers, color refinement and two-variable counting-logic depth."""

from coverdepth.graph import (
    Graph,
    complement,
    disjoint_union,
    gen_cycle,
    gen_path,
    parse_graph,
    serialize_graph,
)
from coverdepth.kernels import BACKEND

__all__ = [
    "BACKEND",
    "Graph",
    "complement",
    "disjoint_union",
    "gen_cycle",
    "gen_path",
    "parse_graph",
    "serialize_graph",
]
