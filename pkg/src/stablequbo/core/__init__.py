from .graph import (
    Graph,
    InducedView,
    VertexSet,
    annihilation_bound,
    annihilation_number,
    check_vertices,
    complement,
    connected_components,
    degree_ascending_order,
    edge_density,
    induced,
    induced_edge_count,
    is_stable_set,
)
from .dimacs import load_dimacs, parse_dimacs, read_dimacs, serialize_dimacs, write_dimacs

__all__ = [
    "Graph",
    "InducedView",
    "VertexSet",
    "annihilation_bound",
    "annihilation_number",
    "check_vertices",
    "complement",
    "connected_components",
    "degree_ascending_order",
    "edge_density",
    "induced",
    "induced_edge_count",
    "is_stable_set",
    "load_dimacs",
    "parse_dimacs",
    "read_dimacs",
    "serialize_dimacs",
    "write_dimacs",
]
