"""Exact cop-throttling, capture-time and PSD zero-forcing computations on small graphs."""
from .graph import INF, Graph, encode_graph6, parse_graph6

__all__ = ["INF", "Graph", "encode_graph6", "parse_graph6"]
__version__ = "0.1.0"
