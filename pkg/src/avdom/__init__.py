"""Exact dominating-set tallies, avd(G), critical-vertex statistics and
domination-polynomial analytics for small graphs."""

from .domination import AvdSummary, Verdict, avd, check_bound, is_dominating, tally_bruteforce, tally_fast
from .graph import (Graph, disjoint_union, from_edge_list, generate, is_star_like, parse_graph6,
                    star_like_from_base, stem_structure)

__all__ = [
    "AvdSummary", "Graph", "Verdict", "avd", "check_bound", "disjoint_union", "from_edge_list",
    "generate", "is_dominating", "is_star_like", "parse_graph6", "star_like_from_base",
    "stem_structure", "tally_bruteforce", "tally_fast",
]
