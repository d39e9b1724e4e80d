"""Exact geometry for trees embedded on lines."""

from ._treelines import (
    LineSet,
    Tree,
    TreelinesError,
    check_embedding,
    classify_cap_cup,
    comb_type,
    erdos_szekeres_bound,
    extract_doubling,
    extract_monotone_gaps,
    longest_cap_cup,
    parse_instance,
    region_hulls,
    render_svg,
    scan_universality,
    solve,
    unstretch_search,
    winding_number,
)

__all__ = [
    "LineSet",
    "Tree",
    "TreelinesError",
    "check_embedding",
    "classify_cap_cup",
    "comb_type",
    "erdos_szekeres_bound",
    "extract_doubling",
    "extract_monotone_gaps",
    "longest_cap_cup",
    "parse_instance",
    "region_hulls",
    "render_svg",
    "scan_universality",
    "solve",
    "unstretch_search",
    "winding_number",
]
