"""Exact combinatorics for overpartitions and four-step lattice paths."""

from overpath._overpath import (
    count_overpartitions,
    count_paths,
    gf_prod,
    gf_sum,
    major_index,
    render_ascii,
    render_svg,
    set_node_budget,
    verify,
)

__all__ = [
    "count_overpartitions",
    "count_paths",
    "gf_prod",
    "gf_sum",
    "major_index",
    "render_ascii",
    "render_svg",
    "set_node_budget",
    "verify",
]
