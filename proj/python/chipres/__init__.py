"""Chip-firing ideals of graphs and their minimal cellular free resolutions."""

from _chipres import (  # noqa: F401
    Multigraph,
    alexander_dual,
    betti,
    bonds,
    facets,
    gens,
    greens,
    laplacian,
    parking_count,
    q_reduce,
    resolution,
    spanning_tree_count,
    verify,
)

__all__ = [
    "Multigraph",
    "alexander_dual",
    "betti",
    "bonds",
    "facets",
    "gens",
    "greens",
    "laplacian",
    "parking_count",
    "q_reduce",
    "resolution",
    "spanning_tree_count",
    "verify",
]
