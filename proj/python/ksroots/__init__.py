"""Exact projective-ray configurations from exceptional and non-crystallographic root systems.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from ._core import (
    Configuration,
    GoldenInt,
    Ray,
    anticlique_count,
    attach_g2,
    canonical_ray,
    classify_4cliques,
    clique_count,
    clique_profile,
    dumps,
    e7_blocks,
    export_cnf,
    generate,
    load,
    loads,
    orthogonal,
    partition_count,
    replay_noncolourability,
    replay_uniqueness,
    roots,
    saturation,
    save,
    sdr_search_depth,
    solve,
    verify_colouring,
)

__all__ = [
    "Configuration",
    "GoldenInt",
    "Ray",
    "anticlique_count",
    "attach_g2",
    "canonical_ray",
    "classify_4cliques",
    "clique_count",
    "clique_profile",
    "dumps",
    "e7_blocks",
    "export_cnf",
    "generate",
    "load",
    "loads",
    "orthogonal",
    "partition_count",
    "replay_noncolourability",
    "replay_uniqueness",
    "roots",
    "saturation",
    "save",
    "sdr_search_depth",
    "solve",
    "verify_colouring",
]

__version__ = "0.1.0"
