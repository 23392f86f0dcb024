"""Packing colourings of finite super subdivisions and neighbourhood coronas."""

import json

from . import _pcn
from ._pcn import (
    Graph,
    InvalidColoring,
    InvalidGraph,
    InvalidSpec,
    IoError,
    LabelNotFound,
    SizeExceeded,
    brute_force_chi,
    decide_k,
    fssd,
    from_edges,
    graph,
    greedy_coloring,
    lift_to_fssd,
    neighborhood_corona,
    packing_chromatic_number,
    pattern,
    pattern_names,
    splitting,
    suite_claim_ids,
    verify,
)

__all__ = [
    "Graph",
    "InvalidColoring",
    "InvalidGraph",
    "InvalidSpec",
    "IoError",
    "LabelNotFound",
    "SizeExceeded",
    "brute_force_chi",
    "decide_k",
    "fssd",
    "from_edges",
    "graph",
    "greedy_coloring",
    "lift_to_fssd",
    "neighborhood_corona",
    "packing_chromatic_number",
    "pattern",
    "pattern_names",
    "run_suite",
    "splitting",
    "suite_claim_ids",
    "verify",
]

__version__ = "0.1.0"


def run_suite(suite="all", max_n=23, max_m=3, time_budget=60.0, parallel=False):
    """Run claim checks; returns a list of result dicts (claim, instance, verdict, ...)."""
    return json.loads(_pcn._run_suite_json(suite, max_n, max_m, time_budget, parallel))
