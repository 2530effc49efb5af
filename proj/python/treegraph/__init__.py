"""Exact workbench for the spanning-tree graph of a directed graph.

The heavy lifting lives in the C++ extension ``treegraph._core``; this module
adds small conveniences (JSON decoding of reports).
"""

import json as _json

from ._core import (  # noqa: F401
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    DiGraph,
    GuardError,
    InputError,
    athanasiadis_multiplicity,
    builtin,
    forest_count,
    from_json,
    is_strongly_connected,
    matrix_tree_count,
    multiplicity_table,
    scc_components,
    spanning_tree_count,
    spanning_trees,
    strongly_connected_subsets,
    tree_graph_dot,
    tree_graph_json,
)
from ._core import builtin_examples as _builtin_examples_raw
from ._core import verify as _verify_raw

__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "DiGraph",
    "GuardError",
    "InputError",
    "athanasiadis_multiplicity",
    "builtin",
    "builtin_examples",
    "forest_count",
    "from_json",
    "is_strongly_connected",
    "matrix_tree_count",
    "multiplicity_table",
    "scc_components",
    "spanning_tree_count",
    "spanning_trees",
    "strongly_connected_subsets",
    "tree_graph",
    "tree_graph_dot",
    "tree_graph_json",
    "verify",
]


def verify(graph, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED):
    """Run the determinant factorization checks; returns a report dict."""
    return _json.loads(_verify_raw(graph, trials, seed))


def builtin_examples():
    """Run the worked-example fixture suite; returns a list of check dicts."""
    return _json.loads(_builtin_examples_raw())


def tree_graph(graph):
    """The tree graph as a dict (vertices, edges, projection)."""
    return _json.loads(tree_graph_json(graph))
