"""Certified cycle spectra of dense graphs (Python bindings)."""

import json

from ._cyclespec import (
    BudgetExceeded,
    Error,
    Graph,
    HypothesisNotMet,
    InternalContradiction,
    InvalidArgument,
    NotBipartite,
    ParseError,
    ab_path_lengths,
    average_degree,
    bfs_layers,
    bipartition,
    brute_cycle_spectrum,
    even_girth,
    fingerprint,
    generate,
    girth,
    parse_graph,
    radius_center,
    serialize_edge_list,
    shortest_cycle,
    verify_cycle,
)
from . import _cyclespec as _core


def spectrum(graph, k, mode="bipartite", force=False):
    """Cycle-spectrum certificate as a dict (the CLI's JSON document)."""
    return json.loads(_core.spectrum_document(graph, k, mode, force))


def even_cycle(graph, k, bipartite=False, force=False):
    """Certificate for a cycle of length exactly 2k, as a dict."""
    return json.loads(_core.even_cycle_document(graph, k, bipartite, force))


def verify(graph, document):
    """(ok, reason) for a certificate dict or JSON string."""
    if not isinstance(document, str):
        document = json.dumps(document)
    return _core.verify_document(graph, document)
