"""Graph index toolkit package."""

from .graph import (Graph, GraphSummary, RootedGraph, f_index, first_zagreb,
                    make_graph, second_zagreb, summarize)
from .generators import FamilySpec, make_family
from .formulas import f_family
from .verify import TrialConfig, VerificationReport, check_identity, run_suite
from .edgelist import EdgeListError, parse_edge_list, write_edge_list

__all__ = [
    'Graph',
    'GraphSummary',
    'RootedGraph',
    'make_graph',
    'f_index',
    'first_zagreb',
    'second_zagreb',
    'summarize',
    'FamilySpec',
    'make_family',
    'f_family',
    'TrialConfig',
    'VerificationReport',
    'check_identity',
    'run_suite',
    'EdgeListError',
    'parse_edge_list',
    'write_edge_list',
]
