"""Certifying recognition of circular-arc graphs."""

from .arcs import ArcRepresentation, expand_arcs, verify_representation
from .edgetypes import (EdgeType, TypedGraph, avoids, circular_pairs,
                        classify_all, complete, verify_completion)
from .graph import Graph, ReductionTrace, build_graph, reduce
from .knotting import (AvoidWalkPair, KnottingGraph, bipartite_or_odd_cycle,
                       build_knotting, build_Z, disagreement_partition,
                       extract_invertible_pair)
from .oracle import cross_check, enumerate_labelled_graphs, oracle_is_ca
from .recognizer import Certificate, recognize, verify_negative, verify_positive

__all__ = [
    "ArcRepresentation", "AvoidWalkPair", "Certificate", "EdgeType", "Graph",
    "KnottingGraph", "ReductionTrace", "TypedGraph", "avoids",
    "bipartite_or_odd_cycle", "build_Z", "build_graph", "build_knotting",
    "circular_pairs", "classify_all", "complete", "cross_check",
    "disagreement_partition", "enumerate_labelled_graphs", "expand_arcs",
    "extract_invertible_pair", "oracle_is_ca", "recognize", "reduce",
    "verify_completion", "verify_negative", "verify_positive",
    "verify_representation",
]

__version__ = "0.1.0"
