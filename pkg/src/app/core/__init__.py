"""Linked graphs: data model, edge classification and linkage-minor operations."""

from .dto import (
    ContractPathEdge,
    DeleteRungEdge,
    Edge,
    EdgeKind,
    Graph,
    LinkedGraph,
    MinorOp,
    MinorWitness,
    TwoLinkage,
)
from .isomorphism import linked_isomorphic, linked_signature, relaxed_signature
from .operations import (
    build_linked_graph,
    classify_edges,
    contract_path_edge,
    delete_rung_edge,
    is_chordless,
    left_of,
    orient,
    reverse_path,
    swap_paths,
)
from .witness import apply_witness, compose_witnesses, record_witness, simplify

__all__ = [
    "ContractPathEdge",
    "DeleteRungEdge",
    "Edge",
    "EdgeKind",
    "Graph",
    "LinkedGraph",
    "MinorOp",
    "MinorWitness",
    "TwoLinkage",
    "apply_witness",
    "build_linked_graph",
    "classify_edges",
    "compose_witnesses",
    "contract_path_edge",
    "delete_rung_edge",
    "is_chordless",
    "left_of",
    "linked_isomorphic",
    "linked_signature",
    "orient",
    "record_witness",
    "relaxed_signature",
    "reverse_path",
    "simplify",
    "swap_paths",
]
