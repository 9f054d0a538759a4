from __future__ import annotations

from collections import deque

from src.app.core.constants import DEFAULT_MINOR_EDGE_CAP
from src.app.core.dto import ContractPathEdge, DeleteRungEdge, EdgeKind, LinkedGraph, MinorOp, MinorWitness
from src.app.core.isomorphism import linked_signature
from src.app.core.operations import apply_op, guard_size, require_chordless
from src.app.core.witness import record_witness
from src.utils.logger import logger


def _ops_for(g: LinkedGraph) -> list[MinorOp]:
    ops: list[MinorOp] = []
    for eid, kind in sorted(g.edge_kinds.items()):
        if kind is EdgeKind.PATH:
            ops.append(ContractPathEdge(eid))
        elif kind is EdgeKind.RUNG:
            ops.append(DeleteRungEdge(eid))
    return ops


def enumerate_linkage_minors(
    g: LinkedGraph,
    max_ops: int | None = None,
    cap: int = DEFAULT_MINOR_EDGE_CAP,
) -> list[tuple[LinkedGraph, MinorWitness]]:
    """Every linkage minor of ``g`` up to strict linked isomorphism.

    Breadth first from ``g`` itself, ops tried in ascending edge id, so the
    first witness kept for each class is one of the shortest. ``max_ops``
    bounds the witness length.
    """
    require_chordless(g)
    guard_size("enumerate_linkage_minors", len(g.edges), cap)
    found: dict = {linked_signature(g): ()}
    queue: deque[tuple[LinkedGraph, tuple[MinorOp, ...]]] = deque([(g, ())])
    while queue:
        current, ops = queue.popleft()
        if max_ops is not None and len(ops) >= max_ops:
            continue
        for op in _ops_for(current):
            child, _ = apply_op(current, op)
            signature = linked_signature(child)
            if signature in found:
                continue
            found[signature] = (*ops, op)
            queue.append((child, (*ops, op)))
    logger.debug(f"enumerate_linkage_minors: {len(found)} classes from {len(g.edges)} edges")
    return [record_witness(g, ops) for ops in found.values()]
