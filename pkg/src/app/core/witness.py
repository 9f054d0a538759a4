from __future__ import annotations

from collections.abc import Iterable

from src.utils.logger import logger

from .dto import ContractPathEdge, DeleteRungEdge, LinkedGraph, MinorOp, MinorWitness
from .errors import LinkageError, WitnessReplayError
from .operations import apply_op, contract_path_edge, require_chordless


def _replay(g: LinkedGraph, ops: Iterable[MinorOp]) -> tuple[LinkedGraph, tuple[MinorOp, ...], dict[str, str]]:
    current = g
    vertex_map = {vertex: vertex for vertex in g.vertices}
    done: list[MinorOp] = []
    for index, op in enumerate(ops):
        try:
            current, merge = apply_op(current, op)
        except LinkageError as exc:
            raise WitnessReplayError(index, op, exc) from exc
        if merge is not None:
            keep, gone = merge
            for source, image in vertex_map.items():
                if image == gone:
                    vertex_map[source] = keep
        done.append(op)
    return current, tuple(done), vertex_map


def record_witness(g: LinkedGraph, ops: Iterable[MinorOp]) -> tuple[LinkedGraph, MinorWitness]:
    """Replay ``ops`` on ``g`` and return the result with a full witness."""
    result, done, vertex_map = _replay(g, ops)
    return result, MinorWitness(done, vertex_map)


def apply_witness(g: LinkedGraph, witness: MinorWitness) -> LinkedGraph:
    """Deterministically replay a witness; a recorded vertex map must match."""
    result, _, vertex_map = _replay(g, witness.ops)
    if witness.vertex_map and dict(witness.vertex_map) != vertex_map:
        raise WitnessReplayError(len(witness.ops), "vertex map", "recorded map differs from replay")
    return result


def compose_witnesses(first: MinorWitness, second: MinorWitness) -> MinorWitness:
    vertex_map = {source: second.vertex_map.get(image, image) for source, image in first.vertex_map.items()}
    return MinorWitness(first.ops + second.ops, vertex_map)


def simplify(g: LinkedGraph) -> tuple[LinkedGraph, MinorWitness]:
    """Collapse parallel rungs and contract series classes.

    Among parallel rungs the smallest id survives. A non-terminal path vertex
    whose only edges are its two path edges is merged into its left neighbour.
    """
    require_chordless(g)
    ops: list[MinorOp] = []
    for ids in g.rung_groups.values():
        ops.extend(DeleteRungEdge(eid) for eid in sorted(ids)[1:])
    current, _ = record_witness(g, ops)
    while (candidate := _series_edge(current)) is not None:
        ops.append(ContractPathEdge(candidate))
        current = contract_path_edge(current, candidate)

    logger.debug(f"simplify: {len(ops)} ops on {len(g.vertices)} vertices")
    return record_witness(g, ops)


def _series_edge(g: LinkedGraph) -> int | None:
    for index in (1, 2):
        path = g.linkage.path(index)
        for pos in range(1, len(path) - 1):
            if g.graph.degree(path[pos]) == 2:
                return g.linkage.path_edges(index)[pos - 1]
    return None
