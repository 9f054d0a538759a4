from __future__ import annotations

from src.app.core.dto import ContractPathEdge, DeleteRungEdge, LinkedGraph, MinorOp, TwoLinkage, validate_linkage
from src.app.core.errors import ExtractionInvariantError, InvalidLinkedGraphError, SecondLinkageError
from src.app.core.isomorphism import linked_isomorphic
from src.app.core.operations import require_chordless
from src.app.core.witness import compose_witnesses, record_witness, simplify
from src.utils.logger import logger

from .detector import canonical_xx
from .dto import XxWitness


def _check_second(g: LinkedGraph, second: TwoLinkage) -> None:
    try:
        validate_linkage(g.graph, second, spanning=False)
    except InvalidLinkedGraphError as exc:
        raise SecondLinkageError(f"not a linkage of the graph: {exc}") from exc
    if second.terminals != g.linkage.terminals:
        raise SecondLinkageError(
            f"terminals {second.terminals} differ from {g.linkage.terminals}"
        )
    if second.same_route(g.linkage):
        raise SecondLinkageError("second linkage follows the same routes as the designated one")


def _common_prefix(a: tuple[str, ...], b: tuple[str, ...]) -> int:
    size = 0
    for x, y in zip(a, b, strict=False):
        if x != y:
            break
        size += 1
    return size


class _Divergence:
    """Where one path of the second linkage leaves and rejoins its original path.

    ``near`` is the last vertex of the shared prefix, ``near_out`` the vertex
    right after it, ``far`` the first vertex of the shared suffix and
    ``far_out`` the vertex right before it. ``near_edge`` and ``far_edge`` are
    the bound edges of the two departures.
    """

    def __init__(self, original: tuple[str, ...], route: tuple[str, ...], bound: tuple[int, ...]) -> None:
        prefix = _common_prefix(original, route)
        suffix = _common_prefix(original[::-1], route[::-1])
        if prefix == 0 or suffix == 0 or prefix == len(route):
            raise ExtractionInvariantError("route does not depart from its original path")
        self.near, self.near_out = route[prefix - 1], route[prefix]
        self.far, self.far_out = route[-suffix], route[-suffix - 1]
        self.near_edge = bound[prefix - 1]
        self.far_edge = bound[len(route) - suffix - 1]


def _contract_range(g: LinkedGraph, index: int, lo: int, hi: int) -> list[MinorOp]:
    """Contract the subpath between positions ``lo`` and ``hi`` inclusive."""
    return [ContractPathEdge(eid) for eid in g.linkage.path_edges(index)[lo:hi]]


def extract_xx_from_second_linkage(g: LinkedGraph, second: TwoLinkage) -> XxWitness:
    """Turn a second linkage, spanning or not, into a verified XX witness.

    The second linkage's first path leaves path1 at ``v1`` along rung ``e``
    and rejoins it at ``u1`` along rung ``f``; its second path leaves path2 at
    ``v2'`` along ``e'`` and rejoins at ``u2'`` along ``f'``. The three
    subpaths s1-v1, v1'-u1' and u1-t1 of path1, and s2-v2', v2-u2 and u2'-t2 of
    path2 are contracted, every other rung is deleted and the series classes
    left over are collapsed.
    """
    require_chordless(g)
    _check_second(g, second)

    own, alternative = g.linkage, second
    first = _Divergence(own.path1, alternative.path1, alternative.path1_edges)
    other = _Divergence(own.path2, alternative.path2, alternative.path2_edges)
    located = own.locations

    def pos(vertex: str, index: int) -> int:
        path_index, at = located[vertex]
        if path_index != index:
            raise ExtractionInvariantError(f"vertex {vertex!r} expected on path {index}")
        return at

    v1, u1 = pos(first.near, 1), pos(first.far, 1)
    v2, u2 = pos(first.near_out, 2), pos(first.far_out, 2)
    v2p, u2p = pos(other.near, 2), pos(other.far, 2)
    v1p, u1p = pos(other.near_out, 1), pos(other.far_out, 1)

    if not (v2p < min(v2, u2) and max(v2, u2) < u2p):
        raise ExtractionInvariantError("v2' must be strictly left of v2 and u2, u2' strictly right")
    if not (v1 < min(v1p, u1p) and max(v1p, u1p) < u1):
        raise ExtractionInvariantError("v1' and u1' must lie strictly between v1 and u1")

    ops: list[MinorOp] = []
    ops += _contract_range(g, 1, 0, v1)
    ops += _contract_range(g, 1, min(v1p, u1p), max(v1p, u1p))
    ops += _contract_range(g, 1, u1, len(own.path1) - 1)
    ops += _contract_range(g, 2, 0, v2p)
    ops += _contract_range(g, 2, min(v2, u2), max(v2, u2))
    ops += _contract_range(g, 2, u2p, len(own.path2) - 1)
    kept = {first.near_edge, first.far_edge, other.near_edge, other.far_edge}
    ops += [DeleteRungEdge(eid) for eid in sorted(g.rungs) if eid not in kept]

    reduced, contracted = record_witness(g, ops)
    result, collapsed = simplify(reduced)
    target_iso = linked_isomorphic(result, canonical_xx())
    if target_iso is None:
        raise ExtractionInvariantError("extraction did not end in XX")
    logger.debug(f"extract_xx: kept rungs {sorted(kept)}")
    return XxWitness(compose_witnesses(contracted, collapsed), target_iso)
