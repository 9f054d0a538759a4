from __future__ import annotations

from functools import lru_cache

from src.app.core.dto import ContractPathEdge, DeleteRungEdge, LinkedGraph, MinorOp
from src.app.core.errors import ExtractionInvariantError
from src.app.core.isomorphism import linked_isomorphic
from src.app.core.operations import build_linked_graph, guard_size, require_chordless
from src.app.core.witness import record_witness
from src.app.settings import load_app_settings
from src.utils.logger import logger

from .dto import XxSegmentation, XxWitness

# Block labels along a path.
_S, _MID, _T = 0, 1, 2


@lru_cache(maxsize=1)
def canonical_xx() -> LinkedGraph:
    """K_{2,4} with the terminals on the degree-2 vertices.

    Edge ids: 0, 1 on path1, 2, 3 on path2, then rungs s1b, t1b, s2a, t2a.
    """
    return build_linked_graph(
        ("s1", "a", "t1"),
        ("s2", "b", "t2"),
        [("s1", "b"), ("t1", "b"), ("s2", "a"), ("t2", "a")],
    )


def _block(pos: int, cuts: tuple[int, int]) -> int:
    if pos < cuts[0]:
        return _S
    if pos < cuts[1]:
        return _MID
    return _T


def _cuts(length: int):
    for i in range(1, length - 1):
        for j in range(i + 1, length):
            yield i, j


def xx_segmentation(g: LinkedGraph) -> XxSegmentation | None:
    """First segmentation in lexicographic cut order that admits XX.

    An XX linkage minor exists iff each path splits into three consecutive
    non-empty blocks S|M|T such that rungs join S1-B, T1-B, S2-A and T2-A,
    where A and B are the middle blocks of path1 and path2.
    """
    require_chordless(g)
    len1, len2 = len(g.linkage.path1), len(g.linkage.path2)
    rungs = sorted(g.rungs)
    if len1 < 3 or len2 < 3 or len(rungs) < 4:
        return None
    placed = [(eid, *g.rung_positions(eid)) for eid in rungs]

    explored = 0
    for cuts1 in _cuts(len1):
        # Rungs leaving the middle of path1 and rungs leaving its outer blocks.
        from_mid = [(eid, pos2) for eid, pos1, pos2 in placed if _block(pos1, cuts1) == _MID]
        from_s = [(eid, pos2) for eid, pos1, pos2 in placed if _block(pos1, cuts1) == _S]
        from_t = [(eid, pos2) for eid, pos1, pos2 in placed if _block(pos1, cuts1) == _T]
        if not (from_mid and from_s and from_t):
            continue
        for cuts2 in _cuts(len2):
            explored += 1
            s1b = next((eid for eid, pos2 in from_s if _block(pos2, cuts2) == _MID), None)
            t1b = next((eid for eid, pos2 in from_t if _block(pos2, cuts2) == _MID), None)
            s2a = next((eid for eid, pos2 in from_mid if _block(pos2, cuts2) == _S), None)
            t2a = next((eid for eid, pos2 in from_mid if _block(pos2, cuts2) == _T), None)
            if None not in (s1b, t1b, s2a, t2a):
                logger.debug(f"xx_segmentation: hit after {explored} cut pairs")
                return XxSegmentation(cuts1, cuts2, (s1b, t1b, s2a, t2a))
    logger.debug(f"xx_segmentation: none among {explored} cut pairs")
    return None


def segmentation_ops(g: LinkedGraph, segmentation: XxSegmentation) -> list[MinorOp]:
    """Contract every path edge inside a block, then delete the unused rungs."""
    ops: list[MinorOp] = []
    for index, cuts in ((1, segmentation.cuts1), (2, segmentation.cuts2)):
        for pos, eid in enumerate(g.linkage.path_edges(index)):
            if pos + 1 not in cuts:
                ops.append(ContractPathEdge(eid))
    kept = set(segmentation.rungs)
    ops.extend(DeleteRungEdge(eid) for eid in sorted(g.rungs) if eid not in kept)
    return ops


def has_xx_linkage_minor(g: LinkedGraph, cap: int | None = None) -> XxWitness | None:
    """Verified XX witness for ``g`` or ``None`` when g is XX-free."""
    guard_size("has_xx_linkage_minor", len(g.vertices), cap if cap is not None else load_app_settings().xx.vertex_cap)
    segmentation = xx_segmentation(g)
    if segmentation is None:
        return None
    result, witness = record_witness(g, segmentation_ops(g, segmentation))
    target_iso = linked_isomorphic(result, canonical_xx())
    if target_iso is None:
        raise ExtractionInvariantError(f"segmentation {segmentation} did not produce XX")
    return XxWitness(witness, target_iso)
