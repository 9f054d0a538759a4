from __future__ import annotations

from src.app.core.dto import EdgeKind, LinkedGraph
from src.app.core.errors import EdgeKindError
from src.app.core.operations import guard_size, require_chordless
from src.app.settings import load_app_settings
from src.utils.logger import logger

from .dto import RungPartition

_A, _B = "A", "B"


def _orientation(g: LinkedGraph, e: int, f: int) -> int:
    """Sign of the product of position differences; negative means crossing."""
    for eid in (e, f):
        kind = g.edge_kinds.get(eid)
        if kind is not EdgeKind.RUNG:
            raise EdgeKindError(eid, EdgeKind.RUNG.value, kind.value if kind else "absent")
    p1e, p2e = g.rung_positions(e)
    p1f, p2f = g.rung_positions(f)
    product = (p1e - p1f) * (p2e - p2f)
    return (product > 0) - (product < 0)


def crossing(g: LinkedGraph, e: int, f: int) -> bool:
    """Rungs cross when their ends appear in opposite orders on the two paths.

    Rungs sharing an end never cross.
    """
    return _orientation(g, e, f) < 0


def is_valid_partition(g: LinkedGraph, partition: RungPartition) -> bool:
    rungs = set(g.rungs)
    if partition.block_a & partition.block_b or partition.block_a | partition.block_b != rungs:
        return False
    block_a, block_b = sorted(partition.block_a), sorted(partition.block_b)
    if any(crossing(g, e, f) for k, e in enumerate(block_a) for f in block_a[k + 1 :]):
        return False
    flipped = g.linkage.reversed(2)
    reversed_g = LinkedGraph(g.graph, flipped)
    return not any(crossing(reversed_g, e, f) for k, e in enumerate(block_b) for f in block_b[k + 1 :])


def _propagate(
    conflicts: dict[int, dict[str, list[int]]],
    assignment: dict[int, str],
    start: int,
    block: str,
) -> dict[int, str] | None:
    """Assign ``start`` to ``block`` and force every consequence; None on conflict."""
    trial = dict(assignment)
    queue = [(start, block)]
    while queue:
        eid, side = queue.pop()
        if eid in trial:
            if trial[eid] != side:
                return None
            continue
        trial[eid] = side
        other = _B if side == _A else _A
        queue.extend((forced, other) for forced in conflicts[eid][side])
    return trial


def find_valid_partition(g: LinkedGraph, cap: int | None = None) -> RungPartition | None:
    """Split the rungs so that A is non-crossing and B is non-crossing once path2 is reversed.

    Each pair of rungs forbids at most one block for sharing, so the search is a
    two-satisfiability problem: rungs are decided in ascending id, trying A
    before B, and a choice whose forced consequences do not clash is final.
    """
    require_chordless(g)
    rungs = sorted(g.rungs)
    guard_size("find_valid_partition", len(rungs), cap if cap is not None else load_app_settings().partition.rung_cap)

    # conflicts[e][X]: rungs that cannot join block X together with e.
    conflicts: dict[int, dict[str, list[int]]] = {eid: {_A: [], _B: []} for eid in rungs}
    for k, e in enumerate(rungs):
        for f in rungs[k + 1 :]:
            sign = _orientation(g, e, f)
            if sign < 0:
                conflicts[e][_A].append(f)
                conflicts[f][_A].append(e)
            elif sign > 0:
                conflicts[e][_B].append(f)
                conflicts[f][_B].append(e)

    assignment: dict[int, str] = {}
    for eid in rungs:
        if eid in assignment:
            continue
        decided = _propagate(conflicts, assignment, eid, _A) or _propagate(conflicts, assignment, eid, _B)
        if decided is None:
            logger.debug(f"find_valid_partition: rung {eid} fits neither block")
            return None
        assignment = decided
    return RungPartition(
        frozenset(eid for eid, side in assignment.items() if side == _A),
        frozenset(eid for eid, side in assignment.items() if side == _B),
    )
