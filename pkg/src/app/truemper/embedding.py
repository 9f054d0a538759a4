from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import lru_cache

from src.app.core.dto import ContractPathEdge, DeleteRungEdge, LinkedGraph, MinorOp
from src.app.core.errors import ExtractionInvariantError, LinkageError, NotTruemperError
from src.app.core.isomorphism import linked_isomorphic
from src.app.core.operations import contract_path_edge, delete_rung_edge, orient, require_chordless
from src.app.core.witness import apply_witness, record_witness
from src.app.xx.detector import has_xx_linkage_minor
from src.utils.logger import logger

from .dto import TruemperCertificate
from .generator import extend_truemper, generate_truemper, truemper_rung

Block = tuple[int, int]


@dataclass(frozen=True)
class _Layer:
    """One ``extend_truemper`` step, read through its isomorphism.

    ``position`` gives the rail index in the order ``n`` ladder of every vertex
    of the extended inner ladder; ``terminals`` are the added s1', t1', s2', t2'.
    """

    n: int
    position: dict[str, int]
    terminals: tuple[str, str, str, str]
    corners: dict[tuple[str, str], tuple[int, int]]


@lru_cache(maxsize=64)
def _layer_around(inner: int) -> _Layer:
    extended, iso = extend_truemper(generate_truemper(inner))
    position = {vertex: int(image[1:]) for vertex, image in iso.items()}
    s1, t1, s2, t2 = extended.linkage.terminals
    corners = {}
    for end1 in (s1, t1):
        for end2 in (s2, t2):
            if not extended.graph.edges_between(end1, end2):
                raise ExtractionInvariantError(f"extension has no rung {end1}{end2}")
            corners[(end1, end2)] = (position[end1], position[end2])
    return _Layer(inner + 2, position, (s1, t1, s2, t2), corners)


@dataclass(frozen=True)
class _Embedding:
    """Where each vertex and rung of a linked graph sits inside a ladder.

    ``blocks1[k]`` is the 1-based inclusive range of v-rail indices that
    contract onto position k of path1; ``blocks2`` likewise on the u-rail.
    ``rung_map`` sends each rung to a ladder rung (i, j) = v_i u_j.
    """

    n: int
    blocks1: tuple[Block, ...]
    blocks2: tuple[Block, ...]
    rung_map: dict[int, tuple[int, int]] = field(default_factory=dict)

    def blocks(self, path_index: int) -> tuple[Block, ...]:
        return self.blocks1 if path_index == 1 else self.blocks2

    def lifted(self, layer: _Layer, split: tuple[int, bool] | None = None) -> _Embedding:
        """The same embedding in the extended ladder.

        The end blocks absorb the new terminals, except at ``split`` =
        (path index, at start), where the terminal gets a block of its own.
        """
        rails: list[tuple[Block, ...]] = []
        for path_index, prefix in ((1, "v"), (2, "u")):
            start = layer.position[layer.terminals[2 * path_index - 2]]
            end = layer.position[layer.terminals[2 * path_index - 1]]
            moved = [
                (layer.position[f"{prefix}{lo}"], layer.position[f"{prefix}{hi}"]) for lo, hi in self.blocks(path_index)
            ]
            if split == (path_index, True):
                moved.insert(0, (start, start))
            else:
                moved[0] = (start, moved[0][1])
            if split == (path_index, False):
                moved.append((end, end))
            else:
                moved[-1] = (moved[-1][0], end)
            rails.append(tuple(moved))
        rung_map = {
            eid: (layer.position[f"v{i}"], layer.position[f"u{j}"]) for eid, (i, j) in self.rung_map.items()
        }
        return _Embedding(layer.n, rails[0], rails[1], rung_map)


def _is_ladder_rung(n: int, i: int, j: int) -> bool:
    return j == i or j == n + 1 - i


@dataclass(frozen=True)
class _Pendant:
    path_index: int
    at_start: bool

    def lift(self, below: _Embedding) -> _Embedding:
        return below.lifted(_layer_around(below.n), split=(self.path_index, self.at_start))


@dataclass(frozen=True)
class _Corner:
    edge: int
    at_t1: bool
    at_t2: bool

    def lift(self, below: _Embedding) -> _Embedding:
        layer = _layer_around(below.n)
        up = below.lifted(layer)
        s1, t1, s2, t2 = layer.terminals
        corner = layer.corners[(t1 if self.at_t1 else s1, t2 if self.at_t2 else s2)]
        return _Embedding(up.n, up.blocks1, up.blocks2, {**up.rung_map, self.edge: corner})


def _pendant_step(g: LinkedGraph) -> tuple[_Pendant, int] | None:
    """First terminal, in the order s1, t1, s2, t2, hanging off a single path edge."""
    for path_index in (1, 2):
        path, bound = g.linkage.path(path_index), g.linkage.path_edges(path_index)
        if len(path) < 2:
            continue
        for at_start, vertex, eid in ((True, path[0], bound[0]), (False, path[-1], bound[-1])):
            if g.graph.incidence[vertex] == (eid,):
                return _Pendant(path_index, at_start), eid
    return None


def _corner_step(g: LinkedGraph) -> _Corner | None:
    """Smallest rung joining terminals, trying the path ends as reversals would.

    The order (none, path1, path2, both) reversed picks the ends (s1, s2),
    (t1, s2), (s1, t2), (t1, t2).
    """
    own = g.linkage
    for at_t1, at_t2 in ((False, False), (True, False), (False, True), (True, True)):
        end1 = own.t1 if at_t1 else own.s1
        end2 = own.t2 if at_t2 else own.s2
        ids = g.graph.edges_between(end1, end2)
        if ids:
            return _Corner(min(ids), at_t1, at_t2)
    return None


def _identity(g: LinkedGraph) -> _Embedding | None:
    n = len(g.linkage.path1)
    if len(g.linkage.path2) != n or linked_isomorphic(g, generate_truemper(n)) is None:
        return None
    rung_map = {}
    for eid in g.rungs:
        pos1, pos2 = g.rung_positions(eid)
        rung_map[eid] = (pos1 + 1, pos2 + 1)
    return _Embedding(n, tuple((k, k) for k in range(1, n + 1)), tuple((k, k) for k in range(1, n + 1)), rung_map)


def _compositions(n: int, parts: int) -> Iterator[tuple[Block, ...]]:
    """Splits of 1..n into ``parts`` consecutive non-empty blocks."""
    if parts == 1:
        yield ((1, n),)
        return
    for first_hi in range(1, n - parts + 2):
        for rest in _compositions(n - first_hi, parts - 1):
            yield ((1, first_hi), *((lo + first_hi, hi + first_hi) for lo, hi in rest))


def _assign_rungs(
    g: LinkedGraph, n: int, blocks1: tuple[Block, ...], blocks2: tuple[Block, ...]
) -> dict[int, tuple[int, int]] | None:
    rungs = sorted(g.rungs)
    chosen: dict[int, tuple[int, int]] = {}
    used: set[tuple[int, int]] = set()

    def place(k: int) -> bool:
        if k == len(rungs):
            return True
        pos1, pos2 = g.rung_positions(rungs[k])
        (lo1, hi1), (lo2, hi2) = blocks1[pos1], blocks2[pos2]
        for i in range(lo1, hi1 + 1):
            for j in range(lo2, hi2 + 1):
                if (i, j) in used or not _is_ladder_rung(n, i, j):
                    continue
                used.add((i, j))
                chosen[rungs[k]] = (i, j)
                if place(k + 1):
                    return True
                used.discard((i, j))
                del chosen[rungs[k]]
        return False

    return dict(chosen) if place(0) else None


def _small_case(g: LinkedGraph) -> _Embedding | None:
    """Exhaustive match against the ladders of order 1 and 2."""
    len1, len2 = len(g.linkage.path1), len(g.linkage.path2)
    for n in (1, 2):
        if len1 > n or len2 > n:
            continue
        for blocks1 in _compositions(n, len1):
            for blocks2 in _compositions(n, len2):
                rung_map = _assign_rungs(g, n, blocks1, blocks2)
                if rung_map is not None:
                    return _Embedding(n, blocks1, blocks2, rung_map)
    return None


def _base_case(g: LinkedGraph) -> _Embedding | None:
    found = _identity(g)
    if found is None and len(g.vertices) <= 4:
        found = _small_case(g)
    return found


def _embedding_ops(embedding: _Embedding) -> list[MinorOp]:
    """Ladder ops: drop rungs outside the image, then collapse every block."""
    n = embedding.n
    image = {truemper_rung(n, i, j) for i, j in embedding.rung_map.values()}
    ladder = generate_truemper(n)
    ops: list[MinorOp] = [DeleteRungEdge(eid) for eid in sorted(ladder.rungs) if eid not in image]
    for index, blocks in ((1, embedding.blocks1), (2, embedding.blocks2)):
        bound = ladder.linkage.path_edges(index)
        for lo, hi in blocks:
            ops += [ContractPathEdge(bound[k - 1]) for k in range(lo, hi)]
    return ops


def _check_embedding(g: LinkedGraph, embedding: _Embedding) -> None:
    for eid, (i, j) in embedding.rung_map.items():
        pos1, pos2 = g.rung_positions(eid)
        lo1, hi1 = embedding.blocks1[pos1]
        lo2, hi2 = embedding.blocks2[pos2]
        if not (lo1 <= i <= hi1 and lo2 <= j <= hi2 and _is_ladder_rung(embedding.n, i, j)):
            raise ExtractionInvariantError(f"rung {eid} mapped to ({i}, {j}) outside its blocks")
    if len(set(embedding.rung_map.values())) != len(embedding.rung_map):
        raise ExtractionInvariantError("two rungs share a ladder rung")


def embed_in_truemper(g: LinkedGraph) -> TruemperCertificate:
    """Certificate that ``g`` is a linkage minor of a ladder.

    Terminals hanging off one path edge are contracted and rungs joining two
    terminals are deleted until the graph is itself a ladder or small enough to
    match one directly; the embedding is then lifted back one ladder layer per
    step.
    """
    require_chordless(g)
    steps: list[_Pendant | _Corner] = []
    current = g
    while (embedding := _base_case(current)) is None:
        pendant = _pendant_step(current)
        if pendant is not None:
            step, eid = pendant
            current = contract_path_edge(current, eid)
        elif (corner := _corner_step(current)) is not None:
            step = corner
            current = delete_rung_edge(current, corner.edge)
        else:
            logger.debug(f"embed_in_truemper: stuck after {len(steps)} steps on {len(current.vertices)} vertices")
            raise NotTruemperError("graph is not a linkage minor of any ladder", witness=has_xx_linkage_minor(g))
        steps.append(step)

    for step in reversed(steps):
        embedding = step.lift(embedding)
    _check_embedding(g, embedding)

    ladder = generate_truemper(embedding.n)
    result, witness = record_witness(ladder, _embedding_ops(embedding))
    if linked_isomorphic(result, g) is None:
        raise ExtractionInvariantError(f"embedding into order {embedding.n} does not replay to the input")
    logger.debug(f"embed_in_truemper: order {embedding.n} after {len(steps)} steps")
    return TruemperCertificate(embedding.n, witness)


def verify_certificate(g: LinkedGraph, certificate: TruemperCertificate) -> bool:
    try:
        result = apply_witness(generate_truemper(certificate.n), certificate.witness)
        reverse1, reverse2 = certificate.reversal_flags
        target = orient(g, reverse1, reverse2, certificate.path_swap)
    except LinkageError as exc:
        logger.debug(f"verify_certificate: replay failed: {exc}")
        return False
    return linked_isomorphic(result, target) is not None
