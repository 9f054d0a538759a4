from __future__ import annotations

from collections.abc import Iterable, Sequence

from .dto import (
    ContractPathEdge,
    DeleteRungEdge,
    Edge,
    EdgeKind,
    Graph,
    LinkedGraph,
    MinorOp,
    TwoLinkage,
)
from .errors import (
    ChordError,
    EdgeKindError,
    InvalidLinkedGraphError,
    LoopError,
    SizeGuardError,
    VertexNotOnPathError,
)


def build_linked_graph(
    path1: Sequence[str],
    path2: Sequence[str],
    extra_edges: Iterable[tuple[str, str]] = (),
) -> LinkedGraph:
    """Build a linked graph from two vertex sequences and off-linkage edges.

    Edge ids are assigned in order: path1 edges, path2 edges, extra edges.
    """
    edges: list[Edge] = []
    bound: list[list[int]] = [[], []]
    for index, path in enumerate((path1, path2)):
        for u, v in zip(path, path[1:], strict=False):
            bound[index].append(len(edges))
            edges.append(Edge(len(edges), u, v))
    for u, v in extra_edges:
        edges.append(Edge(len(edges), u, v))
    linkage = TwoLinkage(tuple(path1), tuple(bound[0]), tuple(path2), tuple(bound[1]))
    vertices = frozenset(path1) | frozenset(path2)
    for edge in edges:
        for end in (edge.u, edge.v):
            if end not in vertices:
                raise InvalidLinkedGraphError(f"linkage is not spanning; vertex {end!r} is on no path")
    return LinkedGraph(Graph(vertices, tuple(edges)), linkage)


def classify_edges(g: LinkedGraph) -> dict[int, EdgeKind]:
    """Edge id -> Path, Chord or Rung."""
    return dict(g.edge_kinds)


def chords(g: LinkedGraph) -> list[int]:
    return g.edges_of_kind(EdgeKind.CHORD)


def is_chordless(g: LinkedGraph) -> bool:
    return not chords(g)


def require_chordless(g: LinkedGraph) -> None:
    found = chords(g)
    if found:
        raise ChordError(found)


def position(g: LinkedGraph, path_index: int, vertex: str) -> int:
    located = g.linkage.locations.get(vertex)
    if located is None or located[0] != path_index:
        raise VertexNotOnPathError(vertex, path_index)
    return located[1]


def left_of(g: LinkedGraph, path_index: int, v: str, w: str) -> bool:
    """True iff ``v`` is strictly closer to s_i than ``w`` along path i."""
    return position(g, path_index, v) < position(g, path_index, w)


def reverse_path(g: LinkedGraph, path_index: int) -> LinkedGraph:
    if path_index not in (1, 2):
        raise InvalidLinkedGraphError(f"path index must be 1 or 2, got {path_index}")
    return LinkedGraph(g.graph, g.linkage.reversed(path_index))


def swap_paths(g: LinkedGraph) -> LinkedGraph:
    return LinkedGraph(g.graph, g.linkage.swapped())


def orient(g: LinkedGraph, reverse1: bool = False, reverse2: bool = False, swap: bool = False) -> LinkedGraph:
    """Reverse the requested paths, then optionally swap them."""
    oriented = g
    if reverse1:
        oriented = reverse_path(oriented, 1)
    if reverse2:
        oriented = reverse_path(oriented, 2)
    if swap:
        oriented = swap_paths(oriented)
    return oriented


def _require_kind(g: LinkedGraph, edge_id: int, expected: EdgeKind) -> None:
    actual = g.edge_kinds.get(edge_id)
    if actual is None:
        raise EdgeKindError(edge_id, expected.value, "absent")
    if actual is not expected:
        raise EdgeKindError(edge_id, expected.value, actual.value)


def contract_with_merge(g: LinkedGraph, edge_id: int) -> tuple[LinkedGraph, str, str]:
    """Contract a path edge; return the result, the kept and the absorbed vertex.

    The merged vertex keeps the name of the end closer to s_i.
    """
    _require_kind(g, edge_id, EdgeKind.PATH)
    index, pos = g.linkage.edge_locations[edge_id]
    path = g.linkage.path(index)
    keep, gone = path[pos], path[pos + 1]
    parallel = [eid for eid in g.graph.edges_between(keep, gone) if eid != edge_id]
    if parallel:
        raise LoopError(f"contracting edge {edge_id} turns edges {parallel} into loops")

    edges = []
    for edge in g.graph.edges:
        if edge.id == edge_id:
            continue
        if gone in (edge.u, edge.v):
            u = keep if edge.u == gone else edge.u
            v = keep if edge.v == gone else edge.v
            edges.append(Edge(edge.id, u, v))
        else:
            edges.append(edge)
    graph = Graph(g.graph.vertices - {gone}, tuple(edges), g.graph.next_edge_id)

    bound = g.linkage.path_edges(index)
    new_path = path[: pos + 1] + path[pos + 2 :]
    new_bound = bound[:pos] + bound[pos + 1 :]
    if index == 1:
        linkage = TwoLinkage(new_path, new_bound, g.linkage.path2, g.linkage.path2_edges)
    else:
        linkage = TwoLinkage(g.linkage.path1, g.linkage.path1_edges, new_path, new_bound)
    return LinkedGraph(graph, linkage), keep, gone


def contract_path_edge(g: LinkedGraph, edge_id: int) -> LinkedGraph:
    return contract_with_merge(g, edge_id)[0]


def delete_rung_edge(g: LinkedGraph, edge_id: int) -> LinkedGraph:
    _require_kind(g, edge_id, EdgeKind.RUNG)
    return LinkedGraph(g.graph.without_edge(edge_id), g.linkage)


def apply_op(g: LinkedGraph, op: MinorOp) -> tuple[LinkedGraph, tuple[str, str] | None]:
    """Apply one minor op; the second item is (kept, absorbed) for contractions."""
    if isinstance(op, ContractPathEdge):
        result, keep, gone = contract_with_merge(g, op.edge)
        return result, (keep, gone)
    if isinstance(op, DeleteRungEdge):
        return delete_rung_edge(g, op.edge), None
    raise InvalidLinkedGraphError(f"unknown minor op {op!r}")


def guard_size(routine: str, size: int, cap: int) -> None:
    if size > cap:
        raise SizeGuardError(routine, size, cap)
