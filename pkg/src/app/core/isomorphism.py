from __future__ import annotations

from collections import Counter
from itertools import product

from .dto import LinkedGraph
from .operations import orient

# (swap, reverse path1, reverse path2), strict orientation first.
ORIENTATIONS: tuple[tuple[bool, bool, bool], ...] = tuple(
    (swap, rev1, rev2) for swap, rev1, rev2 in product((False, True), repeat=3)
)

Signature = tuple[int, int, tuple[tuple[tuple[int, int], tuple[int, int]], ...]]


def linked_signature(g: LinkedGraph) -> Signature:
    """Strict canonical form: path lengths plus the sorted multiset of edges in
    (path index, position) coordinates.

    Two linked graphs are strictly linked-isomorphic iff their signatures agree.
    """
    located = g.linkage.locations
    edges = []
    for edge in g.graph.edges:
        ends = sorted((located[edge.u], located[edge.v]))
        edges.append((ends[0], ends[1]))
    return len(g.linkage.path1), len(g.linkage.path2), tuple(sorted(edges))


def relaxed_signature(g: LinkedGraph) -> Signature:
    """Canonical form up to path reversals and path swap."""
    return min(linked_signature(orient(g, rev1, rev2, swap)) for swap, rev1, rev2 in ORIENTATIONS)


def _target_paths(h: LinkedGraph, swap: bool, rev1: bool, rev2: bool) -> tuple[tuple[str, ...], tuple[str, ...]]:
    first, second = h.linkage.path1, h.linkage.path2
    if swap:
        first, second = second, first
    if rev1:
        first = first[::-1]
    if rev2:
        second = second[::-1]
    return first, second


def _edge_multiset(g: LinkedGraph, mapping: dict[str, str] | None = None) -> Counter:
    if mapping is None:
        return Counter(edge.ends for edge in g.graph.edges)
    return Counter(frozenset((mapping[edge.u], mapping[edge.v])) for edge in g.graph.edges)


def linked_isomorphic(g: LinkedGraph, h: LinkedGraph, relaxed: bool = False) -> dict[str, str] | None:
    """Vertex bijection g -> h preserving adjacency with multiplicities, path
    membership, path order and terminal labels, or ``None``.

    With ``relaxed`` the bijection may additionally reverse either path of ``h``
    and swap its two paths.
    """
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return None
    target_edges = _edge_multiset(h)
    orientations = ORIENTATIONS if relaxed else ORIENTATIONS[:1]
    for swap, rev1, rev2 in orientations:
        first, second = _target_paths(h, swap, rev1, rev2)
        if len(first) != len(g.linkage.path1) or len(second) != len(g.linkage.path2):
            continue
        mapping = dict(zip(g.linkage.path1, first, strict=True))
        mapping.update(zip(g.linkage.path2, second, strict=True))
        if _edge_multiset(g, mapping) == target_edges:
            return mapping
    return None
