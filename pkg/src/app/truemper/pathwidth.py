from __future__ import annotations

import networkx as nx

from src.app.core.dto import Graph
from src.app.core.operations import guard_size
from src.app.settings import load_app_settings
from src.utils.logger import logger

from .dto import PathDecomposition


def exact_pathwidth(graph: Graph, cap: int | None = None) -> tuple[int, PathDecomposition]:
    """Minimum width and an optimal path decomposition.

    Pathwidth equals vertex separation number, computed by a dynamic program
    over vertex subsets: ``best[S]`` is the smallest possible maximum boundary
    over orderings that place S first. Bag i is the boundary of the first
    i - 1 vertices plus the i-th vertex.
    """
    guard_size("exact_pathwidth", len(graph.vertices), cap if cap is not None else load_app_settings().pathwidth.vertex_cap)
    simple = nx.Graph(graph.to_networkx())
    order = sorted(simple.nodes)
    if not order:
        return 0, PathDecomposition(())
    index = {vertex: k for k, vertex in enumerate(order)}
    neighbours = [0] * len(order)
    for u, v in simple.edges:
        neighbours[index[u]] |= 1 << index[v]
        neighbours[index[v]] |= 1 << index[u]

    full = (1 << len(order)) - 1

    def boundary(mask: int) -> int:
        return sum(1 for k in range(len(order)) if mask >> k & 1 and neighbours[k] & ~mask & full)

    best = [0] * (full + 1)
    last = [-1] * (full + 1)
    for mask in range(1, full + 1):
        edge = boundary(mask)
        choice, value = -1, None
        for k in range(len(order)):
            if mask >> k & 1:
                candidate = best[mask ^ (1 << k)]
                if value is None or candidate < value:
                    choice, value = k, candidate
        best[mask], last[mask] = max(edge, value), choice

    ordering: list[int] = []
    mask = full
    while mask:
        ordering.append(last[mask])
        mask ^= 1 << last[mask]
    ordering.reverse()

    bags = []
    placed = 0
    for k in ordering:
        frontier = {order[j] for j in range(len(order)) if placed >> j & 1 and neighbours[j] & ~placed & full}
        bags.append(frozenset(frontier | {order[k]}))
        placed |= 1 << k
    decomposition = PathDecomposition(tuple(bags))
    logger.debug(f"exact_pathwidth: width {best[full]} on {len(order)} vertices")
    return decomposition.width, decomposition


def verify_path_decomposition(graph: Graph, decomposition: PathDecomposition) -> bool:
    simple = nx.Graph(graph.to_networkx())
    bags = decomposition.bags
    for vertex in simple.nodes:
        holding = [k for k, bag in enumerate(bags) if vertex in bag]
        if not holding or holding[-1] - holding[0] + 1 != len(holding):
            return False
    if any(vertex not in simple for bag in bags for vertex in bag):
        return False
    return all(any(u in bag and v in bag for bag in bags) for u, v in simple.edges)
