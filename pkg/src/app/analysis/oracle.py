from __future__ import annotations

from collections.abc import Iterator

from src.app.core.dto import Graph, LinkedGraph, TwoLinkage
from src.app.core.operations import guard_size
from src.app.settings import load_app_settings
from src.utils.logger import logger

from .dto import LinkageEnumeration


def _resolve_cap(cap: int | None) -> int:
    return cap if cap is not None else load_app_settings().oracle.vertex_cap


def _simple_paths(
    adjacency: dict[str, list[str]],
    source: str,
    target: str,
    allowed: frozenset[str],
) -> Iterator[tuple[str, ...]]:
    """Simple paths source -> target inside ``allowed``, lexicographic order.

    ``target`` is only ever the last vertex of a yielded path.
    """
    if source == target:
        yield (source,)
        return
    path = [source]
    seen = {source}

    def walk() -> Iterator[tuple[str, ...]]:
        for nxt in adjacency[path[-1]]:
            if nxt in seen or nxt not in allowed:
                continue
            if nxt == target:
                yield (*path, nxt)
                continue
            path.append(nxt)
            seen.add(nxt)
            yield from walk()
            path.pop()
            seen.remove(nxt)

    yield from walk()


def _bind(graph: Graph, route: tuple[str, ...]) -> tuple[int, ...]:
    return tuple(min(graph.edges_between(u, v)) for u, v in zip(route, route[1:], strict=False))


def iter_linkages(g: LinkedGraph, cap: int | None = None, spanning: bool = False) -> Iterator[TwoLinkage]:
    """Every order-2 linkage joining s1-t1 and s2-t2, in canonical order.

    Depth first: each s1-t1 path avoiding s2 and t2, then each s2-t2 path in
    what is left. Neighbours are explored in sorted order, so the stream is
    lexicographic by path1 then path2. With ``spanning`` only linkages
    covering every vertex are kept. Routes equal to g's own yield g's linkage.
    """
    guard_size("enumerate_linkages", len(g.vertices), _resolve_cap(cap))
    graph, own = g.graph, g.linkage
    adjacency = {vertex: sorted(graph.neighbors(vertex)) for vertex in graph.vertices}
    s1, t1, s2, t2 = own.terminals

    first_allowed = graph.vertices - {s2, t2}
    for route1 in _simple_paths(adjacency, s1, t1, first_allowed):
        rest = graph.vertices - frozenset(route1)
        for route2 in _simple_paths(adjacency, s2, t2, rest):
            if spanning and len(route2) != len(rest):
                continue
            if route1 == own.path1 and route2 == own.path2:
                yield own
            else:
                yield TwoLinkage(route1, _bind(graph, route1), route2, _bind(graph, route2))


def iter_spanning_linkages(g: LinkedGraph, cap: int | None = None) -> Iterator[TwoLinkage]:
    return iter_linkages(g, cap, spanning=True)


def enumerate_linkages(g: LinkedGraph, cap: int | None = None) -> LinkageEnumeration:
    return LinkageEnumeration(tuple(iter_linkages(g, cap)))


def enumerate_spanning_linkages(g: LinkedGraph, cap: int | None = None) -> LinkageEnumeration:
    linkages = tuple(iter_spanning_linkages(g, cap))
    logger.debug(f"enumerated {len(linkages)} spanning linkages on {len(g.vertices)} vertices")
    return LinkageEnumeration(linkages)


def count_spanning_linkages(g: LinkedGraph, cap: int | None = None) -> int:
    return sum(1 for _ in iter_spanning_linkages(g, cap))


def find_second_linkage(g: LinkedGraph, cap: int | None = None) -> TwoLinkage | None:
    """First linkage in canonical order whose routes differ from g's.

    Uniqueness is judged against every linkage joining the terminal pairs,
    spanning or not, so the result may leave vertices uncovered.
    """
    for linkage in iter_linkages(g, cap):
        if not linkage.same_route(g.linkage):
            return linkage
    return None


def is_vital(g: LinkedGraph, cap: int | None = None) -> bool:
    """Spanning (guaranteed by construction) and unique."""
    return find_second_linkage(g, cap) is None
