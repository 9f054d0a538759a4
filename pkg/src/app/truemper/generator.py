from __future__ import annotations

from functools import lru_cache

from src.app.core.dto import ContractPathEdge, DeleteRungEdge, LinkedGraph, MinorOp, MinorWitness, TwoLinkage
from src.app.core.errors import InvalidLinkedGraphError, NotTruemperShapeError
from src.app.core.isomorphism import linked_isomorphic
from src.app.core.operations import build_linked_graph
from src.app.core.witness import record_witness
from src.utils.logger import logger


def rail_names(n: int) -> tuple[tuple[str, ...], tuple[str, ...]]:
    return tuple(f"v{i}" for i in range(1, n + 1)), tuple(f"u{i}" for i in range(1, n + 1))


@lru_cache(maxsize=64)
def generate_truemper(n: int) -> LinkedGraph:
    """Ladder of order ``n`` with its two rails as the linkage.

    Edge ids: path1 edges 0..n-2, path2 edges n-1..2n-3, then the parallel
    rungs u_i v_i for i = 1..n, then the crossing rungs u_i v_{n+1-i}. For odd
    n the middle rung belongs to both families and is added once.
    """
    if n < 1:
        raise InvalidLinkedGraphError(f"ladder order must be at least 1, got {n}")
    v, u = rail_names(n)
    rungs = [(u[i], v[i]) for i in range(n)]
    rungs += [(u[i], v[n - 1 - i]) for i in range(n) if n - 1 - i != i]
    return build_linked_graph(v, u, rungs)


def truemper_rung(n: int, i: int, j: int) -> int | None:
    """Edge id of the rung v_i u_j of the order-``n`` ladder, if it has one."""
    if not (1 <= i <= n and 1 <= j <= n):
        return None
    ids = generate_truemper(n).graph.edges_between(f"v{i}", f"u{j}")
    return min(ids) if ids else None


def truemper_order(g: LinkedGraph) -> int:
    """Order n such that ``g`` is linked-isomorphic to the ladder of order n."""
    n = len(g.linkage.path1)
    if len(g.linkage.path2) != n or linked_isomorphic(g, generate_truemper(n)) is None:
        raise NotTruemperShapeError(
            f"graph with paths of {len(g.linkage.path1)} and {len(g.linkage.path2)} vertices is not a ladder"
        )
    return n


def _fresh(name: str, taken: set[str]) -> str:
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def extend_truemper(g: LinkedGraph) -> tuple[LinkedGraph, dict[str, str]]:
    """Wrap a ladder of order n into one of order n + 2.

    Four new terminals s1', t1', s2', t2' are added with edges s1'v1, s1's2',
    s1't2', s2'u1, s2't1', v_n t1', u_n t2', t1't2'. Returns the new graph and
    its isomorphism onto the canonical ladder of order n + 2.
    """
    n = truemper_order(g)
    own = g.linkage
    taken = set(g.vertices)
    s1, t1, s2, t2 = (_fresh(name, taken) for name in ("s1'", "t1'", "s2'", "t2'"))
    graph, ids = g.graph.with_edges(
        (s1, t1, s2, t2),
        [
            (s1, own.s1),
            (s1, s2),
            (s1, t2),
            (s2, own.s2),
            (s2, t1),
            (own.t1, t1),
            (own.t2, t2),
            (t1, t2),
        ],
    )
    linkage = TwoLinkage(
        (s1, *own.path1, t1),
        (ids[0], *own.path1_edges, ids[5]),
        (s2, *own.path2, t2),
        (ids[3], *own.path2_edges, ids[6]),
    )
    extended = LinkedGraph(graph, linkage)
    iso = linked_isomorphic(extended, generate_truemper(n + 2))
    if iso is None:
        raise NotTruemperShapeError(f"extension of order {n} is not a ladder of order {n + 2}")
    logger.debug(f"extend_truemper: order {n} -> {n + 2}")
    return extended, iso


def shrink_truemper(g: LinkedGraph) -> tuple[LinkedGraph, MinorWitness]:
    """Peel the outermost layer off a ladder of order n >= 3.

    The four rungs joining two terminals are deleted, which leaves each
    terminal pendant; the pendant path edges are then contracted.
    """
    n = truemper_order(g)
    if n < 3:
        raise NotTruemperShapeError(f"cannot shrink a ladder of order {n}")
    own = g.linkage
    terminals = set(own.terminals)
    ops: list[MinorOp] = [
        DeleteRungEdge(eid) for eid in sorted(g.rungs) if g.graph.edge(eid).ends <= terminals
    ]
    pendant = {own.path1_edges[0], own.path1_edges[-1], own.path2_edges[0], own.path2_edges[-1]}
    ops += [ContractPathEdge(eid) for eid in sorted(pendant)]
    result, witness = record_witness(g, ops)
    if linked_isomorphic(result, generate_truemper(n - 2)) is None:
        raise NotTruemperShapeError(f"shrinking order {n} did not give order {n - 2}")
    return result, witness
