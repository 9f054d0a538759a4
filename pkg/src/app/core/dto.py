from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import networkx as nx

from .constants import PATH_INDICES
from .errors import InvalidLinkedGraphError


class EdgeKind(Enum):
    """Classification of an edge relative to the linkage."""

    PATH = "path"
    CHORD = "chord"
    RUNG = "rung"


@dataclass(frozen=True)
class Edge:
    """An undirected edge with a stable identifier."""

    id: int
    u: str
    v: str

    @property
    def ends(self) -> frozenset[str]:
        return frozenset((self.u, self.v))

    def other(self, vertex: str) -> str:
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise InvalidLinkedGraphError(f"vertex {vertex!r} is not an end of edge {self.id}")


@dataclass(frozen=True)
class Graph:
    """Finite loopless multigraph.

    ``next_edge_id`` only ever grows, so identifiers of removed edges are never
    handed out again by graphs derived from this one.
    """

    vertices: frozenset[str]
    edges: tuple[Edge, ...]
    next_edge_id: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        ordered = tuple(sorted(self.edges, key=lambda e: e.id))
        object.__setattr__(self, "edges", ordered)
        seen: set[int] = set()
        for edge in ordered:
            if edge.id in seen:
                raise InvalidLinkedGraphError(f"duplicate edge id {edge.id}")
            seen.add(edge.id)
            if edge.u == edge.v:
                raise InvalidLinkedGraphError(f"edge {edge.id} is a loop at {edge.u!r}")
            for end in (edge.u, edge.v):
                if end not in self.vertices:
                    raise InvalidLinkedGraphError(f"edge {edge.id} uses unknown vertex {end!r}")
        floor = ordered[-1].id + 1 if ordered else 0
        object.__setattr__(self, "next_edge_id", max(self.next_edge_id, floor))

    @cached_property
    def edge_map(self) -> dict[int, Edge]:
        return {edge.id: edge for edge in self.edges}

    @cached_property
    def incidence(self) -> dict[str, tuple[int, ...]]:
        incident: dict[str, list[int]] = {vertex: [] for vertex in self.vertices}
        for edge in self.edges:
            incident[edge.u].append(edge.id)
            incident[edge.v].append(edge.id)
        return {vertex: tuple(ids) for vertex, ids in incident.items()}

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self.edge_map

    def edge(self, edge_id: int) -> Edge:
        try:
            return self.edge_map[edge_id]
        except KeyError:
            raise InvalidLinkedGraphError(f"unknown edge id {edge_id}") from None

    def degree(self, vertex: str) -> int:
        return len(self.incidence[vertex])

    def neighbors(self, vertex: str) -> set[str]:
        return {self.edge_map[eid].other(vertex) for eid in self.incidence[vertex]}

    def edges_between(self, u: str, v: str) -> list[int]:
        return [eid for eid in self.incidence.get(u, ()) if self.edge_map[eid].other(u) == v]

    def without_edge(self, edge_id: int) -> Graph:
        remaining = tuple(edge for edge in self.edges if edge.id != edge_id)
        return Graph(self.vertices, remaining, self.next_edge_id)

    def with_edges(self, vertices: Iterable[str], pairs: Iterable[tuple[str, str]]) -> tuple[Graph, list[int]]:
        """Add vertices and fresh edges; return the new graph and the new ids."""
        next_id = self.next_edge_id
        added: list[Edge] = []
        for u, v in pairs:
            added.append(Edge(next_id, u, v))
            next_id += 1
        grown = Graph(self.vertices | frozenset(vertices), self.edges + tuple(added), next_id)
        return grown, [edge.id for edge in added]

    def to_networkx(self) -> nx.MultiGraph:
        multigraph = nx.MultiGraph()
        multigraph.add_nodes_from(sorted(self.vertices))
        for edge in self.edges:
            multigraph.add_edge(edge.u, edge.v, key=edge.id)
        return multigraph


@dataclass(frozen=True)
class TwoLinkage:
    """Two vertex-disjoint paths, each bound edge by edge to a host graph."""

    path1: tuple[str, ...]
    path1_edges: tuple[int, ...]
    path2: tuple[str, ...]
    path2_edges: tuple[int, ...]

    def __post_init__(self) -> None:
        for name in ("path1", "path1_edges", "path2", "path2_edges"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        for index in PATH_INDICES:
            path, bound = self.path(index), self.path_edges(index)
            if not path:
                raise InvalidLinkedGraphError(f"path{index} is empty")
            if len(bound) != len(path) - 1:
                raise InvalidLinkedGraphError(
                    f"path{index} has {len(path)} vertices but {len(bound)} bound edges"
                )
            if len(set(path)) != len(path):
                raise InvalidLinkedGraphError(f"path{index} repeats a vertex")
        shared = set(self.path1) & set(self.path2)
        if shared:
            raise InvalidLinkedGraphError(f"paths share vertices {sorted(shared)}")

    def path(self, index: int) -> tuple[str, ...]:
        return self.path1 if index == 1 else self.path2

    def path_edges(self, index: int) -> tuple[int, ...]:
        return self.path1_edges if index == 1 else self.path2_edges

    @property
    def s1(self) -> str:
        return self.path1[0]

    @property
    def t1(self) -> str:
        return self.path1[-1]

    @property
    def s2(self) -> str:
        return self.path2[0]

    @property
    def t2(self) -> str:
        return self.path2[-1]

    @property
    def terminals(self) -> tuple[str, str, str, str]:
        return self.s1, self.t1, self.s2, self.t2

    @cached_property
    def vertices(self) -> frozenset[str]:
        return frozenset(self.path1) | frozenset(self.path2)

    @cached_property
    def edge_ids(self) -> frozenset[int]:
        return frozenset(self.path1_edges) | frozenset(self.path2_edges)

    @cached_property
    def locations(self) -> dict[str, tuple[int, int]]:
        """Vertex -> (path index, 0-based position from s_i)."""
        located = {vertex: (1, pos) for pos, vertex in enumerate(self.path1)}
        located.update({vertex: (2, pos) for pos, vertex in enumerate(self.path2)})
        return located

    @cached_property
    def edge_locations(self) -> dict[int, tuple[int, int]]:
        """Path edge -> (path index, position of its left end)."""
        located = {eid: (1, pos) for pos, eid in enumerate(self.path1_edges)}
        located.update({eid: (2, pos) for pos, eid in enumerate(self.path2_edges)})
        return located

    def same_route(self, other: TwoLinkage) -> bool:
        return self.path1 == other.path1 and self.path2 == other.path2

    def reversed(self, index: int) -> TwoLinkage:
        if index == 1:
            return TwoLinkage(self.path1[::-1], self.path1_edges[::-1], self.path2, self.path2_edges)
        return TwoLinkage(self.path1, self.path1_edges, self.path2[::-1], self.path2_edges[::-1])

    def swapped(self) -> TwoLinkage:
        return TwoLinkage(self.path2, self.path2_edges, self.path1, self.path1_edges)

    def to_dict(self) -> dict:
        return {
            "path1": list(self.path1),
            "path1_edges": list(self.path1_edges),
            "path2": list(self.path2),
            "path2_edges": list(self.path2_edges),
        }


def validate_linkage(graph: Graph, linkage: TwoLinkage, spanning: bool = True) -> None:
    """Check that ``linkage`` is a linkage of ``graph``, spanning unless told otherwise."""
    for index in PATH_INDICES:
        path, bound = linkage.path(index), linkage.path_edges(index)
        for pos, edge_id in enumerate(bound):
            if not graph.has_edge(edge_id):
                raise InvalidLinkedGraphError(f"path{index} is bound to unknown edge {edge_id}")
            if graph.edge(edge_id).ends != frozenset((path[pos], path[pos + 1])):
                raise InvalidLinkedGraphError(
                    f"edge {edge_id} does not join {path[pos]!r} and {path[pos + 1]!r}"
                )
    if len(linkage.edge_ids) != len(linkage.path1_edges) + len(linkage.path2_edges):
        raise InvalidLinkedGraphError("an edge is bound twice in the linkage")
    stray = linkage.vertices - graph.vertices
    if stray:
        raise InvalidLinkedGraphError(f"linkage uses unknown vertices {sorted(stray)}")
    uncovered = graph.vertices - linkage.vertices
    if spanning and uncovered:
        raise InvalidLinkedGraphError(f"linkage is not spanning; uncovered vertices {sorted(uncovered)}")


@dataclass(frozen=True)
class LinkedGraph:
    """A graph together with a spanning order-2 linkage."""

    graph: Graph
    linkage: TwoLinkage

    def __post_init__(self) -> None:
        validate_linkage(self.graph, self.linkage)

    @property
    def vertices(self) -> frozenset[str]:
        return self.graph.vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges

    @cached_property
    def edge_kinds(self) -> dict[int, EdgeKind]:
        on_first = set(self.linkage.path1)
        kinds: dict[int, EdgeKind] = {}
        for edge in self.graph.edges:
            if edge.id in self.linkage.edge_ids:
                kinds[edge.id] = EdgeKind.PATH
            elif (edge.u in on_first) == (edge.v in on_first):
                kinds[edge.id] = EdgeKind.CHORD
            else:
                kinds[edge.id] = EdgeKind.RUNG
        return kinds

    def edges_of_kind(self, kind: EdgeKind) -> list[int]:
        return [eid for eid, k in self.edge_kinds.items() if k is kind]

    @property
    def rungs(self) -> list[int]:
        return self.edges_of_kind(EdgeKind.RUNG)

    def rung_positions(self, edge_id: int) -> tuple[int, int]:
        """0-based positions of a rung's ends on path1 and path2."""
        edge = self.graph.edge(edge_id)
        (first_path, first_pos) = self.linkage.locations[edge.u]
        (_, second_pos) = self.linkage.locations[edge.v]
        return (first_pos, second_pos) if first_path == 1 else (second_pos, first_pos)

    @cached_property
    def rung_groups(self) -> dict[frozenset[str], list[int]]:
        groups: dict[frozenset[str], list[int]] = defaultdict(list)
        for eid in self.rungs:
            groups[self.graph.edge(eid).ends].append(eid)
        return dict(groups)


@dataclass(frozen=True)
class ContractPathEdge:
    edge: int

    def __str__(self) -> str:
        return f"contract {self.edge}"


@dataclass(frozen=True)
class DeleteRungEdge:
    edge: int

    def __str__(self) -> str:
        return f"delete {self.edge}"


MinorOp = ContractPathEdge | DeleteRungEdge


@dataclass(frozen=True)
class MinorWitness:
    """Ordered linkage-minor script plus the vertex map it induces.

    An empty ``vertex_map`` means "not recorded"; replay then skips the
    consistency check.
    """

    ops: tuple[MinorOp, ...] = ()
    vertex_map: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "ops", tuple(self.ops))
        object.__setattr__(self, "vertex_map", dict(self.vertex_map))

    @property
    def contractions(self) -> list[int]:
        return [op.edge for op in self.ops if isinstance(op, ContractPathEdge)]

    @property
    def deletions(self) -> list[int]:
        return [op.edge for op in self.ops if isinstance(op, DeleteRungEdge)]

    def to_dict(self) -> dict:
        return {
            "ops": [
                {"op": "contract" if isinstance(op, ContractPathEdge) else "delete", "edge": op.edge}
                for op in self.ops
            ],
            "vertex_map": dict(sorted(self.vertex_map.items())),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> MinorWitness:
        ops: list[MinorOp] = []
        for item in data.get("ops", []):
            if item["op"] == "contract":
                ops.append(ContractPathEdge(int(item["edge"])))
            elif item["op"] == "delete":
                ops.append(DeleteRungEdge(int(item["edge"])))
            else:
                raise InvalidLinkedGraphError(f"unknown witness op {item['op']!r}")
        return cls(tuple(ops), dict(data.get("vertex_map", {})))
