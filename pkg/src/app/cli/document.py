"""Line-based text format for linked graphs.

```
# comment
vertices: s1 a t1 s2 t2
path1: s1 a t1
path2: s2 t2
rung s1 t2
rung a s2 @7
```

``path1:`` and ``path2:`` appear exactly once. ``rung u v`` adds an
off-linkage edge, optionally with an explicit id; its kind is recomputed.
``vertices:`` is optional and only used to detect vertices left off both paths.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from src.app.core.dto import Edge, EdgeKind, Graph, LinkedGraph, TwoLinkage
from src.app.core.errors import DocumentError, InvalidLinkedGraphError

_TOKEN = re.compile(r"\S+")
_VERTEX = re.compile(r"[^\s#:@]+")


@dataclass
class _Token:
    text: str
    column: int


@dataclass
class _RungLine:
    u: _Token
    v: _Token
    edge_id: int | None
    line: int


@dataclass
class _Parsed:
    paths: dict[int, tuple[list[_Token], int]] = field(default_factory=dict)
    rungs: list[_RungLine] = field(default_factory=list)
    declared: list[tuple[_Token, int]] = field(default_factory=list)


def _tokens(line: str) -> list[_Token]:
    body = line.split("#", 1)[0]
    return [_Token(match.group(), match.start() + 1) for match in _TOKEN.finditer(body)]


def _vertex(token: _Token, line: int) -> _Token:
    if not _VERTEX.fullmatch(token.text):
        raise DocumentError(f"invalid vertex name {token.text!r}", line, token.column)
    return token


def _read_lines(text: str) -> _Parsed:
    parsed = _Parsed()
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line)
        if not tokens:
            continue
        head = tokens[0]
        if head.text in ("path1:", "path2:"):
            index = int(head.text[4])
            if index in parsed.paths:
                raise DocumentError(f"{head.text} given twice", number, head.column)
            if len(tokens) == 1:
                raise DocumentError(f"{head.text} needs at least one vertex", number, head.column + len(head.text))
            parsed.paths[index] = ([_vertex(token, number) for token in tokens[1:]], number)
        elif head.text == "vertices:":
            parsed.declared += [(_vertex(token, number), number) for token in tokens[1:]]
        elif head.text == "rung":
            parsed.rungs.append(_read_rung(tokens, number))
        else:
            raise DocumentError(f"unknown directive {head.text!r}", number, head.column)
    for index in (1, 2):
        if index not in parsed.paths:
            raise DocumentError(f"missing path{index}: line", max(1, len(text.splitlines())))
    return parsed


def _read_rung(tokens: list[_Token], number: int) -> _RungLine:
    if len(tokens) < 3:
        raise DocumentError("rung needs two vertices", number, tokens[-1].column + len(tokens[-1].text))
    if len(tokens) > 4:
        raise DocumentError("unexpected token after rung", number, tokens[4].column)
    u, v = _vertex(tokens[1], number), _vertex(tokens[2], number)
    edge_id = None
    if len(tokens) == 4:
        raw = tokens[3]
        if not re.fullmatch(r"@\d+", raw.text):
            raise DocumentError(f"expected @<edge id>, got {raw.text!r}", number, raw.column)
        edge_id = int(raw.text[1:])
    if u.text == v.text:
        raise DocumentError(f"rung {u.text} {v.text} is a loop", number, v.column)
    return _RungLine(u, v, edge_id, number)


def parse_linked_graph(text: str, require_chordless: bool = False) -> LinkedGraph:
    """Parse a document into a linked graph.

    Path edges get ids 0, 1, ... in path1 then path2 order. Rungs without an
    explicit id take the smallest free id in order of appearance.
    """
    parsed = _read_lines(text)
    (path1, line1), (path2, line2) = parsed.paths[1], parsed.paths[2]
    on_path = {token.text for token in path1} | {token.text for token in path2}

    edges: list[Edge] = []
    bound: dict[int, list[int]] = {1: [], 2: []}
    for index, (path, _) in ((1, parsed.paths[1]), (2, parsed.paths[2])):
        for a, b in zip(path, path[1:], strict=False):
            bound[index].append(len(edges))
            edges.append(Edge(len(edges), a.text, b.text))

    taken = {edge.id for edge in edges}
    for rung in parsed.rungs:
        if rung.edge_id is None:
            continue
        if rung.edge_id in taken:
            raise DocumentError(f"duplicate edge id {rung.edge_id}", rung.line, rung.v.column)
        taken.add(rung.edge_id)
    next_free = 0
    for rung in parsed.rungs:
        for end in (rung.u, rung.v):
            if end.text not in on_path:
                raise DocumentError(f"linkage is not spanning; vertex {end.text!r} is on no path", rung.line, end.column)
        edge_id = rung.edge_id
        if edge_id is None:
            while next_free in taken:
                next_free += 1
            edge_id = next_free
            taken.add(edge_id)
        edges.append(Edge(edge_id, rung.u.text, rung.v.text))
    for token, number in parsed.declared:
        if token.text not in on_path:
            raise DocumentError(f"linkage is not spanning; vertex {token.text!r} is on no path", number, token.column)

    try:
        linkage = TwoLinkage(
            tuple(token.text for token in path1),
            tuple(bound[1]),
            tuple(token.text for token in path2),
            tuple(bound[2]),
        )
    except InvalidLinkedGraphError as exc:
        raise DocumentError(str(exc), max(line1, line2)) from exc
    g = LinkedGraph(Graph(frozenset(on_path), tuple(edges)), linkage)

    if require_chordless:
        lines = {edge.id: rung.line for edge, rung in zip(edges[len(bound[1]) + len(bound[2]) :], parsed.rungs, strict=True)}
        for eid in g.edges_of_kind(EdgeKind.CHORD):
            raise DocumentError(f"edge {eid} is a chord; this command needs a chordless linkage", lines[eid])
    return g


def serialize_linked_graph(g: LinkedGraph, header: str | None = None) -> str:
    """Document for ``g``: optional comment header, both paths, one line per off-linkage edge."""
    lines = [f"# {row}" if row else "#" for row in (header.splitlines() if header else [])]
    lines.append("path1: " + " ".join(g.linkage.path1))
    lines.append("path2: " + " ".join(g.linkage.path2))
    path_edges = g.linkage.edge_ids
    lines += [f"rung {edge.u} {edge.v}" for edge in g.edges if edge.id not in path_edges]
    return "\n".join(lines) + "\n"
