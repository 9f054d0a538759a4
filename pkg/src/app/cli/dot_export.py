import math
import re
from pathlib import Path

from jinja2 import Environment, FileSystemLoader, meta

from src.app.core.dto import LinkedGraph
from src.app.core.isomorphism import linked_isomorphic
from src.app.core.witness import apply_witness
from src.app.truemper.dto import TruemperCertificate
from src.app.truemper.generator import generate_truemper

template_dir = Path(__file__).resolve().parent / "templates"
TEMPLATE_NAME = "linked_graph.dot.j2"

_PATH_COLORS = {1: "#1f77b4", 2: "#d62728"}
_LADDER_NAME = re.compile(r"[vu](\d+)")


def dot_quote(text: object) -> str:
    """Body of a double-quoted DOT identifier."""
    return str(text).replace("\\", "\\\\").replace('"', '\\"')


def _environment() -> Environment:
    env = Environment(loader=FileSystemLoader(template_dir), autoescape=False, trim_blocks=True, lstrip_blocks=True)
    env.filters["dot"] = dot_quote
    return env


def _render(params: dict) -> str:
    """Render the DOT template, refusing to run with a missing variable."""
    env = _environment()
    source = env.loader.get_source(env, TEMPLATE_NAME)[0]
    for var in meta.find_undeclared_variables(env.parse(source)):
        if var not in params:
            raise ValueError(f"Missing parameter: {var}")
    return env.get_template(TEMPLATE_NAME).render(params)


def spiderweb_positions(g: LinkedGraph, certificate: TruemperCertificate) -> dict[str, str]:
    """Radial coordinates from the ladder position each vertex contracts onto.

    Path1 sits on an outer half circle and path2 on an inner one, ladder index
    i at angle pi * (i - 1) / (n - 1), so parallel rungs are spokes and
    crossing rungs span the web.
    """
    try:
        image = apply_witness(generate_truemper(certificate.n), certificate.witness)
    except ValueError:
        return {}
    iso = linked_isomorphic(g, image)
    if iso is None:
        return {}
    n = certificate.n
    positions = {}
    for vertex, ladder_vertex in iso.items():
        match = _LADDER_NAME.fullmatch(ladder_vertex)
        if match is None:
            return {}
        index = int(match.group(1))
        radius = 3.0 if ladder_vertex.startswith("v") else 1.5
        angle = math.pi * (index - 1) / max(n - 1, 1)
        positions[vertex] = f"{radius * math.cos(angle):.3f},{radius * math.sin(angle):.3f}"
    return positions


def render_dot(g: LinkedGraph, certificate: TruemperCertificate | None = None, name: str = "linked") -> str:
    """Path edges bold in their path colour, rungs thin, chords dashed."""
    positions = spiderweb_positions(g, certificate) if certificate is not None else {}
    located = g.linkage.locations
    terminals = set(g.linkage.terminals)
    nodes = [
        {
            "name": vertex,
            "terminal": vertex in terminals,
            "color": _PATH_COLORS[located[vertex][0]],
            "pos": positions.get(vertex),
        }
        for vertex in (*g.linkage.path1, *g.linkage.path2)
    ]
    kinds = g.edge_kinds
    edges = []
    for edge in g.edges:
        kind = kinds[edge.id].value
        color = _PATH_COLORS[located[edge.u][0]]
        edges.append({"id": edge.id, "u": edge.u, "v": edge.v, "kind": kind, "color": color})
    safe_name = re.sub(r"\W", "_", name) or "linked"
    return _render({"name": safe_name, "layout": "neato", "nodes": nodes, "edges": edges})
