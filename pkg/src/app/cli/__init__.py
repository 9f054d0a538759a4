"""Command-line front door: document codec, DOT rendering and the commands.

The argparse entry point lives in ``src.app.cli.app``.
"""

from .document import parse_linked_graph, serialize_linked_graph
from .dot_export import render_dot

__all__ = ["parse_linked_graph", "render_dot", "serialize_linked_graph"]
