"""Small-instance corpora shared by the ``corpus`` command and the sweeps."""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations, product
from pathlib import Path

import numpy as np

from src.app.analysis.minors import enumerate_linkage_minors
from src.app.cli.document import serialize_linked_graph
from src.app.core.dto import LinkedGraph
from src.app.core.isomorphism import relaxed_signature
from src.app.core.operations import build_linked_graph
from src.app.truemper.generator import generate_truemper
from src.app.truemper.sampler import sample_truemper_minor
from src.utils.logger import logger


def truemper_minor_corpus(n: int = 3) -> list[LinkedGraph]:
    """All linkage minors of the ladder of order ``n``, one per isomorphism class."""
    return [minor for minor, _ in enumerate_linkage_minors(generate_truemper(n))]


def random_truemper_corpus(
    count: int,
    n: int = 6,
    seed: int = 0,
    density: float = 0.5,
    contract_probability: float = 0.5,
) -> list[LinkedGraph]:
    rng = np.random.default_rng(seed)
    return [sample_truemper_minor(rng, n, density, contract_probability)[0] for _ in range(count)]


def _split_graphs(len1: int, len2: int) -> Iterator[LinkedGraph]:
    path1 = tuple(f"a{k}" for k in range(len1))
    path2 = tuple(f"b{k}" for k in range(len2))
    slots = list(product(path1, path2))
    for size in range(len(slots) + 1):
        for rungs in combinations(slots, size):
            yield build_linked_graph(path1, path2, rungs)


def chordless_corpus(max_vertices: int, min_vertices: int = 2, dedupe: bool = True) -> list[LinkedGraph]:
    """Every chordless linked graph without parallel rungs on up to ``max_vertices`` vertices.

    With ``dedupe`` one graph is kept per class under path reversal and swap.
    """
    corpus: list[LinkedGraph] = []
    seen: set = set()
    for total in range(max(min_vertices, 2), max_vertices + 1):
        for len1 in range(1, total):
            for g in _split_graphs(len1, total - len1):
                if dedupe:
                    signature = relaxed_signature(g)
                    if signature in seen:
                        continue
                    seen.add(signature)
                corpus.append(g)
    logger.debug(f"chordless_corpus: {len(corpus)} graphs up to {max_vertices} vertices")
    return corpus


def write_corpus(graphs: list[LinkedGraph], out_dir: Path, prefix: str = "graph") -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    width = len(str(max(len(graphs) - 1, 0)))
    written = []
    for k, g in enumerate(graphs):
        path = out_dir / f"{prefix}-{k:0{width}d}.lg"
        path.write_text(serialize_linked_graph(g, header=f"{prefix} #{k}, {len(g.vertices)} vertices"), encoding="utf-8")
        written.append(path)
    return written
