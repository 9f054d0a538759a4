from __future__ import annotations

import numpy as np

from src.app.core.dto import ContractPathEdge, DeleteRungEdge, LinkedGraph, MinorOp, MinorWitness
from src.app.core.witness import record_witness

from .generator import generate_truemper


def sample_truemper_minor(
    rng: np.random.Generator,
    n: int,
    density: float = 0.5,
    contract_probability: float = 0.5,
) -> tuple[LinkedGraph, MinorWitness]:
    """Random linkage minor of the ladder of order ``n``.

    Each rung survives with probability ``density``; afterwards each path edge
    is contracted with probability ``contract_probability``. Draws happen in
    ascending edge id, so a seeded generator gives the same graph everywhere.
    """
    ladder = generate_truemper(n)
    ops: list[MinorOp] = [DeleteRungEdge(eid) for eid in sorted(ladder.rungs) if rng.random() >= density]
    path_edges = sorted(ladder.linkage.edge_ids)
    ops += [ContractPathEdge(eid) for eid in path_edges if rng.random() < contract_probability]
    return record_witness(ladder, ops)
