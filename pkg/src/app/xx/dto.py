from collections.abc import Mapping
from dataclasses import dataclass, field

from src.app.core.dto import MinorWitness


@dataclass(frozen=True)
class XxSegmentation:
    """Three-block split of each path plus the four rungs that survive.

    ``cuts1 = (i, j)`` means path1 splits into ``[0, i)``, ``[i, j)`` and
    ``[j, len)``; ``cuts2`` likewise for path2. ``rungs`` are ordered
    (S1-B, T1-B, S2-A, T2-A).
    """

    cuts1: tuple[int, int]
    cuts2: tuple[int, int]
    rungs: tuple[int, int, int, int]


@dataclass(frozen=True)
class XxWitness:
    witness: MinorWitness
    target_iso: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "target_iso", dict(self.target_iso))

    def to_dict(self) -> dict:
        return {"witness": self.witness.to_dict(), "target_iso": dict(sorted(self.target_iso.items()))}
