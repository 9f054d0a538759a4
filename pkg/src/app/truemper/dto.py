from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from src.app.core.dto import MinorWitness
from src.app.core.errors import InvalidLinkedGraphError


@dataclass(frozen=True)
class TruemperCertificate:
    """Proof that a linked graph is a linkage minor of the ladder of order ``n``.

    Replaying ``witness`` on the ladder gives the input after its paths are
    reversed per ``reversal_flags`` and then swapped when ``path_swap`` is set.
    """

    n: int
    witness: MinorWitness
    reversal_flags: tuple[bool, bool] = (False, False)
    path_swap: bool = False

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "reversal_flags": list(self.reversal_flags),
            "path_swap": self.path_swap,
            "witness": self.witness.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> TruemperCertificate:
        try:
            flags = tuple(bool(flag) for flag in data.get("reversal_flags", (False, False)))
            if len(flags) != 2:
                raise InvalidLinkedGraphError(f"reversal_flags needs two entries, got {len(flags)}")
            return cls(
                n=int(data["n"]),
                witness=MinorWitness.from_dict(data.get("witness", {})),
                reversal_flags=flags,
                path_swap=bool(data.get("path_swap", False)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidLinkedGraphError):
                raise
            raise InvalidLinkedGraphError(f"malformed certificate: {exc}") from exc


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[str], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "bags", tuple(frozenset(bag) for bag in self.bags))

    @property
    def width(self) -> int:
        return max((len(bag) for bag in self.bags), default=1) - 1

    def to_dict(self) -> dict:
        return {"width": self.width, "bags": [sorted(bag) for bag in self.bags]}


@dataclass(frozen=True)
class RungPartition:
    """Block A is pairwise non-crossing, block B is after reversing path2."""

    block_a: frozenset[int] = frozenset()
    block_b: frozenset[int] = frozenset()

    def to_dict(self) -> dict:
        return {"block_a": sorted(self.block_a), "block_b": sorted(self.block_b)}
