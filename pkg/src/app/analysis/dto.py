from dataclasses import dataclass

from src.app.core.dto import TwoLinkage


@dataclass(frozen=True)
class LinkageEnumeration:
    """Linkages joining the same terminal pairs, in canonical order
    (lexicographic by path1 vertex sequence, then path2)."""

    linkages: tuple[TwoLinkage, ...]

    def __len__(self) -> int:
        return len(self.linkages)

    def __iter__(self):
        return iter(self.linkages)
