"""Exception hierarchy shared by every package of the library."""

from typing import Any


class LinkageError(ValueError):
    """Base class for all errors raised by the library."""


class InvalidLinkedGraphError(LinkageError):
    """A graph or linkage failed boundary validation."""


class VertexNotOnPathError(LinkageError):
    """A vertex was looked up on a path that does not contain it."""

    def __init__(self, vertex: str, path_index: int) -> None:
        super().__init__(f"vertex {vertex!r} is not on path {path_index}")
        self.vertex = vertex
        self.path_index = path_index


class ChordError(LinkageError):
    """The operation needs a chordless linkage but chords are present."""

    def __init__(self, chords: list[int]) -> None:
        super().__init__(f"linkage has chords: {sorted(chords)}")
        self.chords = sorted(chords)


class EdgeKindError(LinkageError):
    """A minor operation referenced an edge of the wrong kind."""

    def __init__(self, edge: int, expected: Any, actual: Any) -> None:
        super().__init__(f"edge {edge} is {actual}, expected {expected}")
        self.edge = edge
        self.expected = expected
        self.actual = actual


class LoopError(LinkageError):
    """Contracting a path edge would create a loop."""


class WitnessReplayError(LinkageError):
    """Replaying a minor witness failed at a specific operation."""

    def __init__(self, index: int, op: Any, cause: Exception | str) -> None:
        super().__init__(f"witness op #{index} ({op}) failed: {cause}")
        self.index = index
        self.op = op
        self.cause = cause


class SizeGuardError(LinkageError):
    """An exhaustive routine was called on an instance above its cap."""

    def __init__(self, routine: str, size: int, cap: int) -> None:
        super().__init__(f"{routine}: instance size {size} exceeds cap {cap}")
        self.routine = routine
        self.size = size
        self.cap = cap


class SecondLinkageError(LinkageError):
    """A claimed second linkage is not a valid, differing spanning linkage."""


class ExtractionInvariantError(LinkageError):
    """An internal construction violated one of its positional guarantees."""


class NotTruemperShapeError(LinkageError):
    """The input was expected to be (isomorphic to) a Truemper ladder."""


class NotTruemperError(LinkageError):
    """The graph is not a linkage minor of any Truemper ladder.

    ``witness`` carries the XX linkage minor found as corroboration; ``None``
    means the detector disagreed with the embedder.
    """

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class DocumentError(LinkageError):
    """A linked-graph document could not be parsed."""

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class ConfigurationError(LinkageError):
    """Configuration file or environment overrides are invalid."""
