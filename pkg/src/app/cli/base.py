import sys
from abc import ABC, abstractmethod
from argparse import Namespace
from enum import IntEnum
from pathlib import Path

from src.app.core.dto import LinkedGraph
from src.app.core.errors import DocumentError
from src.app.settings import AppSettings

from .document import parse_linked_graph


class ExitCode(IntEnum):
    """Process exit codes; batch runs report the largest."""

    VITAL = 0
    NON_VITAL = 1
    INPUT_ERROR = 2
    DISAGREEMENT = 3


class BaseCommand(ABC):
    """基础命令。

    所有子命令都继承自这个类，由 CommandFactory 按 CommandType 创建。
    """

    def __init__(self, settings: AppSettings, name: str | None = None) -> None:
        self.name = name
        self.settings = settings

    @abstractmethod
    def run(self, args: Namespace) -> int:
        """Execute the command and return its exit code."""

    def read_graph(self, source: str, require_chordless: bool = True) -> LinkedGraph:
        """Parse ``source`` (a path, or ``-`` for stdin)."""
        try:
            text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
        except UnicodeDecodeError as exc:
            data = exc.object
            line_start = data.rfind(b"\n", 0, exc.start) + 1
            raise DocumentError(
                f"invalid {exc.encoding} byte", data.count(b"\n", 0, exc.start) + 1, exc.start - line_start + 1
            ) from exc
        return parse_linked_graph(text, require_chordless=require_chordless)

    @staticmethod
    def write_output(text: str, out: str | None) -> None:
        if out is None or out == "-":
            print(text, end="" if text.endswith("\n") else "\n")
        else:
            Path(out).write_text(text, encoding="utf-8")
