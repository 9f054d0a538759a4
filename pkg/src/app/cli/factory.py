from enum import Enum

from src.app.settings import AppSettings

from .base import BaseCommand
from .commands import (
    CheckCommand,
    CorpusCommand,
    EmbedCommand,
    GenerateCommand,
    PartitionCommand,
    PathwidthCommand,
    RandomCommand,
)


class CommandType(Enum):
    """Enumeration of available sub-commands."""

    CHECK = "check"
    GENERATE = "generate"
    EMBED = "embed"
    PATHWIDTH = "pathwidth"
    PARTITION = "partition"
    RANDOM = "random"
    CORPUS = "corpus"


_COMMANDS: dict[CommandType, type[BaseCommand]] = {
    CommandType.CHECK: CheckCommand,
    CommandType.GENERATE: GenerateCommand,
    CommandType.EMBED: EmbedCommand,
    CommandType.PATHWIDTH: PathwidthCommand,
    CommandType.PARTITION: PartitionCommand,
    CommandType.RANDOM: RandomCommand,
    CommandType.CORPUS: CorpusCommand,
}


class CommandFactory:
    """Factory class for creating sub-commands."""

    @staticmethod
    def create_command(command_type: CommandType, settings: AppSettings) -> BaseCommand:
        """Create a command instance.

        Args:
            command_type: Type of command to create
            settings: Application settings shared by every command

        Returns:
            BaseCommand: An instance of the requested command

        Raises:
            ValueError: If command_type is not recognized

        """
        command_class = _COMMANDS.get(command_type)
        if command_class is None:
            raise ValueError(f"Unknown command type: {command_type}")
        return command_class(settings, name=command_type.value)
