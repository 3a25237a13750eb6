import argparse
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

Handler = Callable[[argparse.Namespace], int]


class Argument(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    flags: Tuple[str, ...]
    options: Dict[str, Any] = {}


def arg(*flags: str, **options) -> Argument:
    """Declare one argparse argument of a command"""
    return Argument(flags=flags, options=options)


class Command(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    help: str = ""
    arguments: Tuple[Argument, ...] = ()
    handler: Handler


class CommandRouter:
    """Groups subcommands the way the entry point includes them"""

    def __init__(self, tags: Optional[List[str]] = None):
        self.tags = tags or []
        self.commands: List[Command] = []

    def command(self, name: str, help: str = "", arguments: Sequence[Argument] = ()):
        def register(handler: Handler) -> Handler:
            self.commands.append(Command(name=name, help=help, arguments=tuple(arguments), handler=handler))
            return handler
        return register

    def include(self, subparsers, parents: Sequence[argparse.ArgumentParser] = ()):
        for command in self.commands:
            parser = subparsers.add_parser(command.name, help=command.help, parents=list(parents))
            for argument in command.arguments:
                parser.add_argument(*argument.flags, **argument.options)
            parser.set_defaults(handler=command.handler)
