"""Command registration for the CLI

Each handler module owns a ``CommandRouter`` and registers its verbs with
the ``command`` decorator; the dispatcher includes the routers and builds one
argparse subcommand per verb.
"""

import argparse
from dataclasses import dataclass, field
from typing import Callable, Dict, List, TextIO, Tuple

Handler = Callable[[argparse.Namespace, TextIO], int]


@dataclass(frozen=True)
class Argument:
    flags: Tuple[str, ...]
    options: Dict = field(default_factory=dict)


def arg(*flags: str, **options) -> Argument:
    """Argument definition forwarded to ``add_argument``"""
    return Argument(flags, options)


@dataclass
class Command:
    name: str
    help: str
    handler: Handler
    arguments: Tuple[Argument, ...]


class CommandRouter:
    def __init__(self):
        self.commands: List[Command] = []

    def command(self, name: str, help: str, arguments: Tuple[Argument, ...] = ()):
        """Register the decorated function as the handler of verb ``name``"""

        def decorator(handler: Handler) -> Handler:
            self.commands.append(Command(name, help, handler, tuple(arguments)))
            return handler

        return decorator

    def install(self, subparsers) -> None:
        for command in self.commands:
            parser = subparsers.add_parser(command.name, help=command.help)
            for argument in command.arguments:
                parser.add_argument(*argument.flags, **argument.options)
            parser.set_defaults(handler=command.handler, verb=command.name)
