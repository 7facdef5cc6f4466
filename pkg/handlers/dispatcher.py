"""Argument parsing and dispatch to the verb handlers"""

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from pydantic import ValidationError

from config import EXIT_USAGE
from handlers import (
    audit_handlers,
    complex_handlers,
    functor_handlers,
    morphism_handlers,
    product_handlers,
)
from utils.error_handler import (
    ComplexToolkitError,
    ParseError,
    exit_code_for,
    format_validation_error,
    report_error,
)

logger = logging.getLogger(__name__)

ROUTERS = (
    functor_handlers.router,
    complex_handlers.router,
    product_handlers.router,
    morphism_handlers.router,
    audit_handlers.router,
)


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting so ``run`` keeps control of the exit code"""

    def error(self, message: str):
        raise ParseError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="srcx",
        description="Adjoint functors, Stanley-Reisner ideals and products of simplicial complexes",
    )
    subparsers = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for router in ROUTERS:
        router.install(subparsers)
    return parser


def run(argv: List[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Run one command; results go to ``out`` and diagnostics to ``err``"""
    out = out or sys.stdout
    err = err or sys.stderr

    try:
        args = build_parser().parse_args(argv)
    except ParseError as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    try:
        return args.handler(args, out)
    except ValidationError as e:
        err.write(f"error: {format_validation_error(e)}\n")
        return EXIT_USAGE
    except ComplexToolkitError as e:
        report_error(e, verb=args.verb)
        err.write(f"error: {e}\n")
        return exit_code_for(e)
    except Exception as e:
        report_error(e, verb=args.verb)
        err.write(f"internal error: {e}\n")
        return EXIT_USAGE
