"""Verbs on a single complex or ideal: dual, info, ideal, complex-of-ideal"""

import logging

from handlers.formats import (
    load_complex,
    load_ideal,
    render_complex,
    render_ideal,
    render_info,
)
from handlers.router import CommandRouter, arg
from services.complex_service import ComplexService
from services.ideal_service import IdealService
from utils.error_handler import safe_operation
from validation.schemas import IdealRenderOptions

logger = logging.getLogger(__name__)

router = CommandRouter()

PREFIX = arg("--prefix", default="x", help="variable prefix: x, y or z")


@router.command("dual", help="Alexander dual of a complex", arguments=(arg("complex"),))
def dual(args, out) -> int:
    X = load_complex(args.complex)
    with safe_operation("alexander_dual", vertices=len(X.vertices)):
        out.write(render_complex(ComplexService.alexander_dual(X)))
    return 0


@router.command("info", help="Facets, cofacets, support and dimension", arguments=(arg("complex"),))
def info(args, out) -> int:
    X = load_complex(args.complex)
    out.write(render_info(X))
    return 0


@router.command("ideal", help="Stanley-Reisner ideal of a complex", arguments=(arg("complex"), PREFIX))
def ideal(args, out) -> int:
    options = IdealRenderOptions(prefix=args.prefix)
    X = load_complex(args.complex)
    with safe_operation("sr_ideal", vertices=len(X.vertices)):
        out.write(render_ideal(IdealService.sr_ideal(X), options.prefix))
    return 0


@router.command(
    "complex-of-ideal", help="Complex of a squarefree monomial ideal", arguments=(arg("ideal"),)
)
def complex_of_ideal(args, out) -> int:
    I, _ = load_ideal(args.ideal)
    with safe_operation("complex_of_ideal", vertices=len(I.ring)):
        out.write(render_complex(IdealService.complex_of_ideal(I)))
    return 0
